#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ringlab/construct.hpp"
#include "ringlab/deciders.hpp"

#include "test_util.hpp"

using namespace ringlab;

namespace {

// replay a polynomial witness through public operations: the pair must
// multiply to zero and the flagged coefficient pair must violate the variant
void replay_poly_witness(const FiniteRing& r, Prop variant, const Verdict& v) {
    REQUIRE(v.status == Status::Fails);
    REQUIRE(v.witness.kind == Witness::Kind::Polys);
    const auto& f = v.witness.f;
    const auto& g = v.witness.g;
    if (!f.empty() && !g.empty()) {
        std::vector<uint32_t> conv(f.size() + g.size() - 1, r.zero());
        for (size_t i = 0; i < f.size(); ++i)
            for (size_t j = 0; j < g.size(); ++j)
                conv[i + j] = r.add(conv[i + j], r.mul(f[i], g[j]));
        for (uint32_t c : conv) CHECK(c == r.zero());
    }
    REQUIRE(v.witness.i);
    REQUIRE(v.witness.j);
    uint32_t a = f.at(*v.witness.i), b = g.at(*v.witness.j);
    auto nil = [&](uint32_t x) { return is_nilpotent(r, x).nilpotent; };
    switch (variant) {
        case Prop::Armendariz: CHECK(r.mul(a, b) != r.zero()); break;
        case Prop::WeakArmendariz: CHECK_FALSE(nil(r.mul(a, b))); break;
        case Prop::IdealArmendariz:
            REQUIRE(v.witness.r);
            CHECK(r.mul(r.mul(a, *v.witness.r), b) != r.zero());
            break;
        case Prop::StronglyNilIfp:
            REQUIRE(v.witness.r);
            CHECK_FALSE(nil(r.mul(r.mul(a, *v.witness.r), b)));
            break;
        default: FAIL("unexpected variant");
    }
}

void replay_element_witness(const FiniteRing& r, Prop prop, const Verdict& v) {
    REQUIRE(v.status == Status::Fails);
    REQUIRE(v.witness.kind == Witness::Kind::Elements);
    const auto& e = v.witness.elements;
    auto nil = [&](uint32_t x) { return is_nilpotent(r, x).nilpotent; };
    switch (prop) {
        case Prop::Reduced:
            CHECK(e[0] != r.zero());
            CHECK(r.mul(e[0], e[0]) == r.zero());
            break;
        case Prop::Commutative: CHECK(r.mul(e[0], e[1]) != r.mul(e[1], e[0])); break;
        case Prop::Reversible:
            CHECK(r.mul(e[0], e[1]) == r.zero());
            CHECK(r.mul(e[1], e[0]) != r.zero());
            break;
        case Prop::Abelian:
            CHECK(r.mul(e[0], e[0]) == e[0]);
            CHECK(r.mul(e[0], e[1]) != r.mul(e[1], e[0]));
            break;
        case Prop::Semicommutative:
            CHECK(r.mul(e[0], e[1]) == r.zero());
            CHECK(r.mul(r.mul(e[0], e[2]), e[1]) != r.zero());
            break;
        case Prop::WeaklySemicommutative:
            CHECK(r.mul(e[0], e[1]) == r.zero());
            CHECK_FALSE(nil(r.mul(r.mul(e[0], e[2]), e[1])));
            break;
        case Prop::Qrpr: CHECK(r.mul(e[0], e[1]) == r.zero()); break;
        case Prop::TwoPrimal:
        case Prop::Ni: CHECK(nil(e[0])); break;
        case Prop::BoundedIndexTwo:
            CHECK(nil(e[0]));
            CHECK(r.mul(e[0], e[0]) != r.zero());
            break;
        default: FAIL("unexpected prop");
    }
}

} // namespace

TEST_CASE("elementwise verdicts on the matrix rings") {
    FiniteRing m2 = eval_expr("M(2,Z(2))");
    DecideContext ctx = DecideContext::build(m2);
    for (Prop p : {Prop::Reduced, Prop::Reversible, Prop::Abelian, Prop::Semicommutative,
                   Prop::WeaklySemicommutative, Prop::Qrpr, Prop::TwoPrimal, Prop::Ni,
                   Prop::Commutative}) {
        Verdict v = decide_elementwise(m2, p, &ctx);
        CAPTURE(prop_name(p));
        CHECK(v.status == Status::Fails);
        CHECK(v.exact);
        replay_element_witness(m2, p, v);
    }

    FiniteRing u2 = eval_expr("U(2,Z(2))");
    DecideContext uctx = DecideContext::build(u2);
    CHECK(decide_elementwise(u2, Prop::Semicommutative, &uctx).status == Status::Fails);
    CHECK(decide_elementwise(u2, Prop::WeaklySemicommutative, &uctx).status == Status::Holds);
    CHECK(decide_elementwise(u2, Prop::TwoPrimal, &uctx).status == Status::Holds);
    CHECK(decide_elementwise(u2, Prop::Ni, &uctx).status == Status::Holds);
    CHECK(decide_elementwise(u2, Prop::Qrpr, &uctx).status == Status::Holds);
    CHECK(decide_elementwise(u2, Prop::Reversible, &uctx).status == Status::Fails);
    replay_element_witness(u2, Prop::Semicommutative,
                           decide_elementwise(u2, Prop::Semicommutative, &uctx));
}

TEST_CASE("the row-matrix subrings of M_2(Z_3) are semicommutative but not abelian") {
    // the subring of matrices with zero bottom row
    FiniteRing m2 = eval_expr("M(2,Z(3))");
    FiniteRing z3 = cyclic_ring(3);
    uint32_t e11 = matrix_unit(z3, 2, MatrixShape::Full, 0, 0, 1);
    uint32_t e12 = matrix_unit(z3, 2, MatrixShape::Full, 0, 1, 1);
    SubringResult r1 = subring(m2, {e11, e12});
    CHECK(r1.ring.order() == 9);
    CHECK_FALSE(r1.ring.unital());

    Verdict wsc = decide_elementwise(r1.ring, Prop::WeaklySemicommutative);
    CHECK(wsc.status == Status::Holds);
    Verdict ab = decide_elementwise(r1.ring, Prop::Abelian);
    CHECK(ab.status == Status::Fails);
    replay_element_witness(r1.ring, Prop::Abelian, ab);

    // the column variant
    uint32_t e22 = matrix_unit(z3, 2, MatrixShape::Full, 1, 1, 1);
    SubringResult r2 = subring(m2, {e12, e22});
    CHECK(r2.ring.order() == 9);
    CHECK(decide_elementwise(r2.ring, Prop::WeaklySemicommutative).status == Status::Holds);
    CHECK(decide_elementwise(r2.ring, Prop::Abelian).status == Status::Fails);
}

TEST_CASE("zero-product pair streams") {
    SUBCASE("over a field only trivial pairs appear") {
        FiniteRing z2 = cyclic_ring(2);
        uint64_t count = 0;
        auto outcome = zero_product_pairs(z2, 1, 1ull << 30, [&](const BoundedPolynomial& f,
                                                                 const BoundedPolynomial& g) {
            CHECK((f.coeffs.empty() || g.coeffs.empty()));
            ++count;
            return true;
        });
        CHECK(outcome == ScanOutcome::Complete);
        CHECK(count == 7); // zero f: 4 canonical g's; zero g: 3 nonzero f's
    }
    SUBCASE("Z_4 yields the classic nilpotent square pair") {
        FiniteRing z4 = cyclic_ring(4);
        bool seen = false;
        zero_product_pairs(z4, 1, 1ull << 30, [&](const BoundedPolynomial& f,
                                                  const BoundedPolynomial& g) {
            if (f.coeffs == std::vector<uint32_t>{2, 2} && g.coeffs == f.coeffs) seen = true;
            return true;
        });
        CHECK(seen);
    }
    SUBCASE("U_2(Z_2) at degree 1: frozen regression count, oracle-checked") {
        FiniteRing u2 = eval_expr("U(2,Z(2))");
        uint64_t pruned = 0;
        zero_product_pairs(u2, 1, 1ull << 40,
                           [&](const BoundedPolynomial&, const BoundedPolynomial&) {
                               ++pruned;
                               return true;
                           });
        // independent oracle: full enumeration of canonical pairs
        uint64_t naive = 0;
        std::vector<std::vector<uint32_t>> polys;
        polys.push_back({});
        for (uint32_t a = 0; a < 8; ++a)
            if (a != u2.zero()) polys.push_back({a});
        for (uint32_t a0 = 0; a0 < 8; ++a0)
            for (uint32_t a1 = 0; a1 < 8; ++a1)
                if (a1 != u2.zero()) polys.push_back({a0, a1});
        for (auto& f : polys)
            for (auto& g : polys) {
                bool zero = true;
                if (!f.empty() && !g.empty()) {
                    std::vector<uint32_t> conv(f.size() + g.size() - 1, u2.zero());
                    for (size_t i = 0; i < f.size(); ++i)
                        for (size_t j = 0; j < g.size(); ++j)
                            conv[i + j] = u2.add(conv[i + j], u2.mul(f[i], g[j]));
                    for (uint32_t c : conv) zero = zero && c == u2.zero();
                }
                if (zero) ++naive;
            }
        CHECK(pruned == naive);
        CHECK(pruned == 376); // frozen golden value
    }
    SUBCASE("budget exhaustion is reported") {
        FiniteRing u2 = eval_expr("U(2,Z(4))");
        auto outcome = zero_product_pairs(
            u2, 2, 50, [](const BoundedPolynomial&, const BoundedPolynomial&) { return true; });
        CHECK(outcome == ScanOutcome::BudgetExceeded);
    }
}

TEST_CASE("armendariz-family deciders") {
    SUBCASE("U_2(Z_2) fails Armendariz at degree 1") {
        FiniteRing u2 = eval_expr("U(2,Z(2))");
        Verdict v = decide_armendariz_family(u2, Prop::Armendariz, 1, 1ull << 40);
        CHECK(v.status == Status::Fails);
        replay_poly_witness(u2, Prop::Armendariz, v);
    }
    SUBCASE("Z_4 is strongly nil-IFP at degree 2") {
        FiniteRing z4 = cyclic_ring(4);
        Verdict v = decide_armendariz_family(z4, Prop::StronglyNilIfp, 2, 1ull << 40);
        CHECK(v.status == Status::Holds);
        CHECK_FALSE(v.exact); // bounded scan only
        CHECK(v.degree_bound == 2);
    }
    SUBCASE("T(Z_2) is weak ideal-Armendariz at degree 2") {
        FiniteRing t2 = eval_expr("T(Z(2))");
        Verdict v = decide_armendariz_family(t2, Prop::WeakIdealArmendariz, 2, 1ull << 40);
        CHECK(v.status == Status::Holds);
    }
    SUBCASE("T(Z_4) fails Armendariz at degree 1") {
        FiniteRing t4 = eval_expr("T(Z(4))");
        Verdict v = decide_armendariz_family(t4, Prop::Armendariz, 1, 1ull << 40);
        CHECK(v.status == Status::Fails);
        replay_poly_witness(t4, Prop::Armendariz, v);
        // the classic witness replays too: f = g = (0,1) + (2,0) t
        uint32_t u = 0 + 1 * 4, two = 2 + 0 * 4;
        std::vector<uint32_t> conv(3, t4.zero());
        for (auto [i, a] : {std::pair<int, uint32_t>{0, u}, {1, two}})
            for (auto [j, b] : {std::pair<int, uint32_t>{0, u}, {1, two}})
                conv[i + j] = t4.add(conv[i + j], t4.mul(a, b));
        for (uint32_t c : conv) CHECK(c == t4.zero());
        CHECK(t4.mul(u, two) != t4.zero());
    }
    SUBCASE("M_2(Z_2) fails the whole family") {
        FiniteRing m2 = eval_expr("M(2,Z(2))");
        DecideContext ctx = DecideContext::build(m2);
        for (Prop p : {Prop::Armendariz, Prop::WeakArmendariz, Prop::IdealArmendariz,
                       Prop::StronglyNilIfp, Prop::WeakIdealArmendariz}) {
            CAPTURE(prop_name(p));
            Verdict v = decide_armendariz_family(m2, p, 1, 1ull << 40, &ctx);
            CHECK(v.status == Status::Fails);
        }
    }
    SUBCASE("budget exhaustion degrades to unknown") {
        FiniteRing u2 = eval_expr("U(2,Z(4))");
        Verdict v = decide_armendariz_family(u2, Prop::Armendariz, 2, 10);
        CHECK(v.status == Status::Unknown);
    }
}

TEST_CASE("reduced rings pass every variant at every bound") {
    for (const char* e : {"Z(6)", "GF(2,2)", "Product(Z(2),Z(3))"}) {
        CAPTURE(e);
        FiniteRing r = eval_expr(e);
        DecideContext ctx = DecideContext::build(r);
        REQUIRE(decide_elementwise(r, Prop::Reduced, &ctx).status == Status::Holds);
        for (Prop p : {Prop::Armendariz, Prop::WeakArmendariz, Prop::IdealArmendariz,
                       Prop::StronglyNilIfp, Prop::WeakIdealArmendariz}) {
            Verdict v = decide_armendariz_family(r, p, 2, 1ull << 40, &ctx);
            CHECK(v.status == Status::Holds);
        }
    }
}

TEST_CASE("commutative collapse: strongly nil-IFP verdict equals weak Armendariz verdict") {
    for (const char* e : {"Z(4)", "Z(8)", "Z(12)", "T(Z(2))", "T(Z(3))", "TruncPoly(Z(2),3)"}) {
        CAPTURE(e);
        FiniteRing r = eval_expr(e);
        DecideContext ctx = DecideContext::build(r);
        REQUIRE(decide_elementwise(r, Prop::Commutative, &ctx).status == Status::Holds);
        Verdict snifp = decide_armendariz_family(r, Prop::StronglyNilIfp, 1, 1ull << 40, &ctx);
        Verdict weak = decide_armendariz_family(r, Prop::WeakArmendariz, 1, 1ull << 40, &ctx);
        CHECK(snifp.status == weak.status);
    }
}

TEST_CASE("monotonicity: a failure at a low bound persists with the same witness") {
    for (const char* e : {"U(2,Z(2))", "M(2,Z(2))", "T(Z(4))"}) {
        CAPTURE(e);
        FiniteRing r = eval_expr(e);
        DecideContext ctx = DecideContext::build(r);
        Verdict v1 = decide_armendariz_family(r, Prop::Armendariz, 1, 1ull << 40, &ctx);
        Verdict v2 = decide_armendariz_family(r, Prop::Armendariz, 2, 1ull << 40, &ctx);
        REQUIRE(v1.status == Status::Fails);
        REQUIRE(v2.status == Status::Fails);
        CHECK(v1.witness.f == v2.witness.f);
        CHECK(v1.witness.g == v2.witness.g);
        CHECK(v1.witness.i == v2.witness.i);
        CHECK(v1.witness.j == v2.witness.j);
        CHECK(v1.witness.r == v2.witness.r);
    }
}

TEST_CASE("determinism: repeated runs give identical verdicts and witnesses") {
    FiniteRing r = eval_expr("U(2,Z(4))");
    DecideContext ctx = DecideContext::build(r);
    Verdict a = decide_armendariz_family(r, Prop::Armendariz, 1, 1ull << 40, &ctx);
    Verdict b = decide_armendariz_family(r, Prop::Armendariz, 1, 1ull << 40, &ctx);
    CHECK(a.status == b.status);
    CHECK(a.witness.f == b.witness.f);
    CHECK(a.witness.g == b.witness.g);
    CHECK(a.work == b.work);
}

TEST_CASE("algebra-level decisions from supplied witnesses") {
    SUBCASE("the dimension-8 commutative quotient fails Armendariz exactly") {
        auto alg = build_algebra(parse_presentation(
            "algebra p=7 gens=[x,y] commutative unital\nrel x^3\nrel x^2*y^2\nrel y^3\n"));
        AlgebraWitness w;
        w.f = {"x", "y"};
        w.g = {"3*x^2", "4*x*y", "3*y^2"};
        w.i = 0;
        w.j = 1;
        Verdict v = decide_on_algebra(*alg, Prop::Armendariz, {w});
        CHECK(v.status == Status::Fails);
        CHECK(v.exact);
    }
    SUBCASE("the a^2 = 0 quotient fails strong nil-IFP via the periodic word") {
        auto alg = build_algebra(parse_presentation("algebra p=2 gens=[a,b] unital\nrel a*a\n"));
        AlgebraWitness w;
        w.f = {"b*a", "b*a"};
        w.g = {"a", "a"};
        w.i = 0;
        w.j = 0;
        w.r = "b";
        Verdict v = decide_on_algebra(*alg, Prop::StronglyNilIfp, {w});
        CHECK(v.status == Status::Fails);
        // and weakly semicommutative fails with the element triple
        AlgebraWitness t;
        t.f = {"b*a"};
        t.g = {"a"};
        t.r = "b";
        Verdict v2 = decide_on_algebra(*alg, Prop::WeaklySemicommutative, {t});
        CHECK(v2.status == Status::Fails);
    }
    SUBCASE("a finite image certifies non-nilpotency where powers outrun the window") {
        auto alg = build_algebra(parse_presentation(
            "algebra p=2 gens=[a0,a1,b0,b1] unital bound=7\n"
            "rel a0*b0\nrel a0*b1 + a1*b0\nrel a1*b1\n"));
        AlgebraWitness w;
        w.f = {"a0", "a1"};
        w.g = {"b0", "b1"};
        w.i = 0;
        w.j = 1;
        w.r = "b1";
        // a0 -> e11, a1 -> e12, b0 -> e21, b1 -> e11 kills all three relations
        FiniteRing z2 = cyclic_ring(2);
        w.image_expr = "M(2,Z(2))";
        w.image_of_gens = {matrix_unit(z2, 2, MatrixShape::Full, 0, 0, 1),
                           matrix_unit(z2, 2, MatrixShape::Full, 0, 1, 1),
                           matrix_unit(z2, 2, MatrixShape::Full, 1, 0, 1),
                           matrix_unit(z2, 2, MatrixShape::Full, 0, 0, 1)};
        Verdict v = decide_on_algebra(*alg, Prop::StronglyNilIfp, {w});
        CHECK(v.status == Status::Fails);
        // without the certificate the verdict stays unknown
        AlgebraWitness plain = w;
        plain.image_expr.reset();
        plain.image_of_gens.clear();
        Verdict u = decide_on_algebra(*alg, Prop::StronglyNilIfp, {plain});
        CHECK(u.status == Status::Unknown);
    }
    SUBCASE("witnesses that do not replay leave the verdict unknown") {
        auto alg = build_algebra(parse_presentation("algebra p=2 gens=[a,b] unital\nrel a*a\n"));
        AlgebraWitness w;
        w.f = {"b"};
        w.g = {"b"}; // b*b != 0, not a zero product
        w.i = 0;
        w.j = 0;
        Verdict v = decide_on_algebra(*alg, Prop::Armendariz, {w});
        CHECK(v.status == Status::Unknown);
    }
}
