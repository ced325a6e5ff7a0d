#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ringlab/classify.hpp"
#include "ringlab/construct.hpp"
#include "ringlab/inference.hpp"

#include "test_util.hpp"

using namespace ringlab;
using test_util::error_code_of;

TEST_CASE("catalog size and structure") {
    const Catalog& cat = rule_catalog();
    CHECK(cat.edges.size() >= 17);
    CHECK(cat.transfers.size() >= 10);
    CHECK(cat.forbidden.size() >= 10);
    for (const auto& e : cat.edges) {
        CHECK_FALSE(e.statement.empty());
        CHECK_FALSE(e.id.empty());
        CHECK_FALSE(e.premises.empty());
    }
    for (const auto& t : cat.transfers) CHECK_FALSE(t.statement.empty());
    for (const auto& f : cat.forbidden) CHECK_FALSE(f.witness_corpus_id.empty());
}

TEST_CASE("forbidden edges are not derivable from the catalog") {
    for (const ForbiddenEdge& f : rule_catalog().forbidden) {
        CAPTURE(prop_name(f.from));
        CAPTURE(prop_name(f.to));
        CHECK_FALSE(catalog_implies(f.from, f.to));
    }
    // in particular there is no path from weak semicommutativity upward
    CHECK_FALSE(catalog_implies(Prop::WeaklySemicommutative, Prop::StronglyNilIfp));
    // while the stated chains do exist
    CHECK(catalog_implies(Prop::Commutative, Prop::StronglyNilIfp));
    CHECK(catalog_implies(Prop::Reduced, Prop::Armendariz));
    CHECK(catalog_implies(Prop::WeakIdealArmendariz, Prop::WeakArmendariz));
}

TEST_CASE("forward chains produce exact conclusions from exact premises") {
    RingClassification c = classify_ring(cyclic_ring(4));
    REQUIRE(c.inconsistencies.empty());
    const Verdict& snifp = c.verdicts.at(Prop::StronglyNilIfp);
    CHECK(snifp.status == Status::Holds);
    CHECK(snifp.exact); // upgraded by inference beyond the bounded scan
    const Verdict& weak = c.verdicts.at(Prop::WeakArmendariz);
    CHECK(weak.status == Status::Holds);
    CHECK(weak.exact);
    std::string chain = explain(Prop::StronglyNilIfp, c.verdicts);
    CHECK(chain.find("strongly_nil_ifp: holds") != std::string::npos);
}

TEST_CASE("contrapositives push failures down the lattice") {
    RingClassification c = classify_ring(eval_expr("M(2,Z(2))"));
    REQUIRE(c.inconsistencies.empty());
    for (Prop p : {Prop::IdealArmendariz, Prop::WeakIdealArmendariz, Prop::Reduced}) {
        CAPTURE(prop_name(p));
        CHECK(c.verdicts.at(p).status == Status::Fails);
    }
}

TEST_CASE("fixpoint idempotence") {
    RingClassification c = classify_ring(eval_expr("U(2,Z(2))"));
    InferContext ctx;
    ctx.unital = true;
    InferResult once = infer(c.verdicts, ctx);
    InferResult twice = infer(once.verdicts, ctx);
    REQUIRE(once.verdicts.size() == twice.verdicts.size());
    for (const auto& [p, v] : once.verdicts) {
        const Verdict& w = twice.verdicts.at(p);
        CHECK(v.status == w.status);
        CHECK(v.exact == w.exact);
    }
}

TEST_CASE("trace replay: rerunning inference from the recorded premises rederives conclusions") {
    VerdictMap seed;
    seed[Prop::Commutative] =
        Verdict::holds_exact({Certificate::Kind::ExhaustiveScan, "full scan"});
    InferResult res = infer(seed, {});
    const Verdict& snifp = res.verdicts.at(Prop::StronglyNilIfp);
    REQUIRE(snifp.status == Status::Holds);
    REQUIRE_FALSE(snifp.trace.empty());
    // replay: start again from the same premises and expect the same chain
    InferResult replay = infer(seed, {});
    CHECK(replay.verdicts.at(Prop::StronglyNilIfp).trace == snifp.trace);
    CHECK(replay.verdicts.at(Prop::StronglyNilIfp).status == snifp.status);
}

TEST_CASE("transfer rules fire through construction expressions") {
    SUBCASE("upper triangular over Z_4 inherits strong nil-IFP exactly") {
        RingClassification c = classify_expr("U(2,Z(4))");
        REQUIRE(c.inconsistencies.empty());
        const Verdict& v = c.verdicts.at(Prop::StronglyNilIfp);
        CHECK(v.status == Status::Holds);
        CHECK(v.exact); // Z_4 is 2-primal, so the base verdict is exact
    }
    SUBCASE("trivial extension over a reduced base is weak ideal-Armendariz, exactly") {
        RingClassification c = classify_expr("T(Z(3))");
        REQUIRE(c.inconsistencies.empty());
        const Verdict& v = c.verdicts.at(Prop::WeakIdealArmendariz);
        CHECK(v.status == Status::Holds);
        CHECK(v.exact);
        std::string chain = explain(Prop::WeakIdealArmendariz, c.verdicts);
        CHECK(chain.find("reduced") != std::string::npos);
    }
    SUBCASE("trivial extension over Z_4 fails weak ideal-Armendariz through the equivalence") {
        RingClassification c = classify_expr("T(Z(4))");
        REQUIRE(c.inconsistencies.empty());
        CHECK(c.verdicts.at(Prop::WeakIdealArmendariz).status == Status::Fails);
        CHECK(c.verdicts.at(Prop::StronglyNilIfp).status == Status::Holds);
    }
    SUBCASE("truncated polynomials over a 2-primal base are strongly nil-IFP") {
        RingClassification c = classify_expr("TruncPoly(Z(4),2)");
        REQUIRE(c.inconsistencies.empty());
        const Verdict& v = c.verdicts.at(Prop::StronglyNilIfp);
        CHECK(v.status == Status::Holds);
        CHECK(v.exact);
    }
    SUBCASE("products inherit both closure properties") {
        RingClassification c = classify_expr("Product(Z(4),Z(9))");
        REQUIRE(c.inconsistencies.empty());
        CHECK(c.verdicts.at(Prop::StronglyNilIfp).status == Status::Holds);
    }
}

TEST_CASE("quotient-lift rules") {
    // U_2(Z_2) with I = <e12>: I is nilpotent and semicommutative as a ring,
    // and U_2(Z_2)/I is a product of fields
    FiniteRing u2 = eval_expr("U(2,Z(2))");
    FiniteRing z2 = cyclic_ring(2);
    uint32_t e12 = matrix_unit(z2, 2, MatrixShape::UpperTriangular, 0, 1, 1);
    ElementSubset ideal = subset_closure(u2, {e12}, ClosureMode::TwoSidedIdeal);
    auto q = quotient_ring(u2, ideal);
    RingClassification quot = classify_ring(q.ring);
    REQUIRE(quot.verdicts.at(Prop::StronglyNilIfp).status == Status::Holds);

    QuotientFact fact;
    fact.ideal_nilpotent = true;
    fact.ideal_semicommutative = true;
    fact.ideal_reduced = false;
    fact.quotient = quot.verdicts;
    fact.note = "modulo the nilpotent upper corner";
    InferContext ctx;
    ctx.unital = true;
    ctx.quotients.push_back(fact);
    InferResult res = infer({}, ctx);
    CHECK(res.verdicts.at(Prop::StronglyNilIfp).status == Status::Holds);

    // subdirect decomposition of Z_6 by its two maximal ideals
    FiniteRing z6 = cyclic_ring(6);
    auto q2 = quotient_ring(z6, subset_closure(z6, {2}, ClosureMode::TwoSidedIdeal));
    auto q3 = quotient_ring(z6, subset_closure(z6, {3}, ClosureMode::TwoSidedIdeal));
    SubdirectFact sub;
    sub.intersection_zero = true;
    sub.quotients = {classify_ring(q2.ring).verdicts, classify_ring(q3.ring).verdicts};
    InferContext ctx2;
    ctx2.unital = true;
    ctx2.subdirect = sub;
    InferResult res2 = infer({}, ctx2);
    CHECK(res2.verdicts.at(Prop::StronglyNilIfp).status == Status::Holds);
}

TEST_CASE("inconsistencies are reported, not silently overwritten") {
    VerdictMap seed;
    seed[Prop::Commutative] =
        Verdict::holds_exact({Certificate::Kind::ExhaustiveScan, "full scan"});
    Witness w;
    w.kind = Witness::Kind::Elements;
    w.elements = {1, 2, 3};
    seed[Prop::StronglyNilIfp] =
        Verdict::fails(w, {Certificate::Kind::ExhaustiveScan, "fabricated"});
    InferResult res = infer(seed, {});
    CHECK_FALSE(res.inconsistencies.empty());
    // the fabricated scan verdict stays in place
    CHECK(res.verdicts.at(Prop::StronglyNilIfp).status == Status::Fails);
}

TEST_CASE("explain gives chains and errors without a verdict") {
    RingClassification c = classify_ring(cyclic_ring(4));
    std::string chain = explain(Prop::StronglyNilIfp, c.verdicts);
    CHECK(chain.find("=>") != std::string::npos);
    VerdictMap empty;
    CHECK(error_code_of([&] { explain(Prop::Reduced, empty); }) == ErrorCode::NoVerdict);
}

TEST_CASE("soundness sweep: no exact Holds premise with a Fails conclusion on sample rings") {
    const char* exprs[] = {"Z(2)",      "Z(4)",       "Z(6)",      "Z(12)",     "GF(2,2)",
                           "M(2,Z(2))", "U(2,Z(2))",  "U(2,Z(4))", "D(3,Z(2))", "V(3,Z(2))",
                           "T(Z(2))",   "T(Z(4))",    "Product(Z(2),Z(3))"};
    const Catalog& cat = rule_catalog();
    for (const char* e : exprs) {
        CAPTURE(e);
        RingClassification c = classify_expr(e);
        CHECK(c.inconsistencies.empty());
        for (const ImplicationEdge& edge : cat.edges) {
            if (edge.requires_unital && !c.unital) continue;
            if (edge.side == SideCond::PrimeRadicalZero) continue;
            bool premises_exact_hold = true;
            for (Prop p : edge.premises) {
                auto it = c.verdicts.find(p);
                if (it == c.verdicts.end() || it->second.status != Status::Holds ||
                    !it->second.exact)
                    premises_exact_hold = false;
            }
            if (!premises_exact_hold) continue;
            auto it = c.verdicts.find(edge.conclusion);
            if (it != c.verdicts.end()) {
                CAPTURE(edge.id);
                CHECK(it->second.status != Status::Fails);
            }
        }
    }
}

TEST_CASE("lattice DOT output contains the boxes and dashed non-implications") {
    std::string dot = lattice_dot();
    for (Prop p : kAllProps) CHECK(dot.find(prop_name(p)) != std::string::npos);
    CHECK(dot.find("style=dashed") != std::string::npos);
    CHECK(dot.find("square_zero_word") != std::string::npos);
    CHECK(dot.find("ideal_armendariz") != std::string::npos);
}
