#include "ringlab/corpus.hpp"

namespace ringlab {

namespace {

using K = Expectation::Kind;

Expectation exact(Prop p, Status s, std::string cite) {
    return {p, K::Exact, s, 0, std::move(cite)};
}
Expectation at_bound(Prop p, Status s, uint32_t d, std::string cite) {
    return {p, K::AtBound, s, d, std::move(cite)};
}
Expectation cited(Prop p, Status s, std::string cite) {
    return {p, K::Cited, s, 0, std::move(cite)};
}

ScriptCheck poly_zero(std::vector<std::string> f, std::vector<std::string> g, std::string note) {
    ScriptCheck c{ScriptCheck::Kind::PolyZeroProduct};
    c.f = std::move(f);
    c.g = std::move(g);
    c.note = std::move(note);
    return c;
}
ScriptCheck member(std::string elem, bool in, std::string note) {
    ScriptCheck c{ScriptCheck::Kind::Membership};
    c.elem = std::move(elem);
    c.expect_in = in;
    c.note = std::move(note);
    return c;
}
ScriptCheck nilpotent(std::string elem, uint32_t max_index, std::string note) {
    ScriptCheck c{ScriptCheck::Kind::Nilpotency};
    c.elem = std::move(elem);
    c.expect_nilpotent = true;
    c.k = max_index;
    c.note = std::move(note);
    return c;
}
ScriptCheck not_nilpotent(std::string elem, std::string note) {
    ScriptCheck c{ScriptCheck::Kind::Nilpotency};
    c.elem = std::move(elem);
    c.expect_nilpotent = false;
    c.note = std::move(note);
    return c;
}
ScriptCheck powers_outside(std::string elem, uint32_t k, std::string note) {
    ScriptCheck c{ScriptCheck::Kind::BoundedPowersOutside};
    c.elem = std::move(elem);
    c.k = k;
    c.note = std::move(note);
    return c;
}
ScriptCheck product(uint32_t a, uint32_t b, uint32_t cicero, std::string note) {
    ScriptCheck c{ScriptCheck::Kind::ElementProduct};
    c.a = a;
    c.b = b;
    c.c = cicero;
    c.note = std::move(note);
    return c;
}
ScriptCheck ring_nilpotency(uint32_t k, std::string note) {
    ScriptCheck c{ScriptCheck::Kind::RingNilpotencyIndex};
    c.k = k;
    c.note = std::move(note);
    return c;
}

std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> entries;
    auto add = [&](CorpusEntry e) { entries.push_back(std::move(e)); };

    // ---- cyclic family ----
    {
        CorpusEntry e;
        e.id = "z1";
        e.expr = "Z(1)";
        e.expectations = {exact(Prop::Reduced, Status::Holds, "the one-element ring is reduced"),
                          exact(Prop::StronglyNilIfp, Status::Holds,
                                "every condition is vacuous in the zero ring")};
        add(std::move(e));
    }
    for (auto [id, expr] : {std::pair<const char*, const char*>{"z2", "Z(2)"}, {"z3", "Z(3)"}}) {
        CorpusEntry e;
        e.id = id;
        e.expr = expr;
        e.expectations = {
            exact(Prop::Reduced, Status::Holds, "prime fields are reduced"),
            exact(Prop::Armendariz, Status::Holds, "reduced rings are Armendariz"),
            exact(Prop::WeakIdealArmendariz, Status::Holds,
                  "reduced rings are weak ideal-Armendariz"),
            exact(Prop::StronglyNilIfp, Status::Holds,
                  "weak ideal-Armendariz rings are strongly nil-IFP")};
        add(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "z4";
        e.expr = "Z(4)";
        e.expectations = {
            exact(Prop::Commutative, Status::Holds, "modular arithmetic commutes"),
            exact(Prop::Reduced, Status::Fails, "2*2 = 0 with 2 != 0"),
            exact(Prop::TwoPrimal, Status::Holds, "commutative rings are 2-primal"),
            exact(Prop::Ni, Status::Holds, "the nilpotents {0,2} form the unique nil ideal"),
            exact(Prop::StronglyNilIfp, Status::Holds, "2-primal rings are strongly nil-IFP"),
            exact(Prop::WeakArmendariz, Status::Holds,
                  "strongly nil-IFP rings are weak Armendariz"),
            cited(Prop::Armendariz, Status::Holds,
                  "residue rings modulo a prime power satisfy the Armendariz condition")};
        add(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "z6";
        e.expr = "Z(6)";
        e.expectations = {
            exact(Prop::Reduced, Status::Holds, "squarefree modulus gives a reduced ring"),
            exact(Prop::Semicommutative, Status::Holds, "commutative, so semicommutative"),
            exact(Prop::WeakIdealArmendariz, Status::Holds,
                  "reduced rings are weak ideal-Armendariz")};
        add(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "z8";
        e.expr = "Z(8)";
        e.expectations = {
            exact(Prop::Reduced, Status::Fails, "2^3 = 0"),
            exact(Prop::TwoPrimal, Status::Holds, "commutative rings are 2-primal"),
            exact(Prop::StronglyNilIfp, Status::Holds, "2-primal rings are strongly nil-IFP"),
            at_bound(Prop::Armendariz, Status::Holds, 0,
                     "chain rings satisfy the Armendariz condition; confirmed by scan")};
        add(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "z12";
        e.expr = "Z(12)";
        e.expectations = {
            exact(Prop::Reduced, Status::Fails, "6*6 = 0"),
            exact(Prop::TwoPrimal, Status::Holds, "commutative rings are 2-primal"),
            exact(Prop::StronglyNilIfp, Status::Holds, "2-primal rings are strongly nil-IFP"),
            at_bound(Prop::Armendariz, Status::Holds, 0,
                     "a product of chain rings; confirmed by scan")};
        add(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "gf4";
        e.expr = "GF(2,2)";
        e.expectations = {exact(Prop::Reduced, Status::Holds, "fields are reduced"),
                          exact(Prop::WeakIdealArmendariz, Status::Holds,
                                "reduced rings are weak ideal-Armendariz")};
        add(std::move(e));
    }

    // ---- matrix rings ----
    {
        CorpusEntry e;
        e.id = "m2_z2";
        e.expr = "M(2,Z(2))";
        e.expectations = {
            exact(Prop::Reduced, Status::Fails, "matrix units square to zero"),
            at_bound(Prop::Armendariz, Status::Fails, 1,
                     "full matrix rings of size >= 2 are never Armendariz"),
            exact(Prop::Semicommutative, Status::Fails, "e12*e11 = 0 but e12*e21*e11 != 0"),
            exact(Prop::WeaklySemicommutative, Status::Fails,
                  "an inserted factor reaches a nonzero idempotent"),
            exact(Prop::Reversible, Status::Fails, "e12*e11 = 0, e11*e12 = e12"),
            exact(Prop::Abelian, Status::Fails, "e11 is a non-central idempotent"),
            exact(Prop::TwoPrimal, Status::Fails,
                  "a simple ring with nilpotents: zero prime radical, nonzero nil set"),
            exact(Prop::Ni, Status::Fails, "the nilpotent set is not an ideal"),
            exact(Prop::Qrpr, Status::Fails, "reversed zero products leave the prime radical"),
            exact(Prop::StronglyNilIfp, Status::Fails,
                  "fails weak semicommutativity, so fails the stronger condition"),
            at_bound(Prop::WeakIdealArmendariz, Status::Fails, 1, "fails the Armendariz half"),
            at_bound(Prop::IdealArmendariz, Status::Fails, 1, "fails both halves"),
            at_bound(Prop::WeakArmendariz, Status::Fails, 1,
                     "a degree-one zero product with non-nilpotent coefficient product")};
        add(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "u2_z2";
        e.expr = "U(2,Z(2))";
        e.expectations = {
            at_bound(Prop::Armendariz, Status::Fails, 1,
                     "upper triangular matrix rings of size >= 2 are never Armendariz"),
            at_bound(Prop::WeakIdealArmendariz, Status::Fails, 1,
                     "not Armendariz, hence not weak ideal-Armendariz"),
            exact(Prop::Semicommutative, Status::Fails, "e11*e22 = 0 but e11*e12*e22 = e12"),
            exact(Prop::WeaklySemicommutative, Status::Holds,
                  "inserted factors stay in the nilpotent strict upper corner"),
            exact(Prop::TwoPrimal, Status::Holds,
                  "the nilpotents are exactly the strictly upper matrices, a nilpotent ideal"),
            exact(Prop::Ni, Status::Holds, "same nilpotent ideal"),
            exact(Prop::StronglyNilIfp, Status::Holds, "2-primal rings are strongly nil-IFP"),
            exact(Prop::WeakArmendariz, Status::Holds,
                  "strongly nil-IFP rings are weak Armendariz"),
            exact(Prop::Reversible, Status::Fails, "e12*e11 = 0 but e11*e12 != 0"),
            exact(Prop::Abelian, Status::Fails, "e11 is a non-central idempotent"),
            exact(Prop::Qrpr, Status::Holds,
                  "reversed zero products land in the strictly upper ideal"),
            exact(Prop::IdealArmendariz, Status::Fails, "not semicommutative")};
        e.checks = {product(1, 2, 2, "e11*e12 = e12 in the (diag, diag, upper) layout"),
                    product(2, 1, 0, "e12*e11 = 0")};
        add(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "u2_z4";
        e.expr = "U(2,Z(4))";
        e.expectations = {
            exact(Prop::StronglyNilIfp, Status::Holds,
                  "the upper triangular ring is strongly nil-IFP exactly when the base is; "
                  "Z_4 is 2-primal"),
            exact(Prop::TwoPrimal, Status::Holds, "nilpotents form the ideal 2Z_4-diagonal "
                                                  "plus strict upper"),
            at_bound(Prop::Armendariz, Status::Fails, 1,
                     "upper triangular matrix rings of size >= 2 are never Armendariz")};
        add(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "d2_z2";
        e.expr = "D(2,Z(2))";
        e.expectations = {
            exact(Prop::Commutative, Status::Holds, "constant-diagonal 2x2 matrices commute"),
            exact(Prop::Reduced, Status::Fails, "the strict upper entry squares to zero"),
            exact(Prop::StronglyNilIfp, Status::Holds,
                  "transfer from the base along the constant-diagonal construction"),
            at_bound(Prop::WeakIdealArmendariz, Status::Holds, 0,
                     "the 2x2 constant-diagonal ring is the trivial extension of a reduced "
                     "base")};
        add(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "d3_z2";
        e.expr = "D(3,Z(2))";
        e.expectations = {
            exact(Prop::Semicommutative, Status::Holds,
                  "over a reduced base the 3x3 constant-diagonal ring is semicommutative"),
            at_bound(Prop::WeakIdealArmendariz, Status::Holds, 0,
                     "over a reduced base the 3x3 constant-diagonal ring is weak "
                     "ideal-Armendariz"),
            exact(Prop::StronglyNilIfp, Status::Holds, "transfer from the reduced base"),
            exact(Prop::Commutative, Status::Fails, "e12*e23 = e13 but e23*e12 = 0")};
        add(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "v3_z2";
        e.expr = "V(3,Z(2))";
        e.expectations = {
            exact(Prop::Commutative, Status::Holds,
                  "the constant-diagonals ring is a truncated polynomial ring"),
            exact(Prop::StronglyNilIfp, Status::Holds, "transfer from the reduced base"),
            at_bound(Prop::WeakIdealArmendariz, Status::Holds, 0,
                     "truncated polynomial rings over reduced bases are weak ideal-Armendariz")};
        add(std::move(e));
    }

    // ---- trivial extensions and truncations ----
    {
        CorpusEntry e;
        e.id = "t_z2";
        e.expr = "T(Z(2))";
        e.expectations = {
            exact(Prop::WeakIdealArmendariz, Status::Holds,
                  "the trivial extension is weak ideal-Armendariz exactly over a reduced base"),
            exact(Prop::StronglyNilIfp, Status::Holds, "transfer from the base"),
            exact(Prop::Commutative, Status::Holds, "the base is commutative"),
            exact(Prop::Reduced, Status::Fails, "(0,1) squares to zero")};
        add(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "t_z3";
        e.expr = "T(Z(3))";
        e.expectations = {
            exact(Prop::WeakIdealArmendariz, Status::Holds,
                  "the trivial extension is weak ideal-Armendariz exactly over a reduced base"),
            exact(Prop::StronglyNilIfp, Status::Holds, "transfer from the base")};
        e.checks = {product(4, 4, 7, "(1,1)*(1,1) = (1,2) in T(Z_3)")};
        add(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "t_z4";
        e.expr = "T(Z(4))";
        e.expectations = {
            exact(Prop::WeakIdealArmendariz, Status::Fails,
                  "the trivial extension is weak ideal-Armendariz exactly over a reduced "
                  "base, and Z_4 is not reduced"),
            at_bound(Prop::Armendariz, Status::Fails, 1,
                     "f = g = (0,1) + (2,0)t multiplies to zero with (0,1)*(2,0) != 0"),
            exact(Prop::WeaklySemicommutative, Status::Holds, "commutative"),
            exact(Prop::StronglyNilIfp, Status::Holds,
                  "the trivial extension is strongly nil-IFP exactly when the base is"),
            exact(Prop::Commutative, Status::Holds, "base is commutative")};
        add(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "trunc_z4_2";
        e.expr = "TruncPoly(Z(4),2)";
        e.expectations = {
            exact(Prop::WeakIdealArmendariz, Status::Fails,
                  "truncated polynomial rings are weak ideal-Armendariz exactly over reduced "
                  "bases"),
            exact(Prop::StronglyNilIfp, Status::Holds,
                  "truncated polynomial rings over 2-primal bases are strongly nil-IFP"),
            at_bound(Prop::Armendariz, Status::Fails, 1, "same witness as the trivial extension")};
        add(std::move(e));
    }

    // ---- Dorroh extensions ----
    {
        CorpusEntry e;
        e.id = "dorroh_2z4_2";
        e.expr = "Dorroh(Subring(Z(4),gens=[2]),2)";
        e.notes = "unitalization of the order-2 null ring";
        e.expectations = {
            exact(Prop::Commutative, Status::Holds, "the base is commutative"),
            exact(Prop::StronglyNilIfp, Status::Holds,
                  "the Dorroh extension is strongly nil-IFP exactly when the base is"),
            at_bound(Prop::WeakIdealArmendariz, Status::Holds, 0,
                     "the Dorroh extension is weak ideal-Armendariz exactly when the base is")};
        add(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "dorroh_null4_2";
        e.expr = "Dorroh(Product(Subring(Z(4),gens=[2]),Subring(Z(4),gens=[2])),2)";
        e.notes = "unitalization of the order-4 null ring (all products zero)";
        e.expectations = {
            exact(Prop::Commutative, Status::Holds, "the base is a null ring"),
            exact(Prop::StronglyNilIfp, Status::Holds,
                  "the Dorroh extension is strongly nil-IFP exactly when the base is"),
            at_bound(Prop::WeakIdealArmendariz, Status::Holds, 0,
                     "the Dorroh extension is weak ideal-Armendariz exactly when the base is")};
        add(std::move(e));
    }

    // ---- non-abelian weak ideal-Armendariz rings ----
    {
        CorpusEntry e;
        e.id = "row_matrices_z3";
        e.expr = "Subring(M(2,Z(3)), gens=[1,3])";
        e.notes = "matrices with zero bottom row over Z_3";
        e.expectations = {
            exact(Prop::WeaklySemicommutative, Status::Holds,
                  "a zero product forces the left factor's row to vanish, so sandwiched "
                  "products vanish"),
            exact(Prop::Abelian, Status::Fails,
                  "e11 is idempotent with e11*e12 = e12 but e12*e11 = 0"),
            at_bound(Prop::Armendariz, Status::Holds, 2,
                     "row matrix rings over a domain satisfy the Armendariz condition"),
            at_bound(Prop::WeakIdealArmendariz, Status::Holds, 2,
                     "Armendariz and weakly semicommutative, hence weak ideal-Armendariz")};
        e.checks = {product(1, 3, 3, "e11*e12 = e12"), product(3, 1, 0, "e12*e11 = 0"),
                    product(1, 1, 1, "e11 is idempotent")};
        add(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "column_matrices_z3";
        e.expr = "Subring(M(2,Z(3)), gens=[3,27])";
        e.notes = "matrices with zero left column over Z_3";
        e.expectations = {
            exact(Prop::WeaklySemicommutative, Status::Holds, "mirror of the row case"),
            exact(Prop::Abelian, Status::Fails, "e22 is a non-central idempotent"),
            at_bound(Prop::Armendariz, Status::Holds, 2,
                     "column matrix rings over a domain satisfy the Armendariz condition"),
            at_bound(Prop::WeakIdealArmendariz, Status::Holds, 2,
                     "Armendariz and weakly semicommutative, hence weak ideal-Armendariz")};
        add(std::move(e));
    }

    // ---- nil rings of order p^2 ----
    for (auto [id, p] : {std::pair<const char*, int>{"null_ring_4", 2}, {"null_ring_9", 3}}) {
        CorpusEntry e;
        e.id = id;
        e.kind = CorpusEntry::Kind::RealizedAlgebra;
        e.presentation = "algebra p=" + std::to_string(p) + " gens=[a,b] truncate=2";
        e.notes = "nil ring of order p^2 with every product zero";
        e.expectations = {
            exact(Prop::Commutative, Status::Holds, "all products vanish"),
            at_bound(Prop::Armendariz, Status::Holds, 2,
                     "a nil ring of order p^2 is a commutative Armendariz ring"),
            exact(Prop::StronglyNilIfp, Status::Holds, "semicommutative, trivially"),
            exact(Prop::Reduced, Status::Fails, "every element is nilpotent")};
        e.checks = {ring_nilpotency(3, "the cube of the ring vanishes")};
        add(std::move(e));
    }
    for (auto [id, p] : {std::pair<const char*, int>{"nil_cyclic_4", 2}, {"nil_cyclic_9", 3}}) {
        CorpusEntry e;
        e.id = id;
        e.kind = CorpusEntry::Kind::RealizedAlgebra;
        e.presentation = "algebra p=" + std::to_string(p) + " gens=[a] truncate=3";
        e.notes = "nil ring of order p^2 with a^2 = b, a^3 = 0";
        e.expectations = {
            exact(Prop::Commutative, Status::Holds, "generated by a single element"),
            at_bound(Prop::Armendariz, Status::Holds, 2,
                     "a nil ring of order p^2 is a commutative Armendariz ring"),
            exact(Prop::StronglyNilIfp, Status::Holds, "commutative, hence semicommutative"),
            exact(Prop::Reduced, Status::Fails, "a^3 = 0")};
        e.checks = {ring_nilpotency(3, "the cube of the ring vanishes"),
                    nilpotent("a", 3, "the generator has nilpotency index 3"),
                    member("a^2", false, "a^2 is the second basis element, nonzero")};
        add(std::move(e));
    }

    // ---- presented algebras ----
    {
        CorpusEntry e;
        e.id = "f7_xy_quotient";
        e.kind = CorpusEntry::Kind::Algebra;
        e.presentation =
            "algebra p=7 gens=[x,y] commutative unital\nrel x^3\nrel x^2*y^2\nrel y^3";
        e.notes = "dimension-8 commutative quotient over F_7";
        e.expectations = {
            exact(Prop::Commutative, Status::Holds, "commutative by construction"),
            exact(Prop::Armendariz, Status::Fails,
                  "(x + y t)(3x^2 + 4xy t + 3y^2 t^2) = 0 but x*(4xy) != 0"),
            exact(Prop::StronglyNilIfp, Status::Holds,
                  "commutative, hence semicommutative, hence strongly nil-IFP"),
            exact(Prop::WeakArmendariz, Status::Holds,
                  "strongly nil-IFP rings are weak Armendariz"),
            exact(Prop::WeakIdealArmendariz, Status::Fails,
                  "not Armendariz, hence not weak ideal-Armendariz")};
        {
            AlgebraFailWitness w;
            w.prop = Prop::Armendariz;
            w.witness.f = {"x", "y"};
            w.witness.g = {"3*x^2", "4*x*y", "3*y^2"};
            w.witness.i = 0;
            w.witness.j = 1;
            e.witnesses.push_back(std::move(w));
        }
        e.checks = {poly_zero({"x", "y"}, {"3*x^2", "4*x*y", "3*y^2"},
                              "all four convolution coefficients vanish mod 7"),
                    member("4*x^2*y", false, "x*(4xy) = 4x^2y is a nonzero basis monomial"),
                    nilpotent("x + y", 5, "(x+y)^4 = 0 already"),
                    not_nilpotent("1 + x", "nonzero scalar part")};
        add(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "sandwich_ac";
        e.kind = CorpusEntry::Kind::Algebra;
        e.presentation = "algebra p=2 gens=[a,b,c] unital\nrel c*c\nrel a*c\npattern c%+c";
        e.notes = "the global weak-semicommutativity claim rests on a case analysis; the "
                  "three quoted cases are spot-checked below";
        e.expectations = {
            exact(Prop::Semicommutative, Status::Fails, "a*c = 0 but a*b*c != 0"),
            cited(Prop::Armendariz, Status::Holds,
                  "the quotient of the free algebra by the c-sandwich ideal is Armendariz"),
            cited(Prop::WeaklySemicommutative, Status::Holds,
                  "case analysis over the three generator families"),
            cited(Prop::WeakIdealArmendariz, Status::Holds,
                  "Armendariz and weakly semicommutative"),
            exact(Prop::IdealArmendariz, Status::Fails,
                  "not semicommutative, hence not ideal-Armendariz")};
        {
            AlgebraFailWitness w;
            w.prop = Prop::Semicommutative;
            w.witness.f = {"a"};
            w.witness.g = {"c"};
            w.witness.r = "b";
            e.witnesses.push_back(std::move(w));
        }
        e.checks = {member("a*c", true, "ac lies in the ideal"),
                    member("a*b*c", false, "abc survives"),
                    member("a*b*c*a*b*c", true, "(abc)^2 contains the factor c..c"),
                    member("b*a*b*c*b*b*a*b*c*b", true, "(b a b c b)^2 dies the same way"),
                    member("c*b*c", true, "sandwiched c..c with a nonempty gap"),
                    poly_zero({"a"}, {"c"}, "the pair (a, c) multiplies to zero")};
        add(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "coeff_ideal_7gen_sandwiched";
        e.kind = CorpusEntry::Kind::Algebra;
        e.presentation = "algebra p=2 gens=[a0,a1,a2,b0,b1,b2,c] unital truncate=4\n"
                         "rel a0*b0\nrel a0*b1 + a1*b0\nrel a0*b2 + a1*b1 + a2*b0\n"
                         "rel a1*b2 + a2*b1\nrel a2*b2\n"
                         "pattern a0%+b0\npattern a2%+b2\n"
                         "pattern (a0+a1+a2)%+(b0+b1+b2)";
        e.notes = "semicommutative but not Armendariz";
        e.expectations = {
            cited(Prop::Semicommutative, Status::Holds,
                  "the quotient is semicommutative by the structure of its defining ideal"),
            cited(Prop::StronglyNilIfp, Status::Holds,
                  "semicommutative rings are strongly nil-IFP"),
            exact(Prop::Armendariz, Status::Fails,
                  "the degree-2 coefficient polynomials multiply to zero but a0*b1 != 0"),
            exact(Prop::WeakIdealArmendariz, Status::Fails,
                  "not Armendariz, hence not weak ideal-Armendariz")};
        {
            AlgebraFailWitness w;
            w.prop = Prop::Armendariz;
            w.witness.f = {"a0", "a1", "a2"};
            w.witness.g = {"b0", "b1", "b2"};
            w.witness.i = 0;
            w.witness.j = 1;
            e.witnesses.push_back(std::move(w));
        }
        e.checks = {poly_zero({"a0", "a1", "a2"}, {"b0", "b1", "b2"},
                              "the five convolution coefficients are the linear relations"),
                    member("a0*b1", false, "a0 b1 survives"),
                    member("a0*b2*b0", true, "the a0-r-b0 family kills it"),
                    member("a0*c*b0", true, "the a0-r-b0 family with r = c")};
        add(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "coeff_ideal_7gen";
        e.kind = CorpusEntry::Kind::Algebra;
        e.presentation = "algebra p=2 gens=[a0,a1,a2,b0,b1,b2,c] unital truncate=4\n"
                         "rel a0*b0\nrel a0*b1 + a1*b0\nrel a0*b2 + a1*b1 + a2*b0\n"
                         "rel a1*b2 + a2*b1\nrel a2*b2\n"
                         "pattern (a0+a1+a2)%+(b0+b1+b2)";
        e.notes = "strongly nil-IFP but not semicommutative";
        e.expectations = {
            exact(Prop::Semicommutative, Status::Fails, "a0*b0 = 0 but a0*b2*b0 != 0"),
            cited(Prop::StronglyNilIfp, Status::Holds,
                  "every sandwiched product of coefficients is nilpotent in this quotient"),
            cited(Prop::WeaklySemicommutative, Status::Holds,
                  "strongly nil-IFP rings are weakly semicommutative"),
            exact(Prop::IdealArmendariz, Status::Fails, "not semicommutative")};
        {
            AlgebraFailWitness w;
            w.prop = Prop::Semicommutative;
            w.witness.f = {"a0"};
            w.witness.g = {"b0"};
            w.witness.r = "b2";
            e.witnesses.push_back(std::move(w));
        }
        e.checks = {member("a0*b0", true, "a0 b0 lies in the ideal"),
                    member("a0*b2*b0", false, "without the a0-r-b0 family it survives"),
                    poly_zero({"a0", "a1", "a2"}, {"b0", "b1", "b2"}, "zero product replays")};
        add(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "square_zero_word";
        e.kind = CorpusEntry::Kind::Algebra;
        e.presentation = "algebra p=2 gens=[a,b] unital\nrel a*a";
        e.notes = "Armendariz but not weakly semicommutative";
        e.expectations = {
            cited(Prop::Armendariz, Status::Holds,
                  "the quotient of the free algebra by a single square is Armendariz"),
            cited(Prop::WeakArmendariz, Status::Holds, "Armendariz rings are weak Armendariz"),
            exact(Prop::WeaklySemicommutative, Status::Fails,
                  "(ba)(a) = 0 but (ba)b(a) = baba is not nilpotent"),
            exact(Prop::StronglyNilIfp, Status::Fails,
                  "(ba + ba t)(a + a t) = 0 with the same non-nilpotent sandwich"),
            exact(Prop::Reduced, Status::Fails, "a*a = 0")};
        {
            AlgebraFailWitness w;
            w.prop = Prop::StronglyNilIfp;
            w.witness.f = {"b*a", "b*a"};
            w.witness.g = {"a", "a"};
            w.witness.i = 0;
            w.witness.j = 0;
            w.witness.r = "b";
            e.witnesses.push_back(std::move(w));
        }
        {
            AlgebraFailWitness w;
            w.prop = Prop::WeaklySemicommutative;
            w.witness.f = {"b*a"};
            w.witness.g = {"a"};
            w.witness.r = "b";
            e.witnesses.push_back(std::move(w));
        }
        {
            AlgebraFailWitness w;
            w.prop = Prop::Reduced;
            w.witness.f = {"a"};
            e.witnesses.push_back(std::move(w));
        }
        e.checks = {poly_zero({"b*a", "b*a"}, {"a", "a"}, "(ba + ba t)(a + a t) = 0"),
                    not_nilpotent("b*a*b*a", "no power of the periodic word baba contains aa"),
                    nilpotent("a", 2, "a squares to zero")};
        add(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "coeff_ideal_6gen_len6";
        e.kind = CorpusEntry::Kind::Algebra;
        e.presentation = "algebra p=2 gens=[a0,a1,a2,b0,b1,b2] unital truncate=6\n"
                         "rel a0*b0\nrel a0*b1 + a1*b0\nrel a0*b2 + a1*b1 + a2*b0\n"
                         "rel a1*b2 + a2*b1\nrel a2*b2";
        e.notes = "strongly nil-IFP but not reversible; length-6 truncation, ambient "
                  "dimension 9330 plus the unit";
        e.expectations = {
            exact(Prop::Reversible, Status::Fails, "a0*b0 = 0 but b0*a0 != 0"),
            cited(Prop::StronglyNilIfp, Status::Holds,
                  "the defining relations sandwich every coefficient product into the "
                  "nilpotent part")};
        {
            AlgebraFailWitness w;
            w.prop = Prop::Reversible;
            w.witness.f = {"a0"};
            w.witness.g = {"b0"};
            e.witnesses.push_back(std::move(w));
        }
        e.checks = {member("a0*b0", true, "a0 b0 lies in the ideal"),
                    member("b0*a0", false, "b0 a0 survives")};
        add(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "coeff_ideal_4gen";
        e.kind = CorpusEntry::Kind::Algebra;
        e.presentation = "algebra p=2 gens=[a0,a1,b0,b1] unital bound=7\n"
                         "rel a0*b0\nrel a0*b1 + a1*b0\nrel a1*b1";
        e.notes = "abelian but not strongly nil-IFP; the non-nilpotency is certified by a "
                  "finite matrix image";
        e.expectations = {
            cited(Prop::Abelian, Status::Holds, "the quotient has no nontrivial idempotents "
                                                "off the scalars"),
            exact(Prop::StronglyNilIfp, Status::Fails,
                  "(a0 + a1 x)(b0 + b1 x) = 0 but a0*b1*b1 is not nilpotent")};
        {
            AlgebraFailWitness w;
            w.prop = Prop::StronglyNilIfp;
            w.witness.f = {"a0", "a1"};
            w.witness.g = {"b0", "b1"};
            w.witness.i = 0;
            w.witness.j = 1;
            w.witness.r = "b1";
            w.witness.image_expr = "M(2,Z(2))";
            // a0 -> e11, a1 -> e12, b0 -> e21, b1 -> e11 kills the relations
            // and sends a0 b1 b1 to the idempotent e11
            w.witness.image_of_gens = {1, 2, 4, 1};
            e.witnesses.push_back(std::move(w));
        }
        e.checks = {poly_zero({"a0", "a1"}, {"b0", "b1"},
                              "the convolution coefficients are the three relations"),
                    powers_outside("a0*b1*b1", 2,
                                   "powers up to the working bound stay outside the ideal")};
        add(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "coeff_ideal_4gen_squares";
        e.kind = CorpusEntry::Kind::Algebra;
        e.presentation = "algebra p=2 gens=[a0,a1,b0,b1] unital bound=7\n"
                         "rel a0*b0\nrel a0*b1 + a1*b0\nrel a1*b1\n"
                         "pattern2 %+a0%+b0%+\npattern2 %+a1%+b1%+\n"
                         "pattern %+(a0+a1)%+(b0+b1)%+";
        e.notes = "bounded evidence only: the squared sandwich families have no instances "
                  "below the working bound, and the non-nilpotency claim is checked only "
                  "inside it";
        e.expectations = {
            cited(Prop::WeaklySemicommutative, Status::Holds,
                  "weak semicommutativity is claimed from the shape of the squared "
                  "generator families"),
            cited(Prop::StronglyNilIfp, Status::Fails,
                  "the zero product (a0 + a1 x)(b0 + b1 x) sandwiches a0*a0*b1, claimed "
                  "non-nilpotent")};
        {
            AlgebraFailWitness w;
            w.prop = Prop::StronglyNilIfp;
            w.witness.f = {"a0", "a1"};
            w.witness.g = {"b0", "b1"};
            w.witness.i = 0;
            w.witness.j = 1;
            w.witness.r = "a0";
            e.witnesses.push_back(std::move(w));
        }
        e.checks = {poly_zero({"a0", "a1"}, {"b0", "b1"}, "the zero product replays exactly"),
                    powers_outside("a0*a0*b1", 2,
                                   "powers up to the working bound stay outside the computed "
                                   "ideal; the global claim stays open")};
        add(std::move(e));
    }
    return entries;
}

} // namespace

const std::vector<CorpusEntry>& builtin_corpus() {
    static const std::vector<CorpusEntry> corpus = build_corpus();
    return corpus;
}

const CorpusEntry* find_corpus_entry(const std::string& id) {
    for (const CorpusEntry& e : builtin_corpus())
        if (e.id == id) return &e;
    return nullptr;
}

} // namespace ringlab
