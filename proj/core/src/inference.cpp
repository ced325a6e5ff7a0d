#include "ringlab/inference.hpp"

#include <algorithm>
#include <sstream>

namespace ringlab {

namespace {

Catalog build_catalog() {
    Catalog cat;
    auto edge = [&](std::string id, std::vector<Prop> premises, Prop conclusion, BoundFlow flow,
                    std::string statement, bool equivalence = false, bool unital = false,
                    SideCond side = SideCond::None) {
        cat.edges.push_back({std::move(id), std::move(premises), conclusion, equivalence, unital,
                             side, flow, std::move(statement)});
    };

    edge("reduced_armendariz", {Prop::Reduced}, Prop::Armendariz, BoundFlow::ExactOnly,
         "a reduced ring satisfies the Armendariz condition in every degree");
    edge("reduced_wia", {Prop::Reduced}, Prop::WeakIdealArmendariz, BoundFlow::ExactOnly,
         "a reduced ring is weak ideal-Armendariz");
    edge("commutative_semicommutative", {Prop::Commutative}, Prop::Semicommutative,
         BoundFlow::ExactOnly, "in a commutative ring a*r*b = r*(a*b), so zero products absorb "
                               "inserted factors");
    edge("semicommutative_weakly", {Prop::Semicommutative}, Prop::WeaklySemicommutative,
         BoundFlow::ExactOnly, "a semicommutative ring is weakly semicommutative");
    edge("semicommutative_two_primal", {Prop::Semicommutative}, Prop::TwoPrimal,
         BoundFlow::ExactOnly, "semicommutative rings are 2-primal");
    edge("semicommutative_snifp", {Prop::Semicommutative}, Prop::StronglyNilIfp,
         BoundFlow::ExactOnly, "every semicommutative ring is strongly nil-IFP");
    edge("two_primal_snifp", {Prop::TwoPrimal}, Prop::StronglyNilIfp, BoundFlow::ExactOnly,
         "every 2-primal ring is strongly nil-IFP");
    edge("ni_snifp", {Prop::Ni}, Prop::StronglyNilIfp, BoundFlow::ExactOnly,
         "every NI ring is strongly nil-IFP");
    edge("two_primal_ni", {Prop::TwoPrimal}, Prop::Ni, BoundFlow::ExactOnly,
         "the prime radical sits inside the upper nilradical inside the nilpotent set");
    edge("snifp_weakly", {Prop::StronglyNilIfp}, Prop::WeaklySemicommutative,
         BoundFlow::ExactFrom0,
         "degree-zero instances of the strong nil-IFP condition give weak semicommutativity");
    edge("snifp_weak_armendariz", {Prop::StronglyNilIfp}, Prop::WeakArmendariz,
         BoundFlow::Propagate,
         "a strongly nil-IFP ring is weak Armendariz (via a_i(b_j a_i)b_j = (a_i b_j)^2)");
    edge("wia_snifp", {Prop::WeakIdealArmendariz}, Prop::StronglyNilIfp, BoundFlow::Propagate,
         "a weak ideal-Armendariz ring is strongly nil-IFP");
    edge("reversible_snifp", {Prop::Reversible}, Prop::StronglyNilIfp, BoundFlow::ExactOnly,
         "every reversible ring is strongly nil-IFP");
    edge("armendariz_abelian", {Prop::Armendariz}, Prop::Abelian, BoundFlow::ExactFrom1,
         "with identity, Armendariz rings are abelian (degree-one products around an "
         "idempotent)",
         false, /*unital=*/true);

    edge("ideal_arm_armendariz", {Prop::IdealArmendariz}, Prop::Armendariz, BoundFlow::Propagate,
         "with identity, a*R*b = 0 forces a*b = 0", true, /*unital=*/true);
    edge("ideal_arm_semicommutative", {Prop::IdealArmendariz}, Prop::Semicommutative,
         BoundFlow::ExactFrom0,
         "degree-zero instances of the ideal-Armendariz condition are the IFP condition", true);
    edge("armendariz_semicomm_ideal_arm", {Prop::Armendariz, Prop::Semicommutative},
         Prop::IdealArmendariz, BoundFlow::Propagate,
         "Armendariz plus IFP forces a*R*b = 0 coefficientwise", true);

    edge("wia_armendariz", {Prop::WeakIdealArmendariz}, Prop::Armendariz, BoundFlow::Propagate,
         "weak ideal-Armendariz is by definition Armendariz and weakly semicommutative", true);
    edge("wia_weakly", {Prop::WeakIdealArmendariz}, Prop::WeaklySemicommutative,
         BoundFlow::ExactFrom0,
         "weak ideal-Armendariz is by definition Armendariz and weakly semicommutative", true);
    edge("armendariz_weakly_wia", {Prop::Armendariz, Prop::WeaklySemicommutative},
         Prop::WeakIdealArmendariz, BoundFlow::Propagate,
         "Armendariz and weakly semicommutative together are the weak ideal-Armendariz "
         "property",
         true);

    edge("armendariz_qrpr_snifp", {Prop::Armendariz, Prop::Qrpr}, Prop::StronglyNilIfp,
         BoundFlow::Propagate,
         "an Armendariz and quasi-reversible-over-prime-radical ring is strongly nil-IFP");
    edge("snifp_no_nil_reversible", {Prop::StronglyNilIfp}, Prop::Reversible,
         BoundFlow::ExactFrom1,
         "a strongly nil-IFP ring with zero prime radical is reversible", false,
         /*unital=*/true, SideCond::PrimeRadicalZero);
    edge("index2_snifp_ni", {Prop::BoundedIndexTwo, Prop::StronglyNilIfp}, Prop::Ni,
         BoundFlow::ExactFrom0,
         "with nilpotency index at most two, strong nil-IFP makes the nilpotent set an ideal",
         true);
    edge("index2_ni_snifp", {Prop::BoundedIndexTwo, Prop::Ni}, Prop::StronglyNilIfp,
         BoundFlow::ExactOnly,
         "with nilpotency index at most two, NI rings are strongly nil-IFP", true);

    auto transfer = [&](std::string id, ConstructKind kind, Prop base_prop, Prop construct_prop,
                        bool iff, bool needs2, std::string statement) {
        cat.transfers.push_back({std::move(id), kind, base_prop, construct_prop, iff, needs2,
                                 std::move(statement)});
    };
    transfer("subring_wia", ConstructKind::Subring, Prop::WeakIdealArmendariz,
             Prop::WeakIdealArmendariz, false, false,
             "subrings inherit the weak ideal-Armendariz property");
    transfer("subring_snifp", ConstructKind::Subring, Prop::StronglyNilIfp, Prop::StronglyNilIfp,
             false, false, "the strongly nil-IFP class is closed under subrings");
    transfer("product_wia", ConstructKind::Product, Prop::WeakIdealArmendariz,
             Prop::WeakIdealArmendariz, false, false,
             "finite direct products of weak ideal-Armendariz rings are weak ideal-Armendariz");
    transfer("product_snifp", ConstructKind::Product, Prop::StronglyNilIfp, Prop::StronglyNilIfp,
             false, false, "the strongly nil-IFP class is closed under finite direct sums");
    transfer("upper_snifp", ConstructKind::MatrixU, Prop::StronglyNilIfp, Prop::StronglyNilIfp,
             true, false,
             "the upper triangular matrix ring is strongly nil-IFP exactly when the base is");
    transfer("constdiag_snifp", ConstructKind::MatrixD, Prop::StronglyNilIfp,
             Prop::StronglyNilIfp, true, false,
             "the constant-diagonal triangular ring is strongly nil-IFP exactly when the base "
             "is");
    transfer("diagband_snifp", ConstructKind::MatrixV, Prop::StronglyNilIfp, Prop::StronglyNilIfp,
             true, false,
             "the constant-diagonals ring is strongly nil-IFP exactly when the base is");
    transfer("trivialext_snifp", ConstructKind::TrivialExt, Prop::StronglyNilIfp,
             Prop::StronglyNilIfp, true, false,
             "the trivial extension is strongly nil-IFP exactly when the base is");
    transfer("dorroh_wia", ConstructKind::Dorroh, Prop::WeakIdealArmendariz,
             Prop::WeakIdealArmendariz, true, false,
             "the Dorroh extension is weak ideal-Armendariz exactly when the base is");
    transfer("dorroh_snifp", ConstructKind::Dorroh, Prop::StronglyNilIfp, Prop::StronglyNilIfp,
             true, false, "the Dorroh extension is strongly nil-IFP exactly when the base is");
    transfer("truncpoly_wia_reduced", ConstructKind::TruncPoly, Prop::Reduced,
             Prop::WeakIdealArmendariz, true, true,
             "truncated polynomial rings are weak ideal-Armendariz exactly over reduced bases");
    transfer("trivialext_wia_reduced", ConstructKind::TrivialExt, Prop::Reduced,
             Prop::WeakIdealArmendariz, true, false,
             "the trivial extension is weak ideal-Armendariz exactly over a reduced base");
    transfer("truncpoly_snifp_two_primal", ConstructKind::TruncPoly, Prop::TwoPrimal,
             Prop::StronglyNilIfp, false, false,
             "truncated polynomial rings over 2-primal bases are strongly nil-IFP");
    transfer("quotient_nilpotent_snifp", ConstructKind::QuotientNilpotentIdeal,
             Prop::StronglyNilIfp, Prop::StronglyNilIfp, false, false,
             "if an ideal is nilpotent and the quotient is strongly nil-IFP, so is the ring");
    transfer("quotient_semicommutative_snifp", ConstructKind::QuotientSemicommutativeIdeal,
             Prop::StronglyNilIfp, Prop::StronglyNilIfp, false, false,
             "if an ideal is semicommutative as a ring and the quotient is strongly nil-IFP, "
             "so is the ring");
    transfer("quotient_reduced_wia", ConstructKind::QuotientReducedIdeal,
             Prop::WeakIdealArmendariz, Prop::WeakIdealArmendariz, false, false,
             "if an ideal is reduced and the quotient is weak ideal-Armendariz, so is the "
             "ring");
    transfer("subdirect_snifp", ConstructKind::Subdirect, Prop::StronglyNilIfp,
             Prop::StronglyNilIfp, false, false,
             "a finite subdirect sum of strongly nil-IFP rings is strongly nil-IFP");

    auto forbid = [&](Prop from, Prop to, std::string witness, bool bounded,
                      std::string statement) {
        cat.forbidden.push_back({from, to, std::move(witness), bounded, std::move(statement)});
    };
    forbid(Prop::WeaklySemicommutative, Prop::StronglyNilIfp, "coeff_ideal_4gen_squares", true,
           "a weakly semicommutative ring need not be strongly nil-IFP");
    forbid(Prop::Armendariz, Prop::StronglyNilIfp, "square_zero_word", false,
           "an Armendariz ring need not be strongly nil-IFP");
    forbid(Prop::WeakArmendariz, Prop::StronglyNilIfp, "square_zero_word", false,
           "a weak Armendariz ring need not be strongly nil-IFP");
    forbid(Prop::StronglyNilIfp, Prop::Semicommutative, "coeff_ideal_7gen", false,
           "a strongly nil-IFP ring need not be semicommutative");
    forbid(Prop::StronglyNilIfp, Prop::Reversible, "coeff_ideal_6gen_len6", false,
           "a strongly nil-IFP ring need not be reversible");
    forbid(Prop::StronglyNilIfp, Prop::Armendariz, "f7_xy_quotient", false,
           "a strongly nil-IFP ring need not be Armendariz");
    forbid(Prop::StronglyNilIfp, Prop::WeakIdealArmendariz, "f7_xy_quotient", false,
           "a strongly nil-IFP ring need not be weak ideal-Armendariz");
    forbid(Prop::StronglyNilIfp, Prop::IdealArmendariz, "coeff_ideal_7gen", false,
           "a strongly nil-IFP ring need not be ideal-Armendariz");
    forbid(Prop::Abelian, Prop::StronglyNilIfp, "coeff_ideal_4gen", false,
           "an abelian ring need not be strongly nil-IFP");
    forbid(Prop::WeakIdealArmendariz, Prop::Abelian, "row_matrices_z3", false,
           "a weak ideal-Armendariz ring need not be abelian");
    forbid(Prop::WeaklySemicommutative, Prop::Abelian, "row_matrices_z3", false,
           "a weakly semicommutative ring need not be abelian");
    forbid(Prop::WeakIdealArmendariz, Prop::IdealArmendariz, "sandwich_ac", false,
           "a weak ideal-Armendariz ring need not be ideal-Armendariz");
    forbid(Prop::WeaklySemicommutative, Prop::Semicommutative, "coeff_ideal_7gen", false,
           "a weakly semicommutative ring need not be semicommutative");
    forbid(Prop::Armendariz, Prop::WeaklySemicommutative, "square_zero_word", false,
           "an Armendariz ring need not be weakly semicommutative");
    forbid(Prop::WeaklySemicommutative, Prop::Armendariz, "coeff_ideal_7gen_sandwiched", false,
           "a weakly semicommutative ring need not be Armendariz");
    forbid(Prop::Semicommutative, Prop::Armendariz, "coeff_ideal_7gen_sandwiched", false,
           "a semicommutative ring need not be Armendariz");
    return cat;
}

} // namespace

const Catalog& rule_catalog() {
    static const Catalog cat = build_catalog();
    return cat;
}

bool catalog_implies(Prop from, Prop to) {
    if (from == to) return true;
    VerdictMap seed;
    seed[from] = Verdict::holds_exact({Certificate::Kind::ByConstruction, "hypothesis"});
    InferContext ctx;
    // reachability over all rings: unital-only edges stay out, since the
    // corpus and hunter cover non-unital rings too
    ctx.unital = false;
    InferResult res = infer(std::move(seed), ctx);
    auto it = res.verdicts.find(to);
    return it != res.verdicts.end() && it->second.status == Status::Holds;
}

namespace {

// strength ordering for replacing verdicts: exact Holds/Fails > bounded > unknown
int strength(const Verdict& v) {
    if (v.status == Status::Unknown) return 0;
    return v.exact ? 2 : 1;
}

bool certificate_is_cited(const Verdict& v) {
    return v.certificate.kind == Certificate::Kind::Citation;
}

struct Engine {
    const InferContext& ctx;
    VerdictMap& verdicts;
    std::vector<std::string>& inconsistencies;
    bool changed = false;

    void propose(Prop target, Verdict cand) {
        auto it = verdicts.find(target);
        if (it == verdicts.end()) {
            verdicts.emplace(target, std::move(cand));
            changed = true;
            return;
        }
        Verdict& cur = it->second;
        if (cur.status != Status::Unknown && cand.status != Status::Unknown &&
            cur.status != cand.status) {
            // a bounded Holds is consistent with an exact Fails: the witness
            // simply lives above the scanned degree; the exact verdict wins
            bool cur_soft = cur.status == Status::Holds && !cur.exact;
            bool cand_soft = cand.status == Status::Holds && !cand.exact;
            if (cur_soft && cand.status == Status::Fails) {
                cand.trace.push_back("(supersedes a degree-" +
                                     std::to_string(cur.degree_bound) + " scan)");
                cur = std::move(cand);
                changed = true;
                return;
            }
            if (cand_soft && cur.status == Status::Fails) return;
            std::ostringstream os;
            os << prop_name(target) << ": derived " << status_name(cand.status) << " ["
               << (cand.trace.empty() ? "" : cand.trace.back()) << "] collides with known "
               << status_name(cur.status);
            inconsistencies.push_back(os.str());
            return;
        }
        if (strength(cand) > strength(cur)) {
            cur = std::move(cand);
            changed = true;
        }
    }

    void fire_edges() {
        for (const ImplicationEdge& e : rule_catalog().edges) {
            if (e.requires_unital && !ctx.unital) continue;
            if (e.side == SideCond::PrimeRadicalZero && !ctx.prime_radical_zero) continue;
            fire_forward(e);
            if (e.premises.size() == 1) fire_contrapositive(e);
        }
    }

    void fire_forward(const ImplicationEdge& e) {
        bool all_hold = true;
        bool all_exact = true;
        bool any_cited = false;
        uint32_t min_bound = UINT32_MAX;
        std::vector<std::string> trace;
        for (Prop p : e.premises) {
            auto it = verdicts.find(p);
            if (it == verdicts.end() || it->second.status != Status::Holds) {
                all_hold = false;
                break;
            }
            const Verdict& v = it->second;
            if (!v.exact) {
                all_exact = false;
                min_bound = std::min(min_bound, v.degree_bound);
            }
            any_cited = any_cited || certificate_is_cited(v);
            for (const std::string& line : v.trace) trace.push_back(line);
            trace.push_back(std::string(prop_name(p)) + " holds [" +
                            (v.certificate.detail.empty() ? "known" : v.certificate.detail) + "]");
        }
        if (!all_hold) return;
        bool exact_conclusion = false;
        uint32_t bound = 0;
        switch (e.flow) {
            case BoundFlow::ExactOnly:
                if (!all_exact) return;
                exact_conclusion = true;
                break;
            case BoundFlow::Propagate:
                exact_conclusion = all_exact;
                bound = all_exact ? 0 : min_bound;
                break;
            case BoundFlow::ExactFrom0:
                exact_conclusion = true;
                break;
            case BoundFlow::ExactFrom1:
                if (!all_exact && min_bound < 1) return;
                exact_conclusion = true;
                break;
        }
        Verdict cand;
        cand.status = Status::Holds;
        cand.exact = exact_conclusion;
        cand.degree_bound = bound;
        cand.certificate = {any_cited ? Certificate::Kind::Citation : Certificate::Kind::Inference,
                            e.statement};
        cand.trace = std::move(trace);
        cand.trace.push_back("=> " + std::string(prop_name(e.conclusion)) + " [rule " + e.id +
                             "]");
        propose(e.conclusion, std::move(cand));
    }

    void fire_contrapositive(const ImplicationEdge& e) {
        auto it = verdicts.find(e.conclusion);
        if (it == verdicts.end() || it->second.status != Status::Fails) return;
        const Verdict& v = it->second;
        Verdict cand;
        cand.status = Status::Fails;
        cand.exact = true;
        cand.certificate = {certificate_is_cited(v) ? Certificate::Kind::Citation
                                                    : Certificate::Kind::Inference,
                            e.statement};
        cand.trace = v.trace;
        cand.trace.push_back(std::string(prop_name(e.conclusion)) + " fails => " +
                             prop_name(e.premises[0]) + " fails [contrapositive of rule " + e.id +
                             "]");
        propose(e.premises[0], std::move(cand));
    }

    void fire_transfers() {
        if (!ctx.transfer) return;
        const TransferFacts& tf = *ctx.transfer;
        for (const TransferRule& rule : rule_catalog().transfers) {
            if (rule.construction != tf.kind) continue;
            // forward: every base has the property => the construct does
            bool all_hold = true, all_exact = true, any_cited = false, any_fails = false;
            bool fails_exact = false, fails_cited = false;
            uint32_t min_bound = UINT32_MAX;
            std::vector<std::string> trace;
            for (const VerdictMap& base : tf.bases) {
                auto it = base.find(rule.base_prop);
                if (it == base.end() || it->second.status != Status::Holds) all_hold = false;
                if (it != base.end() && it->second.status == Status::Fails) {
                    any_fails = true;
                    fails_exact = it->second.exact;
                    fails_cited = certificate_is_cited(it->second);
                }
                if (it == base.end()) continue;
                const Verdict& v = it->second;
                if (v.status == Status::Holds) {
                    if (!v.exact) {
                        all_exact = false;
                        min_bound = std::min(min_bound, v.degree_bound);
                    }
                    any_cited = any_cited || certificate_is_cited(v);
                }
            }
            if (all_hold && !tf.bases.empty()) {
                Verdict cand;
                cand.status = Status::Holds;
                cand.exact = all_exact;
                cand.degree_bound = all_exact ? 0 : min_bound;
                cand.certificate = {any_cited ? Certificate::Kind::Citation
                                              : Certificate::Kind::Inference,
                                    rule.statement};
                cand.trace.push_back("base " + std::string(prop_name(rule.base_prop)) +
                                     " holds => " + prop_name(rule.construct_prop) +
                                     " [transfer " + rule.id + "]");
                propose(rule.construct_prop, std::move(cand));
            }
            if (rule.iff && any_fails && fails_exact &&
                (!rule.needs_n_at_least_2 || tf.n >= 2)) {
                Verdict cand;
                cand.status = Status::Fails;
                cand.exact = true;
                cand.certificate = {fails_cited ? Certificate::Kind::Citation
                                                : Certificate::Kind::Inference,
                                    rule.statement};
                cand.trace.push_back("base " + std::string(prop_name(rule.base_prop)) +
                                     " fails => " + prop_name(rule.construct_prop) +
                                     " fails [transfer " + rule.id + ", equivalence]");
                propose(rule.construct_prop, std::move(cand));
            }
        }
    }

    void fire_quotient_rules() {
        for (const QuotientFact& q : ctx.quotients) {
            auto it = q.quotient.find(Prop::StronglyNilIfp);
            if (it != q.quotient.end() && it->second.status == Status::Holds &&
                (q.ideal_semicommutative || q.ideal_nilpotent)) {
                Verdict cand;
                cand.status = Status::Holds;
                cand.exact = it->second.exact;
                cand.degree_bound = it->second.degree_bound;
                cand.certificate = {certificate_is_cited(it->second)
                                        ? Certificate::Kind::Citation
                                        : Certificate::Kind::Inference,
                                    q.ideal_semicommutative
                                        ? "if an ideal is semicommutative as a ring and the "
                                          "quotient is strongly nil-IFP, so is the ring"
                                        : "if an ideal is nilpotent and the quotient is "
                                          "strongly nil-IFP, so is the ring"};
                cand.trace.push_back("quotient strongly_nil_ifp holds (" + q.note + ") => " +
                                     std::string(prop_name(Prop::StronglyNilIfp)) +
                                     " [quotient lift]");
                propose(Prop::StronglyNilIfp, std::move(cand));
            }
            auto wit = q.quotient.find(Prop::WeakIdealArmendariz);
            if (wit != q.quotient.end() && wit->second.status == Status::Holds &&
                q.ideal_reduced) {
                Verdict cand;
                cand.status = Status::Holds;
                cand.exact = wit->second.exact;
                cand.degree_bound = wit->second.degree_bound;
                cand.certificate = {certificate_is_cited(wit->second)
                                        ? Certificate::Kind::Citation
                                        : Certificate::Kind::Inference,
                                    "if an ideal is reduced and the quotient is weak "
                                    "ideal-Armendariz, so is the ring"};
                cand.trace.push_back("quotient weak_ideal_armendariz holds (" + q.note +
                                     ") => weak_ideal_armendariz [quotient lift]");
                propose(Prop::WeakIdealArmendariz, std::move(cand));
            }
        }
        if (ctx.subdirect && ctx.subdirect->intersection_zero && !ctx.subdirect->quotients.empty()) {
            bool all_hold = true, all_exact = true, any_cited = false;
            uint32_t min_bound = UINT32_MAX;
            for (const VerdictMap& q : ctx.subdirect->quotients) {
                auto it = q.find(Prop::StronglyNilIfp);
                if (it == q.end() || it->second.status != Status::Holds) {
                    all_hold = false;
                    break;
                }
                if (!it->second.exact) {
                    all_exact = false;
                    min_bound = std::min(min_bound, it->second.degree_bound);
                }
                any_cited = any_cited || certificate_is_cited(it->second);
            }
            if (all_hold) {
                Verdict cand;
                cand.status = Status::Holds;
                cand.exact = all_exact;
                cand.degree_bound = all_exact ? 0 : min_bound;
                cand.certificate = {any_cited ? Certificate::Kind::Citation
                                              : Certificate::Kind::Inference,
                                    "a finite subdirect sum of strongly nil-IFP rings is "
                                    "strongly nil-IFP"};
                cand.trace.push_back(
                    "all subdirect quotients strongly_nil_ifp hold => strongly_nil_ifp "
                    "[subdirect]");
                propose(Prop::StronglyNilIfp, std::move(cand));
            }
        }
    }
};

} // namespace

InferResult infer(VerdictMap known, const InferContext& ctx) {
    InferResult res;
    res.verdicts = std::move(known);
    Engine engine{ctx, res.verdicts, res.inconsistencies};
    for (int round = 0; round < 64; ++round) {
        engine.changed = false;
        engine.fire_edges();
        engine.fire_transfers();
        engine.fire_quotient_rules();
        if (!engine.changed) break;
    }
    std::sort(res.inconsistencies.begin(), res.inconsistencies.end());
    res.inconsistencies.erase(
        std::unique(res.inconsistencies.begin(), res.inconsistencies.end()),
        res.inconsistencies.end());
    return res;
}

std::string explain(Prop prop, const VerdictMap& verdicts) {
    auto it = verdicts.find(prop);
    if (it == verdicts.end())
        throw Error(ErrorCode::NoVerdict,
                    std::string("no verdict recorded for ") + prop_name(prop));
    const Verdict& v = it->second;
    std::ostringstream os;
    os << prop_name(prop) << ": " << status_name(v.status);
    if (v.status == Status::Holds && !v.exact) os << " (degree <= " << v.degree_bound << ")";
    switch (v.certificate.kind) {
        case Certificate::Kind::ExhaustiveScan: os << " [exhaustive: "; break;
        case Certificate::Kind::Inference: os << " [inference: "; break;
        case Certificate::Kind::Citation: os << " [cited: "; break;
        case Certificate::Kind::ByConstruction: os << " [by construction: "; break;
        case Certificate::Kind::None: os << " ["; break;
    }
    os << v.certificate.detail << "]";
    if (v.witness.kind != Witness::Kind::None) os << "\n  witness: " << v.witness.render();
    for (const std::string& line : v.trace) os << "\n  " << line;
    return os.str();
}

std::string lattice_dot() {
    const Catalog& cat = rule_catalog();
    std::ostringstream os;
    os << "digraph property_lattice {\n";
    os << "  rankdir=BT;\n";
    for (Prop p : kAllProps)
        os << "  " << prop_name(p) << " [shape=box];\n";
    for (const ImplicationEdge& e : cat.edges) {
        if (e.premises.size() == 1) {
            os << "  " << prop_name(e.premises[0]) << " -> " << prop_name(e.conclusion)
               << " [label=\"" << e.id << "\"";
            if (e.equivalence_part) os << ", color=blue";
            os << "];\n";
        } else {
            std::string joint = e.id + "_joint";
            os << "  " << joint << " [shape=point, label=\"\"];\n";
            for (Prop p : e.premises)
                os << "  " << prop_name(p) << " -> " << joint << " [arrowhead=none];\n";
            os << "  " << joint << " -> " << prop_name(e.conclusion) << " [label=\"" << e.id
               << "\"];\n";
        }
    }
    for (const ForbiddenEdge& f : cat.forbidden) {
        os << "  " << prop_name(f.from) << " -> " << prop_name(f.to)
           << " [style=dashed, color=red, arrowhead=tee, label=\"" << f.witness_corpus_id
           << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace ringlab
