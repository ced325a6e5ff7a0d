// Acceptance suite: runs the project acceptance criteria at fixed tolerances
// and prints one pass/fail line per criterion. Exits nonzero on any failure.

#include <chrono>
#include <iostream>

#include "ringlab/hunt.hpp"
#include "ringlab/verify.hpp"

using namespace ringlab;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int number, const std::string& what, bool pass, const std::string& detail = "") {
    std::cout << "criterion " << number << ": " << (pass ? "PASS" : "FAIL") << " - " << what;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n";
    if (!pass) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

} // namespace

int main() {
    // ---- criterion 1: strict corpus verification at the defaults ----
    RunConfig defaults;
    defaults.strict = true;
    defaults.max_degree = 2;
    defaults.power_bound = 64;
    auto t0 = Clock::now();
    Report report = verify_paper(defaults);
    double verify_seconds = seconds_since(t0);
    criterion(1, "strict corpus verification at degree 2, power bound 64",
              report.ok && verify_seconds < 600.0,
              "entries=" + std::to_string(report.entries.size()) + ", " +
                  std::to_string(verify_seconds).substr(0, 5) + "s");

    // ---- criterion 2: the dimension-8 quotient over F_7 ----
    {
        auto alg = build_algebra(parse_presentation(
            "algebra p=7 gens=[x,y] commutative unital\nrel x^3\nrel x^2*y^2\nrel y^3"));
        auto* com = dynamic_cast<CommutativeMonomialAlgebra*>(alg.get());
        bool dim8 = com && com->basis().size() == 8;
        std::vector<AlgValue> f = {alg->parse("x"), alg->parse("y")};
        std::vector<AlgValue> g = {alg->parse("3*x^2"), alg->parse("4*x*y"),
                                   alg->parse("3*y^2")};
        auto id = verify_poly_identity(*alg, f, g);
        bool four_coeffs = f.size() + g.size() - 1 == 4;
        auto bad = alg->in_ideal(alg->mul(alg->parse("x"), alg->parse("4*x*y")));
        const CorpusEntry* entry = find_corpus_entry("f7_xy_quotient");
        EntryResult res = run_corpus_entry(*entry, defaults);
        const Verdict& snifp = res.verdicts.at(Prop::StronglyNilIfp);
        bool chain = false;
        for (const std::string& line : snifp.trace)
            if (line.find("semicommutative_snifp") != std::string::npos) chain = true;
        bool commutative_premise = false;
        for (const std::string& line : snifp.trace)
            if (line.find("commutative") != std::string::npos) commutative_premise = true;
        criterion(2, "dimension-8 quotient: f*g = 0 exactly, x*(4xy) != 0, chain upgrade",
                  dim8 && id.zero && id.exact && four_coeffs && !bad.in_ideal && bad.exact &&
                      snifp.status == Status::Holds && snifp.exact && chain &&
                      commutative_premise);
    }

    // ---- criterion 3: the a^2 = 0 quotient and the periodic word ----
    {
        auto alg = build_algebra(
            parse_presentation("algebra p=2 gens=[a,b] unital\nrel a*a"));
        std::vector<AlgValue> f = {alg->parse("b*a"), alg->parse("b*a")};
        std::vector<AlgValue> g = {alg->parse("a"), alg->parse("a")};
        auto id = verify_poly_identity(*alg, f, g);
        AlgValue baba = alg->parse("b*a*b*a");
        auto nil = alg->nilpotency(baba, 64);
        criterion(3, "zero product over the square-free-word quotient, baba exactly "
                     "non-nilpotent",
                  id.zero && id.exact && nil.status == NilStatus::NotNilpotent && nil.exact);
    }

    // ---- criterion 4: truncated-algebra witnesses and construction time ----
    {
        auto t_begin = Clock::now();
        auto alg16 = build_algebra(parse_presentation(
            "algebra p=2 gens=[a0,a1,a2,b0,b1,b2] unital truncate=6\n"
            "rel a0*b0\nrel a0*b1 + a1*b0\nrel a0*b2 + a1*b1 + a2*b0\n"
            "rel a1*b2 + a2*b1\nrel a2*b2"));
        double build_seconds = seconds_since(t_begin);
        auto* trunc = dynamic_cast<TruncatedAlgebra*>(alg16.get());
        bool ambient = trunc && trunc->ambient_dimension() == 9331; // 9330 words + unit
        auto in16 = alg16->in_ideal(alg16->parse("a0*b0"));
        auto out16 = alg16->in_ideal(alg16->parse("b0*a0"));

        auto alg5 = build_algebra(parse_presentation(
            "algebra p=2 gens=[a0,a1,a2,b0,b1,b2,c] unital truncate=4\n"
            "rel a0*b0\nrel a0*b1 + a1*b0\nrel a0*b2 + a1*b1 + a2*b0\n"
            "rel a1*b2 + a2*b1\nrel a2*b2\n"
            "pattern (a0+a1+a2)%+(b0+b1+b2)"));
        auto in5 = alg5->in_ideal(alg5->parse("a0*b0"));
        auto out5 = alg5->in_ideal(alg5->parse("a0*b2*b0"));
        criterion(4, "truncated witnesses replay; the 9330-dimensional row space builds in "
                     "time",
                  ambient && in16.in_ideal && in16.exact && !out16.in_ideal && out16.exact &&
                      in5.in_ideal && !out5.in_ideal && out5.exact && build_seconds < 120.0,
                  std::to_string(build_seconds).substr(0, 5) + "s");
    }

    // ---- criterion 5: zero inconsistencies, every edge validated ----
    {
        bool no_inconsistencies = true;
        for (const EntryResult& e : report.entries)
            no_inconsistencies = no_inconsistencies && e.inconsistencies.empty();
        size_t rings = 0;
        size_t validations = 0;
        bool sound = true;
        const Catalog& cat = rule_catalog();
        for (const EntryResult& e : report.entries) {
            ++rings;
            for (const ImplicationEdge& edge : cat.edges) {
                if (edge.requires_unital && !e.unital) continue;
                if (edge.side != SideCond::None) continue;
                bool premises_hold_exact = true;
                for (Prop p : edge.premises) {
                    auto it = e.verdicts.find(p);
                    if (it == e.verdicts.end() || it->second.status != Status::Holds ||
                        !it->second.exact ||
                        it->second.certificate.kind == Certificate::Kind::Citation)
                        premises_hold_exact = false;
                }
                ++validations;
                if (!premises_hold_exact) continue;
                auto it = e.verdicts.find(edge.conclusion);
                if (it != e.verdicts.end() && it->second.status == Status::Fails) sound = false;
            }
        }
        criterion(5, "no inconsistency events; implication edges validated across the corpus",
                  no_inconsistencies && sound && rings >= 25 && cat.edges.size() >= 17,
                  std::to_string(rings) + " rings x " + std::to_string(cat.edges.size()) +
                      " edges, " + std::to_string(validations) + " checks");
    }

    // ---- criterion 6: transfer spot checks at degree 1 ----
    {
        bool agree = true;
        auto snifp1 = [&](const std::string& expr) {
            FiniteRing r = eval_expr(expr);
            return decide_armendariz_family(r, Prop::StronglyNilIfp, 1, defaults.budget).status;
        };
        for (const char* base : {"Z(4)", "Product(Z(2),Z(2))"}) {
            Status base_status = snifp1(base);
            for (std::string shape : {"U(2,", "D(2,", "V(2,", "T("}) {
                std::string expr = shape + std::string(base) + ")";
                Status s = snifp1(expr);
                if (s != base_status) {
                    agree = false;
                    std::cerr << "  disagreement: " << expr << "\n";
                }
            }
        }
        criterion(6, "strongly nil-IFP at degree 1 agrees between the four constructions and "
                     "their bases",
                  agree);
    }

    // ---- criterion 7: the semiprime specialization ----
    {
        ClassifyConfig ccfg;
        ccfg.max_degree = 1;
        RingClassification m2 = classify_ring(eval_expr("M(2,Z(2))"), ccfg);
        RingClassification z6 = classify_ring(eval_expr("Z(6)"), ccfg);
        bool all_fail = true, all_hold = true;
        for (Prop p : {Prop::Reduced, Prop::Armendariz, Prop::Semicommutative,
                       Prop::WeaklySemicommutative, Prop::WeakIdealArmendariz}) {
            all_fail = all_fail && m2.verdicts.at(p).status == Status::Fails;
            all_hold = all_hold && z6.verdicts.at(p).status == Status::Holds;
        }
        criterion(7, "matrix ring uniformly fails and the reduced ring uniformly holds the "
                     "five-property battery",
                  all_fail && all_hold);
    }

    // ---- criterion 8: radical collapse ----
    {
        bool collapse = true, chain = true, tp_iff_ni = true;
        for (const EntryResult& e : report.entries) {
            if (!e.realized || !e.radicals) continue;
            if (e.unital && !e.radicals->prime_equals_jacobson) collapse = false;
            if (!(e.radicals->prime_count <= e.radicals->upper_count &&
                  e.radicals->upper_count <= e.radicals->nil_count))
                chain = false;
            if (e.radicals->two_primal != e.radicals->ni) tp_iff_ni = false;
        }
        criterion(8, "prime radical equals the Jacobson radical; the radical chain and the "
                     "2-primal/NI equivalence hold",
                  collapse && chain && tp_iff_ni);
    }

    // ---- criterion 9: the order-p^2 nil rings ----
    {
        bool ok = true;
        for (const char* id :
             {"null_ring_4", "nil_cyclic_4", "null_ring_9", "nil_cyclic_9"}) {
            const EntryResult* found = nullptr;
            for (const EntryResult& e : report.entries)
                if (e.id == id) found = &e;
            if (!found) {
                ok = false;
                continue;
            }
            ok = ok && found->verdicts.at(Prop::Commutative).status == Status::Holds;
            ok = ok && found->verdicts.at(Prop::Armendariz).status == Status::Holds;
            bool nil_check = false;
            for (const CheckOutcome& c : found->checks)
                if (c.description.find("cube") != std::string::npos && c.ok) nil_check = true;
            ok = ok && nil_check;
        }
        criterion(9, "both order-p^2 nil rings are commutative Armendariz with vanishing cube",
                  ok);
    }

    // ---- criterion 10: determinism across worker counts ----
    {
        RunConfig three = defaults;
        three.jobs = 3;
        Report again = verify_paper(three);
        criterion(10, "reports are byte-identical across worker counts",
                  report.text() == again.text() && report.json() == again.json());
    }

    // ---- criterion 11: every non-implication is backed ----
    {
        bool backed = true;
        for (const ForbiddenBacking& f : report.forbidden) {
            if (!f.backed) {
                backed = false;
                std::cerr << "  unbacked: " << prop_name(f.edge.from) << " -/-> "
                          << prop_name(f.edge.to) << "\n";
            }
        }
        criterion(11, "every recorded non-implication has a replayed witness or a "
                      "bounded-evidence annotation",
                  backed, std::to_string(report.forbidden.size()) + " edges");
    }

    std::cout << (failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: " + std::to_string(failures) + " criteria failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
