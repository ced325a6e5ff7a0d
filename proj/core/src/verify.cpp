#include "ringlab/verify.hpp"

#include <sstream>
#include <thread>

#include <json.hpp>

#include "ringlab/radicals.hpp"

namespace ringlab {

namespace {

using Grade = ExpectationOutcome::Grade;

const char* grade_name(Grade g) {
    switch (g) {
        case Grade::Met: return "met";
        case Grade::Confirmed: return "confirmed";
        case Grade::NotContradicted: return "not-contradicted";
        case Grade::BoundLimited: return "bound-limited";
        case Grade::Mismatch: return "MISMATCH";
    }
    return "?";
}

ExpectationOutcome compare(const Expectation& exp, const VerdictMap& verdicts,
                           const RunConfig& config) {
    ExpectationOutcome out;
    out.expectation = exp;
    auto it = verdicts.find(exp.prop);
    if (it != verdicts.end()) {
        out.tool_status = it->second.status;
        out.tool_exact = it->second.exact;
    }
    const bool have = it != verdicts.end() && it->second.status != Status::Unknown;
    const Verdict* v = it != verdicts.end() ? &it->second : nullptr;
    switch (exp.kind) {
        case Expectation::Kind::Exact:
            if (have && v->status == exp.status && (v->exact || exp.status == Status::Fails)) {
                out.grade = Grade::Met;
                out.detail = "exact";
            } else if (have && v->status == exp.status) {
                out.grade = Grade::Mismatch;
                out.detail = "status matches but only at a bound";
            } else {
                out.grade = Grade::Mismatch;
                out.detail = have ? "tool disagrees" : "tool returned unknown";
            }
            break;
        case Expectation::Kind::AtBound: {
            bool reachable = config.max_degree >= exp.min_degree;
            if (have && v->status == exp.status) {
                out.grade = Grade::Met;
                out.detail = v->exact ? "exact" : "at degree " + std::to_string(v->degree_bound);
            } else if (!reachable) {
                // not decidable at this bound; a vacuous bounded opposite is fine
                bool hard_conflict = have && v->status != exp.status && v->exact;
                out.grade = hard_conflict ? Grade::Mismatch : Grade::BoundLimited;
                out.detail = hard_conflict ? "exact opposite verdict"
                                           : "needs degree >= " + std::to_string(exp.min_degree);
            } else {
                out.grade = Grade::Mismatch;
                out.detail = have ? "tool disagrees at a sufficient bound" : "tool returned unknown";
            }
            break;
        }
        case Expectation::Kind::Cited:
            if (!have) {
                out.grade = Grade::NotContradicted;
                out.detail = "no tool verdict; claim recorded";
            } else if (v->status == exp.status) {
                out.grade = Grade::Confirmed;
                out.detail = v->certificate.kind == Certificate::Kind::Citation
                                 ? "derived from cited premises"
                                 : "independently verified";
            } else if (v->status == Status::Holds && !v->exact && exp.status == Status::Fails) {
                out.grade = Grade::NotContradicted;
                out.detail = "bounded scan below the witness degree";
            } else {
                out.grade = Grade::Mismatch;
                out.detail = "tool contradicts the cited claim";
            }
            break;
    }
    return out;
}

std::string poly_desc(const std::vector<std::string>& f, const std::vector<std::string>& g) {
    std::string s = "f=[";
    for (size_t i = 0; i < f.size(); ++i) s += (i ? ", " : "") + f[i];
    s += "] g=[";
    for (size_t i = 0; i < g.size(); ++i) s += (i ? ", " : "") + g[i];
    return s + "]";
}

CheckOutcome run_check_on_algebra(const ScriptCheck& check, const PresentedAlgebra& alg,
                                  const RunConfig& config) {
    CheckOutcome out;
    out.description = check.note;
    switch (check.kind) {
        case ScriptCheck::Kind::PolyZeroProduct: {
            std::vector<AlgValue> f, g;
            for (const auto& s : check.f) f.push_back(alg.parse(s));
            for (const auto& s : check.g) g.push_back(alg.parse(s));
            auto res = verify_poly_identity(alg, f, g);
            out.ok = res.zero && res.exact;
            out.detail = poly_desc(check.f, check.g) +
                         (res.zero ? " multiplies to zero" : " has nonzero coefficients") +
                         (res.exact ? "" : " (inexact)");
            break;
        }
        case ScriptCheck::Kind::Membership: {
            auto ans = alg.in_ideal(alg.parse(check.elem));
            out.ok = ans.in_ideal == check.expect_in && ans.exact;
            out.detail = check.elem + (ans.in_ideal ? " lies in the ideal" : " survives") +
                         (ans.exact ? " (exact)" : " (inexact)");
            break;
        }
        case ScriptCheck::Kind::Nilpotency: {
            auto nil = alg.nilpotency(alg.parse(check.elem), config.power_bound);
            if (check.expect_nilpotent) {
                out.ok = nil.status == NilStatus::Nilpotent && nil.exact &&
                         (check.k == 0 || (nil.index && *nil.index <= check.k));
                out.detail = check.elem + ": " +
                             (nil.index ? "index " + std::to_string(*nil.index) : nil.note);
            } else {
                out.ok = nil.status == NilStatus::NotNilpotent && nil.exact;
                out.detail = check.elem + ": " + nil.note;
            }
            break;
        }
        case ScriptCheck::Kind::BoundedPowersOutside: {
            AlgValue base = alg.parse(check.elem);
            AlgValue cur = base;
            out.ok = true;
            for (uint32_t k = 1; k <= check.k; ++k) {
                if (k > 1) cur = alg.mul(cur, base);
                auto ans = alg.in_ideal(cur);
                if (ans.in_ideal || !ans.exact) {
                    out.ok = false;
                    out.detail = "power " + std::to_string(k) +
                                 (ans.in_ideal ? " fell into the ideal" : " left the window");
                    break;
                }
            }
            if (out.ok)
                out.detail = check.elem + "^1.." + std::to_string(check.k) +
                             " stay outside the computed ideal (exact below the bound)";
            break;
        }
        default:
            out.ok = false;
            out.detail = "check kind needs a table ring";
    }
    return out;
}

CheckOutcome run_check_on_ring(const ScriptCheck& check, const FiniteRing& ring) {
    CheckOutcome out;
    out.description = check.note;
    switch (check.kind) {
        case ScriptCheck::Kind::ElementProduct:
            out.ok = ring.mul(check.a, check.b) == check.c;
            out.detail = std::to_string(check.a) + "*" + std::to_string(check.b) + " = " +
                         std::to_string(ring.mul(check.a, check.b)) + ", expected " +
                         std::to_string(check.c);
            break;
        case ScriptCheck::Kind::RingNilpotencyIndex: {
            std::vector<uint32_t> all(ring.order());
            for (uint32_t i = 0; i < ring.order(); ++i) all[i] = i;
            auto res = ideal_nilpotency(ring, ElementSubset(ring, all));
            out.ok = res.nilpotent && res.index && *res.index <= check.k;
            out.detail = res.nilpotent
                             ? "nilpotency index " + std::to_string(*res.index)
                             : "the ring is not nilpotent";
            break;
        }
        default:
            out.ok = false;
            out.detail = "check kind needs the presented algebra";
    }
    return out;
}

} // namespace

bool EntryResult::ok(bool strict) const {
    for (const auto& e : expectations) {
        if (e.grade == Grade::Mismatch) return false;
        if (strict && e.grade == Grade::BoundLimited) return false;
    }
    for (const auto& c : checks)
        if (!c.ok) return false;
    return inconsistencies.empty();
}

EntryResult run_corpus_entry(const CorpusEntry& entry, const RunConfig& config) {
    EntryResult res;
    res.id = entry.id;

    ClassifyConfig ccfg;
    ccfg.max_degree = config.max_degree;
    ccfg.budget = config.budget;
    ccfg.power_bound = config.power_bound;

    if (entry.kind == CorpusEntry::Kind::Expr) {
        RingClassification c = classify_expr(entry.expr, ccfg);
        res.label = c.label;
        res.order = c.order;
        res.unital = c.unital;
        res.realized = true;
        res.verdicts = std::move(c.verdicts);
        res.radicals = c.radicals;
        res.inconsistencies = std::move(c.inconsistencies);
        res.work = c.work;
        FiniteRing ring = eval_expr(entry.expr, ccfg.limits);
        for (const ScriptCheck& check : entry.checks)
            res.checks.push_back(run_check_on_ring(check, ring));
    } else {
        Presentation pres = parse_presentation(entry.presentation);
        auto alg = build_algebra(pres);
        res.label = entry.presentation.substr(0, entry.presentation.find('\n'));
        res.unital = alg->unital();

        if (entry.kind == CorpusEntry::Kind::RealizedAlgebra) {
            FiniteRing ring = alg->realize(ccfg.limits);
            RingClassification c = classify_ring(ring, ccfg);
            res.order = c.order;
            res.realized = true;
            res.verdicts = std::move(c.verdicts);
            res.radicals = c.radicals;
            res.inconsistencies = std::move(c.inconsistencies);
            res.work = c.work;
            for (const ScriptCheck& check : entry.checks) {
                if (check.kind == ScriptCheck::Kind::ElementProduct ||
                    check.kind == ScriptCheck::Kind::RingNilpotencyIndex)
                    res.checks.push_back(run_check_on_ring(check, ring));
                else
                    res.checks.push_back(run_check_on_algebra(check, *alg, config));
            }
        } else {
            VerdictMap known;
            if (alg->commutative_by_construction())
                known.emplace(Prop::Commutative,
                              Verdict::holds_exact({Certificate::Kind::ByConstruction,
                                                    "commutative presentation"}));
            AlgebraSearchConfig scfg;
            scfg.max_degree = config.max_degree;
            scfg.power_bound = config.power_bound;
            for (const AlgebraFailWitness& w : entry.witnesses) {
                Verdict v = decide_on_algebra(*alg, w.prop, {w.witness}, scfg);
                auto it = known.find(w.prop);
                if (it == known.end() || it->second.status == Status::Unknown)
                    known[w.prop] = std::move(v);
            }
            // cited positive claims enter as citation-grade premises
            for (const Expectation& exp : entry.expectations) {
                if (exp.kind != Expectation::Kind::Cited || exp.status != Status::Holds)
                    continue;
                auto it = known.find(exp.prop);
                if (it == known.end() || it->second.status == Status::Unknown) {
                    Verdict v = Verdict::holds_exact(
                        {Certificate::Kind::Citation, exp.citation});
                    known[exp.prop] = std::move(v);
                }
            }
            InferContext ictx;
            ictx.unital = alg->unital();
            InferResult inf = infer(std::move(known), ictx);
            res.verdicts = std::move(inf.verdicts);
            res.inconsistencies = std::move(inf.inconsistencies);
            for (const ScriptCheck& check : entry.checks)
                res.checks.push_back(run_check_on_algebra(check, *alg, config));
        }
    }

    for (const Expectation& exp : entry.expectations)
        res.expectations.push_back(compare(exp, res.verdicts, config));
    return res;
}

namespace {

ForbiddenBacking back_forbidden(const ForbiddenEdge& edge,
                                const std::vector<EntryResult>& entries) {
    ForbiddenBacking out;
    out.edge = edge;
    const EntryResult* found = nullptr;
    for (const EntryResult& e : entries)
        if (e.id == edge.witness_corpus_id) found = &e;
    if (!found) {
        out.detail = "witness entry missing";
        return out;
    }
    auto status_of = [&](Prop p) -> std::optional<std::pair<Status, bool>> {
        auto it = found->verdicts.find(p);
        if (it == found->verdicts.end()) return std::nullopt;
        return std::make_pair(it->second.status, it->second.exact);
    };
    auto cited_status = [&](Prop p) -> std::optional<Status> {
        for (const auto& eo : found->expectations)
            if (eo.expectation.prop == p && eo.expectation.kind == Expectation::Kind::Cited &&
                eo.grade != Grade::Mismatch)
                return eo.expectation.status;
        return std::nullopt;
    };
    if (edge.bounded_only) {
        bool checks_ok = true;
        for (const auto& c : found->checks) checks_ok = checks_ok && c.ok;
        bool from_claimed = cited_status(edge.from) == Status::Holds ||
                            (status_of(edge.from) &&
                             status_of(edge.from)->first == Status::Holds);
        bool to_claimed = cited_status(edge.to) == Status::Fails;
        out.backed = checks_ok && from_claimed && to_claimed;
        out.detail = "bounded-evidence annotation on " + edge.witness_corpus_id;
        return out;
    }
    auto from = status_of(edge.from);
    bool from_ok = (from && from->first == Status::Holds) ||
                   cited_status(edge.from) == Status::Holds;
    auto to = status_of(edge.to);
    bool to_ok = to && to->first == Status::Fails && to->second;
    out.backed = from_ok && to_ok;
    out.detail = "witnessed by " + edge.witness_corpus_id;
    if (!from_ok) out.detail += " (antecedent not established)";
    if (!to_ok) out.detail += " (failure side not exact)";
    return out;
}

} // namespace

Report verify_paper(const RunConfig& config) {
    Report report;
    report.config = config;
    const auto& corpus = builtin_corpus();
    report.entries.resize(corpus.size());

    uint32_t jobs = std::max<uint32_t>(1, config.jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < corpus.size(); ++i)
            report.entries[i] = run_corpus_entry(corpus[i], config);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (uint32_t t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    size_t i = next.fetch_add(1);
                    if (i >= corpus.size()) return;
                    report.entries[i] = run_corpus_entry(corpus[i], config);
                }
            });
        for (auto& t : pool) t.join();
    }

    for (const ForbiddenEdge& edge : rule_catalog().forbidden)
        report.forbidden.push_back(back_forbidden(edge, report.entries));

    report.ok = true;
    for (const EntryResult& e : report.entries) report.ok = report.ok && e.ok(config.strict);
    for (const ForbiddenBacking& f : report.forbidden) report.ok = report.ok && f.backed;
    return report;
}

std::string Report::text() const {
    std::ostringstream os;
    os << "ringlab corpus verification\n";
    os << "config: degree=" << config.max_degree << " power_bound=" << config.power_bound
       << " budget=" << config.budget << " mode=" << (config.strict ? "strict" : "lenient")
       << "\n\n";
    for (const EntryResult& e : entries) {
        os << "entry " << e.id << " [" << e.label << "]";
        if (e.realized) os << " order=" << e.order;
        os << (e.unital ? " unital" : " non-unital");
        os << " -> " << (e.ok(config.strict) ? "ok" : "FAIL") << "\n";
        for (const auto& [prop, v] : e.verdicts) {
            os << "  " << prop_name(prop) << ": " << status_name(v.status);
            if (v.status == Status::Holds && !v.exact)
                os << " (degree <= " << v.degree_bound << ")";
            switch (v.certificate.kind) {
                case Certificate::Kind::ExhaustiveScan: os << " [scan]"; break;
                case Certificate::Kind::Inference: os << " [inference]"; break;
                case Certificate::Kind::Citation: os << " [cited]"; break;
                case Certificate::Kind::ByConstruction: os << " [construction]"; break;
                case Certificate::Kind::None: break;
            }
            if (v.witness.kind != Witness::Kind::None) os << " witness " << v.witness.render();
            os << "\n";
        }
        if (e.radicals) {
            os << "  radicals: |N|=" << e.radicals->nil_count
               << " |N_*|=" << e.radicals->prime_count << " |N^*|=" << e.radicals->upper_count
               << " |J|=" << e.radicals->jacobson_count
               << " two_primal=" << (e.radicals->two_primal ? 1 : 0)
               << " ni=" << (e.radicals->ni ? 1 : 0)
               << " collapse=" << (e.radicals->prime_equals_jacobson ? 1 : 0) << "\n";
        }
        for (const auto& x : e.expectations) {
            os << "  expect " << prop_name(x.expectation.prop) << " "
               << status_name(x.expectation.status) << " -- " << grade_name(x.grade) << " ("
               << x.detail << ") {" << x.expectation.citation << "}\n";
        }
        for (const auto& c : e.checks)
            os << "  check " << (c.ok ? "ok" : "FAIL") << ": " << c.description << " -- "
               << c.detail << "\n";
        for (const auto& s : e.inconsistencies) os << "  INCONSISTENT: " << s << "\n";
        os << "  work=" << e.work << "\n";
    }
    os << "\nnon-implications:\n";
    for (const ForbiddenBacking& f : forbidden)
        os << "  " << prop_name(f.edge.from) << " -/-> " << prop_name(f.edge.to) << " -- "
           << (f.backed ? "backed" : "UNBACKED") << " (" << f.detail << ")\n";
    os << "\nresult: " << (ok ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string Report::json() const {
    nlohmann::ordered_json root;
    root["config"] = {{"degree", config.max_degree},
                      {"power_bound", config.power_bound},
                      {"budget", config.budget},
                      {"strict", config.strict}};
    root["entries"] = nlohmann::ordered_json::array();
    for (const EntryResult& e : entries) {
        nlohmann::ordered_json je;
        je["ring"] = e.id;
        je["label"] = e.label;
        if (e.realized) je["order"] = e.order;
        je["unital"] = e.unital;
        je["ok"] = e.ok(config.strict);
        if (e.radicals) {
            je["radicals"] = {{"nil", e.radicals->nil_count},
                              {"prime", e.radicals->prime_count},
                              {"upper", e.radicals->upper_count},
                              {"jacobson", e.radicals->jacobson_count},
                              {"two_primal", e.radicals->two_primal},
                              {"ni", e.radicals->ni}};
        }
        je["verdicts"] = nlohmann::ordered_json::array();
        for (const auto& [prop, v] : e.verdicts) {
            nlohmann::ordered_json jv;
            jv["property"] = prop_name(prop);
            jv["status"] = status_name(v.status);
            jv["exact"] = v.exact;
            if (v.status == Status::Holds && !v.exact) jv["bound"] = v.degree_bound;
            if (v.witness.kind != Witness::Kind::None) jv["witness"] = v.witness.render();
            if (!v.trace.empty()) jv["trace"] = v.trace;
            jv["citation"] = v.certificate.detail;
            je["verdicts"].push_back(std::move(jv));
        }
        je["expectations"] = nlohmann::ordered_json::array();
        for (const auto& x : e.expectations) {
            nlohmann::ordered_json jx;
            jx["property"] = prop_name(x.expectation.prop);
            jx["status"] = status_name(x.expectation.status);
            jx["grade"] = grade_name(x.grade);
            jx["citation"] = x.expectation.citation;
            je["expectations"].push_back(std::move(jx));
        }
        je["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : e.checks) {
            nlohmann::ordered_json jc;
            jc["ok"] = c.ok;
            jc["description"] = c.description;
            jc["detail"] = c.detail;
            je["checks"].push_back(std::move(jc));
        }
        je["inconsistencies"] = e.inconsistencies;
        je["work"] = e.work;
        root["entries"].push_back(std::move(je));
    }
    root["non_implications"] = nlohmann::ordered_json::array();
    for (const ForbiddenBacking& f : forbidden) {
        nlohmann::ordered_json jf;
        jf["from"] = prop_name(f.edge.from);
        jf["to"] = prop_name(f.edge.to);
        jf["backed"] = f.backed;
        jf["witness"] = f.edge.witness_corpus_id;
        root["non_implications"].push_back(std::move(jf));
    }
    root["ok"] = ok;
    return root.dump(2) + "\n";
}

} // namespace ringlab
