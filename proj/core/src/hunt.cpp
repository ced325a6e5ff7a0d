#include "ringlab/hunt.hpp"

#include <algorithm>
#include <sstream>

#include "ringlab/inference.hpp"

namespace ringlab {

namespace {

const std::vector<std::string>& hunt_grid_exprs() {
    static const std::vector<std::string> grid = {
        "Z(2)", "Z(3)", "Z(4)", "Z(5)", "Z(6)", "Z(7)", "Z(8)", "Z(9)", "Z(10)", "Z(12)",
        "Z(16)", "GF(2,2)", "GF(2,3)", "GF(3,2)",
        "U(2,Z(2))", "D(2,Z(2))", "D(3,Z(2))", "V(2,Z(2))", "V(3,Z(2))", "V(4,Z(2))",
        "T(Z(2))", "T(Z(3))", "T(Z(4))", "M(2,Z(2))",
        "TruncPoly(Z(2),3)", "TruncPoly(Z(2),4)", "TruncPoly(Z(4),2)",
        "Product(Z(2),Z(2))", "Product(Z(2),Z(4))", "Product(Z(4),Z(4))",
        "Subring(M(2,Z(2)), gens=[1,2])",  // zero-bottom-row matrices over Z_2
        "Subring(M(2,Z(3)), gens=[1,3])",  // same over Z_3
        "Subring(M(2,Z(3)), gens=[3,27])", // zero-left-column matrices over Z_3
        "Subring(Z(4), gens=[2])",
        "Dorroh(Subring(Z(4),gens=[2]),2)",
        "Dorroh(Product(Subring(Z(4),gens=[2]),Subring(Z(4),gens=[2])),2)",
        "Quotient(U(2,Z(2)), gens=[2])",
    };
    return grid;
}

} // namespace

HuntReport hunt(const HuntConfig& config) {
    HuntReport report;
    report.config = config;

    ClassifyConfig ccfg;
    ccfg.max_degree = config.max_degree;
    ccfg.budget = config.budget;

    struct GridRing {
        std::string expr;
        uint32_t order;
        VerdictMap verdicts;
    };
    std::vector<GridRing> rings;
    for (const std::string& expr : hunt_grid_exprs()) {
        FiniteRing ring = eval_expr(expr);
        if (ring.order() > config.max_order) continue;
        RingClassification c = classify_expr(expr, ccfg);
        report.grid.push_back(expr);
        rings.push_back({expr, c.order, std::move(c.verdicts)});
    }
    std::stable_sort(rings.begin(), rings.end(), [](const GridRing& a, const GridRing& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.expr < b.expr;
    });

    std::vector<std::pair<Prop, Prop>> pairs = config.pairs;
    if (pairs.empty()) {
        for (Prop p : kAllProps)
            for (Prop q : kAllProps) {
                if (p == q) continue;
                if (catalog_implies(p, q)) continue;
                pairs.emplace_back(p, q);
            }
    }

    for (auto [p, q] : pairs) {
        HuntFinding finding;
        finding.have = p;
        finding.lack = q;
        for (const GridRing& r : rings) {
            auto ip = r.verdicts.find(p);
            auto iq = r.verdicts.find(q);
            if (ip == r.verdicts.end() || iq == r.verdicts.end()) continue;
            if (ip->second.status == Status::Holds && iq->second.status == Status::Fails) {
                finding.ring = r.expr;
                finding.order = r.order;
                break;
            }
        }
        if (!finding.ring) {
            // fall back to the recorded corpus witnesses
            for (const ForbiddenEdge& f : rule_catalog().forbidden) {
                if (f.from == p && f.to == q) {
                    finding.note = f.bounded_only
                                       ? "not table-realizable here; bounded-evidence "
                                         "annotation on corpus entry " +
                                             f.witness_corpus_id
                                       : "not separated in the grid; corpus witness " +
                                             f.witness_corpus_id;
                    break;
                }
            }
            if (finding.note.empty()) finding.note = "no separating ring within the grid";
        }
        report.findings.push_back(std::move(finding));
    }
    return report;
}

std::string HuntReport::text() const {
    std::ostringstream os;
    os << "ringlab counterexample hunt (max order " << config.max_order << ", degree "
       << config.max_degree << ")\n";
    os << "grid: " << grid.size() << " rings\n\n";
    for (const HuntFinding& f : findings) {
        os << prop_name(f.have) << " holds, " << prop_name(f.lack) << " fails: ";
        if (f.ring)
            os << *f.ring << " (order " << f.order << ")";
        else
            os << f.note;
        os << "\n";
    }
    return os.str();
}

} // namespace ringlab
