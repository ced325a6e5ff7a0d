#include "ringlab/classify.hpp"

#include "ringlab/radicals.hpp"

namespace ringlab {

RingClassification classify_ring(const FiniteRing& ring, const ClassifyConfig& config) {
    RingClassification out;
    out.label = ring.label();
    out.order = ring.order();
    out.unital = ring.unital();

    DecideContext ctx = DecideContext::build(ring);
    for (Prop p : kAllProps) {
        Verdict v = prop_is_bounded(p)
                        ? decide_armendariz_family(ring, p, config.max_degree, config.budget, &ctx)
                        : decide_elementwise(ring, p, &ctx);
        out.work += v.work;
        out.verdicts.emplace(p, std::move(v));
    }

    RadicalReport rad = radical_report(ring);
    out.radicals.nil_count = rad.nil.size();
    out.radicals.prime_count = rad.prime.size();
    out.radicals.upper_count = rad.upper.size();
    out.radicals.jacobson_count = rad.jacobson.size();
    out.radicals.jacobson_index = rad.jacobson_nilpotency_index;
    out.radicals.two_primal = rad.two_primal;
    out.radicals.ni = rad.ni;
    out.radicals.nil_is_ideal = rad.nil_is_ideal;
    out.radicals.prime_equals_jacobson = rad.prime == rad.jacobson;

    InferContext ictx;
    ictx.unital = ring.unital();
    ictx.prime_radical_zero = rad.prime.size() == 1;
    InferResult inf = infer(std::move(out.verdicts), ictx);
    out.verdicts = std::move(inf.verdicts);
    out.inconsistencies = std::move(inf.inconsistencies);
    return out;
}

namespace {

std::optional<ConstructKind> transfer_kind(ConstructionExpr::Kind k) {
    using K = ConstructionExpr::Kind;
    switch (k) {
        case K::U: return ConstructKind::MatrixU;
        case K::D: return ConstructKind::MatrixD;
        case K::V: return ConstructKind::MatrixV;
        case K::T: return ConstructKind::TrivialExt;
        case K::Dorroh: return ConstructKind::Dorroh;
        case K::TruncPoly: return ConstructKind::TruncPoly;
        case K::Product: return ConstructKind::Product;
        case K::Subring: return ConstructKind::Subring;
        default: return std::nullopt;
    }
}

} // namespace

RingClassification classify_expr(const ConstructionExpr& expr, const ClassifyConfig& config) {
    FiniteRing ring = eval_expr(expr, config.limits);
    RingClassification own = classify_ring(ring, config);
    own.label = expr.render();

    auto kind = transfer_kind(expr.kind);
    if (!kind) return own;

    std::vector<VerdictMap> base_maps;
    for (const auto& arg : expr.args) {
        RingClassification base = classify_expr(*arg, config);
        own.work += base.work;
        for (const std::string& s : base.inconsistencies)
            own.inconsistencies.push_back(expr.render() + " base: " + s);
        base_maps.push_back(std::move(base.verdicts));
    }

    InferContext ictx;
    ictx.unital = ring.unital();
    {
        ElementSubset prime = prime_radical(ring);
        ictx.prime_radical_zero = prime.size() == 1;
    }
    TransferFacts tf;
    tf.kind = *kind;
    tf.n = expr.numbers.empty() ? 0 : uint32_t(expr.numbers[0]);
    if (expr.kind == ConstructionExpr::Kind::T) tf.n = 2;
    tf.bases = std::move(base_maps);
    ictx.transfer = std::move(tf);

    InferResult inf = infer(std::move(own.verdicts), ictx);
    own.verdicts = std::move(inf.verdicts);
    for (std::string& s : inf.inconsistencies) own.inconsistencies.push_back(std::move(s));
    return own;
}

RingClassification classify_expr(const std::string& expr, const ClassifyConfig& config) {
    return classify_expr(parse_expr(expr), config);
}

} // namespace ringlab
