#pragma once

#include "ringlab/construct.hpp"
#include "ringlab/inference.hpp"

namespace ringlab {

struct ClassifyConfig {
    uint32_t max_degree = 2;
    uint64_t budget = 100'000'000;
    uint32_t power_bound = 64;
    SizeLimits limits;
};

struct RadicalSummary {
    uint32_t nil_count = 0;
    uint32_t prime_count = 0;
    uint32_t upper_count = 0;
    uint32_t jacobson_count = 0;
    std::optional<uint32_t> jacobson_index;
    bool two_primal = false, ni = false, nil_is_ideal = false;
    bool prime_equals_jacobson = false;
};

struct RingClassification {
    std::string label;
    uint32_t order = 0;
    bool unital = false;
    VerdictMap verdicts;
    RadicalSummary radicals;
    std::vector<std::string> inconsistencies;
    uint64_t work = 0;
};

/// Brute-force deciders on the tables followed by the implication closure.
RingClassification classify_ring(const FiniteRing& ring, const ClassifyConfig& config = {});

/// Evaluates the expression, classifies the result, recursively classifies
/// base rings and applies the applicable transfer rules; transfer-derived
/// verdicts merge into the scan verdicts (collisions are reported, not
/// overwritten).
RingClassification classify_expr(const ConstructionExpr& expr, const ClassifyConfig& config = {});
RingClassification classify_expr(const std::string& expr, const ClassifyConfig& config = {});

} // namespace ringlab
