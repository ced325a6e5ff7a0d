#pragma once

#include "ringlab/classify.hpp"

namespace ringlab {

struct HuntConfig {
    uint32_t max_order = 16;
    uint32_t max_degree = 2;
    uint64_t budget = 100'000'000;
    /// restrict to these ordered pairs; empty = all pairs without a catalog path
    std::vector<std::pair<Prop, Prop>> pairs;
};

struct HuntFinding {
    Prop have, lack;                  // 'have' holds, 'lack' fails
    std::optional<std::string> ring;  // smallest grid witness, if any
    uint32_t order = 0;
    std::string note; // corpus fallback or absence explanation
};

struct HuntReport {
    HuntConfig config;
    std::vector<std::string> grid; // expressions actually classified
    std::vector<HuntFinding> findings;
    std::string text() const;
};

/// Classifies a fixed grid of small constructions and, for every ordered
/// property pair with no catalog implication, reports the smallest grid ring
/// separating them. Pairs the grid cannot separate fall back to the
/// forbidden-edge corpus witnesses where one is recorded.
HuntReport hunt(const HuntConfig& config = {});

} // namespace ringlab
