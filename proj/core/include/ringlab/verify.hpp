#pragma once

#include "ringlab/corpus.hpp"

namespace ringlab {

struct RunConfig {
    uint32_t max_degree = 2;
    uint64_t budget = 100'000'000;
    uint32_t power_bound = 64;
    bool strict = false;
    uint32_t jobs = 1;
};

struct ExpectationOutcome {
    Expectation expectation;
    std::optional<Status> tool_status;
    bool tool_exact = false;
    enum class Grade { Met, Confirmed, NotContradicted, BoundLimited, Mismatch } grade;
    std::string detail;
};

struct CheckOutcome {
    bool ok = false;
    std::string description;
    std::string detail;
};

struct EntryResult {
    std::string id;
    std::string label;
    uint32_t order = 0; // 0 for unrealized algebras
    bool unital = false;
    bool realized = false;
    VerdictMap verdicts;
    std::optional<RadicalSummary> radicals;
    std::vector<ExpectationOutcome> expectations;
    std::vector<CheckOutcome> checks;
    std::vector<std::string> inconsistencies;
    uint64_t work = 0;

    bool ok(bool strict) const;
};

struct ForbiddenBacking {
    ForbiddenEdge edge;
    bool backed = false;
    std::string detail;
};

struct Report {
    RunConfig config;
    std::vector<EntryResult> entries;
    std::vector<ForbiddenBacking> forbidden;
    bool ok = false;

    /// Deterministic renderings: byte-identical across runs and job counts.
    std::string text() const;
    std::string json() const;
};

EntryResult run_corpus_entry(const CorpusEntry& entry, const RunConfig& config);
Report verify_paper(const RunConfig& config = {});

} // namespace ringlab
