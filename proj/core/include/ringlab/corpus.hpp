#pragma once

#include "ringlab/classify.hpp"

namespace ringlab {

/// An expected verdict for a corpus ring, with its basis:
///  - Exact: the tools must decide it exactly.
///  - AtBound: decidable by scan once the degree bound reaches min_degree.
///  - Cited: a claim of the source material; the tools must not contradict
///    it, and may confirm it through inference from other cited premises.
struct Expectation {
    Prop prop;
    enum class Kind { Exact, AtBound, Cited } kind = Kind::Exact;
    Status status = Status::Holds;
    uint32_t min_degree = 0;
    std::string citation;
};

/// A replayable assertion from an entry's witness script.
struct ScriptCheck {
    enum class Kind {
        PolyZeroProduct,      // f*g = 0, exactly
        Membership,           // element in/outside the ideal, exactly
        Nilpotency,           // nilpotent with index <= k, or exactly not
        BoundedPowersOutside, // powers 1..k stay outside the computed ideal
        ElementProduct,       // table ring: a*b == c by index
        RingNilpotencyIndex,  // the ring, as an ideal of itself, has I^k = 0
    } kind;
    std::vector<std::string> f, g;
    std::string elem;
    bool expect_in = true;
    bool expect_nilpotent = true;
    uint32_t k = 0;
    uint32_t a = 0, b = 0, c = 0;
    std::string note;
};

struct AlgebraFailWitness {
    Prop prop;
    AlgebraWitness witness;
};

struct CorpusEntry {
    std::string id;
    enum class Kind { Expr, Algebra, RealizedAlgebra } kind = Kind::Expr;
    std::string expr;         // construction expression (Kind::Expr)
    std::string presentation; // presentation text (algebra kinds)
    std::vector<Expectation> expectations;
    std::vector<ScriptCheck> checks;
    std::vector<AlgebraFailWitness> witnesses;
    std::string notes;
};

const std::vector<CorpusEntry>& builtin_corpus();
const CorpusEntry* find_corpus_entry(const std::string& id);

} // namespace ringlab
