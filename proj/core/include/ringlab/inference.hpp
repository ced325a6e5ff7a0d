#pragma once

#include "ringlab/deciders.hpp"

namespace ringlab {

/// How Holds verdicts flow through a rule. Bounded premises are degree-
/// stamped scans; a rule propagates them only when its proof is degree-
/// preserving, and may still emit an exact conclusion when the proof uses
/// only instances up to a fixed degree.
enum class BoundFlow {
    ExactOnly,  // fire only on exact premises; exact conclusion
    Propagate,  // bounded premises allowed; conclusion bounded at the min
    ExactFrom0, // bounded premises at any degree suffice; exact conclusion
    ExactFrom1, // bounded premises need degree >= 1; exact conclusion
};

enum class SideCond { None, PrimeRadicalZero };

struct ImplicationEdge {
    std::string id;
    std::vector<Prop> premises; // conjunction
    Prop conclusion;
    bool equivalence_part = false;
    bool requires_unital = false;
    SideCond side = SideCond::None;
    BoundFlow flow = BoundFlow::ExactOnly;
    std::string statement; // self-contained mathematical statement
};

enum class ConstructKind {
    Subring,
    Product,
    MatrixU,
    MatrixD,
    MatrixV,
    TrivialExt,
    Dorroh,
    TruncPoly,
    // quotient-lift and subdirect rules fire through the quotient facts of
    // the inference context rather than a construction expression
    QuotientNilpotentIdeal,
    QuotientSemicommutativeIdeal,
    QuotientReducedIdeal,
    Subdirect,
};

struct TransferRule {
    std::string id;
    ConstructKind construction;
    Prop base_prop;       // property of the base ring(s)
    Prop construct_prop;  // property of the constructed ring
    bool iff = false;     // Fails transfers too (with the side condition)
    /// side condition for the Fails/backward direction, e.g. TruncPoly
    /// needs n >= 2 for "construct weak ideal-Armendariz => base reduced"
    bool needs_n_at_least_2 = false;
    std::string statement;
};

struct ForbiddenEdge {
    Prop from, to;
    std::string witness_corpus_id;
    bool bounded_only = false; // witness is a bounded-evidence annotation
    std::string statement;
};

struct Catalog {
    std::vector<ImplicationEdge> edges;
    std::vector<TransferRule> transfers;
    std::vector<ForbiddenEdge> forbidden;
};

const Catalog& rule_catalog();

/// Reachability through the implication edges alone (used to skip hunted
/// pairs and to test that no forbidden edge became derivable).
bool catalog_implies(Prop from, Prop to);

struct QuotientFact {
    bool ideal_nilpotent = false;
    bool ideal_semicommutative = false; // the ideal as a (non-unital) ring
    bool ideal_reduced = false;
    VerdictMap quotient;
    std::string note;
};

struct SubdirectFact {
    bool intersection_zero = false;
    std::vector<VerdictMap> quotients;
};

struct TransferFacts {
    ConstructKind kind;
    uint32_t n = 0; // matrix size / truncation degree (when applicable)
    std::vector<VerdictMap> bases;
};

struct InferContext {
    bool unital = false;
    bool prime_radical_zero = false;
    std::optional<TransferFacts> transfer;
    std::vector<QuotientFact> quotients;
    std::optional<SubdirectFact> subdirect;
};

struct InferResult {
    VerdictMap verdicts;
    std::vector<std::string> inconsistencies;
};

/// Closes the verdict map under the catalog: forward chaining of
/// implication and transfer rules plus single-premise contrapositives.
/// Derived verdicts carry a replayable trace; collisions between a derived
/// status and a known one are reported, never overwritten.
InferResult infer(VerdictMap known, const InferContext& ctx = {});

/// Human-readable derivation chain with rule statements.
std::string explain(Prop prop, const VerdictMap& verdicts);

/// DOT rendering of the property lattice: solid cited implication edges,
/// dashed crossed non-implications labeled by their witness corpus entry.
std::string lattice_dot();

} // namespace ringlab
