#pragma once

#include <functional>
#include <map>

#include "ringlab/fp_algebra.hpp"
#include "ringlab/radicals.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

enum class Prop {
    Reduced,
    Commutative,
    Reversible,
    Abelian,
    Semicommutative,
    WeaklySemicommutative,
    Qrpr,
    TwoPrimal,
    Ni,
    BoundedIndexTwo,
    Armendariz,
    WeakArmendariz,
    IdealArmendariz,
    WeakIdealArmendariz,
    StronglyNilIfp,
};

constexpr Prop kAllProps[] = {
    Prop::Reduced,        Prop::Commutative,   Prop::Reversible,
    Prop::Abelian,        Prop::Semicommutative, Prop::WeaklySemicommutative,
    Prop::Qrpr,           Prop::TwoPrimal,     Prop::Ni,
    Prop::BoundedIndexTwo, Prop::Armendariz,   Prop::WeakArmendariz,
    Prop::IdealArmendariz, Prop::WeakIdealArmendariz, Prop::StronglyNilIfp,
};

const char* prop_name(Prop p);
std::optional<Prop> prop_from_name(const std::string& name);

/// Polynomial-quantified properties carry a degree stamp on Holds verdicts;
/// everything else is decided exactly by a full scan.
bool prop_is_bounded(Prop p);

enum class Status { Holds, Fails, Unknown };
const char* status_name(Status s);

/// A failing tuple that replays through public operations. Element witnesses
/// hold ring indices; polynomial witnesses also hold the pair (f, g), the
/// coefficient positions (i, j) and an optional probe element r.
struct Witness {
    enum class Kind { None, Elements, Polys } kind = Kind::None;
    std::vector<uint32_t> elements;        // role-ordered element indices
    std::vector<uint32_t> f, g;            // coefficient index tuples
    std::optional<uint32_t> i, j, r;
    std::string note;

    std::string render() const;
};

struct Certificate {
    enum class Kind { None, ExhaustiveScan, Inference, Citation, ByConstruction } kind =
        Kind::None;
    std::string detail;
};

struct Verdict {
    Status status = Status::Unknown;
    bool exact = false;            // exact for the unbounded property
    uint32_t degree_bound = 0;     // meaningful for bounded Holds
    Witness witness;               // set on Fails from a scan
    Certificate certificate;
    std::vector<std::string> trace; // rule chain for inferred verdicts
    uint64_t work = 0;             // deterministic work counter

    static Verdict holds_exact(Certificate c) { return {Status::Holds, true, 0, {}, std::move(c), {}, 0}; }
    static Verdict holds_at(uint32_t d, Certificate c) {
        return {Status::Holds, false, d, {}, std::move(c), {}, 0};
    }
    static Verdict fails(Witness w, Certificate c) {
        return {Status::Fails, true, 0, std::move(w), std::move(c), {}, 0};
    }
    static Verdict unknown(std::string detail) {
        return {Status::Unknown, false, 0, {}, {Certificate::Kind::None, std::move(detail)}, {}, 0};
    }
};

/// Shared per-ring scratch data for the deciders.
struct DecideContext {
    const FiniteRing* ring = nullptr;
    std::vector<bool> nilpotent;      // N(R) mask
    std::vector<bool> prime_radical;  // N_*(R) mask
    std::vector<bool> upper_nil;      // N^*(R) mask
    // sandwich[a*n + b]: bit 0 = (arb = 0 for all r), bit 1 = (arb in N for all r)
    std::vector<uint8_t> sandwich;

    static DecideContext build(const FiniteRing& ring);
};

/// Full scans for the exactly decidable properties. Witnesses are the
/// lexicographically least violating tuples in scan order.
Verdict decide_elementwise(const FiniteRing& ring, Prop prop, const DecideContext* ctx = nullptr);

struct BoundedPolynomial {
    const FiniteRing* ring = nullptr;
    std::vector<uint32_t> coeffs; // a_0 .. a_d, trailing zeros trimmed

    int32_t degree() const { return int32_t(coeffs.size()) - 1; }
};

BoundedPolynomial make_poly(const FiniteRing& ring, std::vector<uint32_t> coeffs);

enum class ScanOutcome { Complete, Stopped, BudgetExceeded };

/// Enumerates all pairs (f, g) of polynomials of degree <= d with f*g = 0,
/// in (deg f, deg g, coeffs f, coeffs g) order. g is extended depth-first
/// with a prefix pruned as soon as a fully determined convolution
/// coefficient is nonzero. The visitor returns false to stop. `work` counts
/// convolution updates against `budget`.
ScanOutcome zero_product_pairs(
    const FiniteRing& ring, uint32_t max_degree, uint64_t budget,
    const std::function<bool(const BoundedPolynomial&, const BoundedPolynomial&)>& visit,
    uint64_t* work = nullptr);

/// Scans the Armendariz-family condition over all zero-product pairs at the
/// degree bound. Holds is stamped with the bound; Fails carries the least
/// witness (f, g, i, j[, r]).
Verdict decide_armendariz_family(const FiniteRing& ring, Prop variant, uint32_t max_degree,
                                 uint64_t budget, const DecideContext* ctx = nullptr);

/// A candidate violation in a presented algebra: polynomials over the
/// algebra with the coefficient pair to inspect and an optional probe.
struct AlgebraWitness {
    std::vector<std::string> f, g; // element texts, one per coefficient
    uint32_t i = 0, j = 0;
    std::optional<std::string> r;
    /// optional exact non-nilpotency certificate: a finite ring image
    /// (generator -> element index) under which the sandwiched word must be
    /// non-nilpotent
    std::optional<std::string> image_expr;
    std::vector<uint32_t> image_of_gens;
};

struct AlgebraSearchConfig {
    uint32_t max_degree = 2;
    uint32_t power_bound = 64;
    uint64_t random_trials = 0; // randomized zero-pair search (never yields Holds)
    uint64_t seed = 0x414c47;
};

/// Verifies supplied witnesses exactly; Fails only when every step of a
/// witness replays with exact answers. Random search can add Fails evidence
/// but never Holds.
Verdict decide_on_algebra(const PresentedAlgebra& alg, Prop variant,
                          const std::vector<AlgebraWitness>& witnesses,
                          const AlgebraSearchConfig& config = {});

using VerdictMap = std::map<Prop, Verdict>;

} // namespace ringlab
