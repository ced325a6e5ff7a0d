#pragma once

#include "ringlab/ring.hpp"

namespace ringlab {

/// N(R): the set of nilpotent elements (not an ideal in general).
ElementSubset nil_set(const FiniteRing& ring);

struct IdealNilpotency {
    bool nilpotent = false;
    std::optional<uint32_t> index; // least k with I^k = 0
};

/// Computes I, I^2, ... as additive spans until zero or stabilization.
IdealNilpotency ideal_nilpotency(const FiniteRing& ring, const ElementSubset& ideal);

/// N_*(R): for a finite ring, the largest nilpotent two-sided ideal, computed
/// as the sum of all nilpotent principal ideals (a sum of nilpotent ideals is
/// nilpotent, so the sum is the unique largest one).
ElementSubset prime_radical(const FiniteRing& ring);

/// N^*(R): the largest nil ideal, computed independently as the sum of all
/// principal ideals consisting of nilpotent elements.
ElementSubset upper_nilradical(const FiniteRing& ring);

/// J(R). Unital rings: {x : 1 - rx is invertible for all r}. Non-unital
/// rings: {x : every element of the left ideal generated by x is left
/// quasi-regular}, where y is left quasi-regular if z + y + zy = 0 for some z.
ElementSubset jacobson_radical(const FiniteRing& ring);

struct RadicalReport {
    ElementSubset nil;
    ElementSubset prime;     // N_*
    ElementSubset upper;     // N^*
    ElementSubset jacobson;  // J
    std::optional<uint32_t> jacobson_nilpotency_index;
    bool two_primal = false;   // N_* == N
    bool ni = false;           // N^* == N
    bool nil_is_ideal = false; // N closed under + and absorbing
};

RadicalReport radical_report(const FiniteRing& ring);

} // namespace ringlab
