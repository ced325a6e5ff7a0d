#include "ringlab/radicals.hpp"

#include <algorithm>
#include <functional>

namespace ringlab {

ElementSubset nil_set(const FiniteRing& ring) {
    std::vector<bool> mask(ring.order(), false);
    for (uint32_t a = 0; a < ring.order(); ++a) mask[a] = is_nilpotent(ring, a).nilpotent;
    return ElementSubset(ring, std::move(mask));
}

namespace {

// additive span of a set of indices
std::vector<bool> additive_span(const FiniteRing& ring, const std::vector<bool>& gens) {
    std::vector<bool> mask(ring.order(), false);
    std::vector<uint32_t> queue;
    auto push = [&](uint32_t x) {
        if (!mask[x]) {
            mask[x] = true;
            queue.push_back(x);
        }
    };
    push(ring.zero());
    for (uint32_t i = 0; i < ring.order(); ++i)
        if (gens[i]) push(i);
    for (size_t head = 0; head < queue.size(); ++head) {
        push(ring.neg(queue[head]));
        for (size_t j = 0; j <= head; ++j) push(ring.add(queue[head], queue[j]));
    }
    return mask;
}

} // namespace

IdealNilpotency ideal_nilpotency(const FiniteRing& ring, const ElementSubset& ideal) {
    if (&ideal.ring() != &ring) throw Error(ErrorCode::RingMismatch, "ideal of a different ring");
    if (!ideal.is_two_sided_ideal())
        throw Error(ErrorCode::NotAnIdeal, "subset is not a two-sided ideal");
    auto base = ideal.members();
    std::vector<bool> cur = ideal.mask();
    auto is_zero_only = [&](const std::vector<bool>& m) {
        for (uint32_t i = 0; i < ring.order(); ++i)
            if (m[i] && i != ring.zero()) return false;
        return true;
    };
    if (is_zero_only(cur)) return {true, 1};
    for (uint32_t k = 2; k <= ring.order() + 1; ++k) {
        // I^k = additive span of products (I^{k-1}) * I
        std::vector<bool> prod(ring.order(), false);
        for (uint32_t x = 0; x < ring.order(); ++x)
            if (cur[x])
                for (uint32_t y : base) prod[ring.mul(x, y)] = true;
        std::vector<bool> next = additive_span(ring, prod);
        if (is_zero_only(next)) return {true, k};
        if (next == cur) return {false, std::nullopt}; // descending chain stabilized
        cur = std::move(next);
    }
    return {false, std::nullopt};
}

namespace {

// sum of principal two-sided ideals <x> passing `accept`
ElementSubset sum_of_principal_ideals(const FiniteRing& ring,
                                      const std::function<bool(const ElementSubset&)>& accept) {
    std::vector<bool> acc(ring.order(), false);
    acc[ring.zero()] = true;
    for (uint32_t x = 0; x < ring.order(); ++x) {
        if (acc[x]) continue;
        ElementSubset principal = subset_closure(ring, {x}, ClosureMode::TwoSidedIdeal);
        if (!accept(principal)) continue;
        for (uint32_t m : principal.members()) acc[m] = true;
    }
    // the union of ideals need not be additively closed; close it
    std::vector<bool> closed = additive_span(ring, acc);
    return ElementSubset(ring, std::move(closed));
}

} // namespace

ElementSubset prime_radical(const FiniteRing& ring) {
    return sum_of_principal_ideals(ring, [&](const ElementSubset& ideal) {
        return ideal_nilpotency(ring, ideal).nilpotent;
    });
}

ElementSubset upper_nilradical(const FiniteRing& ring) {
    return sum_of_principal_ideals(ring, [&](const ElementSubset& ideal) {
        for (uint32_t m : ideal.members())
            if (!is_nilpotent(ring, m).nilpotent) return false;
        return true;
    });
}

ElementSubset jacobson_radical(const FiniteRing& ring) {
    const uint32_t n = ring.order();
    std::vector<bool> mask(n, false);
    if (ring.unital()) {
        ElementSubset units = special_subset(ring, SpecialSubset::Units);
        const uint32_t one = *ring.one();
        for (uint32_t x = 0; x < n; ++x) {
            bool in = true;
            for (uint32_t r = 0; r < n && in; ++r)
                in = units.contains(ring.sub(one, ring.mul(r, x)));
            mask[x] = in;
        }
    } else {
        std::vector<bool> quasi(n, false);
        for (uint32_t y = 0; y < n; ++y)
            for (uint32_t z = 0; z < n; ++z)
                if (ring.add(z, ring.add(y, ring.mul(z, y))) == ring.zero()) {
                    quasi[y] = true;
                    break;
                }
        for (uint32_t x = 0; x < n; ++x) {
            ElementSubset left = subset_closure(ring, {x}, ClosureMode::LeftIdeal);
            bool in = true;
            for (uint32_t m : left.members())
                if (!quasi[m]) {
                    in = false;
                    break;
                }
            mask[x] = in;
        }
    }
    return ElementSubset(ring, std::move(mask));
}

RadicalReport radical_report(const FiniteRing& ring) {
    RadicalReport rep{nil_set(ring), prime_radical(ring), upper_nilradical(ring),
                      jacobson_radical(ring)};
    if (rep.jacobson.is_two_sided_ideal())
        rep.jacobson_nilpotency_index = ideal_nilpotency(ring, rep.jacobson).index;
    rep.two_primal = rep.prime == rep.nil;
    rep.ni = rep.upper == rep.nil;
    // N is an ideal exactly when it is the largest nil ideal
    rep.nil_is_ideal = rep.nil.is_two_sided_ideal();
    return rep;
}

} // namespace ringlab
