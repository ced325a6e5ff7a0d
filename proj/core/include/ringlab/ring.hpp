#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/error.hpp"

namespace ringlab {

/// Caps on table materialization. `max_order` bounds the element count,
/// `max_table_bytes` bounds the two dense tables combined.
struct SizeLimits {
    uint64_t max_order = uint64_t(1) << 20;
    uint64_t max_table_bytes = uint64_t(512) << 20;

    void check_order(uint64_t order) const;
};

/// A finite ring given by dense addition/multiplication tables over element
/// indices 0..order-1. Immutable after construction; all operations are
/// read-only table lookups, safe to share across threads.
///
/// Rings with no multiplicative identity are first class: `one()` is empty
/// and operations that need an identity throw RequiresIdentity.
class FiniteRing {
  public:
    /// Validates the ring axioms and builds the ring. Throws Error with a
    /// violating triple on any axiom failure. For order <= 256 the triple
    /// axioms (associativity, distributivity) are scanned exhaustively;
    /// above that, pairwise checks stay exhaustive and triples are sampled
    /// (1e6 deterministic samples), recorded via fully_validated().
    static FiniteRing validate(uint32_t order,
                               std::vector<uint32_t> add,
                               std::vector<uint32_t> mul,
                               std::optional<uint32_t> one,
                               std::string label,
                               const SizeLimits& limits = {});

    uint32_t order() const { return order_; }
    uint32_t zero() const { return zero_; }
    const std::optional<uint32_t>& one() const { return one_; }
    bool unital() const { return one_.has_value(); }
    const std::string& label() const { return label_; }
    bool fully_validated() const { return fully_validated_; }

    uint32_t add(uint32_t a, uint32_t b) const { return add_[size_t(a) * order_ + b]; }
    uint32_t mul(uint32_t a, uint32_t b) const { return mul_[size_t(a) * order_ + b]; }
    uint32_t neg(uint32_t a) const { return neg_[a]; }
    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

    /// a^k for k >= 1 by repeated squaring; k == 0 returns one() or throws
    /// PowerZeroNonUnital.
    uint32_t pow(uint32_t a, uint64_t k) const;

    /// k*a in the additive group (k may be negative).
    uint32_t smul(int64_t k, uint32_t a) const;

    const std::vector<uint32_t>& add_table() const { return add_; }
    const std::vector<uint32_t>& mul_table() const { return mul_; }

    bool same_ring(const FiniteRing& other) const { return this == &other; }

  private:
    FiniteRing() = default;

    uint32_t order_ = 0;
    uint32_t zero_ = 0;
    std::optional<uint32_t> one_;
    std::string label_;
    bool fully_validated_ = true;
    std::vector<uint32_t> add_;
    std::vector<uint32_t> mul_;
    std::vector<uint32_t> neg_;
};

/// An element index bound to its ring; arithmetic checks ring identity.
struct Element {
    const FiniteRing* ring = nullptr;
    uint32_t index = 0;

    Element() = default;
    Element(const FiniteRing& r, uint32_t i) : ring(&r), index(i) {
        if (i >= r.order()) throw Error(ErrorCode::BadTables, "element index out of range");
    }

    friend bool operator==(const Element& a, const Element& b) {
        return a.ring == b.ring && a.index == b.index;
    }
};

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator-(const Element& a);
Element operator*(const Element& a, const Element& b);
Element pow(const Element& a, uint64_t k);
Element smul(int64_t k, const Element& a);

struct NilpotencyResult {
    bool nilpotent = false;
    std::optional<uint32_t> index; // least k with a^k = 0 when nilpotent
};

/// Power-orbit test: iterates a, a^2, ... and reports the first vanishing
/// power; the orbit repeats within order steps, so the loop is bounded.
NilpotencyResult is_nilpotent(const FiniteRing& ring, uint32_t a);
inline NilpotencyResult is_nilpotent(const Element& a) { return is_nilpotent(*a.ring, a.index); }

/// A subset of ring elements with lazily computed structural flags.
class ElementSubset {
  public:
    ElementSubset() = default;
    ElementSubset(const FiniteRing& ring, std::vector<bool> mask);
    ElementSubset(const FiniteRing& ring, const std::vector<uint32_t>& members);

    const FiniteRing& ring() const { return *ring_; }
    bool contains(uint32_t idx) const { return mask_[idx]; }
    uint32_t size() const { return count_; }
    std::vector<uint32_t> members() const;
    const std::vector<bool>& mask() const { return mask_; }

    bool is_additive_subgroup() const;
    bool is_left_ideal() const;
    bool is_right_ideal() const;
    bool is_two_sided_ideal() const { return is_left_ideal() && is_right_ideal(); }

    friend bool operator==(const ElementSubset& a, const ElementSubset& b) {
        return a.ring_ == b.ring_ && a.mask_ == b.mask_;
    }

  private:
    const FiniteRing* ring_ = nullptr;
    std::vector<bool> mask_;
    uint32_t count_ = 0;
    // tri-state caches: -1 unknown, 0 false, 1 true
    mutable std::atomic<int8_t> additive_{-1}, left_{-1}, right_{-1};

  public:
    ElementSubset(const ElementSubset& o)
        : ring_(o.ring_), mask_(o.mask_), count_(o.count_),
          additive_(o.additive_.load()), left_(o.left_.load()), right_(o.right_.load()) {}
    ElementSubset& operator=(const ElementSubset& o) {
        ring_ = o.ring_;
        mask_ = o.mask_;
        count_ = o.count_;
        additive_ = o.additive_.load();
        left_ = o.left_.load();
        right_ = o.right_.load();
        return *this;
    }
};

enum class SpecialSubset { Center, Idempotents, Units, RegularElements, CentralRegular };

/// Regular = neither a left nor a right zero divisor. Units requires one().
ElementSubset special_subset(const FiniteRing& ring, SpecialSubset which);

enum class ClosureMode { Subring, TwoSidedIdeal, LeftIdeal };

/// Least subset containing `generators` closed under +, -, internal products
/// and (for ideal modes) multiplication by arbitrary ring elements. For
/// non-unital rings the ideal still contains the generators themselves.
ElementSubset subset_closure(const FiniteRing& ring,
                             const std::vector<uint32_t>& generators,
                             ClosureMode mode);

/// Canonical text format:
///   ring <label> order=<n> one=<idx|none>
///   add:
///   <n rows of n indices>
///   mul:
///   <n rows of n indices>
/// Round-trips exactly through parse_ring/serialize_ring.
std::string serialize_ring(const FiniteRing& ring);
FiniteRing parse_ring(const std::string& text, const SizeLimits& limits = {});

} // namespace ringlab
