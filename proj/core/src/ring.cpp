#include "ringlab/ring.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace ringlab {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::BadTables: return "BadTables";
        case ErrorCode::NotAbelianGroup: return "NotAbelianGroup";
        case ErrorCode::NotAssociative: return "NotAssociative";
        case ErrorCode::NotDistributive: return "NotDistributive";
        case ErrorCode::BadIdentity: return "BadIdentity";
        case ErrorCode::SizeCap: return "SizeCap";
        case ErrorCode::RingMismatch: return "RingMismatch";
        case ErrorCode::RequiresIdentity: return "RequiresIdentity";
        case ErrorCode::PowerZeroNonUnital: return "PowerZeroNonUnital";
        case ErrorCode::NotAnIdeal: return "NotAnIdeal";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::NotIrreducible: return "NotIrreducible";
        case ErrorCode::NoBuiltinPolynomial: return "NoBuiltinPolynomial";
        case ErrorCode::NotPAlgebra: return "NotPAlgebra";
        case ErrorCode::DimensionCap: return "DimensionCap";
        case ErrorCode::InconsistentPresentation: return "InconsistentPresentation";
        case ErrorCode::NonMonomialRelation: return "NonMonomialRelation";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::NoVerdict: return "NoVerdict";
    }
    return "Error";
}

void SizeLimits::check_order(uint64_t order) const {
    if (order == 0) throw Error(ErrorCode::BadTables, "ring order must be positive");
    if (order > max_order)
        throw Error(ErrorCode::SizeCap,
                    "order " + std::to_string(order) + " exceeds cap " + std::to_string(max_order));
    // two tables of order^2 u32 entries
    if (order * order > max_table_bytes / 8)
        throw Error(ErrorCode::SizeCap,
                    "tables for order " + std::to_string(order) + " exceed the memory budget");
}

namespace {

constexpr uint64_t kValidationSeed = 0x52494e47u; // fixed seed, reproducible sampling
constexpr uint32_t kFullScanOrder = 256;
constexpr uint64_t kSampledTriples = 1'000'000;

void check_triple_axioms(const FiniteRing& r, uint32_t a, uint32_t b, uint32_t c) {
    if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c)))
        throw Error(ErrorCode::NotAbelianGroup, "addition not associative", {a, b, c});
    if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)))
        throw Error(ErrorCode::NotAssociative, "multiplication not associative", {a, b, c});
    if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)))
        throw Error(ErrorCode::NotDistributive, "left distributivity fails", {a, b, c});
    if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c)))
        throw Error(ErrorCode::NotDistributive, "right distributivity fails", {a, b, c});
}

} // namespace

FiniteRing FiniteRing::validate(uint32_t order,
                                std::vector<uint32_t> add,
                                std::vector<uint32_t> mul,
                                std::optional<uint32_t> one,
                                std::string label,
                                const SizeLimits& limits) {
    limits.check_order(order);
    const size_t n = order;
    if (add.size() != n * n || mul.size() != n * n)
        throw Error(ErrorCode::BadTables, "tables must be order x order");
    for (uint32_t v : add)
        if (v >= order) throw Error(ErrorCode::BadTables, "add table entry out of range");
    for (uint32_t v : mul)
        if (v >= order) throw Error(ErrorCode::BadTables, "mul table entry out of range");
    if (one && *one >= order) throw Error(ErrorCode::BadTables, "one index out of range");

    FiniteRing r;
    r.order_ = order;
    r.add_ = std::move(add);
    r.mul_ = std::move(mul);
    r.one_ = one;
    r.label_ = std::move(label);

    // additive identity
    std::optional<uint32_t> zero;
    for (uint32_t z = 0; z < order; ++z) {
        bool ok = true;
        for (uint32_t a = 0; a < order && ok; ++a) ok = r.add(z, a) == a && r.add(a, z) == a;
        if (ok) {
            zero = z;
            break;
        }
    }
    if (!zero) throw Error(ErrorCode::NotAbelianGroup, "no additive identity");
    r.zero_ = *zero;

    // commutativity of + and inverses (pairwise, always exhaustive)
    r.neg_.assign(order, 0);
    for (uint32_t a = 0; a < order; ++a) {
        std::optional<uint32_t> inv;
        for (uint32_t b = 0; b < order; ++b) {
            if (r.add(a, b) != r.add(b, a))
                throw Error(ErrorCode::NotAbelianGroup, "addition not commutative", {a, b, 0});
            if (r.add(a, b) == r.zero_ && !inv) inv = b;
        }
        if (!inv)
            throw Error(ErrorCode::NotAbelianGroup, "element has no additive inverse", {a, 0, 0});
        r.neg_[a] = *inv;
    }

    if (one) {
        for (uint32_t a = 0; a < order; ++a)
            if (r.mul(*one, a) != a || r.mul(a, *one) != a)
                throw Error(ErrorCode::BadIdentity, "declared one is not a two-sided identity",
                            {*one, a, 0});
    }

    if (order <= kFullScanOrder) {
        for (uint32_t a = 0; a < order; ++a)
            for (uint32_t b = 0; b < order; ++b)
                for (uint32_t c = 0; c < order; ++c) check_triple_axioms(r, a, b, c);
        r.fully_validated_ = true;
    } else {
        std::mt19937_64 rng(kValidationSeed);
        std::uniform_int_distribution<uint32_t> dist(0, order - 1);
        for (uint64_t i = 0; i < kSampledTriples; ++i)
            check_triple_axioms(r, dist(rng), dist(rng), dist(rng));
        r.fully_validated_ = false;
    }
    return r;
}

uint32_t FiniteRing::pow(uint32_t a, uint64_t k) const {
    if (k == 0) {
        if (!one_) throw Error(ErrorCode::PowerZeroNonUnital, "x^0 needs an identity");
        return *one_;
    }
    uint32_t base = a;
    std::optional<uint32_t> acc;
    while (k > 0) {
        if (k & 1) acc = acc ? mul(*acc, base) : base;
        k >>= 1;
        if (k) base = mul(base, base);
    }
    return *acc;
}

uint32_t FiniteRing::smul(int64_t k, uint32_t a) const {
    bool negate = k < 0;
    uint64_t m = negate ? uint64_t(-k) : uint64_t(k);
    uint32_t acc = zero_;
    uint32_t base = a;
    while (m > 0) {
        if (m & 1) acc = add(acc, base);
        m >>= 1;
        if (m) base = add(base, base);
    }
    return negate ? neg(acc) : acc;
}

namespace {
void require_same_ring(const Element& a, const Element& b) {
    if (a.ring != b.ring)
        throw Error(ErrorCode::RingMismatch, "elements belong to different rings");
}
} // namespace

Element operator+(const Element& a, const Element& b) {
    require_same_ring(a, b);
    return Element(*a.ring, a.ring->add(a.index, b.index));
}
Element operator-(const Element& a, const Element& b) {
    require_same_ring(a, b);
    return Element(*a.ring, a.ring->sub(a.index, b.index));
}
Element operator-(const Element& a) { return Element(*a.ring, a.ring->neg(a.index)); }
Element operator*(const Element& a, const Element& b) {
    require_same_ring(a, b);
    return Element(*a.ring, a.ring->mul(a.index, b.index));
}
Element pow(const Element& a, uint64_t k) { return Element(*a.ring, a.ring->pow(a.index, k)); }
Element smul(int64_t k, const Element& a) { return Element(*a.ring, a.ring->smul(k, a.index)); }

NilpotencyResult is_nilpotent(const FiniteRing& ring, uint32_t a) {
    uint32_t p = a;
    for (uint32_t k = 1; k <= ring.order() + 1; ++k) {
        if (p == ring.zero()) return {true, k};
        p = ring.mul(p, a);
    }
    // zero is absorbing, so if it ever appears it appears within order steps
    return {false, std::nullopt};
}

ElementSubset::ElementSubset(const FiniteRing& ring, std::vector<bool> mask)
    : ring_(&ring), mask_(std::move(mask)) {
    if (mask_.size() != ring.order()) throw Error(ErrorCode::BadTables, "subset mask size mismatch");
    count_ = uint32_t(std::count(mask_.begin(), mask_.end(), true));
}

ElementSubset::ElementSubset(const FiniteRing& ring, const std::vector<uint32_t>& members)
    : ring_(&ring), mask_(ring.order(), false) {
    for (uint32_t m : members) {
        if (m >= ring.order()) throw Error(ErrorCode::BadTables, "subset member out of range");
        mask_[m] = true;
    }
    count_ = uint32_t(std::count(mask_.begin(), mask_.end(), true));
}

std::vector<uint32_t> ElementSubset::members() const {
    std::vector<uint32_t> out;
    out.reserve(count_);
    for (uint32_t i = 0; i < mask_.size(); ++i)
        if (mask_[i]) out.push_back(i);
    return out;
}

bool ElementSubset::is_additive_subgroup() const {
    int8_t cached = additive_.load();
    if (cached >= 0) return cached == 1;
    bool ok = contains(ring_->zero());
    auto mem = members();
    for (size_t i = 0; i < mem.size() && ok; ++i) {
        ok = contains(ring_->neg(mem[i]));
        for (size_t j = 0; j < mem.size() && ok; ++j) ok = contains(ring_->add(mem[i], mem[j]));
    }
    additive_.store(ok ? 1 : 0);
    return ok;
}

bool ElementSubset::is_left_ideal() const {
    int8_t cached = left_.load();
    if (cached >= 0) return cached == 1;
    bool ok = is_additive_subgroup();
    auto mem = members();
    for (uint32_t r = 0; r < ring_->order() && ok; ++r)
        for (uint32_t m : mem) {
            if (!contains(ring_->mul(r, m))) {
                ok = false;
                break;
            }
        }
    left_.store(ok ? 1 : 0);
    return ok;
}

bool ElementSubset::is_right_ideal() const {
    int8_t cached = right_.load();
    if (cached >= 0) return cached == 1;
    bool ok = is_additive_subgroup();
    auto mem = members();
    for (uint32_t r = 0; r < ring_->order() && ok; ++r)
        for (uint32_t m : mem) {
            if (!contains(ring_->mul(m, r))) {
                ok = false;
                break;
            }
        }
    right_.store(ok ? 1 : 0);
    return ok;
}

ElementSubset special_subset(const FiniteRing& ring, SpecialSubset which) {
    const uint32_t n = ring.order();
    std::vector<bool> mask(n, false);
    switch (which) {
        case SpecialSubset::Center:
            for (uint32_t a = 0; a < n; ++a) {
                bool central = true;
                for (uint32_t b = 0; b < n && central; ++b) central = ring.mul(a, b) == ring.mul(b, a);
                mask[a] = central;
            }
            break;
        case SpecialSubset::Idempotents:
            for (uint32_t a = 0; a < n; ++a) mask[a] = ring.mul(a, a) == a;
            break;
        case SpecialSubset::Units: {
            if (!ring.unital())
                throw Error(ErrorCode::RequiresIdentity, "units need a multiplicative identity");
            const uint32_t one = *ring.one();
            for (uint32_t a = 0; a < n; ++a) {
                for (uint32_t b = 0; b < n; ++b) {
                    if (ring.mul(a, b) == one && ring.mul(b, a) == one) {
                        mask[a] = true;
                        break;
                    }
                }
            }
            break;
        }
        case SpecialSubset::RegularElements:
            for (uint32_t a = 0; a < n; ++a) {
                bool regular = true;
                for (uint32_t b = 0; b < n && regular; ++b) {
                    if (b == ring.zero()) continue;
                    if (ring.mul(a, b) == ring.zero() || ring.mul(b, a) == ring.zero())
                        regular = false;
                }
                // zero itself is a zero divisor in any ring with > 1 element
                if (n > 1 && a == ring.zero()) regular = false;
                mask[a] = regular;
            }
            break;
        case SpecialSubset::CentralRegular: {
            ElementSubset center = special_subset(ring, SpecialSubset::Center);
            ElementSubset regular = special_subset(ring, SpecialSubset::RegularElements);
            for (uint32_t a = 0; a < n; ++a) mask[a] = center.contains(a) && regular.contains(a);
            break;
        }
    }
    return ElementSubset(ring, std::move(mask));
}

ElementSubset subset_closure(const FiniteRing& ring,
                             const std::vector<uint32_t>& generators,
                             ClosureMode mode) {
    const uint32_t n = ring.order();
    std::vector<bool> mask(n, false);
    std::vector<uint32_t> queue;
    auto push = [&](uint32_t x) {
        if (!mask[x]) {
            mask[x] = true;
            queue.push_back(x);
        }
    };
    push(ring.zero());
    for (uint32_t g : generators) {
        if (g >= n) throw Error(ErrorCode::BadTables, "generator out of range");
        push(g);
    }
    for (size_t head = 0; head < queue.size(); ++head) {
        uint32_t x = queue[head];
        push(ring.neg(x));
        // sums with everything already in the set
        for (size_t j = 0; j <= head; ++j) push(ring.add(x, queue[j]));
        switch (mode) {
            case ClosureMode::Subring:
                for (size_t j = 0; j <= head; ++j) {
                    push(ring.mul(x, queue[j]));
                    push(ring.mul(queue[j], x));
                }
                break;
            case ClosureMode::TwoSidedIdeal:
                for (uint32_t r = 0; r < n; ++r) {
                    push(ring.mul(r, x));
                    push(ring.mul(x, r));
                }
                break;
            case ClosureMode::LeftIdeal:
                for (uint32_t r = 0; r < n; ++r) push(ring.mul(r, x));
                break;
        }
    }
    return ElementSubset(ring, std::move(mask));
}

std::string serialize_ring(const FiniteRing& ring) {
    std::ostringstream os;
    std::string label = ring.label().empty() ? "_" : ring.label();
    for (char& c : label)
        if (isspace(static_cast<unsigned char>(c))) c = '_';
    os << "ring " << label << " order=" << ring.order() << " one=";
    if (ring.unital())
        os << *ring.one();
    else
        os << "none";
    os << "\nadd:\n";
    for (uint32_t i = 0; i < ring.order(); ++i) {
        for (uint32_t j = 0; j < ring.order(); ++j) {
            if (j) os << ' ';
            os << ring.add(i, j);
        }
        os << '\n';
    }
    os << "mul:\n";
    for (uint32_t i = 0; i < ring.order(); ++i) {
        for (uint32_t j = 0; j < ring.order(); ++j) {
            if (j) os << ' ';
            os << ring.mul(i, j);
        }
        os << '\n';
    }
    return os.str();
}

FiniteRing parse_ring(const std::string& text, const SizeLimits& limits) {
    std::istringstream is(text);
    std::string word;
    if (!(is >> word) || word != "ring") throw Error(ErrorCode::ParseError, "expected 'ring' header");
    std::string label;
    if (!(is >> label)) throw Error(ErrorCode::ParseError, "missing ring label");
    std::string field;
    uint64_t order = 0;
    std::optional<uint32_t> one;
    for (int i = 0; i < 2; ++i) {
        if (!(is >> field)) throw Error(ErrorCode::ParseError, "missing header field");
        if (field.rfind("order=", 0) == 0) {
            order = std::stoull(field.substr(6));
        } else if (field.rfind("one=", 0) == 0) {
            std::string v = field.substr(4);
            if (v != "none") one = uint32_t(std::stoul(v));
        } else {
            throw Error(ErrorCode::ParseError, "unknown header field " + field);
        }
    }
    limits.check_order(order);
    auto read_table = [&](const char* name) {
        if (!(is >> word) || word != name)
            throw Error(ErrorCode::ParseError, std::string("expected '") + name + "' section");
        std::vector<uint32_t> t;
        t.reserve(order * order);
        for (uint64_t i = 0; i < order * order; ++i) {
            uint64_t v;
            if (!(is >> v)) throw Error(ErrorCode::ParseError, "truncated table");
            t.push_back(uint32_t(v));
        }
        return t;
    };
    auto add = read_table("add:");
    auto mul = read_table("mul:");
    if (label == "_") label.clear();
    return FiniteRing::validate(uint32_t(order), std::move(add), std::move(mul), one, label, limits);
}

} // namespace ringlab
