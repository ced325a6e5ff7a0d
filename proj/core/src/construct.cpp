#include "ringlab/construct.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace ringlab {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

uint64_t checked_pow(uint64_t base, uint32_t exp, const SizeLimits& limits) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < exp; ++i) {
        if (base != 0 && r > limits.max_order / base)
            throw Error(ErrorCode::SizeCap, "constructed order exceeds cap");
        r *= base;
    }
    return r;
}

std::vector<uint32_t> decode_digits(uint32_t index, uint32_t radix, uint32_t count) {
    std::vector<uint32_t> d(count);
    for (uint32_t i = 0; i < count; ++i) {
        d[i] = index % radix;
        index /= radix;
    }
    return d;
}

uint32_t encode_digits(const std::vector<uint32_t>& d, uint32_t radix) {
    uint64_t idx = 0;
    for (size_t i = d.size(); i-- > 0;) idx = idx * radix + d[i];
    return uint32_t(idx);
}

} // namespace

FiniteRing cyclic_ring(uint32_t n, const SizeLimits& limits) {
    limits.check_order(n);
    std::vector<uint32_t> add(size_t(n) * n), mul(size_t(n) * n);
    for (uint32_t a = 0; a < n; ++a)
        for (uint32_t b = 0; b < n; ++b) {
            add[size_t(a) * n + b] = (a + b) % n;
            mul[size_t(a) * n + b] = uint32_t((uint64_t(a) * b) % n);
        }
    return FiniteRing::validate(n, std::move(add), std::move(mul), 1 % n,
                                "Z(" + std::to_string(n) + ")", limits);
}

namespace {

// dense F_p[x] helpers for field construction
using Poly = std::vector<uint32_t>;

Poly poly_trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

Poly poly_mod(Poly f, const Poly& m, uint32_t p) {
    // m monic
    f = poly_trim(std::move(f));
    while (f.size() >= m.size()) {
        uint32_t lead = f.back();
        size_t shift = f.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) {
            uint64_t sub = (uint64_t(lead) * m[i]) % p;
            f[shift + i] = uint32_t((f[shift + i] + p - sub) % p);
        }
        f = poly_trim(std::move(f));
    }
    return f;
}

Poly poly_mul(const Poly& a, const Poly& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = uint32_t((r[i + j] + uint64_t(a[i]) * b[j]) % p);
    return r;
}

bool poly_divides(const Poly& g, const Poly& f, uint32_t p) {
    return poly_mod(f, g, p).empty();
}

uint32_t mod_inverse(uint32_t a, uint32_t p) {
    for (uint32_t b = 1; b < p; ++b)
        if ((uint64_t(a) * b) % p == 1) return b;
    throw Error(ErrorCode::BadTables, "no modular inverse");
}

bool poly_irreducible(const Poly& f, uint32_t p) {
    uint32_t k = uint32_t(f.size() - 1);
    // enumerate monic divisor candidates of degree 1..k/2
    for (uint32_t d = 1; 2 * d <= k; ++d) {
        uint64_t count = 1;
        for (uint32_t i = 0; i < d; ++i) count *= p;
        for (uint64_t c = 0; c < count; ++c) {
            Poly g(d + 1, 0);
            uint64_t t = c;
            for (uint32_t i = 0; i < d; ++i) {
                g[i] = uint32_t(t % p);
                t /= p;
            }
            g[d] = 1;
            if (poly_divides(g, f, p)) return false;
        }
    }
    return true;
}

const std::map<std::pair<uint32_t, uint32_t>, Poly>& builtin_irreducibles() {
    static const std::map<std::pair<uint32_t, uint32_t>, Poly> table = {
        {{2, 2}, {1, 1, 1}},          {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},    {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{2, 6}, {1, 1, 0, 0, 0, 0, 1}}, {{3, 2}, {1, 0, 1}},
        {{3, 3}, {1, 2, 0, 1}},       {{5, 2}, {2, 0, 1}},
        {{7, 2}, {1, 0, 1}},
    };
    return table;
}

} // namespace

FiniteRing finite_field(uint32_t p, uint32_t k, const std::vector<uint32_t>& modulus,
                        const SizeLimits& limits) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (k == 0) throw Error(ErrorCode::BadTables, "extension degree must be positive");
    uint64_t order = checked_pow(p, k, limits);
    limits.check_order(order);
    if (k == 1) {
        FiniteRing r = cyclic_ring(p, limits);
        // relabel as a field
        return FiniteRing::validate(p, r.add_table(), r.mul_table(), r.one(),
                                    "GF(" + std::to_string(p) + "," + std::to_string(k) + ")",
                                    limits);
    }
    Poly m;
    if (!modulus.empty()) {
        m = modulus;
        if (m.size() != k + 1 || poly_trim(m).size() != k + 1)
            throw Error(ErrorCode::NotIrreducible, "modulus must have degree k");
        for (uint32_t& c : m) c %= p;
        if (m.back() != 1) {
            uint32_t inv = mod_inverse(m.back(), p);
            for (uint32_t& c : m) c = uint32_t((uint64_t(c) * inv) % p);
        }
        if (!poly_irreducible(m, p))
            throw Error(ErrorCode::NotIrreducible, "modulus is reducible");
    } else {
        auto it = builtin_irreducibles().find({p, k});
        if (it == builtin_irreducibles().end())
            throw Error(ErrorCode::NoBuiltinPolynomial,
                        "no built-in irreducible polynomial for GF(" + std::to_string(p) + "^" +
                            std::to_string(k) + "); supply one");
        m = it->second;
    }

    const uint32_t n = uint32_t(order);
    std::vector<uint32_t> add(size_t(n) * n), mul(size_t(n) * n);
    for (uint32_t a = 0; a < n; ++a) {
        auto da = decode_digits(a, p, k);
        for (uint32_t b = 0; b < n; ++b) {
            auto db = decode_digits(b, p, k);
            std::vector<uint32_t> s(k);
            for (uint32_t i = 0; i < k; ++i) s[i] = (da[i] + db[i]) % p;
            add[size_t(a) * n + b] = encode_digits(s, p);
            Poly prod = poly_mod(poly_mul(poly_trim(da), poly_trim(db), p), m, p);
            prod.resize(k, 0);
            mul[size_t(a) * n + b] = encode_digits(prod, p);
        }
    }
    return FiniteRing::validate(n, std::move(add), std::move(mul), encode_digits({1}, p),
                                "GF(" + std::to_string(p) + "," + std::to_string(k) + ")", limits);
}

std::vector<std::pair<uint32_t, uint32_t>> matrix_positions(uint32_t n, MatrixShape shape) {
    std::vector<std::pair<uint32_t, uint32_t>> pos;
    switch (shape) {
        case MatrixShape::Full:
            for (uint32_t i = 0; i < n; ++i)
                for (uint32_t j = 0; j < n; ++j) pos.emplace_back(i, j);
            break;
        case MatrixShape::UpperTriangular:
            for (uint32_t i = 0; i < n; ++i)
                for (uint32_t j = i; j < n; ++j) pos.emplace_back(i, j);
            break;
        case MatrixShape::ConstantDiagonal:
            pos.emplace_back(0, 0); // shared diagonal value
            for (uint32_t i = 0; i < n; ++i)
                for (uint32_t j = i + 1; j < n; ++j) pos.emplace_back(i, j);
            break;
        case MatrixShape::ConstantDiagonals:
            for (uint32_t d = 0; d < n; ++d) pos.emplace_back(0, d); // diagonal offsets
            break;
    }
    return pos;
}

namespace {

// expand free entries into a dense matrix of base indices
std::vector<uint32_t> expand_matrix(const FiniteRing& base, uint32_t n, MatrixShape shape,
                                    const std::vector<uint32_t>& entries) {
    std::vector<uint32_t> mat(size_t(n) * n, base.zero());
    switch (shape) {
        case MatrixShape::Full: {
            size_t k = 0;
            for (uint32_t i = 0; i < n; ++i)
                for (uint32_t j = 0; j < n; ++j) mat[size_t(i) * n + j] = entries[k++];
            break;
        }
        case MatrixShape::UpperTriangular: {
            size_t k = 0;
            for (uint32_t i = 0; i < n; ++i)
                for (uint32_t j = i; j < n; ++j) mat[size_t(i) * n + j] = entries[k++];
            break;
        }
        case MatrixShape::ConstantDiagonal: {
            for (uint32_t i = 0; i < n; ++i) mat[size_t(i) * n + i] = entries[0];
            size_t k = 1;
            for (uint32_t i = 0; i < n; ++i)
                for (uint32_t j = i + 1; j < n; ++j) mat[size_t(i) * n + j] = entries[k++];
            break;
        }
        case MatrixShape::ConstantDiagonals:
            for (uint32_t i = 0; i < n; ++i)
                for (uint32_t j = i; j < n; ++j) mat[size_t(i) * n + j] = entries[j - i];
            break;
    }
    return mat;
}

std::vector<uint32_t> collapse_matrix(uint32_t n, MatrixShape shape,
                                      const std::vector<uint32_t>& mat) {
    auto pos = matrix_positions(n, shape);
    std::vector<uint32_t> entries;
    entries.reserve(pos.size());
    if (shape == MatrixShape::ConstantDiagonals) {
        for (uint32_t d = 0; d < n; ++d) entries.push_back(mat[d]); // row 0 holds every offset
    } else if (shape == MatrixShape::ConstantDiagonal) {
        entries.push_back(mat[0]);
        for (uint32_t i = 0; i < n; ++i)
            for (uint32_t j = i + 1; j < n; ++j) entries.push_back(mat[size_t(i) * n + j]);
    } else {
        for (auto [i, j] : pos) entries.push_back(mat[size_t(i) * n + j]);
    }
    return entries;
}

std::vector<uint32_t> matrix_product(const FiniteRing& base, uint32_t n,
                                     const std::vector<uint32_t>& a,
                                     const std::vector<uint32_t>& b) {
    std::vector<uint32_t> c(size_t(n) * n, base.zero());
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) {
            uint32_t acc = base.zero();
            for (uint32_t k = 0; k < n; ++k)
                acc = base.add(acc, base.mul(a[size_t(i) * n + k], b[size_t(k) * n + j]));
            c[size_t(i) * n + j] = acc;
        }
    return c;
}

const char* shape_letter(MatrixShape s) {
    switch (s) {
        case MatrixShape::Full: return "M";
        case MatrixShape::UpperTriangular: return "U";
        case MatrixShape::ConstantDiagonal: return "D";
        case MatrixShape::ConstantDiagonals: return "V";
    }
    return "?";
}

} // namespace

FiniteRing matrix_ring(const FiniteRing& base, uint32_t n, MatrixShape shape,
                       const SizeLimits& limits) {
    if (n == 0) throw Error(ErrorCode::BadTables, "matrix dimension must be positive");
    const uint32_t free = uint32_t(matrix_positions(n, shape).size());
    uint64_t order64 = checked_pow(base.order(), free, limits);
    limits.check_order(order64);
    const uint32_t order = uint32_t(order64);
    const uint32_t radix = base.order();

    std::vector<uint32_t> add(size_t(order) * order), mul(size_t(order) * order);
    std::vector<std::vector<uint32_t>> dense(order);
    for (uint32_t x = 0; x < order; ++x)
        dense[x] = expand_matrix(base, n, shape, decode_digits(x, radix, free));
    for (uint32_t a = 0; a < order; ++a) {
        auto ea = decode_digits(a, radix, free);
        for (uint32_t b = 0; b < order; ++b) {
            auto eb = decode_digits(b, radix, free);
            std::vector<uint32_t> sum(free);
            for (uint32_t i = 0; i < free; ++i) sum[i] = base.add(ea[i], eb[i]);
            add[size_t(a) * order + b] = encode_digits(sum, radix);
            auto prod = matrix_product(base, n, dense[a], dense[b]);
            mul[size_t(a) * order + b] = encode_digits(collapse_matrix(n, shape, prod), radix);
        }
    }
    std::optional<uint32_t> one;
    if (base.unital()) {
        std::vector<uint32_t> id(size_t(n) * n, base.zero());
        for (uint32_t i = 0; i < n; ++i) id[size_t(i) * n + i] = *base.one();
        one = encode_digits(collapse_matrix(n, shape, id), radix);
    }
    std::string label = std::string(shape_letter(shape)) + "(" + std::to_string(n) + "," +
                        base.label() + ")";
    return FiniteRing::validate(order, std::move(add), std::move(mul), one, label, limits);
}

uint32_t matrix_element(const FiniteRing& base, uint32_t n, MatrixShape shape,
                        const std::vector<uint32_t>& entries) {
    auto pos = matrix_positions(n, shape);
    if (entries.size() != pos.size())
        throw Error(ErrorCode::BadTables, "wrong number of free entries");
    return encode_digits(entries, base.order());
}

uint32_t matrix_unit(const FiniteRing& base, uint32_t n, MatrixShape shape, uint32_t i, uint32_t j,
                     uint32_t v) {
    auto pos = matrix_positions(n, shape);
    std::vector<uint32_t> entries(pos.size(), base.zero());
    bool placed = false;
    for (size_t k = 0; k < pos.size(); ++k) {
        if (shape == MatrixShape::ConstantDiagonals) {
            if (i <= j && pos[k].second == j - i) {
                entries[k] = v;
                placed = true;
            }
        } else if (pos[k].first == i && pos[k].second == j) {
            entries[k] = v;
            placed = true;
        }
    }
    if (!placed) throw Error(ErrorCode::BadTables, "entry position not free in this shape");
    return encode_digits(entries, base.order());
}

FiniteRing trivial_extension(const FiniteRing& base, const SizeLimits& limits) {
    uint64_t order64 = uint64_t(base.order()) * base.order();
    limits.check_order(order64);
    const uint32_t order = uint32_t(order64);
    const uint32_t q = base.order();
    std::vector<uint32_t> add(size_t(order) * order), mul(size_t(order) * order);
    for (uint32_t a = 0; a < order; ++a) {
        uint32_t r1 = a % q, m1 = a / q;
        for (uint32_t b = 0; b < order; ++b) {
            uint32_t r2 = b % q, m2 = b / q;
            add[size_t(a) * order + b] = base.add(r1, r2) + base.add(m1, m2) * q;
            uint32_t mr = base.mul(r1, r2);
            uint32_t mm = base.add(base.mul(r1, m2), base.mul(m1, r2));
            mul[size_t(a) * order + b] = mr + mm * q;
        }
    }
    std::optional<uint32_t> one;
    if (base.unital()) one = *base.one() + base.zero() * q;
    return FiniteRing::validate(order, std::move(add), std::move(mul), one,
                                "T(" + base.label() + ")", limits);
}

FiniteRing dorroh_extension(const FiniteRing& base, uint32_t p, const SizeLimits& limits) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    for (uint32_t x = 0; x < base.order(); ++x)
        if (base.smul(p, x) != base.zero())
            throw Error(ErrorCode::NotPAlgebra,
                        "p*x != 0 for element " + std::to_string(x) + "; base is not a Z_" +
                            std::to_string(p) + "-algebra");
    uint64_t order64 = uint64_t(base.order()) * p;
    limits.check_order(order64);
    const uint32_t order = uint32_t(order64);
    const uint32_t q = base.order();
    std::vector<uint32_t> add(size_t(order) * order), mul(size_t(order) * order);
    for (uint32_t a = 0; a < order; ++a) {
        uint32_t r1 = a % q, s1 = a / q;
        for (uint32_t b = 0; b < order; ++b) {
            uint32_t r2 = b % q, s2 = b / q;
            add[size_t(a) * order + b] = base.add(r1, r2) + ((s1 + s2) % p) * q;
            uint32_t rr = base.add(base.mul(r1, r2),
                                   base.add(base.smul(s1, r2), base.smul(s2, r1)));
            uint32_t ss = uint32_t((uint64_t(s1) * s2) % p);
            mul[size_t(a) * order + b] = rr + ss * q;
        }
    }
    uint32_t one = base.zero() + 1 * q; // (0, 1)
    return FiniteRing::validate(order, std::move(add), std::move(mul), one,
                                "Dorroh(" + base.label() + "," + std::to_string(p) + ")", limits);
}

FiniteRing direct_product(const std::vector<const FiniteRing*>& factors, const SizeLimits& limits) {
    if (factors.empty()) throw Error(ErrorCode::BadTables, "product needs at least one factor");
    uint64_t order64 = 1;
    for (auto* f : factors) {
        if (order64 > limits.max_order / f->order())
            throw Error(ErrorCode::SizeCap, "product order exceeds cap");
        order64 *= f->order();
    }
    limits.check_order(order64);
    const uint32_t order = uint32_t(order64);
    auto split = [&](uint32_t x) {
        std::vector<uint32_t> parts(factors.size());
        for (size_t i = 0; i < factors.size(); ++i) {
            parts[i] = x % factors[i]->order();
            x /= factors[i]->order();
        }
        return parts;
    };
    auto join = [&](const std::vector<uint32_t>& parts) {
        uint64_t idx = 0;
        for (size_t i = factors.size(); i-- > 0;) idx = idx * factors[i]->order() + parts[i];
        return uint32_t(idx);
    };
    std::vector<uint32_t> add(size_t(order) * order), mul(size_t(order) * order);
    for (uint32_t a = 0; a < order; ++a) {
        auto pa = split(a);
        for (uint32_t b = 0; b < order; ++b) {
            auto pb = split(b);
            std::vector<uint32_t> s(factors.size()), m(factors.size());
            for (size_t i = 0; i < factors.size(); ++i) {
                s[i] = factors[i]->add(pa[i], pb[i]);
                m[i] = factors[i]->mul(pa[i], pb[i]);
            }
            add[size_t(a) * order + b] = join(s);
            mul[size_t(a) * order + b] = join(m);
        }
    }
    std::optional<uint32_t> one;
    bool all_unital = std::all_of(factors.begin(), factors.end(),
                                  [](const FiniteRing* f) { return f->unital(); });
    if (all_unital) {
        std::vector<uint32_t> ones(factors.size());
        for (size_t i = 0; i < factors.size(); ++i) ones[i] = *factors[i]->one();
        one = join(ones);
    }
    std::string label = "Product(";
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) label += ",";
        label += factors[i]->label();
    }
    label += ")";
    return FiniteRing::validate(order, std::move(add), std::move(mul), one, label, limits);
}

FiniteRing truncated_poly(const FiniteRing& base, uint32_t n, const SizeLimits& limits) {
    if (n == 0) throw Error(ErrorCode::BadTables, "truncation degree must be positive");
    uint64_t order64 = checked_pow(base.order(), n, limits);
    limits.check_order(order64);
    const uint32_t order = uint32_t(order64);
    const uint32_t q = base.order();
    std::vector<uint32_t> add(size_t(order) * order), mul(size_t(order) * order);
    for (uint32_t a = 0; a < order; ++a) {
        auto ca = decode_digits(a, q, n);
        for (uint32_t b = 0; b < order; ++b) {
            auto cb = decode_digits(b, q, n);
            std::vector<uint32_t> s(n), m(n, base.zero());
            for (uint32_t i = 0; i < n; ++i) s[i] = base.add(ca[i], cb[i]);
            for (uint32_t i = 0; i < n; ++i)
                for (uint32_t j = 0; i + j < n; ++j)
                    m[i + j] = base.add(m[i + j], base.mul(ca[i], cb[j]));
            add[size_t(a) * order + b] = encode_digits(s, q);
            mul[size_t(a) * order + b] = encode_digits(m, q);
        }
    }
    std::optional<uint32_t> one;
    if (base.unital()) {
        std::vector<uint32_t> c(n, base.zero());
        c[0] = *base.one();
        one = encode_digits(c, q);
    }
    return FiniteRing::validate(order, std::move(add), std::move(mul), one,
                                "TruncPoly(" + base.label() + "," + std::to_string(n) + ")",
                                limits);
}

namespace {
std::optional<uint32_t> detect_identity(uint32_t order, const std::vector<uint32_t>& mul) {
    for (uint32_t e = 0; e < order; ++e) {
        bool ok = true;
        for (uint32_t a = 0; a < order && ok; ++a)
            ok = mul[size_t(e) * order + a] == a && mul[size_t(a) * order + e] == a;
        if (ok) return e;
    }
    return std::nullopt;
}
} // namespace

QuotientResult quotient_ring(const FiniteRing& base, const ElementSubset& ideal,
                             const SizeLimits& limits) {
    if (&ideal.ring() != &base) throw Error(ErrorCode::RingMismatch, "ideal of a different ring");
    if (!ideal.is_two_sided_ideal())
        throw Error(ErrorCode::NotAnIdeal, "subset is not a two-sided ideal");
    const uint32_t n = base.order();
    auto mem = ideal.members();
    // canonical representative: least index in the coset x + I
    std::vector<uint32_t> rep(n);
    for (uint32_t x = 0; x < n; ++x) {
        uint32_t r = x;
        for (uint32_t i : mem) r = std::min(r, base.add(x, i));
        rep[x] = r;
    }
    std::vector<uint32_t> reps;
    for (uint32_t x = 0; x < n; ++x)
        if (rep[x] == x) reps.push_back(x);
    std::vector<uint32_t> coset_of(n);
    for (uint32_t x = 0; x < n; ++x)
        coset_of[x] = uint32_t(std::lower_bound(reps.begin(), reps.end(), rep[x]) - reps.begin());
    const uint32_t m = uint32_t(reps.size());
    limits.check_order(m);
    std::vector<uint32_t> add(size_t(m) * m), mul(size_t(m) * m);
    for (uint32_t a = 0; a < m; ++a)
        for (uint32_t b = 0; b < m; ++b) {
            add[size_t(a) * m + b] = coset_of[base.add(reps[a], reps[b])];
            mul[size_t(a) * m + b] = coset_of[base.mul(reps[a], reps[b])];
        }
    auto one = detect_identity(m, mul);
    FiniteRing q = FiniteRing::validate(m, std::move(add), std::move(mul), one,
                                        "Quotient(" + base.label() + ")", limits);
    return {std::move(q), std::move(coset_of)};
}

SubringResult subring(const FiniteRing& base, const std::vector<uint32_t>& generators,
                      const SizeLimits& limits) {
    ElementSubset closed = subset_closure(base, generators, ClosureMode::Subring);
    auto mem = closed.members(); // ascending parent index
    const uint32_t m = uint32_t(mem.size());
    limits.check_order(m);
    std::vector<uint32_t> pos(base.order(), UINT32_MAX);
    for (uint32_t i = 0; i < m; ++i) pos[mem[i]] = i;
    std::vector<uint32_t> add(size_t(m) * m), mul(size_t(m) * m);
    for (uint32_t a = 0; a < m; ++a)
        for (uint32_t b = 0; b < m; ++b) {
            add[size_t(a) * m + b] = pos[base.add(mem[a], mem[b])];
            mul[size_t(a) * m + b] = pos[base.mul(mem[a], mem[b])];
        }
    auto one = detect_identity(m, mul);
    FiniteRing s = FiniteRing::validate(m, std::move(add), std::move(mul), one,
                                        "Subring(" + base.label() + ")", limits);
    return {std::move(s), std::move(mem)};
}

// -------- expression language --------

namespace {

struct ExprParser {
    const std::string& text;
    size_t pos = 0;

    explicit ExprParser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c))
            throw Error(ErrorCode::ParseError,
                        std::string("expected '") + c + "' at offset " + std::to_string(pos));
    }

    uint64_t number() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw Error(ErrorCode::ParseError, "expected a number");
        return std::stoull(text.substr(start, pos - start));
    }

    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() &&
               (isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    }

    std::vector<uint32_t> bracket_list() {
        expect('[');
        std::vector<uint32_t> out;
        skip_ws();
        if (!eat(']')) {
            do {
                out.push_back(uint32_t(number()));
            } while (eat(','));
            expect(']');
        }
        return out;
    }

    ConstructionExpr parse() {
        ConstructionExpr e = expr();
        skip_ws();
        if (pos != text.size())
            throw Error(ErrorCode::ParseError, "trailing input at offset " + std::to_string(pos));
        return e;
    }

    ConstructionExpr expr() {
        std::string name = ident();
        using K = ConstructionExpr::Kind;
        ConstructionExpr e;
        if (name == "Z") {
            e.kind = K::Z;
            expect('(');
            e.numbers.push_back(number());
            expect(')');
        } else if (name == "GF") {
            e.kind = K::GF;
            expect('(');
            e.numbers.push_back(number());
            expect(',');
            e.numbers.push_back(number());
            if (eat(',')) e.list = bracket_list();
            expect(')');
        } else if (name == "M" || name == "U" || name == "D" || name == "V") {
            e.kind = name == "M" ? K::M : name == "U" ? K::U : name == "D" ? K::D : K::V;
            expect('(');
            e.numbers.push_back(number());
            expect(',');
            e.args.push_back(std::make_shared<ConstructionExpr>(expr()));
            expect(')');
        } else if (name == "T") {
            e.kind = K::T;
            expect('(');
            e.args.push_back(std::make_shared<ConstructionExpr>(expr()));
            expect(')');
        } else if (name == "Dorroh") {
            e.kind = K::Dorroh;
            expect('(');
            e.args.push_back(std::make_shared<ConstructionExpr>(expr()));
            expect(',');
            e.numbers.push_back(number());
            expect(')');
        } else if (name == "Product") {
            e.kind = K::Product;
            expect('(');
            do {
                e.args.push_back(std::make_shared<ConstructionExpr>(expr()));
            } while (eat(','));
            expect(')');
        } else if (name == "TruncPoly") {
            e.kind = K::TruncPoly;
            expect('(');
            e.args.push_back(std::make_shared<ConstructionExpr>(expr()));
            expect(',');
            e.numbers.push_back(number());
            expect(')');
        } else if (name == "Quotient" || name == "Subring") {
            e.kind = name == "Quotient" ? K::Quotient : K::Subring;
            expect('(');
            e.args.push_back(std::make_shared<ConstructionExpr>(expr()));
            expect(',');
            skip_ws();
            std::string kw = ident();
            if (kw != "gens") throw Error(ErrorCode::ParseError, "expected gens=[...]");
            expect('=');
            e.list = bracket_list();
            expect(')');
        } else {
            throw Error(ErrorCode::ParseError, "unknown constructor '" + name + "'");
        }
        return e;
    }
};

} // namespace

std::string ConstructionExpr::render() const {
    using K = Kind;
    std::ostringstream os;
    auto list_str = [&]() {
        std::string s = "[";
        for (size_t i = 0; i < list.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(list[i]);
        }
        return s + "]";
    };
    switch (kind) {
        case K::Z: os << "Z(" << numbers[0] << ")"; break;
        case K::GF:
            os << "GF(" << numbers[0] << "," << numbers[1];
            if (!list.empty()) os << "," << list_str();
            os << ")";
            break;
        case K::M: os << "M(" << numbers[0] << "," << args[0]->render() << ")"; break;
        case K::U: os << "U(" << numbers[0] << "," << args[0]->render() << ")"; break;
        case K::D: os << "D(" << numbers[0] << "," << args[0]->render() << ")"; break;
        case K::V: os << "V(" << numbers[0] << "," << args[0]->render() << ")"; break;
        case K::T: os << "T(" << args[0]->render() << ")"; break;
        case K::Dorroh: os << "Dorroh(" << args[0]->render() << "," << numbers[0] << ")"; break;
        case K::Product: {
            os << "Product(";
            for (size_t i = 0; i < args.size(); ++i) {
                if (i) os << ",";
                os << args[i]->render();
            }
            os << ")";
            break;
        }
        case K::TruncPoly:
            os << "TruncPoly(" << args[0]->render() << "," << numbers[0] << ")";
            break;
        case K::Quotient: os << "Quotient(" << args[0]->render() << ", gens=" << list_str() << ")"; break;
        case K::Subring: os << "Subring(" << args[0]->render() << ", gens=" << list_str() << ")"; break;
    }
    return os.str();
}

ConstructionExpr parse_expr(const std::string& text) { return ExprParser(text).parse(); }

FiniteRing eval_expr(const ConstructionExpr& expr, const SizeLimits& limits) {
    using K = ConstructionExpr::Kind;
    switch (expr.kind) {
        case K::Z: return cyclic_ring(uint32_t(expr.numbers[0]), limits);
        case K::GF:
            return finite_field(uint32_t(expr.numbers[0]), uint32_t(expr.numbers[1]), expr.list,
                                limits);
        case K::M:
        case K::U:
        case K::D:
        case K::V: {
            FiniteRing base = eval_expr(*expr.args[0], limits);
            MatrixShape shape = expr.kind == K::M   ? MatrixShape::Full
                                : expr.kind == K::U ? MatrixShape::UpperTriangular
                                : expr.kind == K::D ? MatrixShape::ConstantDiagonal
                                                    : MatrixShape::ConstantDiagonals;
            return matrix_ring(base, uint32_t(expr.numbers[0]), shape, limits);
        }
        case K::T: return trivial_extension(eval_expr(*expr.args[0], limits), limits);
        case K::Dorroh:
            return dorroh_extension(eval_expr(*expr.args[0], limits), uint32_t(expr.numbers[0]),
                                    limits);
        case K::Product: {
            std::vector<FiniteRing> bases;
            bases.reserve(expr.args.size());
            for (auto& a : expr.args) bases.push_back(eval_expr(*a, limits));
            std::vector<const FiniteRing*> ptrs;
            for (auto& b : bases) ptrs.push_back(&b);
            return direct_product(ptrs, limits);
        }
        case K::TruncPoly:
            return truncated_poly(eval_expr(*expr.args[0], limits), uint32_t(expr.numbers[0]),
                                  limits);
        case K::Quotient: {
            FiniteRing base = eval_expr(*expr.args[0], limits);
            ElementSubset ideal = subset_closure(base, expr.list, ClosureMode::TwoSidedIdeal);
            return quotient_ring(base, ideal, limits).ring;
        }
        case K::Subring: {
            FiniteRing base = eval_expr(*expr.args[0], limits);
            return subring(base, expr.list, limits).ring;
        }
    }
    throw Error(ErrorCode::ParseError, "unhandled expression kind");
}

FiniteRing eval_expr(const std::string& text, const SizeLimits& limits) {
    return eval_expr(parse_expr(text), limits);
}

} // namespace ringlab
