#pragma once

#include <memory>
#include <utility>

#include "ringlab/ring.hpp"

namespace ringlab {

// -------- direct constructors --------
//
// Element enumeration orders are fixed so witnesses replay across runs:
// every tuple-like element is a little-endian mixed-radix number, i.e. the
// first listed slot is the least significant digit.

/// Z_n with one = 1 mod n (the zero ring for n = 1).
FiniteRing cyclic_ring(uint32_t n, const SizeLimits& limits = {});

/// GF(p^k). For k > 1 a built-in irreducible polynomial is used when
/// p^k <= 64; otherwise pass `modulus` as coefficients c0..ck (monic).
FiniteRing finite_field(uint32_t p, uint32_t k,
                        const std::vector<uint32_t>& modulus = {},
                        const SizeLimits& limits = {});

enum class MatrixShape { Full, UpperTriangular, ConstantDiagonal, ConstantDiagonals };
// Full:              M_n(R), all n^2 entries free
// UpperTriangular:   U_n(R), entries (i,j), i <= j, row-major
// ConstantDiagonal:  D_n(R), one shared diagonal value then strict upper row-major
// ConstantDiagonals: V_n(R), one value per diagonal offset 0..n-1
//                    (V_n(R) is R[x]/<x^n> written as a matrix ring)

FiniteRing matrix_ring(const FiniteRing& base, uint32_t n, MatrixShape shape,
                       const SizeLimits& limits = {});

/// Free entry positions for a shape, in enumeration order. For
/// ConstantDiagonals the "position" (0, d) stands for diagonal offset d.
std::vector<std::pair<uint32_t, uint32_t>> matrix_positions(uint32_t n, MatrixShape shape);

/// Index of the matrix with the given free-entry values (in enumeration order).
uint32_t matrix_element(const FiniteRing& base, uint32_t n, MatrixShape shape,
                        const std::vector<uint32_t>& entries);

/// e_{ij} scaled by base element v, as an element index of matrix_ring(base, n, shape).
uint32_t matrix_unit(const FiniteRing& base, uint32_t n, MatrixShape shape,
                     uint32_t i, uint32_t j, uint32_t v);

/// T(R,R): pairs (r, m), index = r + m*|R|, with
/// (r1,m1)(r2,m2) = (r1 r2, r1 m2 + m1 r2).
FiniteRing trivial_extension(const FiniteRing& base, const SizeLimits& limits = {});

/// Dorroh extension R (+) Z_p: pairs (r, s), index = r + s*|R|, with
/// (r1,s1)(r2,s2) = (r1 r2 + s1 r2 + s2 r1, s1 s2). Requires p prime and
/// p*x = 0 for every x in R; the result is unital with one = (0, 1).
FiniteRing dorroh_extension(const FiniteRing& base, uint32_t p, const SizeLimits& limits = {});

/// Componentwise product; index = little-endian mixed radix over the factors.
FiniteRing direct_product(const std::vector<const FiniteRing*>& factors,
                          const SizeLimits& limits = {});

/// R[x]/<x^n>: coefficient tuples (a_0..a_{n-1}), a_0 least significant.
FiniteRing truncated_poly(const FiniteRing& base, uint32_t n, const SizeLimits& limits = {});

struct QuotientResult {
    FiniteRing ring;
    std::vector<uint32_t> projection; // parent element index -> coset index
};

/// R/I for a verified two-sided ideal I; cosets are numbered by ascending
/// least member index.
QuotientResult quotient_ring(const FiniteRing& base, const ElementSubset& ideal,
                             const SizeLimits& limits = {});

struct SubringResult {
    FiniteRing ring;
    std::vector<uint32_t> embedding; // subring element index -> parent index
};

/// Subring generated by `generators`, elements numbered by ascending parent
/// index. An identity is detected by scan (it may differ from the parent's).
SubringResult subring(const FiniteRing& base, const std::vector<uint32_t>& generators,
                      const SizeLimits& limits = {});

// -------- construction expression language --------
//
//   Z(n) | GF(p,k[,poly]) | M(n,E) | U(n,E) | D(n,E) | V(n,E) | T(E)
//   | Dorroh(E,p) | Product(E,...) | TruncPoly(E,n)
//   | Quotient(E, gens=[...]) | Subring(E, gens=[...])
//
// where E is a nested expression, poly = [c0,...,ck], and gens lists element
// indices of E.

struct ConstructionExpr {
    enum class Kind { Z, GF, M, U, D, V, T, Dorroh, Product, TruncPoly, Quotient, Subring };
    Kind kind;
    std::vector<uint64_t> numbers;                               // n / p,k / p
    std::vector<uint32_t> list;                                  // poly coeffs or gens
    std::vector<std::shared_ptr<ConstructionExpr>> args;         // nested expressions

    std::string render() const;
};

ConstructionExpr parse_expr(const std::string& text);
FiniteRing eval_expr(const ConstructionExpr& expr, const SizeLimits& limits = {});
FiniteRing eval_expr(const std::string& text, const SizeLimits& limits = {});

bool is_prime(uint64_t n);

} // namespace ringlab
