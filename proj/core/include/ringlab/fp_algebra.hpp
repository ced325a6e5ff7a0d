#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/fp_linalg.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

// A word is a sequence of generator indices; the empty word is 1 in a
// unital presentation.
using Word = std::vector<uint32_t>;

struct Term {
    Word word;
    uint32_t coeff = 1;
};

/// F_p-linear combination of words, kept sorted (graded, then lex) with
/// coefficients in [1, p).
using WordCombo = std::vector<Term>;

WordCombo combo_normalize(WordCombo combo, uint32_t p);
WordCombo combo_add(const WordCombo& a, const WordCombo& b, uint32_t p);
WordCombo combo_smul(uint32_t c, const WordCombo& a, uint32_t p);
WordCombo combo_mul(const WordCombo& a, const WordCombo& b, uint32_t p);
bool combo_is_zero(const WordCombo& a);

/// One item of a relation template: a fixed combination or a parameter gap
/// ranging over words (min_gap = 1 restricts to nonempty words).
struct TemplateItem {
    bool is_gap = false;
    uint32_t min_gap = 0;
    WordCombo fixed;

    static TemplateItem gap(uint32_t min) { return {true, min, {}}; }
    static TemplateItem block(WordCombo c) { return {false, 0, std::move(c)}; }
};

/// A relation or relation family. `squared` means the family consists of the
/// squares of the template's instances.
struct Relation {
    std::vector<TemplateItem> items;
    bool squared = false;
};

struct Presentation {
    uint32_t p = 2;
    std::vector<std::string> gens;
    bool commutative = false;
    bool unital = false;
    std::optional<uint32_t> truncate;      // all words of length >= L lie in the ideal
    std::optional<uint32_t> working_bound; // analysis-only length bound (ideal not truncated)
    std::vector<Relation> relations;
    std::string label;
};

/// Element value with an exactness flag; computations that fall off a
/// working bound mark their results inexact.
struct AlgValue {
    WordCombo combo;
    bool exact = true;
};

struct MembershipAnswer {
    bool in_ideal = false;
    bool exact = true;
};

enum class NilStatus { Nilpotent, NotNilpotent, Unknown };

struct AlgNilpotency {
    NilStatus status = NilStatus::Unknown;
    std::optional<uint32_t> index;
    bool exact = false;
    std::string note;
};

struct AlgebraLimits {
    uint32_t dimension_cap = 10'000; // ambient word-space cap for truncated mode
    uint32_t term_cap = 200'000;     // term-count guard for power iteration
};

class PresentedAlgebra {
  public:
    virtual ~PresentedAlgebra() = default;

    const Presentation& presentation() const { return pres_; }
    uint32_t p() const { return pres_.p; }
    bool unital() const { return pres_.unital; }
    const std::string& label() const { return pres_.label; }
    virtual bool commutative_by_construction() const { return pres_.commutative; }

    AlgValue add(const AlgValue& a, const AlgValue& b) const;
    AlgValue smul(uint32_t c, const AlgValue& a) const;
    AlgValue one() const;
    AlgValue zero() const { return {}; }

    virtual AlgValue mul(const AlgValue& a, const AlgValue& b) const = 0;
    /// Canonical form of the residue class (ideal part eliminated).
    virtual AlgValue reduce(const AlgValue& a) const = 0;
    virtual MembershipAnswer in_ideal(const AlgValue& a) const = 0;
    MembershipAnswer is_zero(const AlgValue& a) const { return in_ideal(a); }
    virtual AlgNilpotency nilpotency(const AlgValue& a, uint32_t power_bound) const = 0;
    virtual FiniteRing realize(const SizeLimits& limits = {}) const = 0;

    /// Parses "ba + b*a^2", "3*x^2*y", "1", "0" against the generator names.
    AlgValue parse(const std::string& text) const;
    std::string render(const AlgValue& v) const;

  protected:
    explicit PresentedAlgebra(Presentation pres) : pres_(std::move(pres)) {}
    Presentation pres_;
};

/// Quotient by a monomial ideal of the free algebra, given by factor
/// patterns: a word dies exactly when some pattern matches one of its
/// factors. Infinite-dimensional in general; membership stays exact.
class PatternAlgebra final : public PresentedAlgebra {
  public:
    explicit PatternAlgebra(Presentation pres);

    AlgValue mul(const AlgValue& a, const AlgValue& b) const override;
    AlgValue reduce(const AlgValue& a) const override;
    MembershipAnswer in_ideal(const AlgValue& a) const override;
    AlgNilpotency nilpotency(const AlgValue& a, uint32_t power_bound) const override;
    FiniteRing realize(const SizeLimits& limits = {}) const override;

    bool word_in_ideal(const Word& w) const;

    struct Pattern {
        std::vector<Word> pieces;
        std::vector<uint32_t> gaps; // min gap length between consecutive pieces
    };
    const std::vector<Pattern>& patterns() const { return patterns_; }

  private:
    std::vector<Pattern> patterns_;
    uint32_t max_piece_total_ = 1;
    uint32_t max_piece_count_ = 1;
};

/// Finite-dimensional quotient computed inside the word space of length < L.
/// With an intrinsic truncation (presentation.truncate) this is the exact
/// algebra. With a working bound the row space only sees word instances of
/// the relation families; answers carry exactness flags accordingly.
class TruncatedAlgebra final : public PresentedAlgebra {
  public:
    explicit TruncatedAlgebra(Presentation pres, const AlgebraLimits& limits = {});

    AlgValue mul(const AlgValue& a, const AlgValue& b) const override;
    AlgValue reduce(const AlgValue& a) const override;
    MembershipAnswer in_ideal(const AlgValue& a) const override;
    AlgNilpotency nilpotency(const AlgValue& a, uint32_t power_bound) const override;
    FiniteRing realize(const SizeLimits& limits = {}) const override;

    uint32_t length_bound() const { return length_bound_; }
    bool intrinsic() const { return intrinsic_; }
    bool positive_exact() const { return positive_exact_; }
    bool slice_exact() const { return slice_exact_; }
    size_t ambient_dimension() const { return universe_; } // word-space dimension
    size_t ideal_rank() const { return space_.rank(); }
    size_t quotient_dimension() const { return universe_ - space_.rank(); }
    const FpRowSpace& row_space() const { return space_; }

    uint64_t word_index(const Word& w) const;
    Word word_of_index(uint64_t idx) const;

  private:
    uint32_t length_bound_ = 0;
    bool intrinsic_ = true;
    bool positive_exact_ = true;
    bool slice_exact_ = true;
    size_t universe_ = 0;
    std::vector<uint64_t> offsets_;
    FpRowSpace space_{2, 0};

    std::vector<std::pair<uint32_t, uint32_t>> densify(const WordCombo& c, bool* truncated) const;
};

/// Commutative quotient by a monomial ideal with a pure power bound per
/// generator; monomials are sorted exponent vectors, dimension is finite.
class CommutativeMonomialAlgebra final : public PresentedAlgebra {
  public:
    explicit CommutativeMonomialAlgebra(Presentation pres, const AlgebraLimits& limits = {});

    AlgValue mul(const AlgValue& a, const AlgValue& b) const override;
    AlgValue reduce(const AlgValue& a) const override;
    MembershipAnswer in_ideal(const AlgValue& a) const override;
    AlgNilpotency nilpotency(const AlgValue& a, uint32_t power_bound) const override;
    FiniteRing realize(const SizeLimits& limits = {}) const override;

    /// Standard monomial basis (exponent vectors), graded-lex order; the
    /// zero vector (the unit) is first when unital.
    const std::vector<std::vector<uint32_t>>& basis() const { return basis_; }

  private:
    std::vector<std::vector<uint32_t>> rel_monomials_;
    std::vector<std::vector<uint32_t>> basis_;
    std::vector<uint32_t> bounds_;

    bool monomial_dead(const std::vector<uint32_t>& e) const;
    std::vector<uint32_t> exponents_of(const Word& w) const;
    Word word_of(const std::vector<uint32_t>& e) const;
};

/// Dispatches on the presentation: commutative -> monomial algebra,
/// truncate/bound -> truncated, otherwise pattern mode.
std::unique_ptr<PresentedAlgebra> build_algebra(const Presentation& pres,
                                                const AlgebraLimits& limits = {});

/// Text format:
///   algebra p=<p> gens=[a,b,c] [commutative] [unital] [truncate=<L>] [bound=<L>]
///   rel <linear combination of words>
///   pattern <items with % (any gap) and %+ (nonempty gap)>
///   pattern2 <items>          -- squares of the template's instances
Presentation parse_presentation(const std::string& text);
std::string serialize_presentation(const Presentation& pres);

/// Convolution product check: returns the nonzero coefficients of f*g (empty
/// means f*g = 0). `exact` reports whether every coefficient was decided
/// exactly.
struct PolyIdentityResult {
    bool zero = false;
    bool exact = true;
    std::vector<std::pair<uint32_t, AlgValue>> nonzero_coefficients;
};
PolyIdentityResult verify_poly_identity(const PresentedAlgebra& alg,
                                        const std::vector<AlgValue>& f,
                                        const std::vector<AlgValue>& g);

} // namespace ringlab
