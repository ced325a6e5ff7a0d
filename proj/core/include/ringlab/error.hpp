#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ringlab {

enum class ErrorCode {
    BadTables,
    NotAbelianGroup,
    NotAssociative,
    NotDistributive,
    BadIdentity,
    SizeCap,
    RingMismatch,
    RequiresIdentity,
    PowerZeroNonUnital,
    NotAnIdeal,
    NotPrime,
    NotIrreducible,
    NoBuiltinPolynomial,
    NotPAlgebra,
    DimensionCap,
    InconsistentPresentation,
    NonMonomialRelation,
    ParseError,
    NoVerdict,
};

const char* error_code_name(ErrorCode code);

/// All library failures throw this one type; `code()` identifies the condition
/// and `triple()` carries the violating element triple for axiom failures.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    Error(ErrorCode code, std::string message, std::array<uint32_t, 3> triple)
        : Error(code, std::move(message)) {
        has_triple_ = true;
        triple_ = triple;
    }

    ErrorCode code() const { return code_; }
    bool has_triple() const { return has_triple_; }
    const std::array<uint32_t, 3>& triple() const { return triple_; }

  private:
    ErrorCode code_;
    bool has_triple_ = false;
    std::array<uint32_t, 3> triple_{0, 0, 0};
};

} // namespace ringlab
