#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nccalc {

/// Base class of every failure the engine can report.
class NcError : public std::runtime_error {
  public:
    NcError(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    /// Stable machine-readable identifier, used verbatim in CLI error reports.
    const std::string& code() const { return code_; }

  private:
    std::string code_;
};

/// Inversion of an element of the commutator ideal (phi-image is zero).
struct CommutatorInverse final : NcError {
    explicit CommutatorInverse(const std::string& what) : NcError("CommutatorInverse", what) {}
};

/// inv(0) in the commutative fraction field.
struct DivisionByZero final : NcError {
    explicit DivisionByZero(const std::string& what) : NcError("DivisionByZero", what) {}
};

/// Substitution images with identically-zero Jacobian determinant.
struct DependentImages final : NcError {
    explicit DependentImages(const std::string& what) : NcError("DependentImages", what) {}
};

/// A gated inverse re-evaluated to zero; unreachable unless there is a bug.
struct InternalGateViolation final : NcError {
    explicit InternalGateViolation(const std::string& what) : NcError("InternalGateViolation", what) {}
};

/// Configured node or term budget exceeded; fail loudly instead of degrading.
struct BudgetExceeded final : NcError {
    explicit BudgetExceeded(const std::string& what) : NcError("BudgetExceeded", what) {}
};

/// Truncated-series inversion with non-invertible epsilon^0 coefficient.
struct NonUnitConstantTerm final : NcError {
    explicit NonUnitConstantTerm(const std::string& what) : NcError("NonUnitConstantTerm", what) {}
};

/// Series-matrix inversion with singular epsilon^0 coefficient matrix.
struct SingularConstantTerm final : NcError {
    explicit SingularConstantTerm(const std::string& what) : NcError("SingularConstantTerm", what) {}
};

/// GL2 generator matrix with zero determinant.
struct SingularMatrix final : NcError {
    explicit SingularMatrix(const std::string& what) : NcError("SingularMatrix", what) {}
};

/// V-matrix with zero commutative determinant (no valid pivot chain).
struct SingularCommDet final : NcError {
    explicit SingularCommDet(const std::string& what) : NcError("SingularCommDet", what) {}
};

/// Sum-closure with commutatively cancelling designated elements.
struct DegenerateSum final : NcError {
    explicit DegenerateSum(const std::string& what) : NcError("DegenerateSum", what) {}
};

/// Parse failure; carries the byte offset of the offending token.
struct SyntaxError final : NcError {
    SyntaxError(std::size_t position, const std::string& what)
        : NcError("SyntaxError", what + " at offset " + std::to_string(position)),
          position(position) {}

    std::size_t position;
};

}  // namespace nccalc
