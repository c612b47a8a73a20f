#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace scst {

enum class ErrorCode {
  InvalidInput,
  DimensionMismatch,
  NonHomogeneous,
  BudgetTooLarge,
  NotCharacteristic,
  Infeasible,
  NonIntegralChiH,
  NotStandard,
  NotSimpleType,
  OddExponent,
  ParityViolation,
  Inapplicable,
  NonIntegralIndex,
  NonIntegralLevel,
  NegativeIndex,
  Inadmissible,
  ZeroBasicClass,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by parity_vanishing when a polynomial that must vanish does not.
class ParityViolation : public Error {
 public:
  ParityViolation(int degree, const std::string& message);

  int degree() const noexcept { return degree_; }

 private:
  int degree_;
};

/// Raised by the document loader; carries every violated invariant.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> reasons);

  const std::vector<std::string>& reasons() const noexcept { return reasons_; }

 private:
  std::vector<std::string> reasons_;
};

}  // namespace scst
