#include "scst/errors.hpp"

namespace scst {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonHomogeneous: return "NonHomogeneous";
    case ErrorCode::BudgetTooLarge: return "BudgetTooLarge";
    case ErrorCode::NotCharacteristic: return "NotCharacteristic";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::NonIntegralChiH: return "NonIntegralChiH";
    case ErrorCode::NotStandard: return "NotStandard";
    case ErrorCode::NotSimpleType: return "NotSimpleType";
    case ErrorCode::OddExponent: return "OddExponent";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::Inapplicable: return "Inapplicable";
    case ErrorCode::NonIntegralIndex: return "NonIntegralIndex";
    case ErrorCode::NonIntegralLevel: return "NonIntegralLevel";
    case ErrorCode::NegativeIndex: return "NegativeIndex";
    case ErrorCode::Inadmissible: return "Inadmissible";
    case ErrorCode::ZeroBasicClass: return "ZeroBasicClass";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

ParityViolation::ParityViolation(int degree, const std::string& message)
    : Error(ErrorCode::ParityViolation, message), degree_(degree) {}

namespace {

std::string join_reasons(const std::vector<std::string>& reasons) {
  std::string out;
  for (const auto& r : reasons) {
    if (!out.empty()) out += "; ";
    out += r;
  }
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> reasons)
    : Error(ErrorCode::InvalidInput, join_reasons(reasons)), reasons_(std::move(reasons)) {}

}  // namespace scst
