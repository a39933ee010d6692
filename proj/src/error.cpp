#include "ecosense/error.hpp"

namespace ecosense {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::OutOfBoundsBox: return "OutOfBoundsBox";
    case ErrorCode::BadClassIndex: return "BadClassIndex";
    case ErrorCode::DegenerateBox: return "DegenerateBox";
    case ErrorCode::InvalidValue: return "InvalidValue";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::DegenerateNormalizer: return "DegenerateNormalizer";
    case ErrorCode::KTooLarge: return "KTooLarge";
    case ErrorCode::NotAProbabilityVector: return "NotAProbabilityVector";
    case ErrorCode::DegenerateSchedule: return "DegenerateSchedule";
    case ErrorCode::BadBlockIndex: return "BadBlockIndex";
    case ErrorCode::CatalogMismatch: return "CatalogMismatch";
    case ErrorCode::DivisionByZeroBaseline: return "DivisionByZeroBaseline";
    case ErrorCode::ZeroTotalEnergy: return "ZeroTotalEnergy";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::UnknownPreset: return "UnknownPreset";
    case ErrorCode::Unattainable: return "Unattainable";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {
std::string compose(ErrorCode code, const std::string& message, const std::string& field) {
  std::string out(to_string(code));
  if (!field.empty()) out += "(" + field + ")";
  out += ": " + message;
  return out;
}
}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::string field)
    : std::runtime_error(compose(code, message, field)), code_(code), field_(std::move(field)) {}

}  // namespace ecosense
