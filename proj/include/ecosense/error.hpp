#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ecosense {

enum class ErrorCode {
  // domain
  OutOfBoundsBox,
  BadClassIndex,
  DegenerateBox,
  InvalidValue,
  // modelmath
  ShapeMismatch,
  DegenerateNormalizer,
  KTooLarge,
  NotAProbabilityVector,
  DegenerateSchedule,
  BadBlockIndex,
  // pipeline
  CatalogMismatch,
  // accounting
  DivisionByZeroBaseline,
  ZeroTotalEnergy,
  // harness
  ParseError,
  ValidationError,
  UnknownPreset,
  Unattainable,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Single exception type for the library. `field()` carries a dotted config
// path (e.g. "routing.tau") when the error originates from configuration.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string field = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string& field() const noexcept { return field_; }

 private:
  ErrorCode code_;
  std::string field_;
};

}  // namespace ecosense
