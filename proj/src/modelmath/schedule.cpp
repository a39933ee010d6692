#include "ecosense/modelmath/schedule.hpp"

#include <array>
#include <cmath>
#include <string>

#include "ecosense/error.hpp"

namespace ecosense::modelmath {

double temperature_at_epoch(const RefinementSchedule& s) {
  const double t = s.initial_temperature;
  if (!(t > 0.0) || !std::isfinite(t)) throw Error(ErrorCode::InvalidValue, "initial temperature must be > 0");
  const double period = -std::log2(0.0625 / t);
  if (period == 0.0) throw Error(ErrorCode::DegenerateSchedule, "T = 0.0625 makes the decay period zero");
  return std::pow(0.5, static_cast<double>(s.epoch) / period);
}

std::uint32_t k_schedule(int block_index) {
  static constexpr std::array<std::uint32_t, 4> kValues{256, 128, 64, 32};
  if (block_index < 1 || block_index > 4) {
    throw Error(ErrorCode::BadBlockIndex, "block index " + std::to_string(block_index) + " not in 1..4");
  }
  return kValues[static_cast<std::size_t>(block_index - 1)];
}

}  // namespace ecosense::modelmath
