#pragma once

#include <cstdint>

namespace ecosense::modelmath {

struct RefinementSchedule {
  double initial_temperature = 128.0;
  std::uint32_t epoch = 0;
};

/// Refinement temperature at a training epoch:
///
///   T_e = 0.5 ^ (e / -log2(0.0625 / T))
///
/// Evaluated exactly as written, so T_0 is 1 for every T and the value
/// halves every -log2(0.0625/T) epochs (11 for T = 128). Throws
/// DegenerateSchedule for T = 0.0625 and InvalidValue for T <= 0.
double temperature_at_epoch(const RefinementSchedule& s);

// Top-K selection count for background-suppression block 1..4.
std::uint32_t k_schedule(int block_index);

}  // namespace ecosense::modelmath
