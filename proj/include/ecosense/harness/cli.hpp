#pragma once

#include <iosfwd>

namespace ecosense::harness {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitUnattainable = 3;
inline constexpr int kExitIo = 4;

// Entry point of the `ecosense` tool. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ecosense::harness
