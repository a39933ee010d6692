#include "ecosense/oracles/rng.hpp"

#include <cmath>
#include <limits>

#include "ecosense/error.hpp"

namespace ecosense::oracles {

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

SeededRng SeededRng::derive(std::initializer_list<std::uint64_t> tags) const {
  std::uint64_t s = mix64(seed_);
  for (auto t : tags) s = mix64(s ^ mix64(t));
  return SeededRng(s);
}

double SeededRng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t SeededRng::uniform_int(std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo) throw Error(ErrorCode::InvalidValue, "uniform_int: empty range");
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return engine_();
  const std::uint64_t n = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return lo + x % n;
}

std::uint64_t SeededRng::poisson(double mean) {
  if (!(mean >= 0.0) || mean > 30.0) {
    throw Error(ErrorCode::InvalidValue, "poisson mean must lie in [0, 30]");
  }
  if (mean == 0.0) return 0;
  const double limit = std::exp(-mean);
  std::uint64_t k = 0;
  double prod = uniform();
  while (prod > limit) {
    ++k;
    prod *= uniform();
  }
  return k;
}

std::size_t SeededRng::categorical(std::span<const double> weights) {
  double total = 0.0;
  std::size_t last_positive = weights.size();
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!(weights[i] >= 0.0)) throw Error(ErrorCode::InvalidValue, "categorical weight < 0");
    if (weights[i] > 0.0) last_positive = i;
    total += weights[i];
  }
  if (last_positive == weights.size()) throw Error(ErrorCode::InvalidValue, "categorical weights all zero");
  const double target = uniform() * total;
  double acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    if (target < acc) return i;
  }
  return last_positive;
}

}  // namespace ecosense::oracles
