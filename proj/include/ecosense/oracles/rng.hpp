#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>

namespace ecosense::oracles {

// SplitMix64 finalizer; used to derive independent substream seeds.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Deterministic random stream.
///
/// The engine is std::mt19937_64 seeded with a single 64-bit value; its
/// output sequence is fixed by the C++ standard. All derived quantities are
/// computed here rather than through <random> distributions, whose outputs
/// are implementation-defined:
///   uniform()      top 53 bits of one engine word, scaled to [0,1)
///   bernoulli(p)   uniform() < p
///   uniform_int    rejection sampling on engine words
///   poisson(mean)  Knuth's product-of-uniforms method
///   categorical    inverse CDF with one uniform()
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  // Independent stream keyed by this stream's seed and the tags.
  SeededRng derive(std::initializer_list<std::uint64_t> tags) const;

  std::uint64_t next_u64() { return engine_(); }
  double uniform();
  bool bernoulli(double p) { return uniform() < p; }
  // Inclusive range [lo, hi].
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi);
  std::uint64_t poisson(double mean);
  std::size_t categorical(std::span<const double> weights);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace ecosense::oracles
