#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "twoenv/envelope.hpp"
#include "twoenv/rational.hpp"

namespace twoenv {

// SplitMix64 (Vigna's public-domain generator). The stream is part of
// the reproducibility contract, so the algorithm is pinned here rather
// than delegated to an engine that may vary between platforms:
//   state += 0x9e3779b97f4a7c15
//   z = state
//   z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
//   z = (z ^ (z >> 27)) * 0x94d049bb133111eb
//   return z ^ (z >> 31)
// All arithmetic is modulo 2^64. Given seed 0 the first outputs are
// 0xe220a8397b1dcdaf, 0x6e789e6aa1b965f4, 0x06c45d188009454f.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

struct SimConfig {
  Rational theta;
  Strategy strategy = Strategy::Keep;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

// Empirical result plus the exact value it is checked against. The
// z-score is absent when fewer than two trials make a standard error
// meaningless; it is +/-infinity when the sample shows zero variance
// around the wrong mean.
struct SimReport {
  std::uint64_t trials = 0;
  double empirical_mean = 0.0;
  Rational exact_mean;
  double std_error = 0.0;
  std::optional<double> z_score;
  double switch_fraction = 0.0;
};

// Deterministic simulation scheme, identical across runs and across
// worker counts; a reimplementation must follow it exactly:
//   - trials are processed in fixed chunks of 65536 (last chunk short);
//   - chunk c >= 0 runs its own SplitMix64 engine seeded with the
//     (c+1)-th output of a master SplitMix64 seeded with config.seed;
//   - each trial draws one engine output u; coin = u & 1; coin 0 means
//     the chosen envelope holds theta (the other 2*theta), coin 1 the
//     reverse;
//   - winnings accumulate in double precision (theta converted once);
//   - per-chunk partials are combined in increasing chunk order.
inline constexpr std::uint64_t kSimChunkTrials = 1u << 16;

// Runs config.trials games and compares the empirical mean against the
// exact strategy value. Sampling uses only theta and coin flips; the
// exact side enters the report only for comparison. Throws ZeroTrials.
SimReport simulate(const SimConfig& config, unsigned worker_threads = 1);

// Empirical counts of the four joint value cells. Index 0 stands for
// the amount theta and index 1 for 2*theta, so counts[0][1] is the
// number of trials with X=theta, Y=2*theta. The diagonal cells can
// never occur and stay exactly zero.
struct JointFrequencies {
  std::uint64_t trials = 0;
  std::array<std::array<std::uint64_t, 2>, 2> counts{};

  double frequency(std::size_t x_index, std::size_t y_index) const;
  // count[x][y] / row count; absent when the row never occurred.
  std::optional<double> cond_freq_y_given_x(std::size_t x_index, std::size_t y_index) const;
};

// Samples the joint cells with the same chunked scheme as simulate.
// Throws ZeroTrials; theta must be positive.
JointFrequencies simulate_conditional_frequencies(const Rational& theta, std::uint64_t trials,
                                                  std::uint64_t seed,
                                                  unsigned worker_threads = 1);

}  // namespace twoenv
