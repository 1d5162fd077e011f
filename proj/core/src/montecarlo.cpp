#include "twoenv/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

namespace twoenv {

namespace {

struct ChunkAccum {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::uint64_t switches = 0;
  double min_payoff = std::numeric_limits<double>::infinity();
  double max_payoff = -std::numeric_limits<double>::infinity();
};

ChunkAccum run_payoff_chunk(std::uint64_t chunk_seed, std::uint64_t count, double theta,
                            Strategy strategy) {
  ChunkAccum acc;
  SplitMix64 engine(chunk_seed);
  const double low = theta;
  const double high = 2.0 * theta;
  for (std::uint64_t t = 0; t < count; ++t) {
    const bool chosen_is_theta = (engine.next() & 1u) == 0;
    const double x = chosen_is_theta ? low : high;
    const double y = chosen_is_theta ? high : low;
    double payoff = x;
    bool switched = false;
    switch (strategy) {
      case Strategy::Keep:
        break;
      case Strategy::AlwaysSwitch:
        payoff = y;
        switched = true;
        break;
      case Strategy::OracleThreshold:
        switched = chosen_is_theta;
        payoff = switched ? y : x;
        break;
    }
    acc.sum += payoff;
    acc.sum_sq += payoff * payoff;
    acc.switches += switched ? 1 : 0;
    acc.min_payoff = std::min(acc.min_payoff, payoff);
    acc.max_payoff = std::max(acc.max_payoff, payoff);
  }
  return acc;
}

std::vector<std::uint64_t> chunk_seeds(std::uint64_t master_seed, std::uint64_t chunk_count) {
  SplitMix64 master(master_seed);
  std::vector<std::uint64_t> seeds(chunk_count);
  for (std::uint64_t c = 0; c < chunk_count; ++c) seeds[c] = master.next();
  return seeds;
}

std::uint64_t chunk_length(std::uint64_t chunk, std::uint64_t chunk_count,
                           std::uint64_t trials) {
  if (chunk + 1 < chunk_count) return kSimChunkTrials;
  return trials - (chunk_count - 1) * kSimChunkTrials;
}

// Runs fn(chunk_index) for every chunk, possibly on several workers.
// Results are written into a per-chunk slot, so the later reduction in
// chunk order is unaffected by scheduling.
template <typename Fn>
void for_each_chunk(std::uint64_t chunk_count, unsigned worker_threads, const Fn& fn) {
  if (worker_threads <= 1 || chunk_count <= 1) {
    for (std::uint64_t c = 0; c < chunk_count; ++c) fn(c);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunk_count) break;
      fn(c);
    }
  };
  const unsigned n = static_cast<unsigned>(
      std::min<std::uint64_t>(worker_threads, chunk_count));
  std::vector<std::jthread> workers;
  workers.reserve(n);
  for (unsigned i = 0; i < n; ++i) workers.emplace_back(work);
}

}  // namespace

SimReport simulate(const SimConfig& config, unsigned worker_threads) {
  if (config.trials == 0) throw ZeroTrials("simulation needs at least one trial");
  const EnvelopeModel model(config.theta);

  const std::uint64_t chunk_count = (config.trials + kSimChunkTrials - 1) / kSimChunkTrials;
  const auto seeds = chunk_seeds(config.seed, chunk_count);
  const double theta = to_double(config.theta);

  std::vector<ChunkAccum> partials(chunk_count);
  for_each_chunk(chunk_count, worker_threads, [&](std::uint64_t c) {
    partials[c] = run_payoff_chunk(seeds[c], chunk_length(c, chunk_count, config.trials),
                                   theta, config.strategy);
  });

  ChunkAccum total;
  for (const ChunkAccum& part : partials) {
    total.sum += part.sum;
    total.sum_sq += part.sum_sq;
    total.switches += part.switches;
    total.min_payoff = std::min(total.min_payoff, part.min_payoff);
    total.max_payoff = std::max(total.max_payoff, part.max_payoff);
  }

  SimReport report;
  report.trials = config.trials;
  report.exact_mean = strategy_value(model, config.strategy);
  report.switch_fraction =
      static_cast<double>(total.switches) / static_cast<double>(config.trials);

  const double n = static_cast<double>(config.trials);
  if (total.min_payoff == total.max_payoff) {
    // A constant sample: the mean is that constant and the variance is
    // zero. Summation rounding must not manufacture a spurious error.
    report.empirical_mean = total.min_payoff;
    report.std_error = 0.0;
  } else {
    report.empirical_mean = total.sum / n;
    const double variance = std::max(
        0.0, (total.sum_sq - n * report.empirical_mean * report.empirical_mean) / (n - 1.0));
    report.std_error = std::sqrt(variance / n);
  }

  if (config.trials >= 2) {
    const double exact = to_double(report.exact_mean);
    if (report.std_error > 0.0) {
      report.z_score = (report.empirical_mean - exact) / report.std_error;
    } else if (report.empirical_mean == exact) {
      report.z_score = 0.0;
    } else {
      report.z_score = std::copysign(std::numeric_limits<double>::infinity(),
                                     report.empirical_mean - exact);
    }
  }
  return report;
}

double JointFrequencies::frequency(std::size_t x_index, std::size_t y_index) const {
  return static_cast<double>(counts.at(x_index).at(y_index)) / static_cast<double>(trials);
}

std::optional<double> JointFrequencies::cond_freq_y_given_x(std::size_t x_index,
                                                            std::size_t y_index) const {
  const std::uint64_t row = counts.at(x_index)[0] + counts.at(x_index)[1];
  if (row == 0) return std::nullopt;
  return static_cast<double>(counts.at(x_index).at(y_index)) / static_cast<double>(row);
}

JointFrequencies simulate_conditional_frequencies(const Rational& theta, std::uint64_t trials,
                                                  std::uint64_t seed,
                                                  unsigned worker_threads) {
  if (trials == 0) throw ZeroTrials("simulation needs at least one trial");
  const EnvelopeModel model(theta);  // validates theta > 0
  (void)model;

  const std::uint64_t chunk_count = (trials + kSimChunkTrials - 1) / kSimChunkTrials;
  const auto seeds = chunk_seeds(seed, chunk_count);

  // Only the X=theta count is random; the sampler can never produce a
  // diagonal cell, so everything else follows from it.
  std::vector<std::uint64_t> theta_counts(chunk_count, 0);
  for_each_chunk(chunk_count, worker_threads, [&](std::uint64_t c) {
    SplitMix64 engine(seeds[c]);
    const std::uint64_t len = chunk_length(c, chunk_count, trials);
    std::uint64_t x_theta = 0;
    for (std::uint64_t t = 0; t < len; ++t) {
      x_theta += ((engine.next() & 1u) == 0) ? 1 : 0;
    }
    theta_counts[c] = x_theta;
  });

  std::uint64_t x_theta_total = 0;
  for (std::uint64_t c = 0; c < chunk_count; ++c) x_theta_total += theta_counts[c];

  JointFrequencies out;
  out.trials = trials;
  out.counts[0][1] = x_theta_total;           // X=theta,   Y=2*theta
  out.counts[1][0] = trials - x_theta_total;  // X=2*theta, Y=theta
  return out;
}

}  // namespace twoenv
