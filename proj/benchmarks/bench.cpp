#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "twoenv/conditioning.hpp"
#include "twoenv/envelope.hpp"
#include "twoenv/montecarlo.hpp"
#include "twoenv/prob.hpp"
#include "twoenv/rational.hpp"

using namespace twoenv;

namespace {

// A space of n outcomes with masses i-indexed over a triangular total,
// plus a value vector with a handful of repeated levels so generated
// partitions stay nontrivial.
struct Fixture {
  SpacePtr space;
  RandVar x;
  RandVar y;

  explicit Fixture(std::size_t n)
      : space(build(n)),
        x(space, values(n, 7)),
        y(space, values(n, 13)) {}

  static SpacePtr build(std::size_t n) {
    std::vector<std::string> labels;
    std::vector<Rational> pmf;
    const auto total = static_cast<long long>(n * (n + 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back("w" + std::to_string(i));
      pmf.push_back(Rational(static_cast<long long>(i + 1)) / total);
    }
    return make_space(std::move(labels), std::move(pmf));
  }

  static std::vector<Rational> values(std::size_t n, std::size_t levels) {
    std::vector<Rational> out;
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(Rational(static_cast<long long>(i % levels)) / 3);
    }
    return out;
  }
};

void BM_rational_parse_format(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(format_rational(parse_rational("123456789/987654321")));
  }
}
BENCHMARK(BM_rational_parse_format);

void BM_expectation(benchmark::State& state) {
  const Fixture fix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(expectation(fix.x));
  }
}
BENCHMARK(BM_expectation)->Arg(8)->Arg(64)->Arg(512);

void BM_generated_partition(benchmark::State& state) {
  const Fixture fix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(generated_partition(fix.x).block_count());
  }
}
BENCHMARK(BM_generated_partition)->Arg(8)->Arg(64)->Arg(512);

void BM_cond_expectation(benchmark::State& state) {
  const Fixture fix(static_cast<std::size_t>(state.range(0)));
  const Partition sigma = generated_partition(fix.x);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cond_expectation(fix.y, sigma).block_value(0));
  }
}
BENCHMARK(BM_cond_expectation)->Arg(8)->Arg(64)->Arg(512);

void BM_envelope_analysis(benchmark::State& state) {
  const EnvelopeModel model(Rational(7) / 3);
  for (auto _ : state) {
    const EnvelopeSpace env = build_envelope_space(model);
    const CondExpectation ce = cond_expectation(env.y, generated_partition(env.x));
    benchmark::DoNotOptimize(iterated_expectation(ce));
  }
}
BENCHMARK(BM_envelope_analysis);

void BM_simulate(benchmark::State& state) {
  SimConfig config;
  config.theta = Rational(4);
  config.strategy = Strategy::AlwaysSwitch;
  config.trials = static_cast<std::uint64_t>(state.range(0));
  config.seed = 42;
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate(config).empirical_mean);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_simulate)->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 20);

}  // namespace

BENCHMARK_MAIN();
