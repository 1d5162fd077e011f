// Acceptance gate: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "support/generators.hpp"
#include "support/subprocess.hpp"
#include "twoenv/conditioning.hpp"
#include "twoenv/envelope.hpp"
#include "twoenv/montecarlo.hpp"
#include "twoenv/prob.hpp"

using namespace twoenv;
using nlohmann::json;
using twoenv::testing::run_cli;
using twoenv::testing::TestRng;

namespace {

int failures = 0;

Rational r(long long p, long long q = 1) { return Rational(p) / q; }

std::vector<Rational> theta_set() { return {r(1), r(4), r(7, 3), r(1000000007)}; }

// Runs one criterion, enforcing its wall-clock budget (seconds; 0 means
// untimed), and prints the verdict line.
void criterion(int number, const std::string& label, double budget_s, bool (*check)(std::string&)) {
  std::string detail;
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = check(detail);
  } catch (const std::exception& e) {
    detail = std::string("threw: ") + e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (ok && budget_s > 0 && elapsed >= budget_s) {
    ok = false;
    detail = "over time budget";
  }
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << label << " ["
            << std::fixed << std::setprecision(2) << elapsed << "s";
  if (budget_s > 0) std::cout << " of " << std::setprecision(0) << budget_s << "s";
  std::cout << "]";
  if (!ok && !detail.empty()) std::cout << " -- " << detail;
  std::cout << "\n";
  if (!ok) ++failures;
}

bool check_expectations(std::string& detail) {
  for (const Rational& theta : theta_set()) {
    const EnvelopeSpace env = build_envelope_space(EnvelopeModel(theta));
    const Rational want = r(3, 2) * theta;
    if (expectation(env.x) != want || expectation(env.y) != want) {
      detail = "E mismatch at theta=" + format_rational(theta);
      return false;
    }
  }
  return true;
}

bool check_conditional(std::string& detail) {
  for (const Rational& theta : theta_set()) {
    const EnvelopeSpace env = build_envelope_space(EnvelopeModel(theta));
    const CondExpectation ce = cond_expectation(env.y, generated_partition(env.x));
    if (ce.partition().block_count() != 2 || ce.block_value(0) != 2 * theta ||
        ce.block_value(1) != theta) {
      detail = "atom values wrong at theta=" + format_rational(theta);
      return false;
    }
    if (iterated_expectation(ce) != r(3, 2) * theta) {
      detail = "iterated expectation wrong at theta=" + format_rational(theta);
      return false;
    }
  }
  return true;
}

bool check_fallacy(std::string& detail) {
  TestRng rng(303);
  for (int rep = 0; rep < 100; ++rep) {
    const Rational x = rng.positive_rational();
    const Rational direct = fallacious_expectation(x);
    const Rational substituted = fallacious_cond_expectation(x);
    if (direct != r(5, 4) * x || substituted != direct) {
      detail = "5x/4 broken at x=" + format_rational(x);
      return false;
    }
    if (direct == r(3, 2) * x || direct == r(3, 4) * x) {
      detail = "fallacious value collides with a correct one at x=" + format_rational(x);
      return false;
    }
  }
  return true;
}

bool check_likelihood(std::string& detail) {
  TestRng rng(404);
  for (int rep = 0; rep < 100; ++rep) {
    const Rational x = rng.positive_rational();
    if (likelihood(x, x) != r(1, 2) || likelihood(x, x / 2) != r(1, 2)) {
      detail = "consistent candidates not 1/2 at x=" + format_rational(x);
      return false;
    }
    Rational t = rng.positive_rational();
    if (t == x || 2 * t == x) t += x;
    if (likelihood(x, t) != 0) {
      detail = "nonzero off the support at x=" + format_rational(x);
      return false;
    }
  }
  return true;
}

bool check_cases(std::string& detail) {
  TestRng rng(505);
  std::vector<Rational> thetas = theta_set();
  for (int rep = 0; rep < 20; ++rep) thetas.push_back(rng.positive_rational());
  for (const Rational& theta : thetas) {
    const EnvelopeModel model(theta);
    const CaseAnalysis low = case_analysis(model, XRelation::XisTheta);
    const CaseAnalysis high = case_analysis(model, XRelation::XisTwoTheta);
    if (low.conditional_expected_y != r(3, 2) * low.observed_x) {
      detail = "x=theta case wrong at theta=" + format_rational(theta);
      return false;
    }
    if (high.conditional_expected_y != r(3, 4) * high.observed_x) {
      detail = "x=2theta case wrong at theta=" + format_rational(theta);
      return false;
    }
    if (!low.recommend_switch || high.recommend_switch) {
      detail = "switch recommendation wrong at theta=" + format_rational(theta);
      return false;
    }
  }
  return true;
}

bool check_tower_property(std::string& detail) {
  TestRng rng(606);
  for (int rep = 0; rep < 1000; ++rep) {
    const SpacePtr sp = rng.space();
    const RandVar y = rng.rand_var(sp);
    const Partition part = rng.partition(sp);
    if (iterated_expectation(cond_expectation(y, part)) != expectation(y)) {
      detail = "tower law failed on replication " + std::to_string(rep);
      return false;
    }
  }
  return true;
}

bool check_sigma_invariance(std::string& detail) {
  TestRng rng(707);
  for (int rep = 0; rep < 200; ++rep) {
    const SpacePtr sp = rng.space();
    const RandVar x = rng.rand_var(sp);
    const RandVar y = rng.rand_var(sp);

    RandVar hx = x;
    if (rep % 3 == 0) {
      hx = injective_transform(x, [](const Rational& v) { return v * v * v; });
    } else {
      const Rational a = rng.coin() ? rng.positive_rational() : -rng.positive_rational();
      const Rational b = rng.any_rational();
      hx = injective_transform(x, [&](const Rational& v) { return a * v + b; });
    }

    if (!(generated_partition(hx) == generated_partition(x))) {
      detail = "generated sigma-fields differ on replication " + std::to_string(rep);
      return false;
    }
    const CondExpectation through_x = cond_expectation(y, generated_partition(x));
    const CondExpectation through_hx = cond_expectation(y, generated_partition(hx));
    if (!(through_x.as_rand_var() == through_hx.as_rand_var())) {
      detail = "conditional expectations differ on replication " + std::to_string(rep);
      return false;
    }
  }
  return true;
}

bool check_monte_carlo(std::string& detail) {
  for (const std::string strategy : {"keep", "always-switch"}) {
    const auto res = run_cli("simulate --theta 4 --strategy " + strategy +
                             " --trials 1000000 --seed 42 --format json");
    if (res.exit_code != 0) {
      detail = strategy + " exited " + std::to_string(res.exit_code);
      return false;
    }
    const json doc = json::parse(res.out);
    if (doc["results"]["exact_mean"] != "6") {
      detail = strategy + " exact mean not 6";
      return false;
    }
    const double z = doc["results"]["z_score"].get<double>();
    if (!(std::abs(z) <= 4.0)) {
      detail = strategy + " |z| = " + std::to_string(std::abs(z));
      return false;
    }
  }

  const auto oracle = run_cli(
      "simulate --theta 4 --strategy oracle-threshold --trials 1000000 --seed 42 --format json");
  if (oracle.exit_code != 0) {
    detail = "oracle exited " + std::to_string(oracle.exit_code);
    return false;
  }
  if (json::parse(oracle.out)["results"]["empirical_mean"].get<double>() != 8.0) {
    detail = "oracle mean not exactly 8";
    return false;
  }

  const std::uint64_t trials = 100000;
  const JointFrequencies jf = simulate_conditional_frequencies(r(4), trials, 42);
  const double bound = 4.0 * std::sqrt(0.25 / static_cast<double>(trials));
  if (jf.counts[0][0] != 0 || jf.counts[1][1] != 0) {
    detail = "impossible cell sampled";
    return false;
  }
  if (std::abs(jf.frequency(0, 1) - 0.5) > bound || std::abs(jf.frequency(1, 0) - 0.5) > bound) {
    detail = "joint cell off by more than " + std::to_string(bound);
    return false;
  }
  return true;
}

bool check_determinism(std::string& detail) {
  const std::vector<std::string> invocations = {
      "simulate --theta 4 --strategy keep --trials 1000000 --seed 42 --format json",
      "simulate --theta 7/3 --strategy always-switch --trials 54321 --seed 5 --format json",
      "simulate --theta 19/7 --strategy oracle-threshold --trials 1 --seed 0 --format json",
  };
  for (const std::string& args : invocations) {
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    if (first.out.empty() || first.out != second.out) {
      detail = "outputs differ for: " + args;
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  std::cout << "two-envelope acceptance suite\n";

  criterion(1, "exact E(X) = E(Y) = 3theta/2 over the theta set", 1.0, check_expectations);
  criterion(2, "E(Y|sigma(X)) atoms (2theta, theta), iterated value 3theta/2", 1.0,
            check_conditional);
  criterion(3, "fallacious reasoning reproduces 5x/4 and matches no correct value", 1.0,
            check_fallacy);
  criterion(4, "likelihood 1/2 on both consistent candidates, 0 elsewhere", 1.0,
            check_likelihood);
  criterion(5, "case analysis gives (3/2)x and (3/4)x through conditioning", 0.0, check_cases);
  criterion(6, "tower law over 1000 random spaces and partitions", 30.0, check_tower_property);
  criterion(7, "sigma-field invariance over 200 injective transforms", 0.0,
            check_sigma_invariance);
  criterion(8, "simulation z-gate, oracle payoff, joint frequencies", 10.0, check_monte_carlo);
  criterion(9, "byte-identical seeded simulation output", 0.0, check_determinism);

  if (failures == 0) {
    std::cout << "all 9 criteria passed\n";
    return 0;
  }
  std::cout << failures << " of 9 criteria failed\n";
  return 1;
}
