#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "twoenv/errors.hpp"

namespace {

using twoenv::Rational;
using twoenv::Strategy;

Strategy parse_strategy(const std::string& name) {
  if (name == "keep") return Strategy::Keep;
  if (name == "always-switch") return Strategy::AlwaysSwitch;
  if (name == "oracle-threshold") return Strategy::OracleThreshold;
  throw twoenv::ParseError("unknown strategy: " + name);
}

void emit(const twoenv::cli::ReportDocument& doc, const std::string& format) {
  if (format == "json")
    std::cout << doc.to_json().dump(2) << "\n";
  else
    std::cout << doc.text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis, fallacy reconstruction, likelihoods, and seeded simulation of the two-envelope game"};
  app.require_subcommand(1);

  std::string theta_str;
  std::string x_str;
  std::string strategy_str = "keep";
  std::string format = "text";
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;

  const auto format_check = CLI::IsMember({"text", "json"});

  CLI::App* analyze = app.add_subcommand("analyze", "Exact joint, marginal, and conditional analysis for a known theta");
  analyze->add_option("--theta", theta_str, "Amount in the smaller envelope, a positive rational p/q")->required();
  analyze->add_option("--format", format, "Report format")->check(format_check);

  CLI::App* fallacy = app.add_subcommand("fallacy", "Reproduce the always-switch reasoning and mark it fallacious");
  fallacy->add_option("--x", x_str, "Observed amount, a positive rational p/q")->required();
  fallacy->add_option("--format", format, "Report format")->check(format_check);

  CLI::App* likelihood = app.add_subcommand("likelihood", "Likelihood of each theta consistent with an observed amount");
  likelihood->add_option("--x", x_str, "Observed amount, a positive rational p/q")->required();
  likelihood->add_option("--format", format, "Report format")->check(format_check);

  CLI::App* simulate = app.add_subcommand("simulate", "Seeded Monte Carlo check of a strategy against its exact value");
  simulate->add_option("--theta", theta_str, "Amount in the smaller envelope, a positive rational p/q")->required();
  simulate->add_option("--strategy", strategy_str, "Playing strategy")
      ->check(CLI::IsMember({"keep", "always-switch", "oracle-threshold"}));
  simulate->add_option("--trials", trials, "Number of simulated games")->required();
  simulate->add_option("--seed", seed, "PRNG seed");
  simulate->add_option("--format", format, "Report format")->check(format_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    twoenv::cli::ReportDocument doc;
    if (analyze->parsed()) {
      doc = twoenv::cli::cmd_analyze(twoenv::parse_rational(theta_str));
    } else if (fallacy->parsed()) {
      doc = twoenv::cli::cmd_fallacy(twoenv::parse_rational(x_str));
    } else if (likelihood->parsed()) {
      doc = twoenv::cli::cmd_likelihood(twoenv::parse_rational(x_str));
    } else {
      twoenv::SimConfig config;
      config.theta = twoenv::parse_rational(theta_str);
      config.strategy = parse_strategy(strategy_str);
      config.trials = trials;
      config.seed = seed;
      doc = twoenv::cli::cmd_simulate(config);
    }
    emit(doc, format);
    return doc.exit_code;
  } catch (const twoenv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (...) {
    std::cerr << "error: unknown failure\n";
    return 2;
  }
}
