#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "twoenv/envelope.hpp"
#include "twoenv/montecarlo.hpp"
#include "twoenv/rational.hpp"

namespace twoenv::cli {

// One report per command invocation, carrying both renderings. The
// JSON form is stable-key-ordered and serializes every exact rational
// as a "p/q" string so nothing is lost to floating point.
struct ReportDocument {
  std::string command;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  std::vector<std::string> flags;
  std::string text;
  int exit_code = 0;

  nlohmann::ordered_json to_json() const;
};

ReportDocument cmd_analyze(const Rational& theta);
ReportDocument cmd_fallacy(const Rational& observed_x);
ReportDocument cmd_likelihood(const Rational& observed_x);
ReportDocument cmd_simulate(const SimConfig& config);

}  // namespace twoenv::cli
