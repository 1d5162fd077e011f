#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <iomanip>
#include <sstream>
#include <utility>

#include "twoenv/conditioning.hpp"
#include "twoenv/prob.hpp"

namespace twoenv::cli {
namespace {

using nlohmann::ordered_json;

std::string rat(const Rational& value) { return format_rational(value); }

std::string dec(double value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

// Rational followed by its decimal reading when they differ, e.g.
// "7/2 (3.5)" but plain "6" for integers.
std::string rat_dec(const Rational& value) {
  if (boost::multiprecision::denominator(value) == 1) return rat(value);
  return rat(value) + " (" + dec(to_double(value)) + ")";
}

// First column left-aligned, the rest right-aligned, two-space gutter.
std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::size_t cols = 0;
  for (const auto& row : rows) cols = std::max(cols, row.size());
  std::vector<std::size_t> width(cols, 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());

  std::ostringstream out;
  for (const auto& row : rows) {
    out << " ";
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << "  ";
      const bool last = c + 1 == row.size();
      if (c == 0 && !last)
        out << std::left << std::setw(static_cast<int>(width[c])) << row[c];
      else if (last && c != 0)
        out << std::right << std::setw(static_cast<int>(width[c])) << row[c];
      else if (last)
        out << row[c];
      else
        out << std::right << std::setw(static_cast<int>(width[c])) << row[c];
    }
    out << "\n";
  }
  return out.str();
}

ordered_json pmf_json(const Pmf& pmf) {
  ordered_json support = ordered_json::array();
  ordered_json masses = ordered_json::array();
  for (std::size_t k = 0; k < pmf.size(); ++k) {
    support.push_back(rat(pmf.support(k)));
    masses.push_back(rat(pmf.mass(k)));
  }
  return ordered_json{{"support", std::move(support)}, {"masses", std::move(masses)}};
}

}  // namespace

ordered_json ReportDocument::to_json() const {
  ordered_json doc;
  doc["schema_version"] = 1;
  doc["command"] = command;
  doc["inputs"] = inputs;
  doc["results"] = results;
  doc["flags"] = flags;
  return doc;
}

ReportDocument cmd_analyze(const Rational& theta) {
  EnvelopeModel model(theta);
  EnvelopeSpace env = build_envelope_space(model);

  const Pmf fx = marginal_pmf(env.x);
  const Pmf fy = marginal_pmf(env.y);
  const Rational e_x = expectation(env.x);
  const Rational e_y = expectation(env.y);
  const bool independent = are_independent(env.x, env.y);

  // Full joint table with both axes in ascending value order and zero
  // cells included: the zeros are what make X and Y dependent.
  std::vector<Rational> x_vals, y_vals;
  for (std::size_t r = 0; r < fx.size(); ++r) x_vals.push_back(fx.support(r));
  for (std::size_t c = 0; c < fy.size(); ++c) y_vals.push_back(fy.support(c));
  std::sort(x_vals.begin(), x_vals.end());
  std::sort(y_vals.begin(), y_vals.end());
  std::vector<std::vector<Rational>> joint(x_vals.size(), std::vector<Rational>(y_vals.size(), Rational(0)));
  for (std::size_t i = 0; i < env.space->size(); ++i) {
    for (std::size_t r = 0; r < x_vals.size(); ++r)
      for (std::size_t c = 0; c < y_vals.size(); ++c)
        if (env.x.value(i) == x_vals[r] && env.y.value(i) == y_vals[c])
          joint[r][c] += env.space->prob(i);
  }

  const Partition sigma_x = generated_partition(env.x);
  const CondExpectation ce = cond_expectation(env.y, sigma_x);
  const Rational iterated = iterated_expectation(ce);
  const bool tower_holds = iterated == e_y;

  const CaseAnalysis case_low = case_analysis(model, XRelation::XisTheta);
  const CaseAnalysis case_high = case_analysis(model, XRelation::XisTwoTheta);

  ReportDocument doc;
  doc.command = "analyze";
  doc.inputs["theta"] = rat(theta);

  ordered_json cells = ordered_json::array();
  for (std::size_t r = 0; r < x_vals.size(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < y_vals.size(); ++c) row.push_back(rat(joint[r][c]));
    cells.push_back(std::move(row));
  }
  ordered_json x_support = ordered_json::array();
  for (const Rational& v : x_vals) x_support.push_back(rat(v));
  ordered_json y_support = ordered_json::array();
  for (const Rational& v : y_vals) y_support.push_back(rat(v));
  doc.results["joint"] = ordered_json{{"x_support", std::move(x_support)},
                                      {"y_support", std::move(y_support)},
                                      {"cells", std::move(cells)}};
  doc.results["marginal_x"] = pmf_json(fx);
  doc.results["marginal_y"] = pmf_json(fy);
  doc.results["E_X"] = rat(e_x);
  doc.results["E_Y"] = rat(e_y);
  doc.results["independent"] = independent;

  ordered_json cond_values = ordered_json::array();
  ordered_json cond_blocks = ordered_json::array();
  for (std::size_t b = 0; b < sigma_x.block_count(); ++b) {
    cond_values.push_back(rat(ce.block_value(b)));
    const Rational x_on_block = env.x.value(sigma_x.block(b).front());
    cond_blocks.push_back(ordered_json{{"x", rat(x_on_block)},
                                       {"mass", rat(sigma_x.block_mass(b))},
                                       {"E_Y_given_block", rat(ce.block_value(b))}});
  }
  doc.results["cond_E_Y"] = std::move(cond_values);
  doc.results["cond_blocks"] = std::move(cond_blocks);
  doc.results["iterated_E_Y"] = rat(iterated);
  doc.results["tower_law_holds"] = tower_holds;

  ordered_json cases = ordered_json::array();
  for (const CaseAnalysis* cs : {&case_low, &case_high}) {
    cases.push_back(ordered_json{{"relation", std::string(relation_name(cs->relation))},
                                 {"observed_x", rat(cs->observed_x)},
                                 {"expected_other", rat(cs->conditional_expected_y)},
                                 {"recommend_switch", cs->recommend_switch}});
  }
  doc.results["cases"] = std::move(cases);

  std::ostringstream text;
  text << "Two-envelope analysis, theta = " << rat_dec(theta) << "\n\n";
  text << "Joint distribution of X (amount seen) and Y (other envelope):\n";
  std::vector<std::vector<std::string>> rows;
  {
    std::vector<std::string> head{""};
    for (const Rational& v : y_vals) head.push_back("Y=" + rat(v));
    head.push_back("f(x)");
    rows.push_back(std::move(head));
    for (std::size_t r = 0; r < x_vals.size(); ++r) {
      std::vector<std::string> row{"X=" + rat(x_vals[r])};
      Rational row_sum(0);
      for (std::size_t c = 0; c < y_vals.size(); ++c) {
        row.push_back(rat(joint[r][c]));
        row_sum += joint[r][c];
      }
      row.push_back(rat(row_sum));
      rows.push_back(std::move(row));
    }
    std::vector<std::string> foot{"f(y)"};
    for (const Rational& v : y_vals) foot.push_back(rat(fy.mass_at(v)));
    foot.push_back("1");
    rows.push_back(std::move(foot));
  }
  text << render_table(rows) << "\n";
  text << "E[X] = " << rat_dec(e_x) << "\n";
  text << "E[Y] = " << rat_dec(e_y) << "\n";
  if (independent) {
    text << "X and Y are independent.\n";
  } else {
    text << "X and Y are dependent: the zero cells break f(x,y) = f(x) f(y).\n";
  }
  text << "\nConditional expectation of Y given sigma(X):\n";
  for (std::size_t b = 0; b < sigma_x.block_count(); ++b) {
    const Rational x_on_block = env.x.value(sigma_x.block(b).front());
    text << "  E[Y | X=" << rat(x_on_block) << "] = " << rat(ce.block_value(b))
         << "   with P(X=" << rat(x_on_block) << ") = " << rat(sigma_x.block_mass(b)) << "\n";
  }
  text << "Tower law: ";
  for (std::size_t b = 0; b < sigma_x.block_count(); ++b) {
    if (b > 0) text << " + ";
    text << "(" << rat(sigma_x.block_mass(b)) << ")(" << rat(ce.block_value(b)) << ")";
  }
  text << " = " << rat(iterated) << (tower_holds ? " = E[Y]  -> ok" : " != E[Y]  -> VIOLATED") << "\n";
  text << "\nCase analysis for an observer holding the amount x:\n";
  for (const CaseAnalysis* cs : {&case_low, &case_high}) {
    const bool low = cs->relation == XRelation::XisTheta;
    text << "  " << std::left << std::setw(9) << relation_name(cs->relation) << " (x = "
         << rat(cs->observed_x) << "): E[Y] = " << (low ? "(3/2)x" : "(3/4)x") << " = "
         << rat_dec(cs->conditional_expected_y) << "  -> "
         << (cs->recommend_switch ? "switch" : "keep") << "\n";
  }
  doc.text = text.str();
  return doc;
}

ReportDocument cmd_fallacy(const Rational& observed_x) {
  const Rational e_dagger = fallacious_expectation(observed_x);
  const Rational e_dagger_cond = fallacious_cond_expectation(observed_x);
  const Pmf induced = induced_theta_distribution(observed_x);

  // The two theta values consistent with the observation, with the
  // correct (non-fallacious) expectation of the other envelope under
  // each.
  const Rational theta_high = observed_x;
  const Rational theta_low = observed_x / 2;
  const Rational correct_high = strategy_value(EnvelopeModel(theta_high), Strategy::Keep);
  const Rational correct_low = strategy_value(EnvelopeModel(theta_low), Strategy::Keep);

  ReportDocument doc;
  doc.command = "fallacy";
  doc.inputs["x"] = rat(observed_x);
  doc.results["observed_x"] = rat(observed_x);
  doc.results["E_dagger"] = rat(e_dagger);
  doc.results["E_dagger_cond"] = rat(e_dagger_cond);
  doc.results["cond_matches_direct"] = (e_dagger == e_dagger_cond);
  ordered_json induced_map = ordered_json::object();
  for (std::size_t k = 0; k < induced.size(); ++k)
    induced_map[rat(induced.support(k))] = rat(induced.mass(k));
  doc.results["induced_theta_pmf"] = std::move(induced_map);
  doc.results["correct_E_Y"] = ordered_json{{"theta=" + rat(theta_high), rat(correct_high)},
                                            {"theta=" + rat(theta_low), rat(correct_low)}};
  doc.flags.push_back("FALLACIOUS");

  std::ostringstream text;
  text << "Always-switch reasoning for the observed amount x = " << rat_dec(observed_x)
       << "   [FALLACIOUS]\n\n";
  text << "Claimed expectation of the other envelope:\n";
  text << "  (x/2)(1/2) + (2x)(1/2) = (5/4)x = " << rat_dec(e_dagger) << "\n\n";
  text << "Induced distribution for theta (the pmf of X relabeled as a pmf of theta):\n";
  for (std::size_t k = 0; k < induced.size(); ++k)
    text << "  P(theta = " << rat(induced.support(k)) << ") = " << rat(induced.mass(k)) << "\n";
  text << "Theta is an unknown constant, not a random variable; relabeling the\n"
          "distribution of X as a distribution of theta is the step that\n"
          "manufactures the paradox.\n\n";
  text << "Conditional expectation with the induced distribution substituted:\n";
  text << "  branch theta = x:   other envelope pays 2x  = " << rat_dec(2 * observed_x) << "\n";
  text << "  branch theta = x/2: other envelope pays x/2 = " << rat_dec(observed_x / 2) << "\n";
  text << "  average = " << rat_dec(e_dagger_cond) << "  (the same fallacious value)\n\n";
  text << "Correct expectation of the other envelope for each consistent theta:\n";
  text << "  theta = " << rat(theta_high) << ": E[Y] = " << rat_dec(correct_high) << "\n";
  text << "  theta = " << rat(theta_low) << ": E[Y] = " << rat_dec(correct_low) << "\n";
  text << "Neither equals the claimed " << rat_dec(e_dagger) << ".\n";
  doc.text = text.str();
  return doc;
}

ReportDocument cmd_likelihood(const Rational& observed_x) {
  const Rational cand_high = observed_x;
  const Rational cand_low = observed_x / 2;
  const Rational l_high = likelihood(observed_x, cand_high);
  const Rational l_low = likelihood(observed_x, cand_low);

  ReportDocument doc;
  doc.command = "likelihood";
  doc.inputs["x"] = rat(observed_x);
  doc.results["observed_x"] = rat(observed_x);
  doc.results["likelihoods"] = ordered_json{{"theta=" + rat(cand_high), rat(l_high)},
                                            {"theta=" + rat(cand_low), rat(l_low)}};
  doc.results["elsewhere"] = "0";

  std::ostringstream text;
  text << "Likelihood of theta given the observed amount x = " << rat_dec(observed_x) << "\n";
  text << "  L(theta = " << rat(cand_high) << ") = " << rat(l_high) << "\n";
  text << "  L(theta = " << rat(cand_low) << ") = " << rat(l_low) << "\n";
  text << "  L(theta = t) = 0 for every other t\n";
  text << "Both consistent values of theta are equally likely; the observation\n"
          "carries no information favoring a switch.\n";
  doc.text = text.str();
  return doc;
}

ReportDocument cmd_simulate(const SimConfig& config) {
  const SimReport report = simulate(config);

  const bool z_defined = report.z_score.has_value();
  const bool z_ok = !z_defined || std::abs(*report.z_score) <= 4.0;

  ReportDocument doc;
  doc.command = "simulate";
  doc.inputs["theta"] = rat(config.theta);
  doc.inputs["strategy"] = std::string(strategy_name(config.strategy));
  doc.inputs["trials"] = config.trials;
  doc.inputs["seed"] = config.seed;
  doc.results["trials"] = report.trials;
  doc.results["empirical_mean"] = report.empirical_mean;
  doc.results["exact_mean"] = rat(report.exact_mean);
  doc.results["std_error"] = report.std_error;
  if (!z_defined) {
    doc.results["z_score"] = nullptr;
  } else if (std::isinf(*report.z_score)) {
    // JSON has no infinity literal, so spell it out rather than let the
    // serializer degrade it to null.
    doc.results["z_score"] = (*report.z_score > 0) ? "inf" : "-inf";
  } else {
    doc.results["z_score"] = *report.z_score;
  }
  doc.results["switch_fraction"] = report.switch_fraction;
  doc.results["z_within_4"] = z_ok;
  if (!z_defined) doc.flags.push_back("Z_UNDEFINED");
  doc.exit_code = z_ok ? 0 : 1;

  std::ostringstream text;
  text << "Simulated two-envelope games\n";
  std::vector<std::vector<std::string>> rows{
      {"theta", rat_dec(config.theta)},
      {"strategy", std::string(strategy_name(config.strategy))},
      {"trials", std::to_string(report.trials)},
      {"seed", std::to_string(config.seed)},
      {"empirical mean", dec(report.empirical_mean)},
      {"exact mean", rat_dec(report.exact_mean)},
      {"std error", dec(report.std_error)},
      {"z score", z_defined ? dec(*report.z_score) : std::string("undefined")},
      {"switch fraction", dec(report.switch_fraction)},
  };
  text << render_table(rows);
  if (!z_defined) {
    text << "Statistical check: skipped, z is undefined with fewer than two trials.\n";
  } else if (z_ok) {
    text << "Statistical check: |z| <= 4  -> pass\n";
  } else {
    text << "Statistical check: |z| <= 4  -> FAIL\n";
  }
  doc.text = text.str();
  return doc;
}

}  // namespace twoenv::cli
