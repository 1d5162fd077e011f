#include "twoenv/envelope.hpp"

#include <cassert>
#include <utility>

namespace twoenv {

namespace {

void require_positive_x(const Rational& x) {
  if (x <= 0) throw NonPositiveX("observed x must be positive, got " + format_rational(x));
}

}  // namespace

EnvelopeModel::EnvelopeModel(Rational theta) : theta_(std::move(theta)) {
  if (theta_ <= 0) {
    throw NonPositiveTheta("theta must be positive, got " + format_rational(theta_));
  }
}

std::string_view strategy_name(Strategy strategy) noexcept {
  switch (strategy) {
    case Strategy::Keep: return "keep";
    case Strategy::AlwaysSwitch: return "always-switch";
    case Strategy::OracleThreshold: return "oracle-threshold";
  }
  return "unknown";
}

std::string_view relation_name(XRelation relation) noexcept {
  switch (relation) {
    case XRelation::XisTheta: return "x=theta";
    case XRelation::XisTwoTheta: return "x=2theta";
  }
  return "unknown";
}

EnvelopeSpace build_envelope_space(const EnvelopeModel& model) {
  const Rational& theta = model.theta();
  const Rational two_theta = 2 * theta;
  const Rational half(1, 2);
  SpacePtr space = make_space(
      {"x=" + format_rational(theta) + ",y=" + format_rational(two_theta),
       "x=" + format_rational(two_theta) + ",y=" + format_rational(theta)},
      {half, half});
  RandVar x(space, {theta, two_theta});
  RandVar y(space, {two_theta, theta});
  return EnvelopeSpace{std::move(space), std::move(x), std::move(y)};
}

Rational fallacious_expectation(const Rational& observed_x) {
  require_positive_x(observed_x);
  const Rational half(1, 2);
  return (observed_x / 2) * half + (2 * observed_x) * half;
}

CaseAnalysis case_analysis(const EnvelopeModel& model, XRelation relation) {
  const EnvelopeSpace env = build_envelope_space(model);
  const Partition sigma_x = generated_partition(env.x);

  // E(Y) recombined from the conditional distributions of Y on each
  // atom of sigma(X), weighted by the atom masses.
  Rational expected_y = 0;
  for (std::size_t b = 0; b < sigma_x.block_count(); ++b) {
    const Pmf cond = conditional_pmf(env.y, sigma_x, b);
    Rational block_mean = 0;
    for (std::size_t k = 0; k < cond.size(); ++k) block_mean += cond.support(k) * cond.mass(k);
    expected_y += sigma_x.block_mass(b) * block_mean;
  }

  const Rational observed_x =
      relation == XRelation::XisTheta ? model.theta() : 2 * model.theta();
  const bool recommend_switch = expected_y > observed_x;

  assert(expected_y == (relation == XRelation::XisTheta ? Rational(3, 2) * observed_x
                                                        : Rational(3, 4) * observed_x));
  assert(recommend_switch == (relation == XRelation::XisTheta));

  return CaseAnalysis{observed_x, relation, expected_y, recommend_switch};
}

Pmf induced_theta_distribution(const Rational& observed_x) {
  require_positive_x(observed_x);
  const Rational half(1, 2);
  return Pmf({observed_x, observed_x / 2}, {half, half});
}

Rational fallacious_cond_expectation(const Rational& observed_x) {
  require_positive_x(observed_x);
  // Branch values of the substituted conditional expectation: 2x where
  // the observation is taken for theta, x/2 where it is taken for
  // 2*theta. Averaging with the induced masses collapses both branches
  // into one number that only looks like an expectation.
  const Rational branch_x_is_theta = 2 * observed_x;
  const Rational branch_x_is_two_theta = observed_x / 2;
  const Pmf induced = induced_theta_distribution(observed_x);
  return branch_x_is_theta * induced.mass(0) + branch_x_is_two_theta * induced.mass(1);
}

Rational likelihood(const Rational& observed_x, const Rational& theta_candidate) {
  require_positive_x(observed_x);
  if (theta_candidate <= 0) {
    throw NonPositiveTheta("theta candidate must be positive, got " +
                           format_rational(theta_candidate));
  }
  if (theta_candidate == observed_x || 2 * theta_candidate == observed_x) {
    return Rational(1, 2);
  }
  return Rational(0);
}

Rational strategy_value(const EnvelopeModel& model, Strategy strategy) {
  const EnvelopeSpace env = build_envelope_space(model);
  switch (strategy) {
    case Strategy::Keep:
      return expectation(env.x);
    case Strategy::AlwaysSwitch:
      return expectation(env.y);
    case Strategy::OracleThreshold: {
      std::vector<Rational> payoff(env.space->size());
      for (std::size_t i = 0; i < env.space->size(); ++i) {
        const bool do_switch = env.x.value(i) == model.theta();
        payoff[i] = do_switch ? env.y.value(i) : env.x.value(i);
      }
      return expectation(RandVar(env.space, std::move(payoff)));
    }
  }
  throw Error("unreachable strategy");
}

}  // namespace twoenv
