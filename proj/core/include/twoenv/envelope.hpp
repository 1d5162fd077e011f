#pragma once

#include <string_view>

#include "twoenv/conditioning.hpp"
#include "twoenv/prob.hpp"

namespace twoenv {

// The two-envelope game: one envelope holds theta, the other 2*theta,
// the player opens one at random. X is the amount seen, Y the amount in
// the other envelope. Note that the set of values X and Y can take
// depends on theta itself, so observing X = x leaves two consistent
// hypotheses, theta = x and theta = x/2, and the player cannot tell
// which event (X = theta or X = 2*theta) occurred.
class EnvelopeModel {
 public:
  // Throws NonPositiveTheta unless theta > 0.
  explicit EnvelopeModel(Rational theta);

  const Rational& theta() const noexcept { return theta_; }

 private:
  Rational theta_;
};

// The joint space of (X, Y): two equally likely outcomes,
// (X=theta, Y=2*theta) and (X=2*theta, Y=theta). The diagonal cells
// (theta,theta) and (2*theta,2*theta) carry no mass, which is exactly
// why X and Y are dependent.
struct EnvelopeSpace {
  SpacePtr space;
  RandVar x;
  RandVar y;
};

enum class Strategy {
  Keep,            // keep the first envelope
  AlwaysSwitch,    // always trade it
  OracleThreshold  // trade exactly when x = theta (requires knowing theta)
};

std::string_view strategy_name(Strategy strategy) noexcept;

// Which event produced the observation: X = theta or X = 2*theta.
enum class XRelation { XisTheta, XisTwoTheta };

std::string_view relation_name(XRelation relation) noexcept;

// What a player who knew the relation between x and theta could
// conclude: the expected other-envelope amount, re-expressed in units
// of the observed x, and whether trading is favorable.
struct CaseAnalysis {
  Rational observed_x;
  XRelation relation;
  Rational conditional_expected_y;  // (3/2)*x when x=theta, (3/4)*x when x=2*theta
  bool recommend_switch;
};

EnvelopeSpace build_envelope_space(const EnvelopeModel& model);

// The always-switch argument evaluated literally: treats the other
// envelope as x/2 or 2x with probability 1/2 each and returns
// (x/2)(1/2) + (2x)(1/2) = (5/4)x. This substitutes the distribution of
// the unknown parameter for the distribution of X and is NOT a valid
// expected value for this game; callers should surface it flagged as
// fallacious. Throws NonPositiveX.
Rational fallacious_expectation(const Rational& observed_x);

// Expected winnings of the other envelope under a known relation,
// derived through conditional pmfs and recombined with the block
// masses (not from the closed form).
CaseAnalysis case_analysis(const EnvelopeModel& model, XRelation relation);

// The distribution over {x, x/2} obtained by relabeling the pmf of X as
// a pmf of theta. This object is what manufactures the fallacy: theta
// is an unknown constant, not a random variable, so this is not a valid
// frequentist distribution. Throws NonPositiveX.
Pmf induced_theta_distribution(const Rational& observed_x);

// Rebuilds the conditional expectation with the induced distribution
// substituted for the distribution of X: branch values 2x and x/2,
// averaged with masses (1/2, 1/2). Equals fallacious_expectation(x)
// exactly. Throws NonPositiveX.
Rational fallacious_cond_expectation(const Rational& observed_x);

// P(X = x | theta = candidate): 1/2 when the candidate is x or x/2,
// zero otherwise (no other theta can produce the observation).
// Throws NonPositiveX / NonPositiveTheta.
Rational likelihood(const Rational& observed_x, const Rational& theta_candidate);

// Exact expected final winnings of a strategy, computed on the joint
// space: Keep and AlwaysSwitch both give (3/2)*theta, OracleThreshold
// gives 2*theta.
Rational strategy_value(const EnvelopeModel& model, Strategy strategy);

}  // namespace twoenv
