#pragma once

#include <stdexcept>

namespace twoenv {

// Base class for every domain error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// make_space: a pmf entry is negative.
class NegativeProbability : public Error {
 public:
  using Error::Error;
};

// make_space: the pmf entries do not sum to exactly 1.
class MassNotOne : public Error {
 public:
  using Error::Error;
};

// Outcome labels, pmf, or random-variable values disagree in length.
class LengthMismatch : public Error {
 public:
  using Error::Error;
};

// Two random variables (or a partition and a random variable) live on
// different spaces. Identity of the space is what counts, not equality
// of its contents.
class SpaceMismatch : public Error {
 public:
  using Error::Error;
};

// Partition blocks are not disjoint, not covering, or empty.
class InvalidPartition : public Error {
 public:
  using Error::Error;
};

// Conditioning on an event of probability zero.
class ZeroProbabilityBlock : public Error {
 public:
  using Error::Error;
};

// The supplied transform maps two distinct support values to one value.
class NotInjectiveOnSupport : public Error {
 public:
  using Error::Error;
};

// Envelope amounts require theta > 0.
class NonPositiveTheta : public Error {
 public:
  using Error::Error;
};

// Observed amounts require x > 0.
class NonPositiveX : public Error {
 public:
  using Error::Error;
};

// A simulation needs at least one trial.
class ZeroTrials : public Error {
 public:
  using Error::Error;
};

// Text did not parse as a rational number.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace twoenv
