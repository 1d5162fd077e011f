#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "twoenv/errors.hpp"
#include "twoenv/rational.hpp"

namespace twoenv {

class FiniteSpace;

// Spaces are shared immutably between the random variables defined on
// them. Identity is the pointer: two spaces built from equal data are
// still different spaces, and mixing them is an error.
using SpacePtr = std::shared_ptr<const FiniteSpace>;

// A finite probability space: ordered opaque outcome labels plus an
// exact pmf summing to 1. Immutable after construction.
class FiniteSpace {
 public:
  std::size_t size() const noexcept { return pmf_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const Rational& prob(std::size_t i) const { return pmf_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<Rational>& pmf() const noexcept { return pmf_; }

 private:
  friend SpacePtr make_space(std::vector<std::string> labels,
                             std::vector<Rational> pmf);
  FiniteSpace(std::vector<std::string> labels, std::vector<Rational> pmf)
      : labels_(std::move(labels)), pmf_(std::move(pmf)) {}

  std::vector<std::string> labels_;
  std::vector<Rational> pmf_;
};

// Validates and builds a space.
// Throws LengthMismatch (empty labels or size disagreement),
// NegativeProbability, or MassNotOne (sum differs from exactly 1).
SpacePtr make_space(std::vector<std::string> labels, std::vector<Rational> pmf);

// A random variable: one exact value per outcome of its space.
class RandVar {
 public:
  // Throws LengthMismatch when values and space size disagree.
  RandVar(SpacePtr space, std::vector<Rational> values);

  static RandVar constant(SpacePtr space, const Rational& value);

  const SpacePtr& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return values_.size(); }
  const Rational& value(std::size_t i) const { return values_.at(i); }
  const std::vector<Rational>& values() const noexcept { return values_; }

 private:
  SpacePtr space_;
  std::vector<Rational> values_;
};

bool same_space(const RandVar& a, const RandVar& b) noexcept;

// Pointwise arithmetic. Operands must live on the same space
// (SpaceMismatch otherwise).
RandVar operator+(const RandVar& a, const RandVar& b);
RandVar operator-(const RandVar& a, const RandVar& b);
RandVar operator*(const Rational& scalar, const RandVar& rv);
RandVar operator*(const RandVar& rv, const Rational& scalar);

// Equal iff on the same space (identity) with equal values.
bool operator==(const RandVar& a, const RandVar& b);

// A distribution over distinct exact values. Masses are nonnegative and
// sum to exactly 1; support order is whatever the producing operation
// chose (first appearance, for the operations below).
class Pmf {
 public:
  Pmf(std::vector<Rational> support, std::vector<Rational> masses);

  std::size_t size() const noexcept { return support_.size(); }
  const Rational& support(std::size_t k) const { return support_.at(k); }
  const Rational& mass(std::size_t k) const { return masses_.at(k); }

  // Mass at an arbitrary value; zero outside the support.
  Rational mass_at(const Rational& value) const;

 private:
  std::vector<Rational> support_;
  std::vector<Rational> masses_;
};

// Exact expected value: sum of pmf[i] * values[i].
Rational expectation(const RandVar& rv);

// Groups equal values (first-appearance order) and sums their masses.
// Values whose total mass is zero are dropped from the support.
Pmf marginal_pmf(const RandVar& rv);

// True iff P(a=u, b=v) = P(a=u) * P(b=v) exactly for every pair (u, v)
// of support values. Throws SpaceMismatch for variables on different
// spaces.
bool are_independent(const RandVar& a, const RandVar& b);

}  // namespace twoenv
