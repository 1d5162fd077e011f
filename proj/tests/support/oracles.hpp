#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "twoenv/prob.hpp"

namespace twoenv::testing {

// Straight-line reimplementations used as oracles. They share no code
// with the library paths they check.

inline Rational naive_expectation(const RandVar& rv) {
  Rational acc(0);
  for (std::size_t i = 0; i < rv.size(); ++i) acc += rv.space()->prob(i) * rv.value(i);
  return acc;
}

// Mean of y over one set of outcomes, weighted by their probabilities.
inline Rational naive_block_mean(const RandVar& y, const std::vector<std::size_t>& block) {
  Rational mass(0);
  Rational weighted(0);
  for (const std::size_t i : block) {
    mass += y.space()->prob(i);
    weighted += y.space()->prob(i) * y.value(i);
  }
  return weighted / mass;
}

inline bool naive_independent(const RandVar& a, const RandVar& b) {
  std::map<Rational, Rational> pa;
  std::map<Rational, Rational> pb;
  std::map<std::pair<Rational, Rational>, Rational> pab;
  for (std::size_t i = 0; i < a.size(); ++i) {
    pa[a.value(i)] += a.space()->prob(i);
    pb[b.value(i)] += b.space()->prob(i);
    pab[{a.value(i), b.value(i)}] += a.space()->prob(i);
  }
  for (const auto& [u, pu] : pa) {
    for (const auto& [v, pv] : pb) {
      Rational joint(0);
      if (const auto it = pab.find({u, v}); it != pab.end()) joint = it->second;
      if (joint != pu * pv) return false;
    }
  }
  return true;
}

}  // namespace twoenv::testing
