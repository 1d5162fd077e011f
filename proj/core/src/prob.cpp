#include "twoenv/prob.hpp"

#include <utility>

namespace twoenv {

SpacePtr make_space(std::vector<std::string> labels, std::vector<Rational> pmf) {
  if (labels.empty()) throw LengthMismatch("a space needs at least one outcome");
  if (labels.size() != pmf.size()) {
    throw LengthMismatch("got " + std::to_string(labels.size()) + " labels but " +
                         std::to_string(pmf.size()) + " pmf entries");
  }
  Rational total = 0;
  for (const Rational& p : pmf) {
    if (p < 0) throw NegativeProbability("pmf entry " + format_rational(p) + " is negative");
    total += p;
  }
  if (total != 1) {
    throw MassNotOne("pmf entries sum to " + format_rational(total) + ", not 1");
  }
  return SpacePtr(new FiniteSpace(std::move(labels), std::move(pmf)));
}

RandVar::RandVar(SpacePtr space, std::vector<Rational> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_->size()) {
    throw LengthMismatch("got " + std::to_string(values_.size()) + " values on a space of " +
                         std::to_string(space_->size()) + " outcomes");
  }
}

RandVar RandVar::constant(SpacePtr space, const Rational& value) {
  std::vector<Rational> values(space->size(), value);
  return RandVar(std::move(space), std::move(values));
}

bool same_space(const RandVar& a, const RandVar& b) noexcept {
  return a.space().get() == b.space().get();
}

namespace {

void require_same_space(const RandVar& a, const RandVar& b) {
  if (!same_space(a, b)) {
    throw SpaceMismatch("random variables live on different spaces");
  }
}

}  // namespace

RandVar operator+(const RandVar& a, const RandVar& b) {
  require_same_space(a, b);
  std::vector<Rational> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a.value(i) + b.value(i);
  return RandVar(a.space(), std::move(out));
}

RandVar operator-(const RandVar& a, const RandVar& b) {
  require_same_space(a, b);
  std::vector<Rational> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a.value(i) - b.value(i);
  return RandVar(a.space(), std::move(out));
}

RandVar operator*(const Rational& scalar, const RandVar& rv) {
  std::vector<Rational> out(rv.size());
  for (std::size_t i = 0; i < rv.size(); ++i) out[i] = scalar * rv.value(i);
  return RandVar(rv.space(), std::move(out));
}

RandVar operator*(const RandVar& rv, const Rational& scalar) { return scalar * rv; }

bool operator==(const RandVar& a, const RandVar& b) {
  return same_space(a, b) && a.values() == b.values();
}

Pmf::Pmf(std::vector<Rational> support, std::vector<Rational> masses)
    : support_(std::move(support)), masses_(std::move(masses)) {
  if (support_.size() != masses_.size()) {
    throw LengthMismatch("pmf support and masses differ in length");
  }
  Rational total = 0;
  for (const Rational& m : masses_) {
    if (m < 0) throw NegativeProbability("pmf mass " + format_rational(m) + " is negative");
    total += m;
  }
  if (total != 1) {
    throw MassNotOne("pmf masses sum to " + format_rational(total) + ", not 1");
  }
  for (std::size_t i = 0; i < support_.size(); ++i) {
    for (std::size_t j = i + 1; j < support_.size(); ++j) {
      if (support_[i] == support_[j]) {
        throw Error("pmf support contains " + format_rational(support_[i]) + " twice");
      }
    }
  }
}

Rational Pmf::mass_at(const Rational& value) const {
  for (std::size_t k = 0; k < support_.size(); ++k) {
    if (support_[k] == value) return masses_[k];
  }
  return Rational(0);
}

Rational expectation(const RandVar& rv) {
  Rational sum = 0;
  const FiniteSpace& space = *rv.space();
  for (std::size_t i = 0; i < rv.size(); ++i) sum += space.prob(i) * rv.value(i);
  return sum;
}

Pmf marginal_pmf(const RandVar& rv) {
  std::vector<Rational> support;
  std::vector<Rational> masses;
  const FiniteSpace& space = *rv.space();
  for (std::size_t i = 0; i < rv.size(); ++i) {
    const Rational& v = rv.value(i);
    bool found = false;
    for (std::size_t k = 0; k < support.size(); ++k) {
      if (support[k] == v) {
        masses[k] += space.prob(i);
        found = true;
        break;
      }
    }
    if (!found) {
      support.push_back(v);
      masses.push_back(space.prob(i));
    }
  }
  // drop values that carry no mass
  std::vector<Rational> support_out;
  std::vector<Rational> masses_out;
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (masses[k] != 0) {
      support_out.push_back(support[k]);
      masses_out.push_back(masses[k]);
    }
  }
  return Pmf(std::move(support_out), std::move(masses_out));
}

bool are_independent(const RandVar& a, const RandVar& b) {
  require_same_space(a, b);
  const Pmf pa = marginal_pmf(a);
  const Pmf pb = marginal_pmf(b);
  const FiniteSpace& space = *a.space();
  for (std::size_t u = 0; u < pa.size(); ++u) {
    for (std::size_t v = 0; v < pb.size(); ++v) {
      Rational joint = 0;
      for (std::size_t i = 0; i < space.size(); ++i) {
        if (a.value(i) == pa.support(u) && b.value(i) == pb.support(v)) {
          joint += space.prob(i);
        }
      }
      if (joint != pa.mass(u) * pb.mass(v)) return false;
    }
  }
  return true;
}

}  // namespace twoenv
