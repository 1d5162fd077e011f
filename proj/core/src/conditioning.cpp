#include "twoenv/conditioning.hpp"

#include <map>
#include <utility>

namespace twoenv {

Partition::Partition(SpacePtr space, std::vector<std::vector<std::size_t>> blocks)
    : space_(std::move(space)), blocks_(std::move(blocks)) {
  const std::size_t n = space_->size();
  block_of_.assign(n, n);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].empty()) throw InvalidPartition("block " + std::to_string(b) + " is empty");
    for (std::size_t i : blocks_[b]) {
      if (i >= n) {
        throw InvalidPartition("outcome index " + std::to_string(i) + " out of range");
      }
      if (block_of_[i] != n) {
        throw InvalidPartition("outcome " + std::to_string(i) + " appears in two blocks");
      }
      block_of_[i] = b;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (block_of_[i] == n) {
      throw InvalidPartition("outcome " + std::to_string(i) + " is not covered");
    }
  }
}

Partition Partition::trivial(SpacePtr space) {
  std::vector<std::size_t> all(space->size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return Partition(std::move(space), {std::move(all)});
}

Partition Partition::singletons(SpacePtr space) {
  std::vector<std::vector<std::size_t>> blocks(space->size());
  for (std::size_t i = 0; i < blocks.size(); ++i) blocks[i] = {i};
  return Partition(std::move(space), std::move(blocks));
}

Rational Partition::block_mass(std::size_t b) const {
  Rational mass = 0;
  for (std::size_t i : blocks_.at(b)) mass += space_->prob(i);
  return mass;
}

bool operator==(const Partition& a, const Partition& b) {
  if (a.space().get() != b.space().get()) return false;
  if (a.block_count() != b.block_count()) return false;
  for (std::size_t i = 0; i < a.block_count(); ++i) {
    if (a.block(i) != b.block(i)) return false;
  }
  return true;
}

namespace {

void require_same_space(const RandVar& y, const Partition& given) {
  if (y.space().get() != given.space().get()) {
    throw SpaceMismatch("random variable and partition live on different spaces");
  }
}

}  // namespace

Partition generated_partition(const RandVar& rv) {
  std::vector<Rational> seen;
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < rv.size(); ++i) {
    const Rational& v = rv.value(i);
    bool found = false;
    for (std::size_t k = 0; k < seen.size(); ++k) {
      if (seen[k] == v) {
        blocks[k].push_back(i);
        found = true;
        break;
      }
    }
    if (!found) {
      seen.push_back(v);
      blocks.push_back({i});
    }
  }
  return Partition(rv.space(), std::move(blocks));
}

Pmf conditional_pmf(const RandVar& y, const Partition& given, std::size_t block_index) {
  require_same_space(y, given);
  const Rational block_mass = given.block_mass(block_index);
  if (block_mass == 0) {
    throw ZeroProbabilityBlock("cannot condition on block " + std::to_string(block_index) +
                               " of probability zero");
  }
  const FiniteSpace& space = *y.space();
  std::vector<Rational> support;
  std::vector<Rational> masses;
  for (std::size_t i : given.block(block_index)) {
    const Rational& v = y.value(i);
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
  std::vector<Rational> support_out;
  std::vector<Rational> masses_out;
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (masses[k] != 0) {
      support_out.push_back(support[k]);
      masses_out.push_back(masses[k] / block_mass);
    }
  }
  return Pmf(std::move(support_out), std::move(masses_out));
}

CondExpectation cond_expectation(const RandVar& y, const Partition& given) {
  require_same_space(y, given);
  const FiniteSpace& space = *y.space();
  std::vector<Rational> block_values(given.block_count());
  for (std::size_t b = 0; b < given.block_count(); ++b) {
    const Rational mass = given.block_mass(b);
    if (mass == 0) {
      throw ZeroProbabilityBlock("cannot condition on block " + std::to_string(b) +
                                 " of probability zero");
    }
    Rational weighted = 0;
    for (std::size_t i : given.block(b)) weighted += space.prob(i) * y.value(i);
    block_values[b] = weighted / mass;
  }
  std::vector<Rational> per_outcome(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    per_outcome[i] = block_values[given.block_of(i)];
  }
  return CondExpectation(RandVar(y.space(), std::move(per_outcome)), given,
                         std::move(block_values));
}

Rational iterated_expectation(const CondExpectation& ce) {
  return expectation(ce.as_rand_var());
}

RandVar injective_transform(const RandVar& rv,
                            const std::function<Rational(const Rational&)>& mapping) {
  std::map<Rational, Rational> image;
  for (std::size_t i = 0; i < rv.size(); ++i) {
    const Rational& v = rv.value(i);
    if (image.count(v)) continue;
    image.emplace(v, mapping(v));
  }
  for (auto it = image.begin(); it != image.end(); ++it) {
    for (auto jt = std::next(it); jt != image.end(); ++jt) {
      if (it->second == jt->second) {
        throw NotInjectiveOnSupport("mapping sends " + format_rational(it->first) + " and " +
                                    format_rational(jt->first) + " both to " +
                                    format_rational(it->second));
      }
    }
  }
  std::vector<Rational> out(rv.size());
  for (std::size_t i = 0; i < rv.size(); ++i) out[i] = image.at(rv.value(i));
  return RandVar(rv.space(), std::move(out));
}

}  // namespace twoenv
