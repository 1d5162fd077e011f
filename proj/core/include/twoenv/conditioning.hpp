#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "twoenv/prob.hpp"

namespace twoenv {

// A finite sigma-field, represented by the partition of outcome indices
// into its atoms. Blocks are pairwise disjoint, nonempty, and together
// cover every outcome. For a finite space this representation is
// equivalent to the full event lattice and linear in the space size.
class Partition {
 public:
  // Throws InvalidPartition when the blocks overlap, miss an outcome,
  // are empty, or index out of range.
  Partition(SpacePtr space, std::vector<std::vector<std::size_t>> blocks);

  // One block holding everything: the trivial sigma-field.
  static Partition trivial(SpacePtr space);
  // Singleton blocks: the finest sigma-field, full information.
  static Partition singletons(SpacePtr space);

  const SpacePtr& space() const noexcept { return space_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<std::size_t>& block(std::size_t b) const { return blocks_.at(b); }
  std::size_t block_of(std::size_t outcome) const { return block_of_.at(outcome); }

  // P(block): the exact total mass of the block's outcomes.
  Rational block_mass(std::size_t b) const;

 private:
  SpacePtr space_;
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> block_of_;
};

// Same space (identity) and identical blocks in identical order.
bool operator==(const Partition& a, const Partition& b);

// E(Y | partition): a random variable constant on every block of the
// partition, kept together with that partition.
class CondExpectation {
 public:
  const RandVar& as_rand_var() const noexcept { return underlying_; }
  const Partition& partition() const noexcept { return partition_; }
  const Rational& block_value(std::size_t b) const { return block_values_.at(b); }

 private:
  friend CondExpectation cond_expectation(const RandVar& y, const Partition& given);
  CondExpectation(RandVar underlying, Partition partition, std::vector<Rational> block_values)
      : underlying_(std::move(underlying)),
        partition_(std::move(partition)),
        block_values_(std::move(block_values)) {}

  RandVar underlying_;
  Partition partition_;
  std::vector<Rational> block_values_;
};

// The sigma-field generated by rv: blocks are the level sets
// {i : values[i] = v}, one per distinct value, ordered by first
// appearance. Block count equals the support size.
Partition generated_partition(const RandVar& rv);

// Distribution of y restricted to one block, masses joint/marginal.
// Support values whose conditional mass is zero are dropped.
// Throws ZeroProbabilityBlock when the block has no mass, and
// SpaceMismatch when y and the partition disagree on the space.
Pmf conditional_pmf(const RandVar& y, const Partition& given, std::size_t block_index);

// On each block B the result takes the value sum_{i in B} pmf[i]*y[i] / P(B).
// Every block must carry positive mass (ZeroProbabilityBlock otherwise).
CondExpectation cond_expectation(const RandVar& y, const Partition& given);

// Expectation of the underlying variable. By the tower law this equals
// the plain expectation of the conditioned variable.
Rational iterated_expectation(const CondExpectation& ce);

// h(rv) for a mapping that is injective on the support of rv (checked;
// NotInjectiveOnSupport otherwise). Such a transform generates the same
// partition, hence the same conditional expectations.
RandVar injective_transform(const RandVar& rv,
                            const std::function<Rational(const Rational&)>& mapping);

}  // namespace twoenv
