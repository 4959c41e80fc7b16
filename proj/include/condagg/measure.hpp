#pragma once

#include <utility>
#include <vector>

#include "condagg/rational.hpp"
#include "condagg/sets.hpp"

namespace condagg {

// Nonnegative set function, monotone under inclusion, zero on the empty set
// and positive on the full set. The domain is typically the complement
// collection of the family the measure is paired with.
class MonotoneMeasure {
 public:
  const Collection& domain() const { return domain_; }
  std::size_t size() const { return values_.size(); }
  const Rational& value(IndexSet f) const;  // throws SetNotInCollection
  const Rational& value_by_index(std::size_t j) const { return values_[j]; }
  const std::vector<Rational>& values() const { return values_; }
  bool is_capacity() const { return values_.back() == 1; }

  friend bool operator==(const MonotoneMeasure& a, const MonotoneMeasure& b) {
    return a.domain_ == b.domain_ && a.values_ == b.values_;
  }

 private:
  friend MonotoneMeasure validate_measure(Collection domain, std::vector<Rational> values);
  MonotoneMeasure(Collection domain, std::vector<Rational> values)
      : domain_(std::move(domain)), values_(std::move(values)) {}
  Collection domain_;
  std::vector<Rational> values_;  // parallel to domain_.sets()
};

// values parallel to domain.sets() (canonical order)
MonotoneMeasure validate_measure(Collection domain, std::vector<Rational> values);
// values given as (set, value) pairs in any order; every set must be covered
MonotoneMeasure validate_measure(Collection domain, const std::vector<std::pair<IndexSet, Rational>>& values);

// the measure that is 1 on every nonempty set of the domain
MonotoneMeasure greatest_measure(const Collection& domain);
// the measure that is 1 only on the full set
MonotoneMeasure weakest_measure(const Collection& domain);
// mu(F) = levels[|F|] on the full powerset; levels must be nondecreasing,
// start at 0 and end positive
MonotoneMeasure symmetric_measure(int n, const std::vector<Rational>& levels);
// mu(F) = max of the distribution over F; distribution values in [0,1] with
// maximum 1
MonotoneMeasure possibility_measure(int n, const std::vector<Rational>& distribution);
// mu(F) = 1 - max of the distribution outside F
MonotoneMeasure necessity_measure(int n, const std::vector<Rational>& distribution);
// mu(F) = sum of nonnegative weights over F
MonotoneMeasure additive_measure(int n, const std::vector<Rational>& weights);

}  // namespace condagg
