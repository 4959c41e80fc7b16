#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "condagg/measure.hpp"

namespace condagg {

enum class AggregatorTag { Max, Min, Sum, ChoquetBased };

// One conditional aggregation rule. ChoquetBased carries an inner measure on
// the full powerset and evaluates the standard Choquet integral of the input
// masked to the conditioning set.
class AggregatorKind {
 public:
  static AggregatorKind max() { return AggregatorKind(AggregatorTag::Max); }
  static AggregatorKind min() { return AggregatorKind(AggregatorTag::Min); }
  static AggregatorKind sum() { return AggregatorKind(AggregatorTag::Sum); }
  static AggregatorKind choquet(MonotoneMeasure inner);

  AggregatorTag tag() const { return tag_; }
  const MonotoneMeasure& inner() const;  // ChoquetBased only
  const char* name() const;

  friend bool operator==(const AggregatorKind& a, const AggregatorKind& b);
  friend bool operator!=(const AggregatorKind& a, const AggregatorKind& b) { return !(a == b); }

 private:
  explicit AggregatorKind(AggregatorTag tag) : tag_(tag) {}
  AggregatorTag tag_;
  std::shared_ptr<const MonotoneMeasure> inner_;
};

// Family of conditional aggregation operators over a collection, one kind per
// set; the operator conditioned on {} is identically zero.
class AggregatorFamily {
 public:
  AggregatorFamily(Collection collection, const AggregatorKind& uniform);
  AggregatorFamily(Collection collection, std::vector<AggregatorKind> kinds);  // parallel to collection.sets()

  const Collection& collection() const { return collection_; }
  const AggregatorKind& kind_by_index(std::size_t i) const { return kinds_[i]; }
  const AggregatorKind& kind_of(IndexSet e) const;
  bool uniform() const;

  // A(x|e); x needs n nonnegative entries and e must belong to the collection
  Rational evaluate(const std::vector<Rational>& x, IndexSet e) const;

  // structurally nondecreasing w.r.t. sets: a single Max, Sum or ChoquetBased
  // kind across all nonempty sets
  bool nondecreasing_in_sets() const;

 private:
  Collection collection_;
  std::vector<AggregatorKind> kinds_;
};

struct AxiomCounterexample {
  int condition = 0;  // 1 = monotonicity, 2 = zero on the complement indicator
  IndexSet set;
  std::vector<Rational> x;
  std::vector<Rational> y;  // empty for condition 2
  Rational left;
  Rational right;
};

struct AxiomReport {
  bool passed = true;
  std::optional<AxiomCounterexample> counterexample;
  std::size_t checks = 0;
};

using ProbePair = std::pair<std::vector<Rational>, std::vector<Rational>>;

// Verifies, for every nonempty set of the collection, (i) monotonicity on the
// supplied probe pairs plus a coordinate-bump sweep of the {0, 1/2, 1}^n grid
// (grid only for n <= 6), and (ii) that the indicator of the complement
// aggregates to zero. Failures are reported, not thrown.
AxiomReport check_axioms(const AggregatorFamily& family, const std::vector<ProbePair>& probes = {});

// Same checks against an arbitrary aggregation function.
AxiomReport check_axioms_fn(
    const Collection& collection,
    const std::function<Rational(const std::vector<Rational>&, IndexSet)>& aggregate,
    const std::vector<ProbePair>& probes = {});

}  // namespace condagg
