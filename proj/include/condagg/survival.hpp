#pragma once

#include <utility>
#include <vector>

#include "condagg/aggregators.hpp"
#include "condagg/step_function.hpp"

namespace condagg {

// A (family, measure, vector) problem instance. The measure must live on the
// complements of the family's collection.
struct Instance {
  AggregatorFamily fca;
  MonotoneMeasure measure;
  std::vector<Rational> x;
};

Instance make_instance(AggregatorFamily fca, MonotoneMeasure measure, std::vector<Rational> x);

// The two sorted enumerations behind every computation route: collection sets
// ascending by aggregation value, their complements ascending by measure
// value. Ties are broken deterministically (lexicographic for the first
// enumeration, cardinality-then-lexicographic for the second); downstream
// results never depend on the tie order.
class Arrangement {
 public:
  std::size_t kappa() const { return e_sets_.size(); }
  int n() const { return n_; }
  const std::vector<IndexSet>& e_sets() const { return e_sets_; }
  const std::vector<Rational>& agg_values() const { return agg_values_; }  // A_0 <= ... <= A_{kappa-1}
  const std::vector<IndexSet>& f_sets() const { return f_sets_; }
  const std::vector<Rational>& measure_values() const { return measure_values_; }  // mu_0 <= ...

  // A_i with the convention A_kappa = +infinity
  ExtRational agg_value_ext(std::size_t i) const;
  // mu_(i) = measure of the complement of E_i
  const Rational& measure_of_e_complement(std::size_t i) const { return mu_of_e_complement_[i]; }

 private:
  friend Arrangement build_arrangement(const AggregatorFamily& fca, const MonotoneMeasure& mu,
                                       const std::vector<Rational>& x);
  int n_ = 0;
  std::vector<IndexSet> e_sets_;
  std::vector<Rational> agg_values_;
  std::vector<IndexSet> f_sets_;
  std::vector<Rational> measure_values_;
  std::vector<Rational> mu_of_e_complement_;
};

Arrangement build_arrangement(const AggregatorFamily& fca, const MonotoneMeasure& mu,
                              const std::vector<Rational>& x);
Arrangement build_arrangement(const Instance& instance);

// Partitions before canonicalization, one piece per index (empty pieces
// included); used by the refinement and tie-invariance checks.
std::vector<Piece> agg_scan_pieces(const Arrangement& arr);
std::vector<Piece> measure_scan_pieces(const Arrangement& arr);

// Survival function evaluated straight from the defining minimum at every
// distinct aggregation value; the reference route all others are checked
// against.
StepFunction survival_definition(const AggregatorFamily& fca, const MonotoneMeasure& mu,
                                 const std::vector<Rational>& x);
StepFunction survival_definition(const Instance& instance);

// Scan over intervals between consecutive aggregation values.
StepFunction survival_agg_scan(const Arrangement& arr);
// Scan over measure values and the intervals on which they are attained.
StepFunction survival_measure_scan(const Arrangement& arr);

enum class SpecialMeasureKind { Greatest, Weakest, Symmetric, Possibility, Necessity };

struct SpecialMeasure {
  SpecialMeasureKind kind;
  // symmetric: n+1 levels; possibility/necessity: n distribution values
  std::vector<Rational> parameters;

  static SpecialMeasure greatest() { return {SpecialMeasureKind::Greatest, {}}; }
  static SpecialMeasure weakest() { return {SpecialMeasureKind::Weakest, {}}; }
  static SpecialMeasure symmetric(std::vector<Rational> levels) {
    return {SpecialMeasureKind::Symmetric, std::move(levels)};
  }
  static SpecialMeasure possibility(std::vector<Rational> pi) {
    return {SpecialMeasureKind::Possibility, std::move(pi)};
  }
  static SpecialMeasure necessity(std::vector<Rational> pi) {
    return {SpecialMeasureKind::Necessity, std::move(pi)};
  }
};

// Closed-form survival function for the special measure families. Symmetric,
// possibility and necessity require the full powerset collection and a family
// that is nondecreasing w.r.t. sets.
StepFunction survival_special(const SpecialMeasure& special, const AggregatorFamily& fca,
                              const std::vector<Rational>& x);

// The measure the closed form refers to, on the complement collection of the
// family; lets callers cross-check against the generic routes.
MonotoneMeasure induced_measure(const SpecialMeasure& special, const Collection& collection);

}  // namespace condagg
