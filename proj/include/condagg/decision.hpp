#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "condagg/choquet.hpp"

namespace condagg {

enum class Direction { Minimize, Maximize };

struct CriterionSpec {
  std::string name;
  Direction direction = Direction::Maximize;
};

struct Alternative {
  std::string name;
  std::vector<Rational> scores;  // one per criterion
};

// Rescales every column into (0, 1] with the best raw score mapped to 1:
// minimization columns divide the column minimum by each value, maximization
// columns divide each value by the column maximum.
std::vector<Alternative> normalize_criteria(const std::vector<CriterionSpec>& criteria,
                                            const std::vector<Alternative>& alternatives);

// Weighted average marginal contribution of a criterion (1-based); the values
// over all criteria sum to the measure of the full set.
Rational shapley_value(const MonotoneMeasure& mu, int criterion);
std::vector<Rational> shapley_vector(const MonotoneMeasure& mu);

// Calibration of a three-criteria capacity from importance targets: the
// singleton values are pinned, the full set has measure one, and the three
// pair values solve the (rank-two) linear system matching the normalized
// targets. The returned pair values are the minimum-norm particular solution;
// every solution is pair_values + t * (1,1,1).
struct CalibrationResult {
  std::vector<Rational> normalized_targets;
  std::vector<Rational> singletons;   // mu({1}), mu({2}), mu({3})
  std::vector<Rational> pair_values;  // mu({1,2}), mu({1,3}), mu({2,3})
  bool monotone = false;
  std::optional<std::pair<IndexSet, IndexSet>> violation;  // first offending inclusion
  // shifts t for which pair_values + t*(1,1,1) yields a monotone measure
  std::optional<std::pair<Rational, Rational>> monotone_shift_range;

  MonotoneMeasure to_measure(const Rational& shift = Rational(0)) const;
};

CalibrationResult calibrate_measure(const std::vector<Rational>& targets,
                                    const std::vector<Rational>& singletons);

// Diagnostics for externally supplied pair values against the same system.
struct CalibrationCheck {
  std::vector<Rational> residuals;  // one per criterion equation
  Rational max_abs_residual;
  bool monotone = false;
};

CalibrationCheck verify_calibration(const std::vector<Rational>& targets,
                                    const std::vector<Rational>& singletons,
                                    const std::vector<Rational>& pair_values);

enum class RankMethod { Standard, Generalized };

struct RankedAlternative {
  std::string name;
  Rational score;
  std::size_t rank = 0;  // ties share a rank
};

// Scores every alternative by the chosen integral and orders them descending.
// The generalized method defaults to the Choquet-based family on the full
// powerset with the same measure; a custom family may be supplied instead.
std::vector<RankedAlternative> rank_alternatives(const std::vector<Alternative>& alternatives,
                                                 const MonotoneMeasure& mu, RankMethod method,
                                                 const std::optional<AggregatorFamily>& family = std::nullopt);

struct KnapsackResult {
  Rational unpacked_price;            // survival function value at the budget
  IndexSet chosen;                    // preferred minimizer
  std::vector<IndexSet> minimizers;   // every feasible set attaining the value
};

// Picks a feasible combination (total volume within the budget) minimizing
// the price of the complement. Ties prefer larger sets, then canonical order.
KnapsackResult knapsack_select(const std::vector<Rational>& volumes, const MonotoneMeasure& prices,
                               const Rational& budget, const Collection& collection);

}  // namespace condagg
