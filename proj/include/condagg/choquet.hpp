#pragma once

#include <vector>

#include "condagg/index_maps.hpp"

namespace condagg {

// Standard discrete Choquet integral; the measure must live on the full
// powerset. Both algebraic forms are evaluated and must agree.
Rational choquet_standard(const std::vector<Rational>& x, const MonotoneMeasure& mu);

enum class ChoquetRoute { Integrate, FormulaI, FormulaII, FormulaIII, FormulaIV };

struct ChoquetResult {
  Rational value;
  ChoquetRoute route;
  StepFunction survival;  // canonical integrand, identical for every route
};

// Integral of the survival function, computed either by direct integration or
// by one of the four closed formulas over the arrangement.
ChoquetResult choquet_generalized(const AggregatorFamily& fca, const MonotoneMeasure& mu,
                                  const std::vector<Rational>& x,
                                  ChoquetRoute route = ChoquetRoute::Integrate);
ChoquetResult choquet_generalized(const Instance& instance, ChoquetRoute route = ChoquetRoute::Integrate);

// Closed-form values for the special measure families; preconditions as in
// survival_special.
Rational choquet_special(const SpecialMeasure& special, const AggregatorFamily& fca,
                         const std::vector<Rational>& x);

// Weights of the order-statistic average induced by a symmetric capacity:
// w_i = levels[n-i+1] - levels[n-i]. Levels must be nondecreasing from 0 to 1.
std::vector<Rational> owa_weights(const std::vector<Rational>& levels);

// sum of w_i times the i-th smallest component of x
Rational owa_evaluate(const std::vector<Rational>& weights, const std::vector<Rational>& x);

}  // namespace condagg
