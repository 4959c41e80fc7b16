#include "condagg/choquet.hpp"

#include <algorithm>
#include <numeric>

namespace condagg {

Rational choquet_standard(const std::vector<Rational>& x, const MonotoneMeasure& mu) {
  if (!mu.domain().is_full_powerset()) {
    throw Error(ErrorCode::MeasureNotOnPowerset, "standard Choquet integral needs the full powerset");
  }
  const int n = mu.domain().n();
  if (x.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::DomainMismatch, "vector length differs from the ground set size");
  }
  for (const Rational& xi : x) {
    if (xi < 0) throw Error(ErrorCode::NegativeComponent, "vector components must be nonnegative");
  }

  // sigma sorts x ascending (ties by index); G_i = {sigma(i), ..., sigma(n)}
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 1);
  std::stable_sort(sigma.begin(), sigma.end(), [&](int a, int b) { return x[a - 1] < x[b - 1]; });

  std::vector<Rational> level_measure(n + 2, Rational(0));  // mu(G_i), G_{n+1} empty
  IndexSet g;
  for (int i = n; i >= 1; --i) {
    g = g.with(sigma[i - 1]);
    level_measure[i] = mu.value(g);
  }

  Rational first = 0;
  Rational previous = 0;
  for (int i = 1; i <= n; ++i) {
    first += level_measure[i] * (x[sigma[i - 1] - 1] - previous);
    previous = x[sigma[i - 1] - 1];
  }
  Rational second = 0;
  for (int i = 1; i <= n; ++i) {
    second += x[sigma[i - 1] - 1] * (level_measure[i] - level_measure[i + 1]);
  }
  if (first != second) {
    throw Error(ErrorCode::PreconditionViolated, "the two Choquet forms disagree");
  }
  return first;
}

namespace {

Rational choquet_formula(const Arrangement& arr, const PermutationTables& pt, ChoquetRoute route) {
  const std::size_t kappa = arr.kappa();
  Rational total = 0;
  switch (route) {
    case ChoquetRoute::FormulaI:
      // the i = kappa-1 term would pair the zero level with an infinite width
      if (prefix_min_measure(arr, pt, kappa - 1) != 0) {
        throw Error(ErrorCode::PreconditionViolated, "running minimum must vanish at the last index");
      }
      for (std::size_t i = 0; i + 1 < kappa; ++i) {
        total += prefix_min_measure(arr, pt, i) * (arr.agg_values()[i + 1] - arr.agg_values()[i]);
      }
      return total;
    case ChoquetRoute::FormulaII:
      for (std::size_t i = 1; i < kappa; ++i) {
        total += arr.measure_values()[i] * (prefix_min_agg(arr, pt, i - 1) - prefix_min_agg(arr, pt, i));
      }
      return total;
    case ChoquetRoute::FormulaIII: {
      Rational running = arr.measure_of_e_complement(0);
      for (std::size_t i = 0; i + 1 < kappa; ++i) {
        running = std::min(running, arr.measure_of_e_complement(i));
        total += running * (arr.agg_values()[i + 1] - arr.agg_values()[i]);
      }
      return total;
    }
    case ChoquetRoute::FormulaIV: {
      // sum over j >= 1 of mu_j (min_{k<j} A_<k> - min_{k<=j} A_<k>)
      Rational prev = arr.agg_values()[pt.pi_inv[0]];
      for (std::size_t j = 1; j < kappa; ++j) {
        Rational next = std::min(prev, arr.agg_values()[pt.pi_inv[j]]);
        total += arr.measure_values()[j] * (prev - next);
        prev = next;
      }
      return total;
    }
    case ChoquetRoute::Integrate: break;
  }
  throw Error(ErrorCode::PreconditionViolated, "not a formula route");
}

}  // namespace

ChoquetResult choquet_generalized(const AggregatorFamily& fca, const MonotoneMeasure& mu,
                                  const std::vector<Rational>& x, ChoquetRoute route) {
  Arrangement arr = build_arrangement(fca, mu, x);
  StepFunction survival = survival_agg_scan(arr);
  Rational value;
  if (route == ChoquetRoute::Integrate) {
    value = survival.integrate();
  } else {
    PermutationTables pt = build_permutations(arr);
    value = choquet_formula(arr, pt, route);
  }
  return ChoquetResult{std::move(value), route, std::move(survival)};
}

ChoquetResult choquet_generalized(const Instance& instance, ChoquetRoute route) {
  return choquet_generalized(instance.fca, instance.measure, instance.x, route);
}

Rational choquet_special(const SpecialMeasure& special, const AggregatorFamily& fca,
                         const std::vector<Rational>& x) {
  const Collection& collection = fca.collection();
  const int n = collection.n();

  switch (special.kind) {
    case SpecialMeasureKind::Greatest:
      return fca.evaluate(x, IndexSet::full(n));
    case SpecialMeasureKind::Weakest: {
      bool found = false;
      Rational best;
      for (IndexSet e : collection.sets()) {
        if (e.is_empty()) continue;
        Rational v = fca.evaluate(x, e);
        if (!found || v < best) {
          best = v;
          found = true;
        }
      }
      return best;
    }
    default: break;
  }

  // the remaining forms integrate the matching closed-form survival function
  // piece by piece; evaluating them directly keeps the route independent
  StepFunction survival = survival_special(special, fca, x);
  switch (special.kind) {
    case SpecialMeasureKind::Symmetric: {
      const auto& levels = special.parameters;
      std::vector<Rational> min_by_card(n + 1);
      std::vector<bool> seen(n + 1, false);
      for (IndexSet e : collection.sets()) {
        Rational v = fca.evaluate(x, e);
        int c = e.cardinality();
        if (!seen[c] || v < min_by_card[c]) {
          min_by_card[c] = v;
          seen[c] = true;
        }
      }
      Rational total = 0;
      for (int i = 1; i <= n; ++i) {
        total += (levels[i] - levels[i - 1]) * min_by_card[n - i + 1];
      }
      if (total != survival.integrate()) {
        throw Error(ErrorCode::PreconditionViolated, "closed form disagrees with its survival function");
      }
      return total;
    }
    case SpecialMeasureKind::Possibility: {
      const auto& pi = special.parameters;
      std::vector<int> sigma(n);
      std::iota(sigma.begin(), sigma.end(), 1);
      std::stable_sort(sigma.begin(), sigma.end(), [&](int a, int b) { return pi[a - 1] < pi[b - 1]; });
      std::vector<IndexSet> upper(n + 2);
      for (int i = n; i >= 1; --i) upper[i] = upper[i + 1].with(sigma[i - 1]);
      Rational total = 0;
      Rational prev = 0;
      for (int i = 1; i <= n; ++i) {
        total += (pi[sigma[i - 1] - 1] - prev) * fca.evaluate(x, upper[i]);
        prev = pi[sigma[i - 1] - 1];
      }
      if (total != survival.integrate()) {
        throw Error(ErrorCode::PreconditionViolated, "closed form disagrees with its survival function");
      }
      return total;
    }
    case SpecialMeasureKind::Necessity: {
      const auto& pi = special.parameters;
      std::vector<int> sigma(n);
      std::iota(sigma.begin(), sigma.end(), 1);
      std::stable_sort(sigma.begin(), sigma.end(), [&](int a, int b) { return pi[a - 1] < pi[b - 1]; });
      std::vector<Rational> singleton(n + 1);
      for (int i = 1; i <= n; ++i) singleton[i] = fca.evaluate(x, IndexSet::single(sigma[i - 1]));
      std::vector<Rational> suffix_min(n + 1);
      suffix_min[n] = singleton[n];
      for (int i = n - 1; i >= 1; --i) suffix_min[i] = std::min(singleton[i], suffix_min[i + 1]);
      Rational total = 0;
      Rational prev = 0;
      for (int i = 1; i <= n; ++i) {
        total += (pi[sigma[i - 1] - 1] - prev) * suffix_min[i];
        prev = pi[sigma[i - 1] - 1];
      }
      if (total != survival.integrate()) {
        throw Error(ErrorCode::PreconditionViolated, "closed form disagrees with its survival function");
      }
      return total;
    }
    default: break;
  }
  throw Error(ErrorCode::PreconditionViolated, "unknown special measure kind");
}

std::vector<Rational> owa_weights(const std::vector<Rational>& levels) {
  if (levels.size() < 2) throw Error(ErrorCode::BadLevels, "need at least two levels");
  if (levels.front() != 0) throw Error(ErrorCode::BadLevels, "level 0 must be 0");
  if (levels.back() != 1) throw Error(ErrorCode::BadLevels, "top level must be 1");
  if (!std::is_sorted(levels.begin(), levels.end())) {
    throw Error(ErrorCode::BadLevels, "levels must be nondecreasing");
  }
  const std::size_t n = levels.size() - 1;
  std::vector<Rational> weights(n);
  for (std::size_t i = 1; i <= n; ++i) weights[i - 1] = levels[n - i + 1] - levels[n - i];
  return weights;
}

Rational owa_evaluate(const std::vector<Rational>& weights, const std::vector<Rational>& x) {
  if (weights.size() != x.size()) {
    throw Error(ErrorCode::DomainMismatch, "weights and vector must have equal length");
  }
  std::vector<Rational> sorted = x;
  std::sort(sorted.begin(), sorted.end());
  Rational total = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) total += weights[i] * sorted[i];
  return total;
}

}  // namespace condagg
