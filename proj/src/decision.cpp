#include "condagg/decision.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace condagg {

std::vector<Alternative> normalize_criteria(const std::vector<CriterionSpec>& criteria,
                                            const std::vector<Alternative>& alternatives) {
  if (criteria.empty() || alternatives.empty()) {
    throw Error(ErrorCode::PreconditionViolated, "need at least one criterion and one alternative");
  }
  {
    std::set<std::string> names;
    for (const CriterionSpec& c : criteria) {
      if (!names.insert(c.name).second) {
        throw Error(ErrorCode::PreconditionViolated, "duplicate criterion name '" + c.name + "'");
      }
    }
  }
  for (const Alternative& alt : alternatives) {
    if (alt.scores.size() != criteria.size()) {
      throw Error(ErrorCode::DomainMismatch, "alternative '" + alt.name + "' has the wrong score count");
    }
  }

  std::vector<Alternative> normalized = alternatives;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    if (criteria[c].direction == Direction::Minimize) {
      Rational column_min = alternatives[0].scores[c];
      for (const Alternative& alt : alternatives) {
        if (alt.scores[c] <= 0) {
          throw Error(ErrorCode::ZeroDivision, "minimization column '" + criteria[c].name +
                                                   "' must be strictly positive");
        }
        column_min = std::min(column_min, alt.scores[c]);
      }
      for (std::size_t a = 0; a < alternatives.size(); ++a) {
        normalized[a].scores[c] = column_min / alternatives[a].scores[c];
      }
    } else {
      Rational column_max = alternatives[0].scores[c];
      for (const Alternative& alt : alternatives) {
        if (alt.scores[c] < 0) {
          throw Error(ErrorCode::NegativeComponent, "column '" + criteria[c].name + "' has a negative score");
        }
        column_max = std::max(column_max, alt.scores[c]);
      }
      if (column_max == 0) {
        throw Error(ErrorCode::ZeroDivision, "maximization column '" + criteria[c].name +
                                                 "' must have a positive maximum");
      }
      for (std::size_t a = 0; a < alternatives.size(); ++a) {
        normalized[a].scores[c] = alternatives[a].scores[c] / column_max;
      }
    }
  }
  return normalized;
}

Rational shapley_value(const MonotoneMeasure& mu, int criterion) {
  if (!mu.domain().is_full_powerset()) {
    throw Error(ErrorCode::MeasureNotOnPowerset, "Shapley values need the full powerset");
  }
  const int n = mu.domain().n();
  if (criterion < 1 || criterion > n) {
    throw Error(ErrorCode::IndexOutOfRange, "criterion " + std::to_string(criterion));
  }

  std::vector<BigInt> factorial(n + 1);
  factorial[0] = 1;
  for (int k = 1; k <= n; ++k) factorial[k] = factorial[k - 1] * k;

  const std::uint32_t rest = IndexSet::full(n).without(criterion).bits();
  Rational total = 0;
  std::uint32_t sub = rest;
  while (true) {
    IndexSet a(sub);
    const int size = a.cardinality();
    Rational gamma(factorial[n - size - 1] * factorial[size], factorial[n]);
    total += gamma * (mu.value(a.with(criterion)) - mu.value(a));
    if (sub == 0) break;
    sub = (sub - 1) & rest;
  }
  return total;
}

std::vector<Rational> shapley_vector(const MonotoneMeasure& mu) {
  std::vector<Rational> out;
  const int n = mu.domain().n();
  out.reserve(n);
  for (int i = 1; i <= n; ++i) out.push_back(shapley_value(mu, i));
  return out;
}

namespace {

// measure values on 2^[3] from singleton and pair tables
std::vector<std::pair<IndexSet, Rational>> three_criteria_values(const std::vector<Rational>& singletons,
                                                                 const std::vector<Rational>& pairs) {
  return {
      {IndexSet::empty(), Rational(0)},       {IndexSet::of({1}), singletons[0]},
      {IndexSet::of({2}), singletons[1]},     {IndexSet::of({3}), singletons[2]},
      {IndexSet::of({1, 2}), pairs[0]},       {IndexSet::of({1, 3}), pairs[1]},
      {IndexSet::of({2, 3}), pairs[2]},       {IndexSet::of({1, 2, 3}), Rational(1)},
  };
}

// the three equation right-hand sides c_i; the pair equations read
//   p_jk + p_jl - 2 p_kl = c_j   (indices {j,k,l} = {1,2,3})
std::vector<Rational> calibration_rhs(const std::vector<Rational>& t, const std::vector<Rational>& s) {
  std::vector<Rational> c(3);
  c[0] = 6 * t[0] - 2 * s[0] + s[1] + s[2] - 2;
  c[1] = 6 * t[1] - 2 * s[1] + s[0] + s[2] - 2;
  c[2] = 6 * t[2] - 2 * s[2] + s[0] + s[1] - 2;
  return c;
}

Rational equation_residual(int j, const std::vector<Rational>& pairs, const std::vector<Rational>& c) {
  // pairs = (p12, p13, p23); equation j uses the two pairs containing j
  switch (j) {
    case 0: return pairs[0] + pairs[1] - 2 * pairs[2] - c[0];
    case 1: return pairs[0] + pairs[2] - 2 * pairs[1] - c[1];
    default: return pairs[1] + pairs[2] - 2 * pairs[0] - c[2];
  }
}

void check_calibration_inputs(const std::vector<Rational>& targets, const std::vector<Rational>& singletons) {
  if (targets.size() != 3 || singletons.size() != 3) {
    throw Error(ErrorCode::PreconditionViolated, "calibration is defined for three criteria");
  }
  Rational sum = 0;
  for (const Rational& t : targets) {
    if (t <= 0) throw Error(ErrorCode::InconsistentTargets, "targets must be positive");
    sum += t;
  }
  for (const Rational& s : singletons) {
    if (s < 0) throw Error(ErrorCode::NegativeValue, "singleton values must be nonnegative");
    if (s > 1) throw Error(ErrorCode::PreconditionViolated, "singleton values must not exceed 1");
  }
}

}  // namespace

MonotoneMeasure CalibrationResult::to_measure(const Rational& shift) const {
  std::vector<Rational> shifted = pair_values;
  for (Rational& p : shifted) p += shift;
  return validate_measure(powerset_collection(3), three_criteria_values(singletons, shifted));
}

CalibrationResult calibrate_measure(const std::vector<Rational>& targets,
                                    const std::vector<Rational>& singletons) {
  check_calibration_inputs(targets, singletons);

  Rational sum = targets[0] + targets[1] + targets[2];
  std::vector<Rational> t = {targets[0] / sum, targets[1] / sum, targets[2] / sum};
  std::vector<Rational> c = calibration_rhs(t, singletons);

  CalibrationResult result;
  result.normalized_targets = t;
  result.singletons = singletons;
  // minimum-norm particular solution: orthogonal to the (1,1,1) null direction
  result.pair_values = {-c[2] / 3, -c[1] / 3, -c[0] / 3};
  for (int j = 0; j < 3; ++j) {
    if (equation_residual(j, result.pair_values, c) != 0) {
      throw Error(ErrorCode::InconsistentTargets, "calibration system is inconsistent");
    }
  }

  // monotonicity of the t = 0 assembly, and the shift range restoring it
  static const int pair_members[3][2] = {{1, 2}, {1, 3}, {2, 3}};
  result.monotone = true;
  Rational lo = 0, hi = 0;
  bool bounds_started = false;
  for (int p = 0; p < 3; ++p) {
    const Rational& value = result.pair_values[p];
    const Rational larger_singleton =
        std::max(singletons[pair_members[p][0] - 1], singletons[pair_members[p][1] - 1]);
    if (value < larger_singleton && result.monotone) {
      result.monotone = false;
      IndexSet single = singletons[pair_members[p][0] - 1] >= singletons[pair_members[p][1] - 1]
                            ? IndexSet::single(pair_members[p][0])
                            : IndexSet::single(pair_members[p][1]);
      result.violation = std::make_pair(single, IndexSet::of({pair_members[p][0], pair_members[p][1]}));
    }
    if (value > 1 && result.monotone) {
      result.monotone = false;
      result.violation = std::make_pair(IndexSet::of({pair_members[p][0], pair_members[p][1]}),
                                        IndexSet::full(3));
    }
    Rational pair_lo = larger_singleton - value;  // t >= singleton - pair
    Rational pair_hi = Rational(1) - value;       // t <= 1 - pair
    if (!bounds_started) {
      lo = pair_lo;
      hi = pair_hi;
      bounds_started = true;
    } else {
      lo = std::max(lo, pair_lo);
      hi = std::min(hi, pair_hi);
    }
  }
  if (lo <= hi) {
    result.monotone_shift_range = std::make_pair(lo, hi);
  }
  return result;
}

CalibrationCheck verify_calibration(const std::vector<Rational>& targets,
                                    const std::vector<Rational>& singletons,
                                    const std::vector<Rational>& pair_values) {
  check_calibration_inputs(targets, singletons);
  if (pair_values.size() != 3) {
    throw Error(ErrorCode::PreconditionViolated, "expected three pair values");
  }
  Rational sum = targets[0] + targets[1] + targets[2];
  std::vector<Rational> t = {targets[0] / sum, targets[1] / sum, targets[2] / sum};
  std::vector<Rational> c = calibration_rhs(t, singletons);

  CalibrationCheck check;
  check.max_abs_residual = 0;
  for (int j = 0; j < 3; ++j) {
    Rational residual = equation_residual(j, pair_values, c);
    check.residuals.push_back(residual);
    check.max_abs_residual = std::max(check.max_abs_residual, residual < 0 ? -residual : residual);
  }
  check.monotone = true;
  try {
    validate_measure(powerset_collection(3), three_criteria_values(singletons, pair_values));
  } catch (const Error&) {
    check.monotone = false;
  }
  return check;
}

std::vector<RankedAlternative> rank_alternatives(const std::vector<Alternative>& alternatives,
                                                 const MonotoneMeasure& mu, RankMethod method,
                                                 const std::optional<AggregatorFamily>& family) {
  if (alternatives.empty()) {
    throw Error(ErrorCode::PreconditionViolated, "nothing to rank");
  }
  std::vector<RankedAlternative> ranked;
  ranked.reserve(alternatives.size());

  if (method == RankMethod::Standard) {
    for (const Alternative& alt : alternatives) {
      ranked.push_back(RankedAlternative{alt.name, choquet_standard(alt.scores, mu), 0});
    }
  } else {
    const AggregatorFamily& fca = family
        ? *family
        : AggregatorFamily(powerset_collection(mu.domain().n()), AggregatorKind::choquet(mu));
    if (mu.domain() != complement_collection(fca.collection())) {
      throw Error(ErrorCode::DomainMismatch, "measure domain must be the complement collection");
    }
    for (const Alternative& alt : alternatives) {
      ranked.push_back(RankedAlternative{alt.name, choquet_generalized(fca, mu, alt.scores).value, 0});
    }
  }

  std::vector<std::size_t> order(ranked.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return ranked[a].score > ranked[b].score; });
  std::vector<RankedAlternative> out;
  out.reserve(ranked.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    RankedAlternative entry = ranked[order[pos]];
    entry.rank = pos > 0 && entry.score == out.back().score ? out.back().rank : pos + 1;
    out.push_back(std::move(entry));
  }
  return out;
}

KnapsackResult knapsack_select(const std::vector<Rational>& volumes, const MonotoneMeasure& prices,
                               const Rational& budget, const Collection& collection) {
  if (volumes.size() != static_cast<std::size_t>(collection.n())) {
    throw Error(ErrorCode::DomainMismatch, "one volume per ground set element expected");
  }
  for (const Rational& v : volumes) {
    if (v < 0) throw Error(ErrorCode::NegativeComponent, "volumes must be nonnegative");
  }
  if (budget < 0) throw Error(ErrorCode::PreconditionViolated, "budget must be nonnegative");
  if (prices.domain() != complement_collection(collection)) {
    throw Error(ErrorCode::DomainMismatch, "prices must live on the complement collection");
  }

  AggregatorFamily family(collection, AggregatorKind::sum());
  Arrangement arr = build_arrangement(family, prices, volumes);
  PermutationTables pt = build_permutations(arr);
  KnapsackResult result;
  result.unpacked_price = survival_via_maps(arr, pt, MapRoute::I).value_at(budget);

  for (IndexSet e : collection.sets()) {
    Rational volume = 0;
    for (int i : e.elements()) volume += volumes[i - 1];
    if (volume <= budget && prices.value(e.complement(collection.n())) == result.unpacked_price) {
      result.minimizers.push_back(e);
    }
  }
  // minimizers are already canonically ordered; prefer packing more items
  result.chosen = *std::max_element(result.minimizers.begin(), result.minimizers.end(),
                                    [](IndexSet a, IndexSet b) {
                                      if (a.cardinality() != b.cardinality()) {
                                        return a.cardinality() < b.cardinality();
                                      }
                                      return canonical_less(b, a);  // earlier canonical wins
                                    });
  return result;
}

}  // namespace condagg
