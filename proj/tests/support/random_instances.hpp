#pragma once

// Deterministic random-instance generation for the property and acceptance
// suites. Values come from small pools so ties are frequent.

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "condagg/index_maps.hpp"
#include "condagg/survival.hpp"

namespace testgen {

using namespace condagg;

using Rng = std::mt19937_64;

inline Collection random_collection(Rng& rng, int n) {
  std::vector<IndexSet> sets = {IndexSet::empty(), IndexSet::full(n)};
  std::uniform_int_distribution<int> coin(0, 1);
  for (std::uint32_t bits = 1; bits + 1 < (std::uint32_t(1) << n); ++bits) {
    if (coin(rng)) sets.emplace_back(bits);
  }
  return validate_collection(n, std::move(sets));
}

// monotone by construction: each value is the maximum over already assigned
// subsets plus a small increment, zero with high probability to force ties
inline MonotoneMeasure random_monotone_measure(Rng& rng, const Collection& domain) {
  static const Rational increments[] = {Rational(0),     Rational(0),     Rational(1, 4),
                                        Rational(1, 2),  Rational(3, 4),  Rational(1),
                                        Rational(1, 10), Rational(1, 3)};
  std::uniform_int_distribution<std::size_t> pick(0, std::size(increments) - 1);

  const auto& sets = domain.sets();
  std::vector<Rational> values(sets.size(), Rational(0));
  for (std::size_t j = 1; j < sets.size(); ++j) {
    Rational floor = 0;
    for (std::size_t i = 0; i < j; ++i) {
      if (sets[i].subset_of(sets[j])) floor = std::max(floor, values[i]);
    }
    values[j] = floor + increments[pick(rng)];
  }
  if (values.back() == 0) values.back() = Rational(1, 2);
  return validate_measure(domain, std::move(values));
}

inline std::vector<Rational> random_vector(Rng& rng, int n) {
  static const Rational pool[] = {Rational(0),    Rational(1, 2), Rational(1),    Rational(3, 2),
                                  Rational(2),    Rational(5, 2), Rational(3),    Rational(4),
                                  Rational(1, 3), Rational(2, 3)};
  std::uniform_int_distribution<std::size_t> pick(0, std::size(pool) - 1);
  std::vector<Rational> x(n);
  for (Rational& xi : x) xi = pool[pick(rng)];
  return x;
}

inline AggregatorKind random_kind(Rng& rng, int n, bool allow_choquet) {
  std::uniform_int_distribution<int> pick(0, allow_choquet ? 3 : 2);
  switch (pick(rng)) {
    case 0: return AggregatorKind::max();
    case 1: return AggregatorKind::min();
    case 2: return AggregatorKind::sum();
    default: return AggregatorKind::choquet(random_monotone_measure(rng, powerset_collection(n)));
  }
}

struct InstanceOptions {
  int n_min = 2;
  int n_max = 4;
  bool mixed_kinds = true;
  bool allow_choquet = true;
};

inline Instance random_instance(Rng& rng, const InstanceOptions& options = {}) {
  std::uniform_int_distribution<int> n_pick(options.n_min, options.n_max);
  const int n = n_pick(rng);
  Collection collection = random_collection(rng, n);
  MonotoneMeasure mu = random_monotone_measure(rng, complement_collection(collection));

  AggregatorFamily family = [&] {
    if (!options.mixed_kinds) {
      return AggregatorFamily(collection, random_kind(rng, n, options.allow_choquet));
    }
    std::vector<AggregatorKind> kinds;
    kinds.reserve(collection.size());
    for (std::size_t i = 0; i < collection.size(); ++i) {
      kinds.push_back(random_kind(rng, n, options.allow_choquet));
    }
    return AggregatorFamily(collection, std::move(kinds));
  }();
  return make_instance(std::move(family), std::move(mu), random_vector(rng, n));
}

// relabels the ground set by a random permutation; the survival function is
// unchanged
inline Instance relabeled_instance(Rng& rng, const Instance& instance) {
  const int n = instance.fca.collection().n();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  std::shuffle(perm.begin(), perm.end(), rng);

  auto map_set = [&](IndexSet s) {
    IndexSet out;
    for (int i : s.elements()) out = out.with(perm[i - 1]);
    return out;
  };
  auto map_measure = [&](const MonotoneMeasure& mu) {
    std::vector<std::pair<IndexSet, Rational>> values;
    for (std::size_t j = 0; j < mu.size(); ++j) {
      values.emplace_back(map_set(mu.domain().sets()[j]), mu.value_by_index(j));
    }
    std::vector<IndexSet> sets;
    for (const auto& [s, v] : values) sets.push_back(s);
    return validate_measure(validate_collection(n, sets), values);
  };

  std::vector<IndexSet> new_sets;
  for (IndexSet e : instance.fca.collection().sets()) new_sets.push_back(map_set(e));
  Collection new_collection = validate_collection(n, new_sets);

  std::vector<AggregatorKind> kinds(new_collection.size(), AggregatorKind::sum());
  for (std::size_t i = 0; i < instance.fca.collection().size(); ++i) {
    IndexSet mapped = map_set(instance.fca.collection().sets()[i]);
    const AggregatorKind& kind = instance.fca.kind_by_index(i);
    kinds[*new_collection.index_of(mapped)] =
        kind.tag() == AggregatorTag::ChoquetBased ? AggregatorKind::choquet(map_measure(kind.inner()))
                                                  : kind;
  }

  std::vector<Rational> x(instance.x.size());
  for (int i = 1; i <= n; ++i) x[perm[i - 1] - 1] = instance.x[i - 1];

  return make_instance(AggregatorFamily(std::move(new_collection), std::move(kinds)),
                       map_measure(instance.measure), std::move(x));
}

// lowers one unattained measure value without touching the survival function;
// nullopt when the instance has no safely perturbable level
inline std::optional<Instance> perturbed_unachieved(const Instance& instance) {
  Arrangement arr = build_arrangement(instance);
  PermutationTables pt = build_permutations(arr);
  PlateauBounds pb = plateau_bounds(arr, pt);
  const std::size_t kappa = arr.kappa();

  for (std::size_t j = 1; j + 1 < kappa; ++j) {
    if (is_value_achieved(j, arr, pt, pb)) continue;
    const Rational& below = arr.measure_values()[j - 1];
    const Rational& value = arr.measure_values()[j];
    const Rational& above = arr.measure_values()[j + 1];
    if (!(below < value && value < above)) continue;

    IndexSet f = arr.f_sets()[j];
    Rational floor = below;
    for (IndexSet g : instance.measure.domain().sets()) {
      if (g != f && g.subset_of(f)) floor = std::max(floor, instance.measure.value(g));
    }
    if (floor >= value) continue;

    std::vector<std::pair<IndexSet, Rational>> values;
    for (std::size_t k = 0; k < instance.measure.size(); ++k) {
      IndexSet g = instance.measure.domain().sets()[k];
      values.emplace_back(g, g == f ? (floor + value) / 2 : instance.measure.value_by_index(k));
    }
    return make_instance(instance.fca, validate_measure(instance.measure.domain(), values), instance.x);
  }
  return std::nullopt;
}

}  // namespace testgen
