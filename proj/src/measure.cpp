#include "condagg/measure.hpp"

#include <algorithm>

namespace condagg {

const Rational& MonotoneMeasure::value(IndexSet f) const {
  auto idx = domain_.index_of(f);
  if (!idx) throw Error(ErrorCode::SetNotInCollection, f.to_string() + " is not in the measure domain");
  return values_[*idx];
}

namespace {

void check_monotone_powerset(const Collection& domain, const std::vector<Rational>& values) {
  // on the full powerset it is enough to compare covering pairs F vs F\{i}
  for (std::size_t j = 0; j < domain.size(); ++j) {
    IndexSet f = domain.sets()[j];
    for (int i : f.elements()) {
      IndexSet sub = f.without(i);
      std::size_t k = *domain.index_of(sub);
      if (values[k] > values[j]) {
        throw Error(ErrorCode::MonotonicityViolation, sub.to_string() + " ⊆ " + f.to_string());
      }
    }
  }
}

void check_monotone_general(const Collection& domain, const std::vector<Rational>& values) {
  // sets are ordered by cardinality, so only pairs (i, j) with i < j can nest
  const auto& sets = domain.sets();
  for (std::size_t j = 1; j < sets.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (sets[i].subset_of(sets[j]) && values[i] > values[j]) {
        throw Error(ErrorCode::MonotonicityViolation, sets[i].to_string() + " ⊆ " + sets[j].to_string());
      }
    }
  }
}

}  // namespace

MonotoneMeasure validate_measure(Collection domain, std::vector<Rational> values) {
  if (values.size() != domain.size()) {
    throw Error(ErrorCode::DomainMismatch, "expected " + std::to_string(domain.size()) + " values, got " +
                                               std::to_string(values.size()));
  }
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (values[j] < 0) {
      throw Error(ErrorCode::NegativeValue, domain.sets()[j].to_string() + " has value " + to_fraction_string(values[j]));
    }
  }
  if (values.front() != 0) {
    // canonical order puts {} first
    throw Error(ErrorCode::NonZeroEmptySet, "value on {} is " + to_fraction_string(values.front()));
  }
  if (values.back() == 0) {
    throw Error(ErrorCode::ZeroFullSet, "value on the full set must be positive");
  }
  if (domain.is_full_powerset()) {
    check_monotone_powerset(domain, values);
  } else {
    check_monotone_general(domain, values);
  }

  return MonotoneMeasure(std::move(domain), std::move(values));
}

MonotoneMeasure validate_measure(Collection domain, const std::vector<std::pair<IndexSet, Rational>>& values) {
  std::vector<Rational> ordered(domain.size());
  std::vector<bool> seen(domain.size(), false);
  for (const auto& [set, value] : values) {
    auto idx = domain.index_of(set);
    if (!idx) throw Error(ErrorCode::SetNotInCollection, set.to_string() + " is not in the measure domain");
    if (seen[*idx]) throw Error(ErrorCode::DomainMismatch, "duplicate value for " + set.to_string());
    ordered[*idx] = value;
    seen[*idx] = true;
  }
  for (std::size_t j = 0; j < seen.size(); ++j) {
    if (!seen[j]) throw Error(ErrorCode::DomainMismatch, "missing value for " + domain.sets()[j].to_string());
  }
  return validate_measure(std::move(domain), std::move(ordered));
}

MonotoneMeasure greatest_measure(const Collection& domain) {
  std::vector<Rational> values(domain.size(), Rational(1));
  values.front() = 0;
  return validate_measure(domain, std::move(values));
}

MonotoneMeasure weakest_measure(const Collection& domain) {
  std::vector<Rational> values(domain.size(), Rational(0));
  values.back() = 1;
  return validate_measure(domain, std::move(values));
}

MonotoneMeasure symmetric_measure(int n, const std::vector<Rational>& levels) {
  if (static_cast<int>(levels.size()) != n + 1) {
    throw Error(ErrorCode::BadLevels, "expected " + std::to_string(n + 1) + " levels");
  }
  if (levels.front() != 0) throw Error(ErrorCode::BadLevels, "level 0 must be 0");
  for (int i = 1; i <= n; ++i) {
    if (levels[i] < levels[i - 1]) throw Error(ErrorCode::BadLevels, "levels must be nondecreasing");
  }
  if (levels.back() == 0) throw Error(ErrorCode::BadLevels, "top level must be positive");
  Collection domain = powerset_collection(n);
  std::vector<Rational> values;
  values.reserve(domain.size());
  for (IndexSet f : domain.sets()) values.push_back(levels[f.cardinality()]);
  return validate_measure(std::move(domain), std::move(values));
}

namespace {

void check_distribution(int n, const std::vector<Rational>& distribution) {
  if (static_cast<int>(distribution.size()) != n) {
    throw Error(ErrorCode::BadLevels, "expected " + std::to_string(n) + " distribution values");
  }
  Rational top = 0;
  for (const Rational& p : distribution) {
    if (p < 0 || p > 1) throw Error(ErrorCode::BadLevels, "distribution values must lie in [0, 1]");
    top = std::max(top, p);
  }
  if (top != 1) throw Error(ErrorCode::BadLevels, "distribution must attain 1");
}

}  // namespace

MonotoneMeasure possibility_measure(int n, const std::vector<Rational>& distribution) {
  check_distribution(n, distribution);
  Collection domain = powerset_collection(n);
  std::vector<Rational> values;
  values.reserve(domain.size());
  for (IndexSet f : domain.sets()) {
    Rational v = 0;
    for (int i : f.elements()) v = std::max(v, distribution[i - 1]);
    values.push_back(v);
  }
  return validate_measure(std::move(domain), std::move(values));
}

MonotoneMeasure necessity_measure(int n, const std::vector<Rational>& distribution) {
  check_distribution(n, distribution);
  Collection domain = powerset_collection(n);
  std::vector<Rational> values;
  values.reserve(domain.size());
  for (IndexSet f : domain.sets()) {
    Rational outside = 0;  // max over the complement; empty max is 0
    for (int i : f.complement(n).elements()) outside = std::max(outside, distribution[i - 1]);
    values.push_back(Rational(1) - outside);
  }
  return validate_measure(std::move(domain), std::move(values));
}

MonotoneMeasure additive_measure(int n, const std::vector<Rational>& weights) {
  if (static_cast<int>(weights.size()) != n) {
    throw Error(ErrorCode::BadLevels, "expected " + std::to_string(n) + " weights");
  }
  for (const Rational& w : weights) {
    if (w < 0) throw Error(ErrorCode::NegativeValue, "weights must be nonnegative");
  }
  Collection domain = powerset_collection(n);
  std::vector<Rational> values;
  values.reserve(domain.size());
  for (IndexSet f : domain.sets()) {
    Rational v = 0;
    for (int i : f.elements()) v += weights[i - 1];
    values.push_back(v);
  }
  return validate_measure(std::move(domain), std::move(values));
}

}  // namespace condagg
