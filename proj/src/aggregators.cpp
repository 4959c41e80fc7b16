#include "condagg/aggregators.hpp"

#include <algorithm>

#include "condagg/choquet.hpp"

namespace condagg {

AggregatorKind AggregatorKind::choquet(MonotoneMeasure inner) {
  if (!inner.domain().is_full_powerset()) {
    throw Error(ErrorCode::MeasureNotOnPowerset, "inner measure must live on the full powerset");
  }
  AggregatorKind k(AggregatorTag::ChoquetBased);
  k.inner_ = std::make_shared<const MonotoneMeasure>(std::move(inner));
  return k;
}

const MonotoneMeasure& AggregatorKind::inner() const {
  if (!inner_) throw Error(ErrorCode::PreconditionViolated, "aggregator has no inner measure");
  return *inner_;
}

const char* AggregatorKind::name() const {
  switch (tag_) {
    case AggregatorTag::Max: return "max";
    case AggregatorTag::Min: return "min";
    case AggregatorTag::Sum: return "sum";
    case AggregatorTag::ChoquetBased: return "choquet";
  }
  return "?";
}

bool operator==(const AggregatorKind& a, const AggregatorKind& b) {
  if (a.tag_ != b.tag_) return false;
  if (a.tag_ != AggregatorTag::ChoquetBased) return true;
  return *a.inner_ == *b.inner_;
}

AggregatorFamily::AggregatorFamily(Collection collection, const AggregatorKind& uniform)
    : collection_(std::move(collection)), kinds_(collection_.size(), uniform) {}

AggregatorFamily::AggregatorFamily(Collection collection, std::vector<AggregatorKind> kinds)
    : collection_(std::move(collection)), kinds_(std::move(kinds)) {
  if (kinds_.size() != collection_.size()) {
    throw Error(ErrorCode::DomainMismatch, "one aggregator kind per collection set expected");
  }
}

const AggregatorKind& AggregatorFamily::kind_of(IndexSet e) const {
  auto idx = collection_.index_of(e);
  if (!idx) throw Error(ErrorCode::SetNotInCollection, e.to_string() + " is not in the collection");
  return kinds_[*idx];
}

bool AggregatorFamily::uniform() const {
  for (std::size_t i = 1; i < kinds_.size(); ++i) {
    if (!(kinds_[i] == kinds_[0])) return false;
  }
  return true;
}

Rational AggregatorFamily::evaluate(const std::vector<Rational>& x, IndexSet e) const {
  auto idx = collection_.index_of(e);
  if (!idx) throw Error(ErrorCode::SetNotInCollection, e.to_string() + " is not in the collection");
  if (x.size() != static_cast<std::size_t>(collection_.n())) {
    throw Error(ErrorCode::DomainMismatch, "vector length differs from the ground set size");
  }
  for (const Rational& xi : x) {
    if (xi < 0) throw Error(ErrorCode::NegativeComponent, "vector components must be nonnegative");
  }
  if (e.is_empty()) return 0;

  switch (kinds_[*idx].tag()) {
    case AggregatorTag::Max: {
      Rational best = 0;
      bool first = true;
      for (int i : e.elements()) {
        if (first || x[i - 1] > best) best = x[i - 1];
        first = false;
      }
      return best;
    }
    case AggregatorTag::Min: {
      Rational best = 0;
      bool first = true;
      for (int i : e.elements()) {
        if (first || x[i - 1] < best) best = x[i - 1];
        first = false;
      }
      return best;
    }
    case AggregatorTag::Sum: {
      Rational total = 0;
      for (int i : e.elements()) total += x[i - 1];
      return total;
    }
    case AggregatorTag::ChoquetBased: {
      std::vector<Rational> masked(x.size(), Rational(0));
      for (int i : e.elements()) masked[i - 1] = x[i - 1];
      return choquet_standard(masked, kinds_[*idx].inner());
    }
  }
  throw Error(ErrorCode::PreconditionViolated, "unknown aggregator kind");
}

bool AggregatorFamily::nondecreasing_in_sets() const {
  std::optional<std::size_t> reference;
  for (std::size_t i = 0; i < kinds_.size(); ++i) {
    if (collection_.sets()[i].is_empty()) continue;
    if (kinds_[i].tag() == AggregatorTag::Min) return false;
    if (!reference) {
      reference = i;
    } else if (!(kinds_[i] == kinds_[*reference])) {
      return false;  // mixed kinds can break E -> A(x|E) monotonicity
    }
  }
  return true;
}

namespace {

AxiomReport run_axiom_checks(const Collection& collection,
                             const std::function<Rational(const std::vector<Rational>&, IndexSet)>& aggregate,
                             const std::vector<ProbePair>& probes) {
  AxiomReport report;
  const int n = collection.n();

  auto fail = [&](AxiomCounterexample ce) {
    report.passed = false;
    report.counterexample = std::move(ce);
  };

  // (ii) the indicator of the complement aggregates to zero
  for (IndexSet e : collection.sets()) {
    if (e.is_empty()) continue;
    std::vector<Rational> indicator(n, Rational(0));
    for (int i : e.complement(n).elements()) indicator[i - 1] = 1;
    Rational v = aggregate(indicator, e);
    ++report.checks;
    if (v != 0) {
      fail(AxiomCounterexample{2, e, indicator, {}, v, Rational(0)});
      return report;
    }
  }

  auto check_pair = [&](IndexSet e, const std::vector<Rational>& x, const std::vector<Rational>& y) -> bool {
    Rational left = aggregate(x, e);
    Rational right = aggregate(y, e);
    ++report.checks;
    if (left > right) {
      fail(AxiomCounterexample{1, e, x, y, left, right});
      return false;
    }
    return true;
  };

  // (i) monotonicity on caller probes, restricted to the sets where x <= y
  for (const auto& [x, y] : probes) {
    for (IndexSet e : collection.sets()) {
      if (e.is_empty()) continue;
      bool comparable = true;
      for (int i : e.elements()) {
        if (x[i - 1] > y[i - 1]) {
          comparable = false;
          break;
        }
      }
      if (comparable && !check_pair(e, x, y)) return report;
    }
  }

  // (i) default sweep: bump one coordinate at a time through {0, 1/2, 1}^n;
  // monotonicity on the grid lattice follows from the single-step checks
  if (n <= 6) {
    const Rational levels[3] = {Rational(0), Rational(1, 2), Rational(1)};
    std::vector<int> state(n, 0);
    std::vector<Rational> x(n, Rational(0));
    while (true) {
      for (int i = 0; i < n; ++i) x[i] = levels[state[i]];
      for (IndexSet e : collection.sets()) {
        if (e.is_empty()) continue;
        for (int i : e.elements()) {
          if (state[i - 1] == 2) continue;
          std::vector<Rational> y = x;
          y[i - 1] = levels[state[i - 1] + 1];
          if (!check_pair(e, x, y)) return report;
        }
      }
      int pos = 0;
      while (pos < n && state[pos] == 2) state[pos++] = 0;
      if (pos == n) break;
      ++state[pos];
    }
  }
  return report;
}

}  // namespace

AxiomReport check_axioms(const AggregatorFamily& family, const std::vector<ProbePair>& probes) {
  return check_axioms_fn(
      family.collection(),
      [&family](const std::vector<Rational>& x, IndexSet e) { return family.evaluate(x, e); }, probes);
}

AxiomReport check_axioms_fn(const Collection& collection,
                            const std::function<Rational(const std::vector<Rational>&, IndexSet)>& aggregate,
                            const std::vector<ProbePair>& probes) {
  return run_axiom_checks(collection, aggregate, probes);
}

}  // namespace condagg
