#include "condagg/survival.hpp"

#include <algorithm>
#include <numeric>

namespace condagg {

Instance make_instance(AggregatorFamily fca, MonotoneMeasure measure, std::vector<Rational> x) {
  if (measure.domain() != complement_collection(fca.collection())) {
    throw Error(ErrorCode::DomainMismatch, "measure domain must be the complement collection");
  }
  if (x.size() != static_cast<std::size_t>(fca.collection().n())) {
    throw Error(ErrorCode::DomainMismatch, "vector length differs from the ground set size");
  }
  for (const Rational& xi : x) {
    if (xi < 0) throw Error(ErrorCode::NegativeComponent, "vector components must be nonnegative");
  }
  return Instance{std::move(fca), std::move(measure), std::move(x)};
}

Arrangement build_arrangement(const AggregatorFamily& fca, const MonotoneMeasure& mu,
                              const std::vector<Rational>& x) {
  if (mu.domain() != complement_collection(fca.collection())) {
    throw Error(ErrorCode::DomainMismatch, "measure domain must be the complement collection");
  }
  const Collection& collection = fca.collection();
  const std::size_t kappa = collection.size();

  Arrangement arr;
  arr.n_ = collection.n();
  arr.e_sets_ = collection.sets();
  std::vector<Rational> agg_of(kappa);
  for (std::size_t i = 0; i < kappa; ++i) agg_of[i] = fca.evaluate(x, collection.sets()[i]);

  // sort E by aggregation value; lexicographic tie-break keeps {} first
  std::vector<std::size_t> order(kappa);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (agg_of[a] != agg_of[b]) return agg_of[a] < agg_of[b];
    return lex_less(collection.sets()[a], collection.sets()[b]);
  });
  arr.e_sets_.clear();
  arr.e_sets_.reserve(kappa);
  arr.agg_values_.reserve(kappa);
  for (std::size_t idx : order) {
    arr.e_sets_.push_back(collection.sets()[idx]);
    arr.agg_values_.push_back(agg_of[idx]);
  }

  // sort F by measure value; canonical tie-break keeps {} first
  arr.f_sets_ = mu.domain().sets();
  std::sort(arr.f_sets_.begin(), arr.f_sets_.end(), [&](IndexSet a, IndexSet b) {
    const Rational& va = mu.value(a);
    const Rational& vb = mu.value(b);
    if (va != vb) return va < vb;
    return canonical_less(a, b);
  });
  arr.measure_values_.reserve(kappa);
  for (IndexSet f : arr.f_sets_) arr.measure_values_.push_back(mu.value(f));

  arr.mu_of_e_complement_.reserve(kappa);
  for (IndexSet e : arr.e_sets_) arr.mu_of_e_complement_.push_back(mu.value(e.complement(collection.n())));
  return arr;
}

Arrangement build_arrangement(const Instance& instance) {
  return build_arrangement(instance.fca, instance.measure, instance.x);
}

ExtRational Arrangement::agg_value_ext(std::size_t i) const {
  if (i < agg_values_.size()) return agg_values_[i];
  return ExtRational::infinity();
}

std::vector<Piece> agg_scan_pieces(const Arrangement& arr) {
  const std::size_t kappa = arr.kappa();
  std::vector<Piece> pieces;
  pieces.reserve(kappa);
  Rational running = arr.measure_of_e_complement(0);
  for (std::size_t i = 0; i < kappa; ++i) {
    running = std::min(running, arr.measure_of_e_complement(i));
    pieces.push_back(Piece{arr.agg_values()[i], arr.agg_value_ext(i + 1), running});
  }
  return pieces;
}

std::vector<Piece> measure_scan_pieces(const Arrangement& arr) {
  // A_<j> = aggregation value of the complement of F_j; the piece for mu_j is
  // [min_{k<=j} A_<k>, min_{k<j} A_<k>) with the empty minimum +infinity
  const std::size_t kappa = arr.kappa();
  std::vector<Piece> pieces;
  pieces.reserve(kappa);

  // map: set bits -> aggregation value, to evaluate A_<j> without re-running
  // the aggregators
  std::unordered_map<std::uint32_t, const Rational*> agg_of;
  agg_of.reserve(kappa);
  for (std::size_t i = 0; i < kappa; ++i) agg_of.emplace(arr.e_sets()[i].bits(), &arr.agg_values()[i]);

  ExtRational prev_min = ExtRational::infinity();
  for (std::size_t j = 0; j < kappa; ++j) {
    IndexSet e = arr.f_sets()[j].complement(arr.n());
    const Rational& a_inv = *agg_of.at(e.bits());
    ExtRational lo = prev_min < ExtRational(a_inv) ? prev_min : ExtRational(a_inv);
    pieces.push_back(Piece{lo.finite(), prev_min, arr.measure_values()[j]});
    prev_min = lo;
  }
  return pieces;
}

StepFunction survival_agg_scan(const Arrangement& arr) { return canonicalize_step(agg_scan_pieces(arr)); }

StepFunction survival_measure_scan(const Arrangement& arr) {
  return canonicalize_step(measure_scan_pieces(arr));
}

StepFunction survival_definition(const AggregatorFamily& fca, const MonotoneMeasure& mu,
                                 const std::vector<Rational>& x) {
  if (mu.domain() != complement_collection(fca.collection())) {
    throw Error(ErrorCode::DomainMismatch, "measure domain must be the complement collection");
  }
  const Collection& collection = fca.collection();
  const int n = collection.n();

  std::vector<Rational> agg_of;
  agg_of.reserve(collection.size());
  for (IndexSet e : collection.sets()) agg_of.push_back(fca.evaluate(x, e));

  // the survival function is constant between consecutive aggregation values,
  // so the distinct values are the only candidate breakpoints
  std::vector<Rational> candidates = agg_of;
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<Piece> pieces;
  pieces.reserve(candidates.size());
  for (std::size_t t = 0; t < candidates.size(); ++t) {
    const Rational& alpha = candidates[t];
    bool found = false;
    Rational best;
    for (std::size_t i = 0; i < collection.size(); ++i) {
      if (agg_of[i] <= alpha) {
        const Rational& v = mu.value(collection.sets()[i].complement(n));
        if (!found || v < best) {
          best = v;
          found = true;
        }
      }
    }
    ExtRational hi = t + 1 < candidates.size() ? ExtRational(candidates[t + 1]) : ExtRational::infinity();
    pieces.push_back(Piece{alpha, hi, best});
  }
  return canonicalize_step(std::move(pieces));
}

StepFunction survival_definition(const Instance& instance) {
  return survival_definition(instance.fca, instance.measure, instance.x);
}

namespace {

void require_special_preconditions(const SpecialMeasure& special, const AggregatorFamily& fca) {
  if (special.kind == SpecialMeasureKind::Greatest || special.kind == SpecialMeasureKind::Weakest) return;
  if (!fca.collection().is_full_powerset()) {
    throw Error(ErrorCode::PreconditionViolated, "closed form needs the full powerset collection");
  }
  if (!fca.nondecreasing_in_sets()) {
    throw Error(ErrorCode::PreconditionViolated, "closed form needs a family nondecreasing w.r.t. sets");
  }
  const int n = fca.collection().n();
  if (special.kind == SpecialMeasureKind::Symmetric) {
    const auto& levels = special.parameters;
    if (static_cast<int>(levels.size()) != n + 1 || levels.front() != 0 || levels.back() == 0 ||
        !std::is_sorted(levels.begin(), levels.end())) {
      throw Error(ErrorCode::PreconditionViolated, "bad symmetric levels");
    }
  } else {
    const auto& pi = special.parameters;
    if (static_cast<int>(pi.size()) != n) throw Error(ErrorCode::PreconditionViolated, "bad distribution length");
    Rational top = 0;
    for (const Rational& p : pi) {
      if (p < 0 || p > 1) throw Error(ErrorCode::PreconditionViolated, "distribution values must lie in [0, 1]");
      top = std::max(top, p);
    }
    if (top != 1) throw Error(ErrorCode::PreconditionViolated, "distribution must attain 1");
  }
}

// ascending sort of the distribution, ties by index
std::vector<int> distribution_order(const std::vector<Rational>& pi) {
  std::vector<int> sigma(pi.size());
  std::iota(sigma.begin(), sigma.end(), 1);
  std::stable_sort(sigma.begin(), sigma.end(), [&](int a, int b) { return pi[a - 1] < pi[b - 1]; });
  return sigma;
}

}  // namespace

StepFunction survival_special(const SpecialMeasure& special, const AggregatorFamily& fca,
                              const std::vector<Rational>& x) {
  require_special_preconditions(special, fca);
  const Collection& collection = fca.collection();
  const int n = collection.n();

  switch (special.kind) {
    case SpecialMeasureKind::Greatest: {
      Rational top = fca.evaluate(x, IndexSet::full(n));
      std::vector<Piece> pieces;
      pieces.push_back(Piece{Rational(0), top, Rational(1)});
      pieces.push_back(Piece{top, ExtRational::infinity(), Rational(0)});
      return canonicalize_step(std::move(pieces));
    }
    case SpecialMeasureKind::Weakest: {
      bool found = false;
      Rational cut;
      for (IndexSet e : collection.sets()) {
        if (e.is_empty()) continue;
        Rational v = fca.evaluate(x, e);
        if (!found || v < cut) {
          cut = v;
          found = true;
        }
      }
      std::vector<Piece> pieces;
      pieces.push_back(Piece{Rational(0), cut, Rational(1)});
      pieces.push_back(Piece{cut, ExtRational::infinity(), Rational(0)});
      return canonicalize_step(std::move(pieces));
    }
    case SpecialMeasureKind::Symmetric: {
      // min aggregation value per cardinality; nondecreasing in the cardinality
      std::vector<Rational> min_by_card(n + 1);
      std::vector<bool> seen(n + 1, false);
      for (std::size_t i = 0; i < collection.size(); ++i) {
        IndexSet e = collection.sets()[i];
        Rational v = fca.evaluate(x, e);
        int c = e.cardinality();
        if (!seen[c] || v < min_by_card[c]) {
          min_by_card[c] = v;
          seen[c] = true;
        }
      }
      std::vector<Piece> pieces;
      for (int i = 0; i <= n; ++i) {
        Rational lo = min_by_card[n - i];
        ExtRational hi = i == 0 ? ExtRational::infinity() : ExtRational(min_by_card[n - i + 1]);
        pieces.push_back(Piece{lo, hi, special.parameters[i]});
      }
      return canonicalize_step(std::move(pieces));
    }
    case SpecialMeasureKind::Possibility: {
      const auto& pi = special.parameters;
      std::vector<int> sigma = distribution_order(pi);
      // G_i = {sigma(i), ..., sigma(n)}; the i = 0 term is the zero tail
      std::vector<IndexSet> upper(n + 2);
      upper[n + 1] = IndexSet::empty();
      for (int i = n; i >= 1; --i) upper[i] = upper[i + 1].with(sigma[i - 1]);
      std::vector<Piece> pieces;
      pieces.push_back(Piece{fca.evaluate(x, upper[1]), ExtRational::infinity(), Rational(0)});
      for (int i = 1; i <= n; ++i) {
        Rational lo = fca.evaluate(x, upper[i + 1]);
        Rational hi = fca.evaluate(x, upper[i]);
        pieces.push_back(Piece{lo, hi, pi[sigma[i - 1] - 1]});
      }
      return canonicalize_step(std::move(pieces));
    }
    case SpecialMeasureKind::Necessity: {
      const auto& pi = special.parameters;
      std::vector<int> sigma = distribution_order(pi);
      // suffix minima of the singleton aggregations along sigma
      std::vector<Rational> singleton(n + 1);
      for (int i = 1; i <= n; ++i) singleton[i] = fca.evaluate(x, IndexSet::single(sigma[i - 1]));
      std::vector<ExtRational> suffix_min(n + 2, ExtRational::infinity());
      for (int i = n; i >= 1; --i) {
        suffix_min[i] = std::min(ExtRational(singleton[i]), suffix_min[i + 1]);
      }
      std::vector<Piece> pieces;
      // i = 0: value 1 - pi(sigma(0)) = 1 on [0, min over all singletons)
      pieces.push_back(Piece{Rational(0), suffix_min[1], Rational(1)});
      for (int i = 1; i <= n; ++i) {
        pieces.push_back(Piece{suffix_min[i].finite(), suffix_min[i + 1], Rational(1) - pi[sigma[i - 1] - 1]});
      }
      return canonicalize_step(std::move(pieces));
    }
  }
  throw Error(ErrorCode::PreconditionViolated, "unknown special measure kind");
}

MonotoneMeasure induced_measure(const SpecialMeasure& special, const Collection& collection) {
  switch (special.kind) {
    case SpecialMeasureKind::Greatest: return greatest_measure(complement_collection(collection));
    case SpecialMeasureKind::Weakest: return weakest_measure(complement_collection(collection));
    case SpecialMeasureKind::Symmetric: return symmetric_measure(collection.n(), special.parameters);
    case SpecialMeasureKind::Possibility: return possibility_measure(collection.n(), special.parameters);
    case SpecialMeasureKind::Necessity: return necessity_measure(collection.n(), special.parameters);
  }
  throw Error(ErrorCode::PreconditionViolated, "unknown special measure kind");
}

}  // namespace condagg
