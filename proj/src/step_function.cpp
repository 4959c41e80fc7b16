#include "condagg/step_function.hpp"

#include <algorithm>

namespace condagg {

StepFunction StepFunction::constant(Rational value) {
  StepFunction f;
  f.breakpoints_.push_back(0);
  f.values_.push_back(std::move(value));
  return f;
}

const Rational& StepFunction::value_at(const Rational& alpha) const {
  if (alpha < 0) throw Error(ErrorCode::PreconditionViolated, "step functions live on [0, +inf)");
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), alpha);
  return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

Rational StepFunction::integrate() const {
  if (values_.back() != 0) {
    throw Error(ErrorCode::DivergentIntegral, "final value " + to_fraction_string(values_.back()) + " is nonzero");
  }
  Rational total = 0;
  for (std::size_t k = 0; k + 1 < breakpoints_.size(); ++k) {
    total += values_[k] * (breakpoints_[k + 1] - breakpoints_[k]);
  }
  return total;
}

std::vector<Piece> StepFunction::pieces() const {
  std::vector<Piece> out;
  out.reserve(values_.size());
  for (std::size_t k = 0; k < values_.size(); ++k) {
    ExtRational hi = k + 1 < breakpoints_.size() ? ExtRational(breakpoints_[k + 1]) : ExtRational::infinity();
    out.push_back(Piece{breakpoints_[k], hi, values_[k]});
  }
  return out;
}

std::string StepFunction::to_string() const {
  std::string out;
  for (const Piece& p : pieces()) {
    if (!out.empty()) out += ", ";
    out += "[" + to_fraction_string(p.lo) + ", " + to_fraction_string(p.hi) + ") -> " + to_fraction_string(p.value);
  }
  return out;
}

StepFunction canonicalize_step(std::vector<Piece> pieces) {
  std::erase_if(pieces, [](const Piece& p) { return p.empty(); });
  if (pieces.empty()) throw Error(ErrorCode::GapOrOverlap, "no nonempty pieces");
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return a.lo < b.lo; });

  if (pieces.front().lo != 0) {
    throw Error(ErrorCode::GapOrOverlap, "coverage starts at " + to_fraction_string(pieces.front().lo));
  }
  for (std::size_t k = 0; k + 1 < pieces.size(); ++k) {
    if (pieces[k].hi != ExtRational(pieces[k + 1].lo)) {
      throw Error(ErrorCode::GapOrOverlap, "between " + to_fraction_string(pieces[k].hi) + " and " +
                                               to_fraction_string(pieces[k + 1].lo));
    }
  }
  if (!pieces.back().hi.infinite) {
    throw Error(ErrorCode::GapOrOverlap, "coverage stops at " + to_fraction_string(pieces.back().hi));
  }

  StepFunction f;
  for (Piece& p : pieces) {
    if (!f.values_.empty() && f.values_.back() == p.value) continue;  // merge
    f.breakpoints_.push_back(std::move(p.lo));
    f.values_.push_back(std::move(p.value));
  }
  return f;
}

Rational integrate_step(const StepFunction& f) { return f.integrate(); }

}  // namespace condagg
