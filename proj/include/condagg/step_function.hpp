#pragma once

#include <string>
#include <vector>

#include "condagg/rational.hpp"

namespace condagg {

// One right-open piece [lo, hi) with a constant value; hi may be +infinity.
struct Piece {
  Rational lo;
  ExtRational hi;
  Rational value;

  bool empty() const { return !(ExtRational(lo) < hi); }
  friend bool operator==(const Piece& a, const Piece& b) {
    return a.lo == b.lo && a.hi == b.hi && a.value == b.value;
  }
};

// Piecewise constant function on [0, +inf) in canonical form: strictly
// ascending breakpoints starting at 0, values of adjacent pieces distinct.
// values[k] holds on [breakpoints[k], breakpoints[k+1]) and values.back()
// holds from the last breakpoint on.
class StepFunction {
 public:
  static StepFunction constant(Rational value);

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Rational>& values() const { return values_; }
  std::size_t piece_count() const { return values_.size(); }
  const Rational& final_value() const { return values_.back(); }

  const Rational& value_at(const Rational& alpha) const;
  Rational integrate() const;  // throws DivergentIntegral when the tail is nonzero
  std::vector<Piece> pieces() const;
  std::string to_string() const;

  friend bool operator==(const StepFunction& a, const StepFunction& b) {
    return a.breakpoints_ == b.breakpoints_ && a.values_ == b.values_;
  }
  friend bool operator!=(const StepFunction& a, const StepFunction& b) { return !(a == b); }

 private:
  StepFunction() = default;
  friend StepFunction canonicalize_step(std::vector<Piece> pieces);
  std::vector<Rational> breakpoints_;
  std::vector<Rational> values_;
};

// Empty pieces are dropped and adjacent equal values merged. The remaining
// pieces must tile [0, +inf) exactly, otherwise GapOrOverlap is thrown.
StepFunction canonicalize_step(std::vector<Piece> pieces);

Rational integrate_step(const StepFunction& f);

}  // namespace condagg
