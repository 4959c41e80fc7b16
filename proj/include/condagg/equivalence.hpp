#pragma once

#include <optional>
#include <vector>

#include "condagg/index_maps.hpp"

namespace condagg {

// Two instances are integral equivalent when their survival functions agree
// everywhere; equivalent instances always receive the same integral score.
bool integral_equivalent(const Instance& a, const Instance& b);

struct LevelInterval {
  Rational value;
  Interval interval;

  friend bool operator==(const LevelInterval& a, const LevelInterval& b) {
    return a.value == b.value && a.interval == b.interval;
  }
};

struct EquivalenceReport {
  bool equivalent = true;
  // attained measure levels with their greatest intervals, ascending by value
  std::vector<LevelInterval> left_profile;
  std::vector<LevelInterval> right_profile;
  std::optional<LevelInterval> witness;  // first level without a counterpart
  int witness_side = 0;                  // 1 = left, 2 = right
};

// Structural test: every attained level of one side has a counterpart level
// of the other side with the same value and the same greatest interval.
// Agrees with integral_equivalent on every input.
EquivalenceReport equivalence_condition(const Instance& a, const Instance& b);

}  // namespace condagg
