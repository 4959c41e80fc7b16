#include "condagg/equivalence.hpp"

#include <algorithm>

namespace condagg {

bool integral_equivalent(const Instance& a, const Instance& b) {
  return survival_agg_scan(build_arrangement(a)) == survival_agg_scan(build_arrangement(b));
}

namespace {

std::vector<LevelInterval> attained_profile(const Instance& instance) {
  Arrangement arr = build_arrangement(instance);
  PermutationTables pt = build_permutations(arr);
  PlateauBounds pb = plateau_bounds(arr, pt);

  std::vector<LevelInterval> profile;
  for (std::size_t j = 0; j < arr.kappa(); ++j) {
    if (pb.phi_low[j] != j) continue;  // one entry per block of equal values
    Interval interval = greatest_interval_measure(arr, pt, pb, j);
    if (interval.empty()) continue;
    profile.push_back(LevelInterval{arr.measure_values()[j], std::move(interval)});
  }
  return profile;  // ascending by value already (measure values are sorted)
}

}  // namespace

EquivalenceReport equivalence_condition(const Instance& a, const Instance& b) {
  EquivalenceReport report;
  report.left_profile = attained_profile(a);
  report.right_profile = attained_profile(b);

  auto find_unmatched = [](const std::vector<LevelInterval>& from,
                           const std::vector<LevelInterval>& in) -> std::optional<LevelInterval> {
    for (const LevelInterval& level : from) {
      if (std::find(in.begin(), in.end(), level) == in.end()) return level;
    }
    return std::nullopt;
  };

  if (auto missing = find_unmatched(report.left_profile, report.right_profile)) {
    report.equivalent = false;
    report.witness = std::move(missing);
    report.witness_side = 1;
  } else if (auto extra = find_unmatched(report.right_profile, report.left_profile)) {
    report.equivalent = false;
    report.witness = std::move(extra);
    report.witness_side = 2;
  }
  return report;
}

}  // namespace condagg
