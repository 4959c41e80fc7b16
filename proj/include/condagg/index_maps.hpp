#pragma once

#include <optional>
#include <vector>

#include "condagg/survival.hpp"

namespace condagg {

// The permutation linking the two enumerations of an arrangement and its
// running-minima maps:
//   pi[i] = j      whenever E_i = F_j^c   (and pi_inv its inverse)
//   i_map[i]       = min(pi[0..i])        nonincreasing
//   j_map[j]       = min(pi_inv[0..j])    nonincreasing
struct PermutationTables {
  std::vector<std::size_t> pi;
  std::vector<std::size_t> pi_inv;
  std::vector<std::size_t> i_map;
  std::vector<std::size_t> j_map;

  std::size_t kappa() const { return pi.size(); }
  bool pi_decreasing() const;
};

PermutationTables build_permutations(const Arrangement& arr);

// prefix minima read off the running-minima maps:
//   min_{k<=i} mu_(k)  = mu_{i_map[i]}
//   min_{k<=j} A_<k>   = A_{j_map[j]}
const Rational& prefix_min_measure(const Arrangement& arr, const PermutationTables& pt, std::size_t i);
const Rational& prefix_min_agg(const Arrangement& arr, const PermutationTables& pt, std::size_t j);
// min_{k<j} A_<k>, +infinity for j = 0
ExtRational prefix_min_agg_before(const Arrangement& arr, const PermutationTables& pt, std::size_t j);

enum class MapRoute { I, J };

// Survival function assembled from the running-minima maps, no minimization
// left at read-off time.
StepFunction survival_via_maps(const Arrangement& arr, const PermutationTables& pt, MapRoute route);

// When the permutation is decreasing the map formulas collapse to a direct
// read-off; returns the collapsed result (asserted equal to the map route) or
// nullopt when the permutation is not decreasing.
std::optional<StepFunction> survival_decreasing_shortcut(const Arrangement& arr, const PermutationTables& pt);

enum class IndexedRoute { ViaI, ViaJ };

// The survival function drawn over integer axes, before the relabeling that
// swaps index i for A_i and level k for mu_k.
StepFunction indexed_survival(const PermutationTables& pt, IndexedRoute route = IndexedRoute::ViaI);

// Plateau delimiters (all four arrays nondecreasing):
//   phi_low/phi_high: first/last measure index with the same measure value
//   psi_low/psi_high: first/last aggregation index with the same running
//                     minimum of mu_(.)
struct PlateauBounds {
  std::vector<std::size_t> phi_low;
  std::vector<std::size_t> phi_high;
  std::vector<std::size_t> psi_low;
  std::vector<std::size_t> psi_high;
};

PlateauBounds plateau_bounds(const Arrangement& arr, const PermutationTables& pt);

// right-open interval with a possibly infinite upper end
struct Interval {
  Rational lo;
  ExtRational hi;

  bool empty() const { return !(ExtRational(lo) < hi); }
  friend bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }
};

// the greatest interval on which mu_j is attained (may be empty)
Interval greatest_interval_measure(const Arrangement& arr, const PermutationTables& pt,
                                   const PlateauBounds& pb, std::size_t j);
// the greatest interval on which the running minimum at i is attained
Interval greatest_interval_agg(const Arrangement& arr, const PermutationTables& pt, const PlateauBounds& pb,
                               std::size_t i);

// mu_j is attained iff its greatest interval is nonempty
bool is_value_achieved(std::size_t j, const Arrangement& arr, const PermutationTables& pt,
                       const PlateauBounds& pb);

enum class CompactRoute { Phi, Psi };

// Survival function with one nonempty summand per distinct attained value,
// assembled from the plateau bounds.
StepFunction survival_compact(const Arrangement& arr, const PermutationTables& pt, const PlateauBounds& pb,
                              CompactRoute route);
// the raw summands before canonicalization (plus the zero tail piece)
std::vector<Piece> compact_pieces(const Arrangement& arr, const PermutationTables& pt,
                                  const PlateauBounds& pb, CompactRoute route);

}  // namespace condagg
