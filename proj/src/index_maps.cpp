#include "condagg/index_maps.hpp"

#include <algorithm>
#include <unordered_map>

namespace condagg {

bool PermutationTables::pi_decreasing() const {
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (pi[i] != pi.size() - 1 - i) return false;
  }
  return true;
}

PermutationTables build_permutations(const Arrangement& arr) {
  const std::size_t kappa = arr.kappa();
  std::unordered_map<std::uint32_t, std::size_t> f_index;
  f_index.reserve(kappa);
  for (std::size_t j = 0; j < kappa; ++j) f_index.emplace(arr.f_sets()[j].bits(), j);

  PermutationTables pt;
  pt.pi.resize(kappa);
  pt.pi_inv.resize(kappa);
  for (std::size_t i = 0; i < kappa; ++i) {
    std::size_t j = f_index.at(arr.e_sets()[i].complement(arr.n()).bits());
    pt.pi[i] = j;
    pt.pi_inv[j] = i;
  }
  pt.i_map.resize(kappa);
  pt.j_map.resize(kappa);
  for (std::size_t k = 0; k < kappa; ++k) {
    pt.i_map[k] = k == 0 ? pt.pi[0] : std::min(pt.i_map[k - 1], pt.pi[k]);
    pt.j_map[k] = k == 0 ? pt.pi_inv[0] : std::min(pt.j_map[k - 1], pt.pi_inv[k]);
  }
  return pt;
}

const Rational& prefix_min_measure(const Arrangement& arr, const PermutationTables& pt, std::size_t i) {
  return arr.measure_values()[pt.i_map[i]];
}

const Rational& prefix_min_agg(const Arrangement& arr, const PermutationTables& pt, std::size_t j) {
  return arr.agg_values()[pt.j_map[j]];
}

ExtRational prefix_min_agg_before(const Arrangement& arr, const PermutationTables& pt, std::size_t j) {
  if (j == 0) return ExtRational::infinity();
  return prefix_min_agg(arr, pt, j - 1);
}

StepFunction survival_via_maps(const Arrangement& arr, const PermutationTables& pt, MapRoute route) {
  const std::size_t kappa = arr.kappa();
  std::vector<Piece> pieces;
  pieces.reserve(kappa);
  if (route == MapRoute::I) {
    for (std::size_t i = 0; i < kappa; ++i) {
      pieces.push_back(Piece{arr.agg_values()[i], arr.agg_value_ext(i + 1), prefix_min_measure(arr, pt, i)});
    }
  } else {
    for (std::size_t j = 0; j < kappa; ++j) {
      ExtRational hi = j == 0 ? ExtRational::infinity() : ExtRational(prefix_min_agg(arr, pt, j - 1));
      pieces.push_back(Piece{prefix_min_agg(arr, pt, j), hi, arr.measure_values()[j]});
    }
  }
  return canonicalize_step(std::move(pieces));
}

std::optional<StepFunction> survival_decreasing_shortcut(const Arrangement& arr, const PermutationTables& pt) {
  if (!pt.pi_decreasing()) return std::nullopt;
  const std::size_t kappa = arr.kappa();
  std::vector<Piece> pieces;
  pieces.reserve(kappa);
  for (std::size_t i = 0; i < kappa; ++i) {
    pieces.push_back(Piece{arr.agg_values()[i], arr.agg_value_ext(i + 1), arr.measure_values()[kappa - 1 - i]});
  }
  StepFunction shortcut = canonicalize_step(std::move(pieces));
  if (shortcut != survival_via_maps(arr, pt, MapRoute::I)) {
    throw Error(ErrorCode::PreconditionViolated, "decreasing shortcut disagrees with the map route");
  }
  return shortcut;
}

StepFunction indexed_survival(const PermutationTables& pt, IndexedRoute route) {
  const std::size_t kappa = pt.kappa();
  std::vector<Piece> pieces;
  if (route == IndexedRoute::ViaI) {
    for (std::size_t i = 0; i + 1 < kappa; ++i) {
      pieces.push_back(
          Piece{Rational(static_cast<long long>(i)), Rational(static_cast<long long>(i + 1)),
                Rational(static_cast<long long>(pt.i_map[i]))});
    }
    pieces.push_back(Piece{Rational(static_cast<long long>(kappa - 1)), ExtRational::infinity(),
                           Rational(static_cast<long long>(pt.i_map[kappa - 1]))});
  } else {
    // generalized inverse of j_map; the j = 0 term is the zero tail
    pieces.push_back(Piece{Rational(static_cast<long long>(pt.j_map[0])), ExtRational::infinity(), Rational(0)});
    for (std::size_t j = 1; j < kappa; ++j) {
      pieces.push_back(Piece{Rational(static_cast<long long>(pt.j_map[j])),
                             Rational(static_cast<long long>(pt.j_map[j - 1])),
                             Rational(static_cast<long long>(j))});
    }
  }
  return canonicalize_step(std::move(pieces));
}

PlateauBounds plateau_bounds(const Arrangement& arr, const PermutationTables& pt) {
  const std::size_t kappa = arr.kappa();
  PlateauBounds pb;
  pb.phi_low.resize(kappa);
  pb.phi_high.resize(kappa);
  pb.psi_low.resize(kappa);
  pb.psi_high.resize(kappa);

  // phi: runs of equal measure values
  for (std::size_t j = 0; j < kappa;) {
    std::size_t end = j;
    while (end + 1 < kappa && arr.measure_values()[end + 1] == arr.measure_values()[j]) ++end;
    for (std::size_t k = j; k <= end; ++k) {
      pb.phi_low[k] = j;
      pb.phi_high[k] = end;
    }
    j = end + 1;
  }
  // psi: runs of equal running minima of mu_(.)
  for (std::size_t i = 0; i < kappa;) {
    std::size_t end = i;
    while (end + 1 < kappa && prefix_min_measure(arr, pt, end + 1) == prefix_min_measure(arr, pt, i)) ++end;
    for (std::size_t k = i; k <= end; ++k) {
      pb.psi_low[k] = i;
      pb.psi_high[k] = end;
    }
    i = end + 1;
  }
  return pb;
}

Interval greatest_interval_measure(const Arrangement& arr, const PermutationTables& pt,
                                   const PlateauBounds& pb, std::size_t j) {
  if (j >= arr.kappa()) throw Error(ErrorCode::IndexOutOfRange, "measure index " + std::to_string(j));
  Rational lo = prefix_min_agg(arr, pt, pb.phi_high[j]);
  ExtRational hi = prefix_min_agg_before(arr, pt, pb.phi_low[j]);
  return Interval{std::move(lo), std::move(hi)};
}

Interval greatest_interval_agg(const Arrangement& arr, const PermutationTables& pt, const PlateauBounds& pb,
                               std::size_t i) {
  if (i >= arr.kappa()) throw Error(ErrorCode::IndexOutOfRange, "aggregation index " + std::to_string(i));
  return Interval{arr.agg_values()[pb.psi_low[i]], arr.agg_value_ext(pb.psi_high[i] + 1)};
}

bool is_value_achieved(std::size_t j, const Arrangement& arr, const PermutationTables& pt,
                       const PlateauBounds& pb) {
  return !greatest_interval_measure(arr, pt, pb, j).empty();
}

std::vector<Piece> compact_pieces(const Arrangement& arr, const PermutationTables& pt,
                                  const PlateauBounds& pb, CompactRoute route) {
  const std::size_t kappa = arr.kappa();
  std::vector<Piece> pieces;
  pieces.reserve(kappa);

  if (route == CompactRoute::Phi) {
    // summand j lives on [min_{k < phi_low(j+1)} A_<k>, min_{k < phi_low(j)} A_<k>)
    // with phi_low(kappa) = kappa; a summand with an infinite lower end is
    // empty and has no finite representation, so it is dropped here
    for (std::size_t j = 1; j < kappa; ++j) {
      std::size_t low_next = j + 1 < kappa ? pb.phi_low[j + 1] : kappa;
      if (low_next == 0) continue;
      Rational lo = prefix_min_agg(arr, pt, low_next - 1);
      ExtRational hi = prefix_min_agg_before(arr, pt, pb.phi_low[j]);
      pieces.push_back(Piece{std::move(lo), std::move(hi), arr.measure_values()[j]});
    }
    // the level mu_0 = 0 appears in the sum only when the zero block extends
    // past index 0; otherwise its tail piece is added here
    if (arr.measure_values()[1] > 0) {
      pieces.push_back(
          Piece{prefix_min_agg(arr, pt, pb.phi_high[0]), ExtRational::infinity(), Rational(0)});
    }
  } else {
    // summand i lives on [A_{psi_low(i)}, A_{psi_low(i+1)}) and carries the
    // running minimum at i
    for (std::size_t i = 0; i + 1 < kappa; ++i) {
      pieces.push_back(Piece{arr.agg_values()[pb.psi_low[i]], arr.agg_values()[pb.psi_low[i + 1]],
                             arr.measure_of_e_complement(pb.psi_low[i])});
    }
    pieces.push_back(
        Piece{arr.agg_values()[pb.psi_low[kappa - 1]], ExtRational::infinity(), Rational(0)});
  }
  return pieces;
}

StepFunction survival_compact(const Arrangement& arr, const PermutationTables& pt, const PlateauBounds& pb,
                              CompactRoute route) {
  return canonicalize_step(compact_pieces(arr, pt, pb, route));
}

}  // namespace condagg
