#include "condagg/sets.hpp"

#include <algorithm>
#include <bit>

namespace condagg {

IndexSet IndexSet::of(std::initializer_list<int> elements) {
  std::uint32_t bits = 0;
  for (int i : elements) bits |= std::uint32_t(1) << (i - 1);
  return IndexSet(bits);
}

IndexSet IndexSet::from_elements(const std::vector<int>& elements) {
  std::uint32_t bits = 0;
  for (int i : elements) bits |= std::uint32_t(1) << (i - 1);
  return IndexSet(bits);
}

int IndexSet::cardinality() const { return std::popcount(bits_); }

std::vector<int> IndexSet::elements() const {
  std::vector<int> out;
  out.reserve(cardinality());
  for (int i = 1; i <= kMaxGroundSetSize; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::string IndexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int i : elements()) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  out += "}";
  return out;
}

std::string IndexSet::to_string(const std::vector<std::string>& labels) const {
  if (labels.empty()) return to_string();
  std::string out = "{";
  bool first = true;
  for (int i : elements()) {
    if (!first) out += ",";
    out += static_cast<std::size_t>(i) <= labels.size() ? labels[i - 1] : std::to_string(i);
    first = false;
  }
  out += "}";
  return out;
}

bool lex_less(IndexSet a, IndexSet b) {
  const auto ea = a.elements();
  const auto eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

bool canonical_less(IndexSet a, IndexSet b) {
  const int ca = a.cardinality();
  const int cb = b.cardinality();
  if (ca != cb) return ca < cb;
  return lex_less(a, b);
}

Collection validate_collection(int n, std::vector<IndexSet> sets) {
  if (n < 1 || n > kMaxGroundSetSize) {
    throw Error(ErrorCode::OutOfRangeIndex,
                "ground set size must be in [1, " + std::to_string(kMaxGroundSetSize) + "]");
  }
  const IndexSet full = IndexSet::full(n);
  for (IndexSet e : sets) {
    if (!e.subset_of(full)) {
      throw Error(ErrorCode::OutOfRangeIndex, e.to_string() + " is not a subset of [" + std::to_string(n) + "]");
    }
  }
  std::sort(sets.begin(), sets.end(), canonical_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

  if (sets.empty() || !sets.front().is_empty()) throw Error(ErrorCode::MissingEmptySet, "collection must contain {}");
  if (sets.back() != full) {
    throw Error(ErrorCode::MissingFullSet, "collection must contain " + full.to_string());
  }
  if (sets.size() > kMaxCollectionSize) {
    throw Error(ErrorCode::OutOfRangeIndex, "collection exceeds " + std::to_string(kMaxCollectionSize) + " sets");
  }

  Collection c;
  c.n_ = n;
  c.sets_ = std::move(sets);
  c.index_.reserve(c.sets_.size());
  for (std::size_t i = 0; i < c.sets_.size(); ++i) c.index_.emplace(c.sets_[i].bits(), i);
  return c;
}

std::optional<std::size_t> Collection::index_of(IndexSet e) const {
  auto it = index_.find(e.bits());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Collection complement_collection(const Collection& c) {
  std::vector<IndexSet> complements;
  complements.reserve(c.size());
  for (IndexSet e : c.sets()) complements.push_back(e.complement(c.n()));
  return validate_collection(c.n(), std::move(complements));
}

Collection powerset_collection(int n) {
  if (n < 1 || n > 16) {
    throw Error(ErrorCode::OutOfRangeIndex, "full powerset supported for n in [1, 16]");
  }
  std::vector<IndexSet> sets;
  sets.reserve(std::size_t(1) << n);
  for (std::uint32_t bits = 0; bits < (std::uint32_t(1) << n); ++bits) sets.emplace_back(bits);
  return validate_collection(n, std::move(sets));
}

}  // namespace condagg
