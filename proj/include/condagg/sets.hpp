#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "condagg/error.hpp"

namespace condagg {

constexpr int kMaxGroundSetSize = 24;
constexpr std::size_t kMaxCollectionSize = std::size_t(1) << 16;

// Subset of the ground set {1, ..., n}; element i lives in bit i-1.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::uint32_t bits) : bits_(bits) {}

  static IndexSet empty() { return IndexSet(); }
  static IndexSet full(int n) { return IndexSet((std::uint32_t(1) << n) - 1); }
  static IndexSet of(std::initializer_list<int> elements);
  static IndexSet from_elements(const std::vector<int>& elements);
  static IndexSet single(int i) { return IndexSet(std::uint32_t(1) << (i - 1)); }

  std::uint32_t bits() const { return bits_; }
  bool is_empty() const { return bits_ == 0; }
  bool contains(int i) const { return (bits_ >> (i - 1)) & 1u; }
  int cardinality() const;
  bool subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }

  IndexSet complement(int n) const { return IndexSet(~bits_ & full(n).bits_); }
  IndexSet union_with(IndexSet other) const { return IndexSet(bits_ | other.bits_); }
  IndexSet intersect(IndexSet other) const { return IndexSet(bits_ & other.bits_); }
  IndexSet with(int i) const { return IndexSet(bits_ | (std::uint32_t(1) << (i - 1))); }
  IndexSet without(int i) const { return IndexSet(bits_ & ~(std::uint32_t(1) << (i - 1))); }

  std::vector<int> elements() const;  // ascending
  std::string to_string() const;      // "{1,3}", "{}" when empty
  std::string to_string(const std::vector<std::string>& labels) const;

  friend bool operator==(IndexSet a, IndexSet b) { return a.bits_ == b.bits_; }
  friend bool operator!=(IndexSet a, IndexSet b) { return a.bits_ != b.bits_; }

 private:
  std::uint32_t bits_ = 0;
};

// cardinality first, then lexicographic on the ascending element lists;
// the deterministic order used for collections and reported sets
bool canonical_less(IndexSet a, IndexSet b);

// plain lexicographic order of the ascending element lists; the empty set
// comes first and a set precedes its proper supersets
bool lex_less(IndexSet a, IndexSet b);

// Family of subsets of [n] that contains {} and [n]; sets are deduplicated
// and kept in canonical order, so equal collections compare equal.
class Collection {
 public:
  int n() const { return n_; }
  std::size_t size() const { return sets_.size(); }  // kappa
  const std::vector<IndexSet>& sets() const { return sets_; }
  bool contains(IndexSet e) const { return index_.count(e.bits()) != 0; }
  std::optional<std::size_t> index_of(IndexSet e) const;
  bool is_full_powerset() const { return sets_.size() == (std::size_t(1) << n_); }

  friend bool operator==(const Collection& a, const Collection& b) {
    return a.n_ == b.n_ && a.sets_ == b.sets_;
  }
  friend bool operator!=(const Collection& a, const Collection& b) { return !(a == b); }

 private:
  friend Collection validate_collection(int n, std::vector<IndexSet> sets);
  Collection() = default;
  int n_ = 0;
  std::vector<IndexSet> sets_;
  std::unordered_map<std::uint32_t, std::size_t> index_;
};

Collection validate_collection(int n, std::vector<IndexSet> sets);
Collection complement_collection(const Collection& c);
Collection powerset_collection(int n);  // n <= 16 so kappa fits the cap

}  // namespace condagg
