#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace coxhyp {

/// Sorted, duplicate-free set of 0-based generator / row indices.
///
/// Text I/O is 1-based (`{1,3}`); everything in memory is 0-based.
class IndexSet {
 public:
  IndexSet() = default;
  /// Sorts and deduplicates.
  explicit IndexSet(std::vector<std::size_t> indices);
  IndexSet(std::initializer_list<std::size_t> indices);

  static IndexSet range(std::size_t n);
  static IndexSet from_mask(std::uint64_t mask);
  /// Parses a 1-based list such as "1,2,4" (empty string gives the empty set).
  static IndexSet parse_one_based(const std::string& text);

  std::uint64_t mask() const;

  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  std::size_t operator[](std::size_t k) const { return indices_[k]; }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }
  std::span<const std::size_t> view() const { return indices_; }
  const std::vector<std::size_t>& values() const { return indices_; }

  bool contains(std::size_t i) const;
  bool is_subset_of(const IndexSet& other) const;
  /// Position of `i` inside the set; `size()` when absent.
  std::size_t position(std::size_t i) const;
  /// True iff every index is < n.
  bool within(std::size_t n) const;

  IndexSet united(const IndexSet& other) const;
  IndexSet intersected(const IndexSet& other) const;
  /// Elements of {0,...,n-1} not in this set.
  IndexSet complement(std::size_t n) const;
  IndexSet without(std::size_t i) const;

  /// "{1,3}" style, 1-based.
  std::string to_string() const;
  /// "{s1,s3}" style using the given labels.
  std::string to_string(std::span<const std::string> labels) const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::size_t> indices_;
};

/// Size first, then lexicographic. This is the canonical enumeration order
/// used for every deterministic search in the library.
bool shortlex_less(const IndexSet& a, const IndexSet& b);

/// All k-element subsets of `base` in lexicographic order.
std::vector<IndexSet> combinations(const IndexSet& base, std::size_t k);

}  // namespace coxhyp
