#include "coxhyp/index_set.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "coxhyp/errors.hpp"

namespace coxhyp {

IndexSet::IndexSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
}

IndexSet::IndexSet(std::initializer_list<std::size_t> indices)
    : IndexSet(std::vector<std::size_t>(indices)) {}

IndexSet IndexSet::range(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return IndexSet(std::move(v));
}

IndexSet IndexSet::from_mask(std::uint64_t mask) {
  std::vector<std::size_t> v;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1U) v.push_back(i);
  }
  IndexSet s;
  s.indices_ = std::move(v);
  return s;
}

IndexSet IndexSet::parse_one_based(const std::string& text) {
  std::vector<std::size_t> v;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    if (token.empty()) continue;
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value == 0) {
      throw ParseError("invalid index '" + token + "' (indices are 1-based integers)");
    }
    v.push_back(value - 1);
  }
  return IndexSet(std::move(v));
}

std::uint64_t IndexSet::mask() const {
  std::uint64_t m = 0;
  for (auto i : indices_) {
    if (i >= 64) throw LimitError("index set too large for a 64-bit mask");
    m |= std::uint64_t{1} << i;
  }
  return m;
}

bool IndexSet::contains(std::size_t i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

bool IndexSet::is_subset_of(const IndexSet& other) const {
  return std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(),
                       indices_.end());
}

std::size_t IndexSet::position(std::size_t i) const {
  auto it = std::lower_bound(indices_.begin(), indices_.end(), i);
  if (it == indices_.end() || *it != i) return indices_.size();
  return static_cast<std::size_t>(it - indices_.begin());
}

bool IndexSet::within(std::size_t n) const { return indices_.empty() || indices_.back() < n; }

IndexSet IndexSet::united(const IndexSet& other) const {
  IndexSet r;
  std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(), other.indices_.end(),
                 std::back_inserter(r.indices_));
  return r;
}

IndexSet IndexSet::intersected(const IndexSet& other) const {
  IndexSet r;
  std::set_intersection(indices_.begin(), indices_.end(), other.indices_.begin(),
                        other.indices_.end(), std::back_inserter(r.indices_));
  return r;
}

IndexSet IndexSet::complement(std::size_t n) const {
  IndexSet r;
  for (std::size_t i = 0; i < n; ++i) {
    if (!contains(i)) r.indices_.push_back(i);
  }
  return r;
}

IndexSet IndexSet::without(std::size_t i) const {
  IndexSet r = *this;
  auto it = std::lower_bound(r.indices_.begin(), r.indices_.end(), i);
  if (it != r.indices_.end() && *it == i) r.indices_.erase(it);
  return r;
}

std::string IndexSet::to_string() const {
  std::string s = "{";
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(indices_[k] + 1);
  }
  return s + "}";
}

std::string IndexSet::to_string(std::span<const std::string> labels) const {
  std::string s = "{";
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (k) s += ',';
    auto i = indices_[k];
    s += i < labels.size() ? labels[i] : std::to_string(i + 1);
  }
  return s + "}";
}

bool shortlex_less(const IndexSet& a, const IndexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<IndexSet> combinations(const IndexSet& base, std::size_t k) {
  std::vector<IndexSet> out;
  const std::size_t n = base.size();
  if (k > n) return out;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    std::vector<std::size_t> v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = base[pick[i]];
    out.emplace_back(std::move(v));
    // advance to next combination
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

}  // namespace coxhyp
