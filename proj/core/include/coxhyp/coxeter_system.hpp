#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "coxhyp/almost_negative.hpp"
#include "coxhyp/index_set.hpp"

namespace coxhyp {

/// Order of a product s_i s_j. `kInfiniteOrder` marks a free pair.
using CoxeterOrder = std::uint32_t;
inline constexpr CoxeterOrder kInfiniteOrder = std::numeric_limits<CoxeterOrder>::max();

/// Generators plus a symmetric order matrix with unit diagonal and
/// off-diagonal entries >= 2 or infinite.
class CoxeterSystem {
 public:
  CoxeterSystem() = default;
  /// Row-major n*n orders. Labels default to s1..sn. Throws DomainError.
  CoxeterSystem(std::size_t n, std::vector<CoxeterOrder> orders,
                std::vector<std::string> labels = {});
  static CoxeterSystem from_rows(const std::vector<std::vector<CoxeterOrder>>& rows,
                                 std::vector<std::string> labels = {});
  /// n generators, every pair commuting (m = 2).
  static CoxeterSystem right_angled(std::size_t n);

  std::size_t rank() const { return n_; }
  CoxeterOrder order(std::size_t i, std::size_t j) const { return orders_[i * n_ + j]; }
  bool is_infinite(std::size_t i, std::size_t j) const { return order(i, j) == kInfiniteOrder; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Copy with the (i,j) and (j,i) orders replaced.
  CoxeterSystem with_order(std::size_t i, std::size_t j, CoxeterOrder m) const;
  /// The special subsystem generated by `subset`, relabelled 0..|subset|-1.
  CoxeterSystem subsystem(const IndexSet& subset) const;
  /// Generators renumbered so that new generator k is old generator perm[k].
  CoxeterSystem permuted(const std::vector<std::size_t>& perm) const;

  friend bool operator==(const CoxeterSystem&, const CoxeterSystem&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<CoxeterOrder> orders_;
  std::vector<std::string> labels_;
};

/// -cos(pi/m) off the diagonal (-1 for infinite m), 1 on it.
AlmostNegativeMatrix cosine_matrix(const CoxeterSystem& sys);

/// Connected components of the Coxeter diagram (edge iff m >= 3),
/// ordered by smallest element.
std::vector<IndexSet> irreducible_components(const CoxeterSystem& sys);

/// Whether the diagram restricted to `subset` is connected (empty: false).
bool is_connected(const CoxeterSystem& sys, const IndexSet& subset);

/// W_T finite, decided as positive-definiteness of the cosine block on T.
bool is_finite(const CoxeterSystem& sys, const IndexSet& subset, const Tolerance& tol = {});

/// (W_T, T) irreducible with parabolic cosine block. Needs |T| >= 2.
bool is_affine(const CoxeterSystem& sys, const IndexSet& subset, const Tolerance& tol = {});

}  // namespace coxhyp
