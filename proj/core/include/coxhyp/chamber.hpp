#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "coxhyp/coxeter_system.hpp"
#include "coxhyp/index_set.hpp"

namespace coxhyp {

/// Fundamental chamber of the piecewise-Euclidean metric on the Davis complex
/// of a finite Coxeter system, in ambient coordinates of R^n.
struct Chamber {
  Eigen::MatrixXd gram;                 ///< positive definite cosine matrix A
  std::vector<Eigen::VectorXd> dual_basis;  ///< u_j with A u_j = e_j
  Eigen::VectorXd apex;                 ///< p, at A-distance 1 from every facet
  /// q_T for every T (keyed by bit mask): the A-orthogonal projection of p
  /// onto span{u_i : i in T}.
  std::map<std::uint64_t, Eigen::VectorXd> vertices;
  /// Coefficients of q_T in the basis u_i (i in T), same keys.
  std::map<std::uint64_t, Eigen::VectorXd> vertex_coefficients;

  /// Smallest coefficient over all q_T; >= 0 when every q_T lies in its cone.
  double min_cone_coefficient() const;
};

/// Subset counts above this are refused by `chamber` (2^n vertices).
inline constexpr std::size_t kMaxChamberRank = 16;

/// Throws DomainError when the cosine matrix is not positive definite.
Chamber chamber(const CoxeterSystem& sys);

/// One coset w W_T of a spherical special subgroup.
struct DavisCell {
  std::vector<std::size_t> word;  ///< shortlex-minimal coset representative
  IndexSet subset;                ///< T
  std::vector<std::size_t> covers;  ///< ids of cells w' W_{T+s} containing this one
};

/// Cells of the poset of spherical cosets, grouped by |T| then T (lex), then
/// by representative in shortlex order.
struct DavisPoset {
  std::size_t group_order = 0;
  std::vector<DavisCell> cells;
};

inline constexpr std::size_t kMaxGroupOrder = 10000;

/// Enumerates W through its geometric representation (matrices deduplicated
/// on a 1e-6 grid). Throws DomainError for infinite W and LimitError when
/// more than `max_order` elements appear.
DavisPoset enumerate_davis_cells(const CoxeterSystem& sys, std::size_t max_order = kMaxGroupOrder);

/// Representative word as labels, e.g. "s1s2"; "e" for the identity.
std::string word_to_string(const std::vector<std::size_t>& word,
                           const std::vector<std::string>& labels);

}  // namespace coxhyp
