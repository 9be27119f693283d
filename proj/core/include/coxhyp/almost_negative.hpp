#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "coxhyp/index_set.hpp"

namespace coxhyp {

/// Scale-aware numerical thresholds for one matrix.
///
/// With s = max(1, ||A||_inf) and n the order:
///   zero = pd = r * s,  det = r * s^n,
/// where r is `relative` (1e-9 by default). `absolute`, when set, replaces
/// r*s for zero/pd and r for det.
struct Tolerance {
  double relative = 1e-9;
  std::optional<double> absolute;
};

struct Thresholds {
  double zero;
  double pd;
  double det;
};

/// Entries may differ from their transpose by at most this much.
inline constexpr double kSymmetryTolerance = 1e-12;

/// Symmetric real matrix whose off-diagonal entries are non-positive
/// (up to the zero threshold). Zero or negative diagonal entries are allowed.
class AlmostNegativeMatrix {
 public:
  AlmostNegativeMatrix() = default;
  /// Validates symmetry and the sign pattern; throws DomainError otherwise.
  explicit AlmostNegativeMatrix(Eigen::MatrixXd values, const Tolerance& tol = {});
  static AlmostNegativeMatrix from_rows(const std::vector<std::vector<double>>& rows,
                                        const Tolerance& tol = {});

  std::size_t order() const { return static_cast<std::size_t>(values_.rows()); }
  double operator()(std::size_t i, std::size_t j) const {
    return values_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  const Eigen::MatrixXd& values() const { return values_; }
  /// Maximum absolute row sum.
  double inf_norm() const;
  Thresholds thresholds(const Tolerance& tol = {}) const;

  /// A-inner product xᵀ A y of ambient coordinate vectors.
  double inner(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
    return x.dot(values_ * y);
  }

 private:
  Eigen::MatrixXd values_;
};

enum class MatrixClass { PositiveDefinite, Parabolic, DegenerateNonParabolic, Indefinite };

std::string_view to_string(MatrixClass c);

/// Rows/columns of `a` restricted to `subset`, order preserved.
/// Throws DomainError on an empty or out-of-range subset.
AlmostNegativeMatrix principal_submatrix(const AlmostNegativeMatrix& a, const IndexSet& subset);

/// Pivots of the unpivoted symmetric triangular factorisation, stopping at
/// the first pivot <= threshold. The matrix is positive definite iff the
/// returned vector has full length.
std::vector<double> positive_pivots(const Eigen::MatrixXd& m, double threshold);

/// Positive-definiteness of the principal block on `subset` (true for the
/// empty set).
bool is_positive_definite(const AlmostNegativeMatrix& a, const IndexSet& subset,
                          const Tolerance& tol = {});

/// Positive definite, parabolic (order >= 2, det 0, every proper principal
/// submatrix positive definite), singular semidefinite but not parabolic, or
/// indefinite.
MatrixClass classify(const AlmostNegativeMatrix& a, const Tolerance& tol = {});

/// Link with respect to the single index `pivot`:
///   d_jk = c_jk - c_{pivot,j} c_{pivot,k} / c_{pivot,pivot}
/// over the remaining indices, in their original order. Throws DomainError
/// when the pivot diagonal entry is not positive.
AlmostNegativeMatrix link_single(const AlmostNegativeMatrix& c, std::size_t pivot,
                                 const Tolerance& tol = {});

/// Link matrix of `a` with respect to `subset`: the Gram matrix, under the
/// form of `a`, of the projections of the remaining basis vectors onto the
/// orthogonal complement of span{e_i : i in subset}. Rows are indexed by
/// `subset.complement(a.order())`. Requires the principal block on `subset`
/// to be positive definite.
AlmostNegativeMatrix link(const AlmostNegativeMatrix& a, const IndexSet& subset,
                          const Tolerance& tol = {});

/// D A D with d_i = 1/sqrt(a_ii) for positive diagonal entries, 1 otherwise.
AlmostNegativeMatrix normalize(const AlmostNegativeMatrix& a, const Tolerance& tol = {});

/// Nontrivial bipartition of the index set.
struct Split {
  IndexSet first;
  IndexSet second;
  friend bool operator==(const Split&, const Split&) = default;
};

/// When the zero pattern of `a` is disconnected: the component of the first
/// index against the rest, the two sides ordered size-then-lexicographic.
/// Throws DomainError for order < 2.
std::optional<Split> reducibility(const AlmostNegativeMatrix& a, const Tolerance& tol = {});

/// Non-empty index sets whose principal block is positive definite, together
/// with the inclusion-minimal sets whose block is not.
struct DefiniteSubsets {
  std::vector<IndexSet> positive_definite;       ///< size-then-lex order
  std::vector<IndexSet> minimal_non_definite;    ///< size-then-lex order
};

/// Monotone breadth-first growth: a set is tested only after all of its
/// co-dimension-one subsets were found positive definite.
DefiniteSubsets definite_subsets(const AlmostNegativeMatrix& a, const Tolerance& tol = {});

/// lk(pivot_set, A) has row `row` (an original index) entirely zero.
struct ZeroRowWitness {
  IndexSet pivot_set;
  std::size_t row;
  friend bool operator==(const ZeroRowWitness&, const ZeroRowWitness&) = default;
};

/// Every (I, r) with A_I positive definite (the empty set included), I not
/// the full index set, and row r of lk(I, A) zero up to the zero threshold.
/// Sorted by I (size then lex), then by r.
std::vector<ZeroRowWitness> scan_zero_row_links(const AlmostNegativeMatrix& a,
                                                const Tolerance& tol = {});

enum class LemmaBConclusion { Parabolic, Reducible, NoZeroRowLinkFound, Violation };

std::string_view to_string(LemmaBConclusion c);

struct LemmaBReport {
  std::vector<ZeroRowWitness> witnesses;
  LemmaBConclusion conclusion = LemmaBConclusion::NoZeroRowLinkFound;
  std::optional<Split> split;  ///< set when conclusion is Reducible

  bool violation() const { return conclusion == LemmaBConclusion::Violation; }
};

/// Whenever some link matrix has a zero row, `a` must be parabolic or
/// reducible. A `Violation` conclusion means neither held, which would
/// contradict the lemma. Order must be >= 2.
LemmaBReport check_lemma_b(const AlmostNegativeMatrix& a, const Tolerance& tol = {});

}  // namespace coxhyp
