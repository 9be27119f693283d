#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <numbers>
#include <optional>
#include <vector>

#include "coxhyp/almost_negative.hpp"
#include "coxhyp/index_set.hpp"

namespace coxhyp {

/// Cell enumeration is exponential in the order; larger matrices are refused.
inline constexpr std::size_t kMaxNerveOrder = 20;

/// Norm tolerance for points of a nerve.
inline constexpr double kUnitNormTolerance = 1e-9;

/// The piecewise-spherical complex N(A): one spherical simplex per index set
/// with positive definite principal block, metrised by the form of A.
class NerveComplex {
 public:
  /// All positive definite index sets, by monotone breadth-first growth.
  /// Throws LimitError above kMaxNerveOrder.
  static NerveComplex build(const AlmostNegativeMatrix& gram, const Tolerance& tol = {});

  const AlmostNegativeMatrix& gram() const { return gram_; }
  const Tolerance& tolerance() const { return tol_; }
  /// Non-empty cells, size-then-lex.
  const std::vector<IndexSet>& cells() const { return cells_; }
  const std::vector<IndexSet>& maximal_cells() const { return maximal_; }
  /// Index of each row of `gram()` in the matrix this complex was derived
  /// from (identity unless produced by link_complex).
  const std::vector<std::size_t>& vertex_ids() const { return vertex_ids_; }

  bool is_cell(const IndexSet& s) const;
  std::size_t dimension() const;

 private:
  friend NerveComplex link_complex(const NerveComplex& nerve, const IndexSet& cell);

  AlmostNegativeMatrix gram_;
  Tolerance tol_;
  std::vector<IndexSet> cells_;
  std::vector<IndexSet> maximal_;
  std::vector<std::size_t> vertex_ids_;
};

inline NerveComplex build_nerve(const AlmostNegativeMatrix& gram, const Tolerance& tol = {}) {
  return NerveComplex::build(gram, tol);
}

/// A point of N(A): non-negative coefficients on the vertices of `cell`
/// (coordinates in the standard basis e_i), of unit A-norm.
struct NervePoint {
  IndexSet cell;
  std::vector<double> coeffs;

  /// v_i = e_i / sqrt(a_ii).
  static NervePoint vertex(const AlmostNegativeMatrix& gram, std::size_t i);
  /// Support detection on ambient coordinates; validated against `nerve`.
  static NervePoint from_ambient(const NerveComplex& nerve, const Eigen::VectorXd& x);

  Eigen::VectorXd ambient(std::size_t order) const;
  IndexSet support(double zero) const;
};

/// Throws DomainError unless `p` is a point of `nerve`.
void validate_point(const NerveComplex& nerve, const NervePoint& p);

struct GeodesicResult {
  double distance = 0.0;           ///< radians; +inf when unreachable
  std::vector<NervePoint> path;    ///< polyline, endpoints included
  std::size_t resolution = 0;
  double error_bound = 0.0;        ///< estimated discretisation error, radians
};

/// arccos of the A-inner product, for two points whose supports together
/// span a cell. Throws DomainError otherwise.
double simplex_distance(const AlmostNegativeMatrix& gram, const NervePoint& a,
                        const NervePoint& b, const Tolerance& tol = {});

/// Length-metric distance in N, approximated from above by a shortest path
/// through lattice samples on the faces shared by maximal cells (denominator
/// `resolution` in barycentric coordinates). Doubling the resolution refines
/// the sample set, so the result never increases under doubling.
GeodesicResult intrinsic_distance(const NerveComplex& nerve, const NervePoint& x,
                                  const NervePoint& y, std::size_t resolution);

/// Point of the suspension S N: polar angle in [0, pi] plus a base point.
/// The base is ignored (and may be absent) at the poles.
struct SuspensionPoint {
  double polar = std::numbers::pi / 2;
  std::optional<NervePoint> base;
};

/// Spherical join metric:
///   cos d' = cos t1 cos t2 + sin t1 sin t2 cos(min(d_N(p, q), pi)).
GeodesicResult suspension_distance(const NerveComplex& nerve, const SuspensionPoint& x,
                                   const SuspensionPoint& y, std::size_t resolution);

/// Both points on the equator.
GeodesicResult suspension_distance(const NerveComplex& nerve, const NervePoint& x,
                                   const NervePoint& y, std::size_t resolution);

/// Nerve of the link matrix lk(cell, gram). `cell` empty gives `nerve`.
NerveComplex link_complex(const NerveComplex& nerve, const IndexSet& cell);

struct InnerProductMaximum {
  NervePoint point;
  double value = 0.0;
};

/// Exact maximiser of <u, z>_A over z in N(A). `u` must have non-negative
/// coordinates and unit A-norm.
InnerProductMaximum max_inner_product_over_nerve(const AlmostNegativeMatrix& gram,
                                                 const Eigen::VectorXd& u,
                                                 const Tolerance& tol = {});

}  // namespace coxhyp
