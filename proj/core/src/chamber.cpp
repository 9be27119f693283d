#include "coxhyp/chamber.hpp"

#include <algorithm>
#include <limits>

#include "coxhyp/errors.hpp"

namespace coxhyp {

double Chamber::min_cone_coefficient() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& [mask, c] : vertex_coefficients) {
    if (c.size() > 0) m = std::min(m, c.minCoeff());
  }
  return m;
}

Chamber chamber(const CoxeterSystem& sys) {
  const std::size_t n = sys.rank();
  if (n > kMaxChamberRank) throw LimitError("chamber enumeration refused above rank 16");
  const auto cos = cosine_matrix(sys);
  if (classify(cos) != MatrixClass::PositiveDefinite) {
    throw DomainError("chamber needs a finite Coxeter system (positive definite cosine matrix)");
  }
  Chamber ch;
  ch.gram = cos.values();
  const auto N = static_cast<Eigen::Index>(n);
  const Eigen::LLT<Eigen::MatrixXd> llt(ch.gram);
  const Eigen::MatrixXd inv = llt.solve(Eigen::MatrixXd::Identity(N, N));
  for (Eigen::Index j = 0; j < N; ++j) ch.dual_basis.emplace_back(inv.col(j));

  // <p, e_s>_A = 1 for every s, i.e. A p = 1: unit distance to each facet
  // hyperplane, whose A-unit normal is e_s.
  ch.apex = llt.solve(Eigen::VectorXd::Ones(N));

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto t = IndexSet::from_mask(mask);
    const auto k = static_cast<Eigen::Index>(t.size());
    Eigen::VectorXd q = Eigen::VectorXd::Zero(N);
    Eigen::VectorXd coeff(k);
    if (k > 0) {
      // Gram of {u_i} under A is A^{-1} restricted to T; <p, u_i>_A = p_i.
      Eigen::MatrixXd g(k, k);
      Eigen::VectorXd rhs(k);
      for (Eigen::Index r = 0; r < k; ++r) {
        const auto i = static_cast<Eigen::Index>(t[static_cast<std::size_t>(r)]);
        rhs(r) = ch.apex(i);
        for (Eigen::Index c = 0; c < k; ++c) {
          g(r, c) = inv(i, static_cast<Eigen::Index>(t[static_cast<std::size_t>(c)]));
        }
      }
      coeff = g.llt().solve(rhs);
      for (Eigen::Index r = 0; r < k; ++r) {
        q += coeff(r) * ch.dual_basis[t[static_cast<std::size_t>(r)]];
      }
    }
    ch.vertices.emplace(mask, std::move(q));
    ch.vertex_coefficients.emplace(mask, std::move(coeff));
  }
  return ch;
}

}  // namespace coxhyp
