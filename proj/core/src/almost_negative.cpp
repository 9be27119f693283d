#include "coxhyp/almost_negative.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "coxhyp/errors.hpp"

namespace coxhyp {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

Eigen::MatrixXd block_of(const Eigen::MatrixXd& m, const IndexSet& subset) {
  const auto k = idx(subset.size());
  Eigen::MatrixXd b(k, k);
  for (Eigen::Index r = 0; r < k; ++r) {
    for (Eigen::Index c = 0; c < k; ++c) {
      b(r, c) = m(idx(subset[static_cast<std::size_t>(r)]), idx(subset[static_cast<std::size_t>(c)]));
    }
  }
  return b;
}

// Schur complement of the (p,p) entry, p removed; entries as in link_single.
Eigen::MatrixXd eliminate(const Eigen::MatrixXd& c, Eigen::Index p) {
  const Eigen::Index n = c.rows();
  Eigen::MatrixXd d(n - 1, n - 1);
  const double pivot = c(p, p);
  for (Eigen::Index j = 0, dj = 0; j < n; ++j) {
    if (j == p) continue;
    for (Eigen::Index k = 0, dk = 0; k < n; ++k) {
      if (k == p) continue;
      d(dj, dk) = c(j, k) - c(p, j) * c(p, k) / pivot;
      ++dk;
    }
    ++dj;
  }
  return d;
}

}  // namespace

AlmostNegativeMatrix::AlmostNegativeMatrix(Eigen::MatrixXd values, const Tolerance& tol)
    : values_(std::move(values)) {
  if (values_.rows() != values_.cols()) {
    throw DomainError("matrix is not square");
  }
  if (!values_.allFinite()) {
    throw DomainError("matrix has non-finite entries");
  }
  const auto th = thresholds(tol);
  const Eigen::Index n = values_.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (std::abs(values_(i, j) - values_(j, i)) > kSymmetryTolerance) {
        throw DomainError("matrix is not symmetric at (" + std::to_string(i + 1) + "," +
                          std::to_string(j + 1) + ")");
      }
      if (values_(i, j) > th.zero) {
        throw DomainError("off-diagonal entry (" + std::to_string(i + 1) + "," +
                          std::to_string(j + 1) + ") is positive");
      }
    }
  }
}

AlmostNegativeMatrix AlmostNegativeMatrix::from_rows(const std::vector<std::vector<double>>& rows,
                                                     const Tolerance& tol) {
  const auto n = idx(rows.size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (idx(rows[static_cast<std::size_t>(i)].size()) != n) {
      throw DomainError("row " + std::to_string(i + 1) + " has the wrong length");
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  return AlmostNegativeMatrix(std::move(m), tol);
}

double AlmostNegativeMatrix::inf_norm() const {
  if (values_.size() == 0) return 0.0;
  return values_.cwiseAbs().rowwise().sum().maxCoeff();
}

Thresholds AlmostNegativeMatrix::thresholds(const Tolerance& tol) const {
  const double scale = std::max(1.0, inf_norm());
  const double base = tol.absolute.value_or(tol.relative * scale);
  const double det_base = tol.absolute.value_or(tol.relative);
  return {base, base, det_base * std::pow(scale, static_cast<double>(order()))};
}

std::string_view to_string(MatrixClass c) {
  switch (c) {
    case MatrixClass::PositiveDefinite: return "PositiveDefinite";
    case MatrixClass::Parabolic: return "Parabolic";
    case MatrixClass::DegenerateNonParabolic: return "DegenerateNonParabolic";
    case MatrixClass::Indefinite: return "Indefinite";
  }
  return "?";
}

AlmostNegativeMatrix principal_submatrix(const AlmostNegativeMatrix& a, const IndexSet& subset) {
  if (subset.empty()) throw DomainError("principal submatrix needs a non-empty index set");
  if (!subset.within(a.order())) {
    throw DomainError("index set " + subset.to_string() + " out of range for order " +
                      std::to_string(a.order()));
  }
  // Entries are copied from a validated matrix; skip re-validation scale effects.
  return AlmostNegativeMatrix(block_of(a.values(), subset), Tolerance{.absolute = a.thresholds().zero});
}

std::vector<double> positive_pivots(const Eigen::MatrixXd& m, double threshold) {
  Eigen::MatrixXd w = m;
  const Eigen::Index n = w.rows();
  std::vector<double> pivots;
  pivots.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    const double p = w(k, k);
    if (!(p > threshold)) break;
    pivots.push_back(p);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      const double f = w(i, k) / p;
      for (Eigen::Index j = k + 1; j <= i; ++j) {
        w(i, j) -= f * w(j, k);
        w(j, i) = w(i, j);
      }
    }
  }
  return pivots;
}

bool is_positive_definite(const AlmostNegativeMatrix& a, const IndexSet& subset,
                          const Tolerance& tol) {
  if (subset.empty()) return true;
  if (!subset.within(a.order())) throw DomainError("index set out of range");
  const auto block = block_of(a.values(), subset);
  return positive_pivots(block, a.thresholds(tol).pd).size() == subset.size();
}

MatrixClass classify(const AlmostNegativeMatrix& a, const Tolerance& tol) {
  const std::size_t n = a.order();
  const auto th = a.thresholds(tol);
  if (n == 0) return MatrixClass::PositiveDefinite;
  if (n == 1) {
    const double v = a(0, 0);
    if (v > th.pd) return MatrixClass::PositiveDefinite;
    if (v >= -th.pd) return MatrixClass::DegenerateNonParabolic;
    return MatrixClass::Indefinite;
  }
  if (positive_pivots(a.values(), th.pd).size() == n) return MatrixClass::PositiveDefinite;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a.values(), Eigen::EigenvaluesOnly);
  const auto& lambda = eig.eigenvalues();
  if (lambda.minCoeff() < -th.pd) return MatrixClass::Indefinite;

  const double det = lambda.prod();
  if (std::abs(det) > th.det) return MatrixClass::DegenerateNonParabolic;
  // Every proper principal submatrix sits inside one of order n-1.
  const auto all = IndexSet::range(n);
  for (std::size_t drop = 0; drop < n; ++drop) {
    if (!is_positive_definite(a, all.without(drop), tol)) {
      return MatrixClass::DegenerateNonParabolic;
    }
  }
  return MatrixClass::Parabolic;
}

AlmostNegativeMatrix link_single(const AlmostNegativeMatrix& c, std::size_t pivot,
                                 const Tolerance& tol) {
  if (pivot >= c.order()) throw DomainError("link pivot out of range");
  const auto th = c.thresholds(tol);
  if (!(c(pivot, pivot) > th.pd)) {
    throw DomainError("link undefined: diagonal entry " + std::to_string(pivot + 1) +
                      " is not positive");
  }
  return AlmostNegativeMatrix(eliminate(c.values(), idx(pivot)), Tolerance{.absolute = th.zero});
}

AlmostNegativeMatrix link(const AlmostNegativeMatrix& a, const IndexSet& subset,
                          const Tolerance& tol) {
  if (subset.empty()) return a;
  if (!subset.within(a.order())) throw DomainError("link index set out of range");
  if (!is_positive_definite(a, subset, tol)) {
    throw DomainError("link undefined: principal submatrix on " + subset.to_string() +
                      " is not positive definite");
  }
  const auto th = a.thresholds(tol);
  Eigen::MatrixXd m = a.values();
  std::vector<std::size_t> remaining(a.order());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  for (auto i : subset) {
    const auto pos = std::find(remaining.begin(), remaining.end(), i) - remaining.begin();
    if (!(m(pos, pos) > th.pd)) {
      throw DomainError("link pivot " + std::to_string(i + 1) + " vanished during elimination");
    }
    m = eliminate(m, pos);
    remaining.erase(remaining.begin() + pos);
  }
  return AlmostNegativeMatrix(std::move(m), Tolerance{.absolute = th.zero});
}

AlmostNegativeMatrix normalize(const AlmostNegativeMatrix& a, const Tolerance& tol) {
  const auto th = a.thresholds(tol);
  const Eigen::Index n = a.values().rows();
  Eigen::VectorXd d(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double v = a.values()(i, i);
    d(i) = v > th.pd ? 1.0 / std::sqrt(v) : 1.0;
  }
  Eigen::MatrixXd scaled = d.asDiagonal() * a.values() * d.asDiagonal();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a.values()(i, i) > th.pd) scaled(i, i) = 1.0;
  }
  return AlmostNegativeMatrix(std::move(scaled), Tolerance{.absolute = th.zero});
}

std::optional<Split> reducibility(const AlmostNegativeMatrix& a, const Tolerance& tol) {
  const std::size_t n = a.order();
  if (n < 2) throw DomainError("reducibility needs order >= 2");
  const double zero = a.thresholds(tol).zero;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::vector<std::size_t> component;
  while (!stack.empty()) {
    auto i = stack.back();
    stack.pop_back();
    component.push_back(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (!seen[j] && j != i && std::abs(a(i, j)) > zero) {
        seen[j] = true;
        stack.push_back(j);
      }
    }
  }
  if (component.size() == n) return std::nullopt;
  IndexSet first(std::move(component));
  IndexSet second = first.complement(n);
  if (shortlex_less(second, first)) std::swap(first, second);
  return Split{std::move(first), std::move(second)};
}

DefiniteSubsets definite_subsets(const AlmostNegativeMatrix& a, const Tolerance& tol) {
  const std::size_t n = a.order();
  if (n > 63) throw LimitError("order too large for subset enumeration");
  const double pd = a.thresholds(tol).pd;
  DefiniteSubsets out;
  std::unordered_set<std::uint64_t> cells;

  std::vector<IndexSet> level;
  for (std::size_t i = 0; i < n; ++i) {
    IndexSet s{i};
    if (a(i, i) > pd) {
      cells.insert(s.mask());
      level.push_back(s);
    } else {
      out.minimal_non_definite.push_back(s);
    }
  }
  while (!level.empty()) {
    out.positive_definite.insert(out.positive_definite.end(), level.begin(), level.end());
    std::vector<IndexSet> next;
    for (const auto& base : level) {
      const std::uint64_t base_mask = base.mask();
      for (std::size_t j = base.values().back() + 1; j < n; ++j) {
        const std::uint64_t cand = base_mask | (std::uint64_t{1} << j);
        bool faces_ok = true;
        for (auto i : base) {
          if (!cells.count(cand & ~(std::uint64_t{1} << i))) {
            faces_ok = false;
            break;
          }
        }
        if (!faces_ok) continue;
        auto s = IndexSet::from_mask(cand);
        if (positive_pivots(block_of(a.values(), s), pd).size() == s.size()) {
          cells.insert(cand);
          next.push_back(std::move(s));
        } else {
          out.minimal_non_definite.push_back(std::move(s));
        }
      }
    }
    level = std::move(next);
  }
  std::sort(out.minimal_non_definite.begin(), out.minimal_non_definite.end(), shortlex_less);
  return out;
}

std::vector<ZeroRowWitness> scan_zero_row_links(const AlmostNegativeMatrix& a,
                                                const Tolerance& tol) {
  const std::size_t n = a.order();
  const double zero = a.thresholds(tol).zero;
  std::vector<IndexSet> pivots{IndexSet{}};
  for (auto& s : definite_subsets(a, tol).positive_definite) {
    if (s.size() < n) pivots.push_back(std::move(s));
  }
  std::vector<ZeroRowWitness> out;
  for (const auto& pivot_set : pivots) {
    const auto lk = link(a, pivot_set, tol);
    const auto rest = pivot_set.complement(n);
    const auto& m = lk.values();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (m.row(r).cwiseAbs().maxCoeff() <= zero) {
        out.push_back({pivot_set, rest[static_cast<std::size_t>(r)]});
      }
    }
  }
  return out;
}

std::string_view to_string(LemmaBConclusion c) {
  switch (c) {
    case LemmaBConclusion::Parabolic: return "Parabolic";
    case LemmaBConclusion::Reducible: return "Reducible";
    case LemmaBConclusion::NoZeroRowLinkFound: return "NoZeroRowLinkFound";
    case LemmaBConclusion::Violation: return "LEMMA VIOLATION";
  }
  return "?";
}

LemmaBReport check_lemma_b(const AlmostNegativeMatrix& a, const Tolerance& tol) {
  if (a.order() < 2) throw DomainError("zero-row link check needs order >= 2");
  LemmaBReport report;
  report.witnesses = scan_zero_row_links(a, tol);
  if (report.witnesses.empty()) return report;
  if (classify(a, tol) == MatrixClass::Parabolic) {
    report.conclusion = LemmaBConclusion::Parabolic;
  } else if (auto split = reducibility(a, tol)) {
    report.conclusion = LemmaBConclusion::Reducible;
    report.split = std::move(split);
  } else {
    report.conclusion = LemmaBConclusion::Violation;
  }
  return report;
}

}  // namespace coxhyp
