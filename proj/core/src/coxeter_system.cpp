#include "coxhyp/coxeter_system.hpp"

#include <cmath>
#include <numbers>

#include "coxhyp/errors.hpp"

namespace coxhyp {

CoxeterSystem::CoxeterSystem(std::size_t n, std::vector<CoxeterOrder> orders,
                             std::vector<std::string> labels)
    : n_(n), orders_(std::move(orders)), labels_(std::move(labels)) {
  if (orders_.size() != n_ * n_) throw DomainError("order matrix has the wrong size");
  for (std::size_t i = 0; i < n_; ++i) {
    if (order(i, i) != 1) {
      throw DomainError("diagonal entry " + std::to_string(i + 1) + " is not 1");
    }
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (order(i, j) != order(j, i)) {
        throw DomainError("order matrix is not symmetric at (" + std::to_string(i + 1) + "," +
                          std::to_string(j + 1) + ")");
      }
      if (order(i, j) < 2) {
        throw DomainError("off-diagonal order at (" + std::to_string(i + 1) + "," +
                          std::to_string(j + 1) + ") is below 2");
      }
    }
  }
  if (labels_.empty()) {
    for (std::size_t i = 0; i < n_; ++i) labels_.push_back("s" + std::to_string(i + 1));
  } else if (labels_.size() != n_) {
    throw DomainError("label count does not match the rank");
  }
}

CoxeterSystem CoxeterSystem::from_rows(const std::vector<std::vector<CoxeterOrder>>& rows,
                                       std::vector<std::string> labels) {
  const std::size_t n = rows.size();
  std::vector<CoxeterOrder> flat;
  flat.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw DomainError("order matrix row has the wrong length");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return CoxeterSystem(n, std::move(flat), std::move(labels));
}

CoxeterSystem CoxeterSystem::right_angled(std::size_t n) {
  std::vector<CoxeterOrder> m(n * n, 2);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
  return CoxeterSystem(n, std::move(m));
}

CoxeterSystem CoxeterSystem::with_order(std::size_t i, std::size_t j, CoxeterOrder m) const {
  if (i >= n_ || j >= n_ || i == j) throw DomainError("with_order: bad index pair");
  auto orders = orders_;
  orders[i * n_ + j] = m;
  orders[j * n_ + i] = m;
  return CoxeterSystem(n_, std::move(orders), labels_);
}

CoxeterSystem CoxeterSystem::subsystem(const IndexSet& subset) const {
  if (!subset.within(n_)) throw DomainError("subsystem index set out of range");
  const std::size_t k = subset.size();
  std::vector<CoxeterOrder> m(k * k);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < k; ++a) {
    labels.push_back(labels_[subset[a]]);
    for (std::size_t b = 0; b < k; ++b) m[a * k + b] = order(subset[a], subset[b]);
  }
  return CoxeterSystem(k, std::move(m), std::move(labels));
}

CoxeterSystem CoxeterSystem::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != n_ || !IndexSet(perm).within(n_) || IndexSet(perm).size() != n_) {
    throw DomainError("not a permutation");
  }
  std::vector<CoxeterOrder> m(n_ * n_);
  std::vector<std::string> labels(n_);
  for (std::size_t a = 0; a < n_; ++a) {
    labels[a] = labels_[perm[a]];
    for (std::size_t b = 0; b < n_; ++b) m[a * n_ + b] = order(perm[a], perm[b]);
  }
  return CoxeterSystem(n_, std::move(m), std::move(labels));
}

AlmostNegativeMatrix cosine_matrix(const CoxeterSystem& sys) {
  const auto n = static_cast<Eigen::Index>(sys.rank());
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto m = sys.order(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (i == j) {
        a(i, j) = 1.0;
      } else if (m == kInfiniteOrder) {
        a(i, j) = -1.0;
      } else if (m == 2) {
        a(i, j) = 0.0;  // exact, not -cos(pi/2) ~ -6e-17
      } else {
        a(i, j) = -std::cos(std::numbers::pi / static_cast<double>(m));
      }
    }
  }
  return AlmostNegativeMatrix(std::move(a));
}

namespace {

std::vector<IndexSet> diagram_components(const CoxeterSystem& sys, const IndexSet& subset) {
  std::vector<IndexSet> out;
  std::vector<bool> seen(sys.rank(), false);
  for (auto start : subset) {
    if (seen[start]) continue;
    std::vector<std::size_t> comp, stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      auto i = stack.back();
      stack.pop_back();
      comp.push_back(i);
      for (auto j : subset) {
        if (!seen[j] && j != i && sys.order(i, j) >= 3) {
          seen[j] = true;
          stack.push_back(j);
        }
      }
    }
    out.emplace_back(std::move(comp));
  }
  return out;
}

}  // namespace

std::vector<IndexSet> irreducible_components(const CoxeterSystem& sys) {
  return diagram_components(sys, IndexSet::range(sys.rank()));
}

bool is_connected(const CoxeterSystem& sys, const IndexSet& subset) {
  if (subset.empty()) return false;
  return diagram_components(sys, subset).size() == 1;
}

bool is_finite(const CoxeterSystem& sys, const IndexSet& subset, const Tolerance& tol) {
  if (!subset.within(sys.rank())) throw DomainError("index set out of range");
  return is_positive_definite(cosine_matrix(sys), subset, tol);
}

bool is_affine(const CoxeterSystem& sys, const IndexSet& subset, const Tolerance& tol) {
  if (subset.size() < 2) throw DomainError("affineness needs at least two generators");
  if (!subset.within(sys.rank())) throw DomainError("index set out of range");
  if (!is_connected(sys, subset)) return false;
  return classify(principal_submatrix(cosine_matrix(sys), subset), tol) == MatrixClass::Parabolic;
}

}  // namespace coxhyp
