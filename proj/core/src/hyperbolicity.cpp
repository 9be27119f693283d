#include "coxhyp/hyperbolicity.hpp"

#include "coxhyp/errors.hpp"

namespace coxhyp {

std::optional<IndexSet> find_affine_witness(const CoxeterSystem& sys, const Tolerance& tol) {
  const auto a = cosine_matrix(sys);
  // A parabolic block has every proper principal block positive definite,
  // so only minimal non-spherical sets need testing.
  for (const auto& t : definite_subsets(a, tol).minimal_non_definite) {
    if (t.size() < 3) continue;
    if (is_connected(sys, t) && classify(principal_submatrix(a, t), tol) == MatrixClass::Parabolic) {
      return t;
    }
  }
  return std::nullopt;
}

std::optional<CommutingWitness> find_commuting_witness(const CoxeterSystem& sys,
                                                       const Tolerance& tol) {
  const auto a = cosine_matrix(sys);
  const std::size_t n = sys.rank();
  // The first infinite T1 with an infinite commuting complement is always a
  // minimal infinite set: shrinking T1 only enlarges its complement.
  const auto minimal = definite_subsets(a, tol).minimal_non_definite;
  for (const auto& t1 : minimal) {
    std::vector<std::size_t> complement;
    for (std::size_t s = 0; s < n; ++s) {
      if (t1.contains(s)) continue;
      bool commutes = true;
      for (auto t : t1) {
        if (sys.order(s, t) != 2) {
          commutes = false;
          break;
        }
      }
      if (commutes) complement.push_back(s);
    }
    const IndexSet t2_star(std::move(complement));
    if (t2_star.empty()) continue;
    for (const auto& t2 : minimal) {
      if (t2.is_subset_of(t2_star)) return CommutingWitness{t1, t2};
    }
  }
  return std::nullopt;
}

HyperbolicityVerdict decide(const CoxeterSystem& sys, std::size_t max_rank, const Tolerance& tol) {
  if (sys.rank() > max_rank) {
    throw LimitError("rank " + std::to_string(sys.rank()) + " exceeds the enumeration limit " +
                     std::to_string(max_rank));
  }
  if (auto t = find_affine_witness(sys, tol)) {
    return {false, AffineWitness{*t}};
  }
  if (auto w = find_commuting_witness(sys, tol)) {
    return {false, *w};
  }
  return {true, std::nullopt};
}

std::string describe(const HyperbolicityVerdict& verdict, const CoxeterSystem& sys) {
  if (verdict.hyperbolic || !verdict.witness) return "HYPERBOLIC";
  const auto& labels = sys.labels();
  if (const auto* aff = std::get_if<AffineWitness>(&*verdict.witness)) {
    return "NOT HYPERBOLIC: affine subsystem " + aff->subset.to_string(labels);
  }
  const auto& c = std::get<CommutingWitness>(*verdict.witness);
  return "NOT HYPERBOLIC: commuting infinite subsystems " + c.first.to_string(labels) + " and " +
         c.second.to_string(labels);
}

}  // namespace coxhyp
