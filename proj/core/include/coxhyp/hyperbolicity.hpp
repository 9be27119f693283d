#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include "coxhyp/coxeter_system.hpp"
#include "coxhyp/index_set.hpp"

namespace coxhyp {

inline constexpr std::size_t kDefaultMaxRank = 20;

/// Connected T, |T| >= 3, with parabolic cosine block.
struct AffineWitness {
  IndexSet subset;
  friend bool operator==(const AffineWitness&, const AffineWitness&) = default;
};

/// Disjoint T1, T2 generating infinite, mutually commuting subgroups.
struct CommutingWitness {
  IndexSet first;
  IndexSet second;
  friend bool operator==(const CommutingWitness&, const CommutingWitness&) = default;
};

using HyperbolicityWitness = std::variant<AffineWitness, CommutingWitness>;

struct HyperbolicityVerdict {
  bool hyperbolic = true;
  std::optional<HyperbolicityWitness> witness;  ///< present iff not hyperbolic
};

/// Smallest (size, then lex) affine special subsystem of rank >= 3.
std::optional<IndexSet> find_affine_witness(const CoxeterSystem& sys, const Tolerance& tol = {});

/// First T1 in size-then-lex order that is infinite and whose commuting
/// complement {s not in T1 : m(s,t) = 2 for all t in T1} is infinite, paired
/// with the smallest infinite subset of that complement.
std::optional<CommutingWitness> find_commuting_witness(const CoxeterSystem& sys,
                                                       const Tolerance& tol = {});

/// W is word-hyperbolic iff it has neither witness. The affine search runs
/// first. Throws LimitError when rank > max_rank.
HyperbolicityVerdict decide(const CoxeterSystem& sys, std::size_t max_rank = kDefaultMaxRank,
                            const Tolerance& tol = {});

/// "HYPERBOLIC", "NOT HYPERBOLIC: affine subsystem {s1,s2,s3}", or
/// "NOT HYPERBOLIC: commuting infinite subsystems {s1,s2} and {s3,s4}".
std::string describe(const HyperbolicityVerdict& verdict, const CoxeterSystem& sys);

}  // namespace coxhyp
