#pragma once

#include <string>
#include <string_view>

#include "coxhyp/almost_negative.hpp"
#include "coxhyp/chamber.hpp"
#include "coxhyp/coxeter_system.hpp"
#include "coxhyp/counterexamples.hpp"
#include "coxhyp/hyperbolicity.hpp"
#include "coxhyp/nerve.hpp"

namespace coxhyp {

/// Accepts three layouts, all rejecting trailing garbage:
///   matrix     "n" on the first line, then n rows of integers or "inf";
///   edge list  "n; i j m; ..." (1-based, unlisted pairs default to m = 2);
///   JSON       {"n": int, "m": [[...]], "labels": [...]?} with "inf" strings.
CoxeterSystem parse_coxeter_system(std::string_view text);

/// Real matrix in the matrix layout ("n", then n rows of reals) or JSON
/// {"n": int, "a": [[...]]}.
AlmostNegativeMatrix parse_matrix(std::string_view text, const Tolerance& tol = {});

/// True when `text` is a JSON object carrying an order matrix ("m").
bool looks_like_system_json(std::string_view text);

std::string to_json(const CoxeterSystem& sys);
/// {"n": int, "a": [[...]]}, doubles written with round-trip precision.
std::string to_json(const AlmostNegativeMatrix& a);

/// "[[1,-0.5],[-0.5,1]]": 6 significant digits, "0" within `zero`.
std::string format_matrix(const AlmostNegativeMatrix& a, double zero);
/// Single entry in the same style.
std::string format_number(double v, double zero);

/// {"distance", "error_bound", "resolution", "path": [{"cell", "coeffs"}]};
/// an unreachable target reports "distance": "inf". Cells are 1-based.
std::string to_json(const GeodesicResult& r);
/// One "step,cell,coord_1,...,coord_n" line per path point, with header.
std::string path_to_csv(const GeodesicResult& r, std::size_t order);

/// {"hyperbolic": bool, "witness": {"kind": "affine"|"commuting", ...}}.
std::string to_json(const HyperbolicityVerdict& v, const CoxeterSystem& sys);
std::string to_json(const LemmaBReport& r);
std::string to_json(const Chamber& c);
std::string to_json(const DavisPoset& p, const CoxeterSystem& sys);
std::string to_json(const CounterexampleReport& r);

}  // namespace coxhyp
