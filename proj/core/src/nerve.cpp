#include "coxhyp/nerve.hpp"

#include <Eigen/Cholesky>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <string>
#include <unordered_set>

#include "coxhyp/errors.hpp"

namespace coxhyp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Work cap for the sampled graph (sum over maximal cells of nodes^2).
constexpr double kMaxGraphWork = 4e9;

double clamped_acos(double c) { return std::acos(std::clamp(c, -1.0, 1.0)); }

// Angle between unit vectors x, y given A*x and A*y. Uses the chord for close
// points, where acos loses half the significant digits.
double angle(const Eigen::VectorXd& x, const Eigen::VectorXd& ax, const Eigen::VectorXd& y,
             const Eigen::VectorXd& ay) {
  const double c = x.dot(ay);
  if (c < 0.5) return clamped_acos(c);
  const double chord2 = (x - y).dot(ax - ay);
  return 2.0 * std::asin(std::min(1.0, std::sqrt(std::max(0.0, chord2)) / 2.0));
}

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

}  // namespace

// ---------------------------------------------------------------------------
// Complex

NerveComplex NerveComplex::build(const AlmostNegativeMatrix& gram, const Tolerance& tol) {
  if (gram.order() > kMaxNerveOrder) {
    throw LimitError("nerve enumeration refused for order " + std::to_string(gram.order()) +
                     " (limit " + std::to_string(kMaxNerveOrder) + ")");
  }
  NerveComplex n;
  n.gram_ = gram;
  n.tol_ = tol;
  n.cells_ = definite_subsets(gram, tol).positive_definite;
  n.vertex_ids_.resize(gram.order());
  for (std::size_t i = 0; i < gram.order(); ++i) n.vertex_ids_[i] = i;

  std::unordered_set<std::uint64_t> masks;
  for (const auto& c : n.cells_) masks.insert(c.mask());
  for (const auto& c : n.cells_) {
    const auto m = c.mask();
    bool maximal = true;
    for (std::size_t j = 0; j < gram.order() && maximal; ++j) {
      if (!(m >> j & 1U) && masks.count(m | (std::uint64_t{1} << j))) maximal = false;
    }
    if (maximal) n.maximal_.push_back(c);
  }
  return n;
}

bool NerveComplex::is_cell(const IndexSet& s) const {
  if (s.empty()) return false;
  return std::binary_search(cells_.begin(), cells_.end(), s, shortlex_less);
}

std::size_t NerveComplex::dimension() const {
  std::size_t d = 0;
  for (const auto& c : maximal_) d = std::max(d, c.size() - 1);
  return d;
}

NerveComplex link_complex(const NerveComplex& nerve, const IndexSet& cell) {
  if (cell.empty()) return nerve;
  if (!nerve.is_cell(cell)) {
    throw DomainError(cell.to_string() + " is not a cell of the nerve");
  }
  auto out = NerveComplex::build(link(nerve.gram(), cell, nerve.tolerance()), nerve.tolerance());
  const auto rest = cell.complement(nerve.gram().order());
  for (std::size_t k = 0; k < rest.size(); ++k) out.vertex_ids_[k] = nerve.vertex_ids()[rest[k]];
  return out;
}

// ---------------------------------------------------------------------------
// Points

NervePoint NervePoint::vertex(const AlmostNegativeMatrix& gram, std::size_t i) {
  if (i >= gram.order()) throw DomainError("vertex index out of range");
  const double d = gram(i, i);
  if (!(d > gram.thresholds().pd)) {
    throw DomainError("index " + std::to_string(i + 1) + " is not a vertex of the nerve");
  }
  return {IndexSet{i}, {1.0 / std::sqrt(d)}};
}

NervePoint NervePoint::from_ambient(const NerveComplex& nerve, const Eigen::VectorXd& x) {
  const auto n = nerve.gram().order();
  if (static_cast<std::size_t>(x.size()) != n) {
    throw DomainError("point has " + std::to_string(x.size()) + " coordinates, expected " +
                      std::to_string(n));
  }
  const double zero = nerve.gram().thresholds(nerve.tolerance()).zero;
  NervePoint p;
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = x(idx(i));
    if (v < -zero) throw DomainError("point has a negative coordinate");
    if (v > zero) {
      support.push_back(i);
      p.coeffs.push_back(v);
    }
  }
  p.cell = IndexSet(std::move(support));
  validate_point(nerve, p);
  return p;
}

Eigen::VectorXd NervePoint::ambient(std::size_t order) const {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(idx(order));
  for (std::size_t k = 0; k < cell.size(); ++k) v(idx(cell[k])) = coeffs[k];
  return v;
}

IndexSet NervePoint::support(double zero) const {
  std::vector<std::size_t> s;
  for (std::size_t k = 0; k < cell.size(); ++k) {
    if (coeffs[k] > zero) s.push_back(cell[k]);
  }
  return IndexSet(std::move(s));
}

void validate_point(const NerveComplex& nerve, const NervePoint& p) {
  if (p.coeffs.size() != p.cell.size()) throw DomainError("coefficient count != cell size");
  const auto& a = nerve.gram();
  if (!p.cell.within(a.order())) throw DomainError("point cell out of range");
  const double zero = a.thresholds(nerve.tolerance()).zero;
  for (double c : p.coeffs) {
    if (!(c >= -zero)) throw DomainError("point has a negative coefficient");
  }
  const auto supp = p.support(zero);
  if (supp.empty()) throw DomainError("point has no positive coefficient");
  if (!nerve.is_cell(supp)) {
    throw DomainError("support " + supp.to_string() + " of point is not a cell of the nerve");
  }
  const auto v = p.ambient(a.order());
  const double norm2 = a.inner(v, v);
  if (std::abs(norm2 - 1.0) > kUnitNormTolerance) {
    throw DomainError("point does not have unit norm (norm^2 = " + std::to_string(norm2) + ")");
  }
}

double simplex_distance(const AlmostNegativeMatrix& gram, const NervePoint& a,
                        const NervePoint& b, const Tolerance& tol) {
  const double zero = gram.thresholds(tol).zero;
  const auto common = a.support(zero).united(b.support(zero));
  if (common.empty() || !is_positive_definite(gram, common, tol)) {
    throw DomainError("no simplex of the nerve contains both points");
  }
  const auto x = a.ambient(gram.order());
  const auto y = b.ambient(gram.order());
  return angle(x, gram.values() * x, y, gram.values() * y);
}

// ---------------------------------------------------------------------------
// Sampled-graph geodesics

namespace {

struct SampleGraph {
  std::vector<NervePoint> points;
  std::vector<Eigen::VectorXd> coords;     // ambient
  std::vector<Eigen::VectorXd> gram_times; // A * coords
  std::vector<std::vector<std::size_t>> members;  // per maximal cell: node ids
  std::vector<std::vector<std::size_t>> cells_of; // per node: maximal cells
};

// Compositions of `total` into `parts` non-negative integers, lexicographic.
void for_each_composition(std::size_t parts, std::size_t total,
                          const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> c(parts, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t k, std::size_t left) {
    if (k + 1 == parts) {
      c[k] = left;
      f(c);
      return;
    }
    for (std::size_t v = 0; v <= left; ++v) {
      c[k] = v;
      rec(k + 1, left - v);
    }
  };
  if (parts > 0) rec(0, total);
}

double binomial(std::size_t n, std::size_t k) {
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

SampleGraph build_graph(const NerveComplex& nerve, const NervePoint& x, const NervePoint& y,
                        std::size_t resolution) {
  const auto& a = nerve.gram();
  const std::size_t n = a.order();
  const double zero = a.thresholds(nerve.tolerance()).zero;
  const auto& maximal = nerve.maximal_cells();

  // Faces shared by pairs of maximal cells.
  std::vector<IndexSet> faces;
  for (std::size_t i = 0; i < maximal.size(); ++i) {
    for (std::size_t j = i + 1; j < maximal.size(); ++j) {
      auto f = maximal[i].intersected(maximal[j]);
      if (!f.empty()) faces.push_back(std::move(f));
    }
  }
  std::sort(faces.begin(), faces.end(), shortlex_less);
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

  double estimate = 0.0;
  for (const auto& f : faces) estimate += binomial(resolution + f.size() - 1, f.size() - 1);
  if (estimate * estimate > kMaxGraphWork) {
    throw LimitError("sampled graph too large at resolution " + std::to_string(resolution) +
                     "; lower the resolution");
  }

  SampleGraph g;
  auto add_node = [&](NervePoint p) {
    Eigen::VectorXd v = p.ambient(n);
    g.gram_times.push_back(a.values() * v);
    g.coords.push_back(std::move(v));
    g.points.push_back(std::move(p));
  };
  add_node(x);
  add_node(y);

  std::map<std::vector<std::size_t>, std::size_t> seen;  // lattice numerators -> node
  std::vector<double> inv_sqrt(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i) > 0) inv_sqrt[i] = 1.0 / std::sqrt(a(i, i));
  }
  for (const auto& f : faces) {
    for_each_composition(f.size(), resolution, [&](const std::vector<std::size_t>& comp) {
      std::vector<std::size_t> key(n, 0);
      for (std::size_t k = 0; k < f.size(); ++k) key[f[k]] = comp[k];
      if (seen.count(key)) return;
      seen.emplace(key, g.points.size());
      std::vector<std::size_t> support;
      std::vector<double> coeffs;
      for (std::size_t k = 0; k < f.size(); ++k) {
        if (comp[k] == 0) continue;
        support.push_back(f[k]);
        coeffs.push_back(static_cast<double>(comp[k]) / static_cast<double>(resolution) *
                         inv_sqrt[f[k]]);
      }
      NervePoint p{IndexSet(std::move(support)), std::move(coeffs)};
      const auto v = p.ambient(n);
      const double norm = std::sqrt(a.inner(v, v));
      for (auto& c : p.coeffs) c /= norm;
      add_node(std::move(p));
    });
  }

  g.members.resize(maximal.size());
  g.cells_of.resize(g.points.size());
  for (std::size_t node = 0; node < g.points.size(); ++node) {
    const auto supp = g.points[node].support(zero);
    for (std::size_t m = 0; m < maximal.size(); ++m) {
      if (supp.is_subset_of(maximal[m])) {
        g.members[m].push_back(node);
        g.cells_of[node].push_back(m);
      }
    }
  }
  return g;
}

}  // namespace

GeodesicResult intrinsic_distance(const NerveComplex& nerve, const NervePoint& x,
                                  const NervePoint& y, std::size_t resolution) {
  if (resolution == 0) throw DomainError("resolution must be positive");
  validate_point(nerve, x);
  validate_point(nerve, y);

  GeodesicResult result;
  result.resolution = resolution;
  const auto g = build_graph(nerve, x, y, resolution);

  const std::size_t count = g.points.size();
  std::vector<double> dist(count, kInf);
  std::vector<std::size_t> prev(count, count);
  std::vector<bool> done(count, false);
  using Entry = std::pair<double, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  dist[0] = 0.0;
  heap.push({0.0, 0});
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (done[u]) continue;
    done[u] = true;
    if (u == 1) break;
    for (auto m : g.cells_of[u]) {
      for (auto v : g.members[m]) {
        if (done[v]) continue;
        const double w = angle(g.coords[u], g.gram_times[u], g.coords[v], g.gram_times[v]);
        if (d + w < dist[v]) {
          dist[v] = d + w;
          prev[v] = u;
          heap.push({dist[v], v});
        }
      }
    }
  }

  result.distance = dist[1];
  if (std::isinf(result.distance)) {
    result.error_bound = 0.0;
    return result;
  }
  std::vector<std::size_t> chain;
  for (std::size_t v = 1; v != count; v = prev[v]) {
    chain.push_back(v);
    if (v == 0) break;
  }
  std::reverse(chain.begin(), chain.end());
  // x == y as points: the zero-length edge collapses the path to one node.
  if (result.distance == 0.0) chain = {0};
  for (auto v : chain) result.path.push_back(g.points[v]);
  const double segments = static_cast<double>(chain.size() - 1);
  result.error_bound = std::numbers::pi * segments / static_cast<double>(resolution);
  return result;
}

GeodesicResult suspension_distance(const NerveComplex& nerve, const SuspensionPoint& x,
                                   const SuspensionPoint& y, std::size_t resolution) {
  const double pi = std::numbers::pi;
  if (!(x.polar >= 0.0 && x.polar <= pi && y.polar >= 0.0 && y.polar <= pi)) {
    throw DomainError("polar angle must lie in [0, pi]");
  }
  const bool x_pole = x.polar == 0.0 || x.polar == pi;
  const bool y_pole = y.polar == 0.0 || y.polar == pi;

  GeodesicResult result;
  result.resolution = resolution;
  double c = std::cos(x.polar) * std::cos(y.polar);
  if (!x_pole && !y_pole) {
    if (!x.base || !y.base) throw DomainError("suspension point off the poles needs a base point");
    auto base = intrinsic_distance(nerve, *x.base, *y.base, resolution);
    c += std::sin(x.polar) * std::sin(y.polar) * std::cos(std::min(base.distance, pi));
    result.path = std::move(base.path);
    result.error_bound = base.error_bound;
  } else {
    if (x.base && !x_pole) validate_point(nerve, *x.base);
    if (y.base && !y_pole) validate_point(nerve, *y.base);
  }
  result.distance = clamped_acos(c);
  return result;
}

GeodesicResult suspension_distance(const NerveComplex& nerve, const NervePoint& x,
                                   const NervePoint& y, std::size_t resolution) {
  return suspension_distance(nerve, SuspensionPoint{std::numbers::pi / 2, x},
                             SuspensionPoint{std::numbers::pi / 2, y}, resolution);
}

// ---------------------------------------------------------------------------
// Inner-product extremum

InnerProductMaximum max_inner_product_over_nerve(const AlmostNegativeMatrix& gram,
                                                 const Eigen::VectorXd& u,
                                                 const Tolerance& tol) {
  const std::size_t n = gram.order();
  if (static_cast<std::size_t>(u.size()) != n) throw DomainError("vector has the wrong length");
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    if (!(u(i) >= 0.0)) throw DomainError("vector must have non-negative coordinates");
  }
  if (std::abs(gram.inner(u, u) - 1.0) > kUnitNormTolerance) {
    throw DomainError("vector must have unit norm under the form");
  }
  const auto th = gram.thresholds(tol);
  const Eigen::VectorXd au = gram.values() * u;

  std::optional<InnerProductMaximum> best;
  auto offer = [&](NervePoint p, double value) {
    if (!best || value > best->value) best = InnerProductMaximum{std::move(p), value};
  };

  for (const auto& face : definite_subsets(gram, tol).positive_definite) {
    const auto k = idx(face.size());
    Eigen::MatrixXd block(k, k);
    Eigen::VectorXd rhs(k);
    for (Eigen::Index r = 0; r < k; ++r) {
      rhs(r) = au(idx(face[static_cast<std::size_t>(r)]));
      for (Eigen::Index c = 0; c < k; ++c) {
        block(r, c) = gram(face[static_cast<std::size_t>(r)], face[static_cast<std::size_t>(c)]);
      }
    }
    // A-orthogonal projection of u onto span{e_i : i in face}.
    Eigen::VectorXd coeff = block.llt().solve(rhs);
    if (coeff.minCoeff() < -th.zero) continue;
    coeff = coeff.cwiseMax(0.0);
    const double norm2 = coeff.dot(block * coeff);
    if (!(norm2 > 0.0)) continue;
    const double norm = std::sqrt(norm2);
    std::vector<std::size_t> support;
    std::vector<double> coeffs;
    for (Eigen::Index r = 0; r < k; ++r) {
      if (coeff(r) > 0.0) {
        support.push_back(face[static_cast<std::size_t>(r)]);
        coeffs.push_back(coeff(r) / norm);
      }
    }
    const double value = rhs.dot(coeff) / norm;
    offer(NervePoint{IndexSet(std::move(support)), std::move(coeffs)}, value);
  }
  // Vertices stay candidates even when their projection coefficient is negative.
  for (std::size_t i = 0; i < n; ++i) {
    if (gram(i, i) > th.pd) {
      auto v = NervePoint::vertex(gram, i);
      offer(v, au(idx(i)) * v.coeffs[0]);
    }
  }
  if (!best) throw DomainError("nerve is empty");
  return *best;
}

}  // namespace coxhyp
