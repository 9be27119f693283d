#include "coxhyp/counterexamples.hpp"

#include <cmath>
#include <numbers>

#include "coxhyp/nerve.hpp"

namespace coxhyp {

namespace {

constexpr double kPi = std::numbers::pi;

CounterexampleCheck make_check(std::string name, std::string description, double expected,
                               double computed, double tolerance) {
  CounterexampleCheck c{std::move(name), std::move(description), expected, computed, tolerance,
                        false};
  c.passed = std::abs(computed - expected) <= tolerance;
  return c;
}

}  // namespace

bool CounterexampleReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return !checks.empty();
}

CounterexampleReport verify_counterexamples(std::size_t resolution) {
  CounterexampleReport report;

  {
    const auto a = AlmostNegativeMatrix::from_rows({{1, 0}, {0, 0}});
    const auto best = max_inner_product_over_nerve(a, Eigen::Vector2d(1.0, 1.0));
    auto check = make_check("inner-product-extremum",
                            "max <u,z> over N([[1,0],[0,0]]) at u=(1,1) is 1, not > 1", 1.0,
                            best.value, 1e-12);
    check.passed = check.passed && best.point.cell == IndexSet{0} &&
                   std::abs(best.point.coeffs[0] - 1.0) <= 1e-12;
    report.checks.push_back(std::move(check));
  }

  {
    const auto a = AlmostNegativeMatrix::from_rows({{1, 0, -1}, {0, 1, 0}, {-1, 0, 1}});
    const auto nerve = build_nerve(a);
    const double phi = kPi / 4;
    const auto x = NervePoint::vertex(a, 0);
    const auto y =
        NervePoint::from_ambient(nerve, Eigen::Vector3d(0.0, std::sin(phi), std::cos(phi)));
    const auto d = intrinsic_distance(nerve, x, y, resolution);
    const double chord_angle = std::acos(a.inner(x.ambient(3), y.ambient(3)));
    auto check = make_check("intrinsic-distance",
                            "d(v1, (0,sin pi/4,cos pi/4)) = 3pi/4 = arccos<x,y> on a 3-vertex path",
                            3 * kPi / 4, d.distance, 1e-3);
    check.passed = check.passed && std::abs(d.distance - chord_angle) <= 1e-3;
    report.checks.push_back(std::move(check));
  }

  {
    const auto a = AlmostNegativeMatrix::from_rows(
        {{1, 0, 0, -1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {-1, 0, 0, 1}});
    const auto nerve = build_nerve(a);
    const double phi = kPi / 4;
    const auto x = NervePoint::vertex(a, 0);
    const auto y = NervePoint::from_ambient(
        nerve, Eigen::Vector4d(0.0, 0.0, std::cos(phi), std::sin(phi)));
    const auto d = intrinsic_distance(nerve, x, y, resolution);

    // The link of v2 is indexed by {1,3,4}.
    const auto lk = link_complex(nerve, IndexSet{1});
    const auto lx = NervePoint::vertex(lk.gram(), 0);
    const auto ly =
        NervePoint::from_ambient(lk, Eigen::Vector3d(0.0, std::cos(phi), std::sin(phi)));
    const auto ds = suspension_distance(lk, lx, ly, resolution);
    auto check = make_check("suspension-distance",
                            "d(x,y) = d'(x,y) = 3pi/4 in the nerve and in the suspended link of v2",
                            3 * kPi / 4, ds.distance, 1e-3);
    check.passed = check.passed && std::abs(d.distance - 3 * kPi / 4) <= 1e-3;
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace coxhyp
