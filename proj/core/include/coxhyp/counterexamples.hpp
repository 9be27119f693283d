#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace coxhyp {

/// One hard-coded degenerate configuration and its recomputed value.
struct CounterexampleCheck {
  std::string name;
  std::string description;
  double expected = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct CounterexampleReport {
  std::vector<CounterexampleCheck> checks;
  bool all_passed() const;
};

/// Recomputes the three degenerate configurations built around the
/// 2x2 matrix [[1,0],[0,0]]:
///   1. inner-product extremum over N([[1,0],[0,0]]) at u = (1,1) is exactly 1;
///   2. on the nerve of [[1,0,-1],[0,1,0],[-1,0,1]] the intrinsic distance
///      from v1 to (0, sin pi/4, cos pi/4) is 3pi/4 = arccos<x,y>;
///   3. on the 4x4 matrix with a single -1 at (1,4), the intrinsic distance
///      from v1 to (0,0,cos pi/4,sin pi/4) and the suspension distance over
///      the link of v2 both equal 3pi/4.
CounterexampleReport verify_counterexamples(std::size_t resolution = 512);

}  // namespace coxhyp
