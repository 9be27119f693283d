#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <random>

#include "coxhyp/coxhyp.hpp"

using namespace coxhyp;

namespace {

AlmostNegativeMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = i + 1; j < a.cols(); ++j) a(i, j) = a(j, i) = u(rng) < 0.4 ? 0.0 : -1.2 * u(rng);
  return AlmostNegativeMatrix(a);
}

CoxeterSystem chain(std::size_t n, CoxeterOrder m) {
  std::vector<CoxeterOrder> orders(n * n, 2);
  for (std::size_t i = 0; i < n; ++i) orders[i * n + i] = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) orders[i * n + i + 1] = orders[(i + 1) * n + i] = m;
  return CoxeterSystem(n, orders);
}

void BM_Classify(benchmark::State& state) {
  const auto a = cosine_matrix(chain(static_cast<std::size_t>(state.range(0)), 3));
  for (auto _ : state) benchmark::DoNotOptimize(classify(a));
}
BENCHMARK(BM_Classify)->Arg(4)->Arg(8)->Arg(16);

void BM_Link(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = cosine_matrix(chain(n, 3));
  const auto half = IndexSet::range(n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(link(a, half));
}
BENCHMARK(BM_Link)->Arg(4)->Arg(8)->Arg(16);

void BM_BuildNerve(benchmark::State& state) {
  const auto a = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(build_nerve(a));
}
BENCHMARK(BM_BuildNerve)->Arg(6)->Arg(10)->Arg(14);

void BM_DecideRightAngledCycle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<CoxeterOrder> orders(n * n, 2);
  for (std::size_t i = 0; i < n; ++i) {
    orders[i * n + i] = 1;
    const auto j = (i + 1) % n;
    orders[i * n + j] = orders[j * n + i] = kInfiniteOrder;
  }
  const CoxeterSystem sys(n, orders);
  for (auto _ : state) benchmark::DoNotOptimize(decide(sys));
}
BENCHMARK(BM_DecideRightAngledCycle)->Arg(5)->Arg(8)->Arg(12);

void BM_DecideHyperbolicChain(benchmark::State& state) {
  const auto sys = chain(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(decide(sys));
}
BENCHMARK(BM_DecideHyperbolicChain)->Arg(6)->Arg(10)->Arg(14);

void BM_IntrinsicDistance(benchmark::State& state) {
  const auto a = AlmostNegativeMatrix::from_rows({{1, 0, 0, -1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {-1, 0, 0, 1}});
  const auto nerve = build_nerve(a);
  const double c = std::cos(std::numbers::pi / 4);
  Eigen::VectorXd y(4);
  y << 0, 0, c, c;
  const auto x = NervePoint::vertex(a, 0);
  const auto py = NervePoint::from_ambient(nerve, y);
  const auto res = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(intrinsic_distance(nerve, x, py, res));
}
BENCHMARK(BM_IntrinsicDistance)->Arg(64)->Arg(256)->Arg(1024);

}  // namespace
BENCHMARK_MAIN();
