#include <doctest.h>

#include <cmath>

#include "coxeter_types.hpp"
#include "coxhyp/almost_negative.hpp"
#include "coxhyp/errors.hpp"
#include "generators.hpp"

using namespace coxhyp;
using M = AlmostNegativeMatrix;

namespace {

const M kEx41 = M::from_rows({{1, 0, 0, -1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {-1, 0, 0, 1}});
const M kThree = M::from_rows({{1, 0, -1}, {0, 1, 0}, {-1, 0, 1}});

void check_close(const M& a, const std::vector<std::vector<double>>& b, double tol) {
  REQUIRE(a.order() == b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) CHECK(std::abs(a(i, j) - b[i][j]) <= tol);
}

MatrixClass expected(oracle::Kind k) {
  switch (k) {
    case oracle::Kind::PositiveDefinite: return MatrixClass::PositiveDefinite;
    case oracle::Kind::Parabolic: return MatrixClass::Parabolic;
    case oracle::Kind::Degenerate: return MatrixClass::DegenerateNonParabolic;
    default: return MatrixClass::Indefinite;
  }
}

}  // namespace

TEST_CASE("validation of the matrix type") {
  CHECK_THROWS_AS(M::from_rows({{1, 0.5}, {0.5, 1}}), DomainError);
  CHECK_THROWS_AS(M::from_rows({{1, -0.5}, {-0.4, 1}}), DomainError);
  CHECK_THROWS_AS(M::from_rows({{1, 0}}), DomainError);
  CHECK_NOTHROW(M::from_rows({{1, 1e-12}, {1e-12, 1}}));
  CHECK_NOTHROW(M::from_rows({{0}}));
  CHECK(M::from_rows({{1, -3}, {-3, 1}}).inf_norm() == 4.0);
  const auto t = M::from_rows({{4, -2}, {-2, 4}}).thresholds();
  CHECK(t.zero == doctest::Approx(6e-9));
  CHECK(t.det == doctest::Approx(36e-9));
  Tolerance abs;
  abs.absolute = 1e-6;
  CHECK(M::from_rows({{4, -2}, {-2, 4}}).thresholds(abs).pd == 1e-6);
}

TEST_CASE("principal submatrices") {
  check_close(principal_submatrix(kThree, IndexSet{0, 2}), {{1, -1}, {-1, 1}}, 0);
  check_close(principal_submatrix(kThree, IndexSet{0, 1, 2}), {{1, 0, -1}, {0, 1, 0}, {-1, 0, 1}}, 0);
  check_close(principal_submatrix(kThree, IndexSet{1}), {{1}}, 0);
  CHECK_THROWS_AS(principal_submatrix(kThree, IndexSet{}), DomainError);
  CHECK_THROWS_AS(principal_submatrix(kThree, IndexSet{3}), DomainError);
}

TEST_CASE("classification of the fixed examples") {
  CHECK(classify(M::from_rows({{1, -1}, {-1, 1}})) == MatrixClass::Parabolic);
  CHECK(classify(M::from_rows({{1, -0.5}, {-0.5, 1}})) == MatrixClass::PositiveDefinite);
  CHECK(classify(M::from_rows({{1, 0}, {0, 0}})) == MatrixClass::DegenerateNonParabolic);
  CHECK(classify(cosine_matrix(types::system(types::triangle(3, 3, 3)))) == MatrixClass::Parabolic);
  CHECK(classify(cosine_matrix(types::system(types::triangle(2, 3, 7)))) == MatrixClass::Indefinite);
  CHECK(classify(M::from_rows({{2}})) == MatrixClass::PositiveDefinite);
  CHECK(classify(M::from_rows({{0}})) == MatrixClass::DegenerateNonParabolic);
  CHECK(classify(M::from_rows({{-1}})) == MatrixClass::Indefinite);
  // reducible sum of two parabolic blocks is singular but not parabolic
  CHECK(classify(M::from_rows({{1, -1, 0, 0}, {-1, 1, 0, 0}, {0, 0, 1, -1}, {0, 0, -1, 1}})) ==
        MatrixClass::DegenerateNonParabolic);
}

TEST_CASE("classification agrees with the oracle on random matrices") {
  gen::Rng rng(3);
  for (int k = 0; k < 2000; ++k) {
    const auto a = k % 3 == 0 ? gen::shifted_parabolic(gen::pick(rng, 2, 7), rng)
                              : gen::almost_negative(gen::pick(rng, 1, 7), rng);
    CAPTURE(k);
    CHECK(classify(gen::to_anm(a)) == expected(oracle::classify(a)));
  }
}

TEST_CASE("positive pivots and subset definiteness") {
  Eigen::MatrixXd m(2, 2);
  m << 1, -1, -1, 1;
  CHECK(positive_pivots(m, 1e-9).size() == 1);
  m << 1, -0.5, -0.5, 1;
  auto p = positive_pivots(m, 1e-9);
  REQUIRE(p.size() == 2);
  CHECK(p[1] == doctest::Approx(0.75));
  CHECK(is_positive_definite(kThree, IndexSet{}));
  CHECK(is_positive_definite(kThree, IndexSet{0, 1}));
  CHECK_FALSE(is_positive_definite(kThree, IndexSet{0, 2}));
}

TEST_CASE("single-pivot link") {
  check_close(link_single(M::from_rows({{1, 0, 0}, {0, 1, -1}, {0, -1, 1}}), 0),
              {{1, -1}, {-1, 1}}, 1e-15);
  check_close(link_single(M::from_rows({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}), 1), {{2, 0}, {0, 5}}, 0);
  CHECK_THROWS_AS(link_single(M::from_rows({{1, 0}, {0, 0}}), 1), DomainError);

  gen::Rng rng(7);
  for (int k = 0; k < 500; ++k) {
    const double a12 = gen::uniform(rng, -0.99, 0), a13 = gen::uniform(rng, -0.99, 0),
                 a23 = gen::uniform(rng, -0.99, 0);
    const auto c = M::from_rows({{1, a12, a13}, {a12, 1, a23}, {a13, a23, 1}});
    check_close(link_single(c, 0),
                {{1 - a12 * a12, a23 - a12 * a13}, {a23 - a12 * a13, 1 - a13 * a13}}, 1e-12);
  }
}

TEST_CASE("multi-index link") {
  check_close(link(kEx41, IndexSet{0, 1}), {{1, 0}, {0, 0}}, 1e-12);
  check_close(link(kEx41, IndexSet{}), {{1, 0, 0, -1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {-1, 0, 0, 1}}, 0);
  CHECK_THROWS_AS(link(kThree, IndexSet{0, 2}), DomainError);
  CHECK_THROWS_AS(link(kThree, IndexSet{5}), DomainError);
}

TEST_CASE("link is independent of pivot order and stays almost negative") {
  gen::Rng rng(19);
  int checked = 0;
  for (int k = 0; k < 400; ++k) {
    const auto raw = gen::almost_negative(gen::pick(rng, 3, 7), rng);
    const auto a = gen::to_anm(raw);
    const auto cells = definite_subsets(a).positive_definite;
    for (const auto& cell : cells) {
      if (cell.size() == a.order()) continue;
      const auto full = link(a, cell);
      const auto zero = a.thresholds().zero;
      for (std::size_t i = 0; i < full.order(); ++i)
        for (std::size_t j = 0; j < full.order(); ++j)
          if (i != j) CHECK(full(i, j) <= zero);
      for (std::size_t p = 0; p < cell.size(); ++p) {
        const auto rest = cell.without(cell[p]);
        const auto outer = link(a, rest);
        const auto pos = rest.complement(a.order()).position(cell[p]);
        const auto step = link_single(outer, pos);
        REQUIRE(step.order() == full.order());
        // same scale-aware threshold as the library: 1e-9 * max(1, |entries|)
        const double scale = std::max({1.0, outer.values().cwiseAbs().maxCoeff(),
                                       full.values().cwiseAbs().maxCoeff()});
        CHECK((step.values() - full.values()).cwiseAbs().maxCoeff() <= 1e-9 * scale);
        ++checked;
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("normalisation") {
  check_close(normalize(M::from_rows({{4, -2}, {-2, 1}})), {{1, -1}, {-1, 1}}, 1e-15);
  check_close(normalize(M::from_rows({{1, 0}, {0, 0}})), {{1, 0}, {0, 0}}, 0);
  check_close(normalize(kThree), {{1, 0, -1}, {0, 1, 0}, {-1, 0, 1}}, 0);
  gen::Rng rng(23);
  for (int k = 0; k < 300; ++k) {
    auto raw = gen::almost_negative(gen::pick(rng, 1, 6), rng);
    for (std::size_t i = 0; i < raw.size(); ++i) {
      const double d = gen::uniform(rng, 0.2, 3.0);
      for (auto& row : raw) row[i] *= d;
      for (auto& v : raw[i]) v *= d;
    }
    const auto a = gen::to_anm(raw);
    CHECK(classify(normalize(a)) == classify(a));
  }
}

TEST_CASE("principal submatrices of positive definite matrices are positive definite") {
  gen::Rng rng(29);
  for (int k = 0; k < 300; ++k) {
    const auto a = gen::to_anm(gen::almost_negative(gen::pick(rng, 2, 6), rng));
    if (classify(a) != MatrixClass::PositiveDefinite) continue;
    const std::uint64_t full = std::uint64_t{1} << a.order();
    for (std::uint64_t t = 1; t < full; ++t)
      CHECK(classify(principal_submatrix(a, IndexSet::from_mask(t))) == MatrixClass::PositiveDefinite);
  }
}

TEST_CASE("reducibility") {
  CHECK(reducibility(M::from_rows({{1, 0}, {0, 1}})) == Split{IndexSet{0}, IndexSet{1}});
  CHECK_FALSE(reducibility(M::from_rows({{1, -1}, {-1, 1}})).has_value());
  CHECK(reducibility(kEx41) == Split{IndexSet{0, 3}, IndexSet{1, 2}});
  CHECK(reducibility(kThree) == Split{IndexSet{1}, IndexSet{0, 2}});
  CHECK_THROWS_AS(reducibility(M::from_rows({{1}})), DomainError);
}

TEST_CASE("definite subsets") {
  const auto d = definite_subsets(kThree);
  CHECK(d.positive_definite ==
        std::vector<IndexSet>{IndexSet{0}, IndexSet{1}, IndexSet{2}, IndexSet{0, 1}, IndexSet{1, 2}});
  CHECK(d.minimal_non_definite == std::vector<IndexSet>{IndexSet{0, 2}});
  const auto z = definite_subsets(M::from_rows({{1, 0}, {0, 0}}));
  CHECK(z.positive_definite == std::vector<IndexSet>{IndexSet{0}});
  CHECK(z.minimal_non_definite == std::vector<IndexSet>{IndexSet{1}});
}

TEST_CASE("zero-row link scan") {
  const auto w = scan_zero_row_links(kEx41);
  CHECK(std::find(w.begin(), w.end(), ZeroRowWitness{IndexSet{0, 1}, 3}) != w.end());
  CHECK(scan_zero_row_links(M::from_rows({{1, -0.5}, {-0.5, 1}})).empty());
  CHECK(scan_zero_row_links(M::from_rows({{2, 0, 0}, {0, 1, 0}, {0, 0, 3}})).empty());
  const auto empty_pivot = scan_zero_row_links(M::from_rows({{1, 0}, {0, 0}}));
  REQUIRE_FALSE(empty_pivot.empty());
  CHECK(empty_pivot.front() == ZeroRowWitness{IndexSet{}, 1});
  for (std::size_t k = 1; k < w.size(); ++k) {
    const bool ordered = shortlex_less(w[k - 1].pivot_set, w[k].pivot_set) ||
                         (w[k - 1].pivot_set == w[k].pivot_set && w[k - 1].row < w[k].row);
    CHECK(ordered);
  }
}

TEST_CASE("zero-row lemma conclusions") {
  const auto r3 = check_lemma_b(kThree);
  CHECK_FALSE(r3.witnesses.empty());
  CHECK(r3.conclusion == LemmaBConclusion::Reducible);
  REQUIRE(r3.split.has_value());
  CHECK(*r3.split == Split{IndexSet{1}, IndexSet{0, 2}});

  const auto p = check_lemma_b(M::from_rows({{1, -1}, {-1, 1}}));
  CHECK(p.conclusion == LemmaBConclusion::Parabolic);
  CHECK(p.witnesses.front() == ZeroRowWitness{IndexSet{0}, 1});

  const auto pd = check_lemma_b(M::from_rows({{1, -0.5}, {-0.5, 1}}));
  CHECK(pd.conclusion == LemmaBConclusion::NoZeroRowLinkFound);
  CHECK_FALSE(pd.violation());
  CHECK_THROWS_AS(check_lemma_b(M::from_rows({{1}})), DomainError);
}

TEST_CASE("parabolicity propagates from a link") {
  gen::Rng rng(31);
  int checked = 0;
  for (int k = 0; k < 3000; ++k) {
    const auto raw = k % 2 ? gen::shifted_parabolic(gen::pick(rng, 3, 7), rng)
                           : gen::almost_negative(gen::pick(rng, 3, 6), rng);
    const auto a = gen::to_anm(raw);
    const auto lk = link_single(a, 0);
    if (classify(lk) != MatrixClass::Parabolic) continue;
    if (reducibility(a) || reducibility(lk)) continue;
    CHECK(classify(a) == MatrixClass::Parabolic);
    ++checked;
  }
  CHECK(checked > 50);
}
