#include <doctest.h>

#include <cmath>
#include <numbers>

#include "coxeter_types.hpp"
#include "coxhyp/coxeter_system.hpp"
#include "coxhyp/errors.hpp"
#include "coxhyp/io.hpp"
#include "generators.hpp"

using namespace coxhyp;

TEST_CASE("parsing the three layouts") {
  const auto d3 = parse_coxeter_system("2\n1 3\n3 1");
  CHECK(d3.rank() == 2);
  CHECK(d3.order(0, 1) == 3);
  CHECK(d3.labels() == std::vector<std::string>{"s1", "s2"});

  const auto z2 = parse_coxeter_system("1\n1");
  CHECK(z2.rank() == 1);

  const auto e = parse_coxeter_system("4; 1 2 inf; 3 4 inf");
  CHECK(e.rank() == 4);
  CHECK(e.is_infinite(0, 1));
  CHECK(e.is_infinite(3, 2));
  CHECK(e.order(0, 2) == 2);
  CHECK(e.order(1, 3) == 2);

  const auto j = parse_coxeter_system(R"({"n": 2, "m": [[1, "inf"], ["inf", 1]], "labels": ["a","b"]})");
  CHECK(j.is_infinite(0, 1));
  CHECK(j.labels() == std::vector<std::string>{"a", "b"});

  CHECK(parse_coxeter_system("2\n1 inf\ninf 1") == parse_coxeter_system("2; 1 2 inf"));
}

TEST_CASE("parser rejects malformed systems") {
  CHECK_THROWS_AS(parse_coxeter_system("2\n1 3\n3 1\nextra"), ParseError);
  CHECK_THROWS_AS(parse_coxeter_system("2\n1 3\n3"), ParseError);
  CHECK_THROWS_AS(parse_coxeter_system("2\n1 3\n4 1"), Error);
  CHECK_THROWS_AS(parse_coxeter_system("2\n2 3\n3 1"), Error);
  CHECK_THROWS_AS(parse_coxeter_system("2\n1 1\n1 1"), Error);
  CHECK_THROWS_AS(parse_coxeter_system("2\n1 x\nx 1"), ParseError);
  CHECK_THROWS_AS(parse_coxeter_system("3; 1 4 3"), Error);
  CHECK_THROWS_AS(parse_coxeter_system("3; 1 2"), ParseError);
  CHECK_THROWS_AS(parse_coxeter_system("0\n"), Error);
  CHECK_THROWS_AS(parse_coxeter_system(R"({"n": 2, "m": [[1, 3], [3, 1]]} junk)"), ParseError);
  CHECK_THROWS_AS(parse_coxeter_system(R"({"n": 2})"), ParseError);
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(CoxeterSystem(2, {1, 3, 4, 1}), DomainError);
  CHECK_THROWS_AS(CoxeterSystem(2, {1, 3}), DomainError);
  CHECK_THROWS_AS(CoxeterSystem(2, {1, 3, 3, 1}, {"a"}), DomainError);
  CHECK_NOTHROW(CoxeterSystem(0, {}));
}

TEST_CASE("cosine matrix entries") {
  const auto a = cosine_matrix(parse_coxeter_system("2\n1 3\n3 1"));
  CHECK(a(0, 0) == 1.0);
  CHECK(a(0, 1) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(cosine_matrix(CoxeterSystem::right_angled(2))(0, 1) == 0.0);
  CHECK(cosine_matrix(parse_coxeter_system("2; 1 2 inf"))(0, 1) == -1.0);
  const auto h = cosine_matrix(types::system(types::I2(5)));
  CHECK(h(0, 1) == doctest::Approx(-std::cos(std::numbers::pi / 5)));
}

TEST_CASE("cosine matrices of random systems are almost negative with unit diagonal") {
  gen::Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    const auto m = gen::orders(gen::pick(rng, 1, 6), {2, 3, 4, 5, 7, oracle::kInf}, rng);
    const auto a = cosine_matrix(types::system(m));
    for (std::size_t i = 0; i < m.size(); ++i) {
      CHECK(a(i, i) == 1.0);
      for (std::size_t j = 0; j < m.size(); ++j) {
        if (i == j) continue;
        CHECK(a(i, j) <= 0.0);
        CHECK(a(i, j) >= -1.0);
        CHECK((a(i, j) == 0.0) == (m[i][j] == 2));
      }
    }
  }
}

TEST_CASE("irreducible components") {
  CHECK(irreducible_components(parse_coxeter_system("2\n1 3\n3 1")) ==
        std::vector<IndexSet>{IndexSet{0, 1}});
  CHECK(irreducible_components(parse_coxeter_system("4; 1 2 inf; 3 4 inf")) ==
        std::vector<IndexSet>{IndexSet{0, 1}, IndexSet{2, 3}});
  CHECK(irreducible_components(CoxeterSystem::right_angled(3)).size() == 3);
  CHECK(irreducible_components(parse_coxeter_system("4; 1 4 3; 2 3 5")) ==
        std::vector<IndexSet>{IndexSet{0, 3}, IndexSet{1, 2}});
}

TEST_CASE("finiteness and affineness") {
  const auto d3 = parse_coxeter_system("2\n1 3\n3 1");
  const auto t333 = types::system(types::triangle(3, 3, 3));
  const auto inf = parse_coxeter_system("2; 1 2 inf");
  CHECK(is_finite(d3, IndexSet{0, 1}));
  CHECK(is_finite(d3, IndexSet{}));
  CHECK_FALSE(is_finite(t333, IndexSet{0, 1, 2}));
  CHECK_FALSE(is_finite(inf, IndexSet{0, 1}));
  CHECK(is_affine(t333, IndexSet{0, 1, 2}));
  CHECK_FALSE(is_affine(d3, IndexSet{0, 1}));
  CHECK(is_affine(inf, IndexSet{0, 1}));
  CHECK_THROWS_AS(is_affine(d3, IndexSet{0}), DomainError);
  // reducible product of two affine pieces is not itself affine
  CHECK_FALSE(is_affine(parse_coxeter_system("4; 1 2 inf; 3 4 inf"), IndexSet{0, 1, 2, 3}));
}

TEST_CASE("finiteness is monotone and exclusive with affineness") {
  gen::Rng rng(5);
  for (int k = 0; k < 100; ++k) {
    const auto sys = types::system(gen::orders(gen::pick(rng, 2, 5), {2, 3, 4, 6, oracle::kInf}, rng));
    const std::uint64_t full = std::uint64_t{1} << sys.rank();
    for (std::uint64_t t = 1; t < full; ++t) {
      const auto s = IndexSet::from_mask(t);
      const bool fin = is_finite(sys, s);
      if (s.size() >= 2) CHECK_FALSE((fin && is_affine(sys, s)));
      if (!fin) continue;
      for (auto i : s) CHECK(is_finite(sys, s.without(i)));
    }
  }
}

TEST_CASE("subsystems and permutations") {
  const auto sys = parse_coxeter_system("3\n1 3 inf\n3 1 5\ninf 5 1");
  const auto sub = sys.subsystem(IndexSet{0, 2});
  CHECK(sub.rank() == 2);
  CHECK(sub.is_infinite(0, 1));
  CHECK(sub.labels() == std::vector<std::string>{"s1", "s3"});
  const auto p = sys.permuted({2, 0, 1});
  CHECK(p.order(0, 2) == 5);
  CHECK(p.is_infinite(0, 1));
  CHECK(p.labels().front() == "s3");
  CHECK(sys.with_order(0, 1, 4).order(1, 0) == 4);
}
