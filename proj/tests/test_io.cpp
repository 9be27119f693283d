#include <doctest.h>

#include <json.hpp>

#include "coxeter_types.hpp"
#include "coxhyp/coxhyp.hpp"
#include "generators.hpp"

using namespace coxhyp;
using json = nlohmann::json;

TEST_CASE("matrix parsing") {
  const auto a = parse_matrix("2\n1 -0.5\n-0.5 1\n");
  CHECK(a(0, 1) == -0.5);
  const auto j = parse_matrix(R"({"n": 2, "a": [[1, 0], [0, 0]]})");
  CHECK(j(1, 1) == 0.0);
  CHECK_THROWS_AS(parse_matrix("2\n1 -0.5\n-0.5 1 7"), ParseError);
  CHECK_THROWS_AS(parse_matrix("2\n1 -0.5\n-0.5"), ParseError);
  CHECK_THROWS_AS(parse_matrix("2\n1 0.5\n0.5 1"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"({"n": 3, "a": [[1, 0], [0, 0]]})"), Error);
  CHECK(looks_like_system_json(R"({"n": 1, "m": [[1]]})"));
  CHECK_FALSE(looks_like_system_json(R"({"n": 1, "a": [[1]]})"));
  CHECK_FALSE(looks_like_system_json("not json"));
}

TEST_CASE("systems round-trip through JSON") {
  gen::Rng rng(73);
  for (int k = 0; k < 100; ++k) {
    const auto sys = types::system(gen::orders(gen::pick(rng, 1, 6), {2, 3, 5, 11, oracle::kInf}, rng));
    CHECK(parse_coxeter_system(to_json(sys)) == sys);
  }
  const auto labelled = parse_coxeter_system(R"({"n": 2, "m": [[1, 4], [4, 1]], "labels": ["x", "y"]})");
  CHECK(parse_coxeter_system(to_json(labelled)) == labelled);
}

TEST_CASE("matrices round-trip through JSON bit-exactly") {
  gen::Rng rng(79);
  for (int k = 0; k < 100; ++k) {
    const auto a = gen::to_anm(gen::almost_negative(gen::pick(rng, 1, 6), rng));
    CHECK(parse_matrix(to_json(a)).values() == a.values());
  }
}

TEST_CASE("matrix text formatting") {
  const auto a = AlmostNegativeMatrix::from_rows({{1, 1e-13}, {1e-13, -0.0}});
  CHECK(format_matrix(a, 1e-9) == "[[1,0],[0,0]]");
  CHECK(format_matrix(AlmostNegativeMatrix::from_rows({{1, -0.5}, {-0.5, 1}}), 1e-9) == "[[1,-0.5],[-0.5,1]]");
  CHECK(format_number(-1.0 / 3.0, 1e-9) == "-0.333333");
}

TEST_CASE("report JSON shapes") {
  const auto t = types::system(types::triangle(3, 3, 3));
  auto v = json::parse(to_json(decide(t), t));
  CHECK(v["hyperbolic"] == false);
  CHECK(v["witness"]["kind"] == "affine");
  CHECK(v["witness"]["subset"] == json::array({1, 2, 3}));

  const auto d3 = types::system(types::I2(3));
  v = json::parse(to_json(decide(d3), d3));
  CHECK(v["hyperbolic"] == true);
  CHECK(v["witness"].is_null());

  const auto a = AlmostNegativeMatrix::from_rows({{1, -1}, {-1, 1}});
  const auto n = build_nerve(a);
  v = json::parse(to_json(intrinsic_distance(n, NervePoint::vertex(a, 0), NervePoint::vertex(a, 1), 8)));
  CHECK(v["distance"] == "inf");

  const auto three = AlmostNegativeMatrix::from_rows({{1, 0, -1}, {0, 1, 0}, {-1, 0, 1}});
  const auto r = intrinsic_distance(build_nerve(three), NervePoint::vertex(three, 0), NervePoint::vertex(three, 2), 8);
  v = json::parse(to_json(r));
  CHECK(v["distance"].get<double>() == doctest::Approx(std::numbers::pi));
  CHECK(v["path"].front()["cell"] == json::array({1}));
  const auto csv = path_to_csv(r, 3);
  CHECK(csv.rfind("step,cell,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(r.path.size() + 1));

  v = json::parse(to_json(check_lemma_b(three)));
  CHECK(v["conclusion"] == "Reducible");
  CHECK(v["split"] == json::array({json::array({2}), json::array({1, 3})}));

  v = json::parse(to_json(chamber(d3)));
  CHECK(v["dual_basis"].size() == 2);

  v = json::parse(to_json(enumerate_davis_cells(d3), d3));
  CHECK(v["cells"].size() == 13);
  CHECK(v["group_order"] == 6);
}
