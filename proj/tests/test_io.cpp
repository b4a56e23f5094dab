#include <doctest.h>

#include "abn/io.hpp"

using namespace abn;

TEST_CASE("json scalars") {
  CHECK(to_json(Integer(42)) == json(42));
  const Integer big = Integer(1) << 80;
  CHECK(to_json(big) == json(big.str()));
  CHECK(to_json(Rational(-3, 6)) == json("-1/2"));
  CHECK(to_json(Rational(4)) == json("4"));
}

TEST_CASE("character and surface json round-trip") {
  const Character v(0, 1, -3);
  CHECK(to_json(v).dump() == "[0,1,-3]");
  CHECK(character_from_json(to_json(v)) == v);
  const Character big(Integer(1) << 70, -5, 2);
  CHECK(character_from_json(json::parse(to_json(big).dump())) == big);
  CHECK(surface_from_json(to_json(Surface(54))) == Surface(54));
  CHECK_THROWS_AS(character_from_json(json::parse("[1,2]")), std::invalid_argument);
  CHECK_THROWS_AS(character_from_json(json::parse("[1,2,\"x\"]")), std::invalid_argument);
  CHECK_THROWS_AS(surface_from_json(json::parse("{}")), std::invalid_argument);
}

TEST_CASE("json output is stable under re-serialization") {
  const json a = to_json(bn_verdict(28, 24, 5));
  CHECK(json::parse(a.dump()).dump() == a.dump());
  CHECK(a.at("component_count") == 81);
  CHECK(a.at("structure") == "GRASSMANNIAN_UNION");
  const json w = to_json(*wall_between(Character(0, 1, -3), Character(1, 0, 0), Surface(54)));
  CHECK(w.dump() == R"({"a":9,"b":1,"c":0,"center":"-1/18","radius_sq":"1/324"})");
  const json st = to_json(stratum_status(5, 2, 3, -3, Surface(54)));
  CHECK(json::parse(st.dump()) == st);
}

TEST_CASE("grid csv round-trip") {
  const LabelGrid grid = compute_grid(28, 20, 30, 1, 7);
  const std::string csv = grid_to_csv(grid);
  CHECK(csv.rfind("d/r,1,2,3,4,5,6,7\n20,BN,KLM,EMPTY,", 0) == 0);
  CHECK(grid_from_csv(csv, 28) == grid);
  // d = 27 has chi = 0.
  CHECK(grid.labels[7][0] == "-");
  CHECK_THROWS_AS(grid_from_csv("x,1\n", 28), std::invalid_argument);
  CHECK_THROWS_AS(grid_from_csv("d/r,1,2\n20,BN\n", 28), std::invalid_argument);
  CHECK_THROWS_AS(compute_grid(28, 5, 4, 1, 1), Error);
}

TEST_CASE("1x1 grid equals the single verdict") {
  for (int d = 18; d <= 26; ++d) {
    for (int r = 1; r <= 5; ++r) {
      const LabelGrid grid = compute_grid(28, d, d, r, r);
      REQUIRE(grid.labels.size() == 1);
      REQUIRE(grid.labels[0][0] == to_string(classify_cell(28, d, r)));
    }
  }
}

TEST_CASE("comparison with the published table") {
  CHECK(reference_table_g28().size() == 49);
  CHECK(reference_to_computed("phi") == "EMPTY");
  CHECK(reference_to_computed("Delta") == "NEW");
  CHECK(reference_to_computed("Thm1.1") == "NEW");
  const auto diffs = compare_with_reference(compute_grid(28, 20, 26, 1, 7));
  REQUIRE(diffs.size() == 1);
  CHECK(diffs[0].d == 20);
  CHECK(diffs[0].r == 3);
  CHECK(diffs[0].published == "KLM");
  CHECK(diffs[0].computed == "EMPTY");
  CHECK(diffs[0].expected);
  CHECK(compare_with_reference(compute_grid(10, 5, 8, 1, 3)).empty());
}

TEST_CASE("svg output") {
  const Surface s(54);
  const Region reg(-2, 0, Rational(1, 100), 2);
  const auto walls = enumerate_walls(Character(0, 1, -3), reg, s);
  const std::string svg = walls_to_svg(walls, {reg, first_wall_data(-3, s).wall, true, "v = (0,1,-3)"});
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("crimson") != std::string::npos);
  CHECK(svg.find("seagreen") != std::string::npos);
  const std::string heat = grid_to_svg(compute_grid(28, 20, 26, 1, 7));
  CHECK(heat.find(">KLM<") != std::string::npos);
}
