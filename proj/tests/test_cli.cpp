#include <doctest.h>

#include <sstream>
#include <vector>

#include "abn/cli.hpp"
#include "abn/io.hpp"

using namespace abn;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<const char*> args) {
  args.insert(args.begin(), "abn");
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli bn") {
  const Run eq = run({"bn", "--g", "28", "--d", "24", "--r", "5", "--format", "json"});
  REQUIRE(eq.code == 0);
  const json j = json::parse(eq.out);
  CHECK(j.at("nonempty") == true);
  CHECK(j.at("component_count") == 81);
  CHECK(j.at("fiber") == json{{"D", 0}, {"n", 3}});

  const Run empty = run({"bn", "--g", "28", "--d", "20", "--r", "4"});
  CHECK(empty.code == 0);
  CHECK(empty.out.find("verdict: EMPTY") != std::string::npos);

  CHECK(run({"bn", "--h2", "54", "--d", "24", "--r", "5"}).code == 0);
  CHECK(run({"bn", "--g", "28", "--d", "27"}).code == kExitDomain);
  CHECK(run({"bn", "--g", "28", "--d", "27", "--r", "2"}).code == kExitDomain);
  CHECK(run({"bn", "--g", "28", "--h2", "54", "--d", "20", "--r", "1"}).code == kExitUsage);
  CHECK(run({"bn", "--g", "28", "--d", "20"}).code == kExitUsage);
  CHECK(run({"bn", "--g", "x", "--d", "20", "--r", "1"}).code == kExitUsage);
  CHECK(run({"bn", "--g", "28", "--d", "20", "--r", "1", "--format", "svg"}).code == kExitUsage);
  CHECK(run({"nonsense"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli table") {
  const Run t = run({"table", "--g", "28", "--d-range", "20:26", "--r-range", "1:7", "--compare-paper"});
  REQUIRE(t.code == 0);
  CHECK(t.out.find("diff at (d=20, r=3): published KLM, computed EMPTY") != std::string::npos);

  const Run csv = run({"table", "--g", "28", "--d-range", "20-26", "--r-range", "1-7", "--format", "csv"});
  REQUIRE(csv.code == 0);
  CHECK(grid_from_csv(csv.out, 28) == compute_grid(28, 20, 26, 1, 7));

  const Run js = run({"table", "--g", "28", "--d-range", "20:26", "--r-range", "1:7", "--format", "json",
                      "--compare-paper"});
  REQUIRE(js.code == 0);
  const json j = json::parse(js.out);
  CHECK(j.at("cells").size() == 49);
  REQUIRE(j.at("diffs").size() == 1);
  CHECK(j.at("diffs")[0].at("expected") == true);

  const Run one = run({"table", "--g", "28", "--d-range", "24", "--r-range", "5", "--format", "csv"});
  CHECK(one.out == "d/r,5\n24,NEW\n");

  CHECK(run({"table", "--g", "28", "--d-range", "20:26", "--r-range", "1:7", "--format", "svg"}).code == 0);
  CHECK(run({"table", "--g", "28", "--d-range", "26:20", "--r-range", "1:7"}).code == kExitDomain);
}

TEST_CASE("cli walls") {
  const Run w = run({"walls", "--h2", "54", "--v", "0,1,-3"});
  REQUIRE(w.code == 0);
  const json j = json::parse(w.out);
  bool seen = false;
  for (const auto& rec : j.at("walls")) {
    seen = seen || (rec.at("a") == 9 && rec.at("b") == 1 && rec.at("c") == 0);
    CHECK(rec.contains("u"));
    CHECK(rec.contains("center"));
    CHECK(rec.contains("radius_sq"));
  }
  CHECK(seen);

  const Run iso = run({"walls", "--h2", "54", "--v", "1,0,0"});
  REQUIRE(iso.code == 0);
  CHECK(json::parse(iso.out).at("walls").empty());

  const Run svg = run({"walls", "--h2", "6", "--v", "0,1,-1", "--region", "-1,0,1/100,2", "--format", "svg"});
  CHECK(svg.code == 0);
  CHECK(svg.out.find("crimson") != std::string::npos);

  CHECK(run({"walls", "--h2", "54", "--v", "1,0,1"}).code == kExitInvalidClass);
  CHECK(run({"walls", "--h2", "54", "--v", "1,0"}).code == kExitUsage);
  CHECK(run({"walls", "--h2", "54", "--v", "a,b,c"}).code == kExitUsage);
  CHECK(run({"walls", "--h2", "54", "--v", "0,1,-3", "--region", "0,0,1,2"}).code == kExitDomain);
}

TEST_CASE("cli strata") {
  const Run s9 = run({"strata", "--h2", "54", "--chi", "-3", "--k", "9", "--format", "json"});
  REQUIRE(s9.code == 0);
  const json j = json::parse(s9.out);
  CHECK(j.at("max_h") == 6);
  int tops = 0;
  for (const auto& row : j.at("strata")) {
    if (row.at("top") == true) {
      ++tops;
      CHECK(row.at("k_red") == 0);
      CHECK(row.at("h") == 6);
      CHECK(row.at("dim") == 2);
    }
  }
  CHECK(tops == 1);

  const Run s5 = run({"strata", "--h2", "54", "--chi", "-3", "--k", "5", "--format", "json"});
  const json j5 = json::parse(s5.out);
  bool seen = false;
  for (const auto& row : j5.at("strata")) {
    seen = seen || (row.at("k_red") == 2 && row.at("h") == 3 && row.at("dim") == 14);
  }
  CHECK(seen);

  const Run s0 = run({"strata", "--h2", "54", "--chi", "-3", "--k", "0", "--format", "json"});
  const json rows = json::parse(s0.out).at("strata");
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].at("dim") == 2);  // w0^2 + 2 with w0^2 = 0

  CHECK(run({"strata", "--h2", "54", "--chi", "-3", "--k", "9"}).out.find("top stratum") != std::string::npos);
  CHECK(run({"strata", "--h2", "54", "--chi", "2", "--k", "9"}).code == kExitDomain);
}

TEST_CASE("cli verify") {
  CHECK(run({"verify", "--suite", "klm-equivalence", "--g-max", "20", "--r-max", "10", "--chi-min", "-10"}).code == 0);
  CHECK(run({"verify", "--suite", "strata", "--k-max", "20", "--chi", "-3", "--h2", "54"}).code == 0);
  const Run fw = run({"verify", "--suite", "first-wall", "--chi", "-1", "--h2", "6"});
  CHECK(fw.code == 0);
  CHECK(fw.out.rfind("PASS first-wall", 0) == 0);
  CHECK(run({"verify", "--suite", "table"}).code == 0);
  CHECK(run({"verify", "--suite", "strata", "--chi", "-3"}).code == kExitUsage);
  CHECK(run({"verify", "--suite", "bogus"}).code == kExitUsage);
}
