// Acceptance suite: one PASS/FAIL line per criterion; exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "abn/bncore.hpp"
#include "abn/io.hpp"
#include "abn/oracle.hpp"
#include "abn/stability.hpp"
#include "abn/verify.hpp"

using namespace abn;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail.str("");
      detail << what;
    }
  }
  void absorb(const oracle::Report& rep) {
    if (!rep.passed()) {
      require(false, rep.name + ": " + rep.violations.front() + " (" + std::to_string(rep.violations.size()) +
                         " violations)");
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome outcome;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(outcome);
  } catch (const std::exception& e) {
    outcome.require(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && seconds >= limit_seconds) {
    outcome.require(false, "took " + std::to_string(seconds) + " s, limit " + std::to_string(limit_seconds) + " s");
  }
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.3f s", seconds);
  std::cout << (outcome.ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << " [" << timing << "]";
  const std::string detail = outcome.detail.str();
  if (!detail.empty()) {
    std::cout << " -- " << detail;
  }
  std::cout << std::endl;
  failures += outcome.ok ? 0 : 1;
}

// Points on the circle of center c and rational radius rho:
// (alpha, beta) = (rho 2t / (1 + t^2), c + rho (1 - t^2) / (1 + t^2)).
StabilityPoint circle_point(const Rational& c, const Rational& rho, const Rational& t) {
  const Rational denom = 1 + t * t;
  return StabilityPoint(rho * 2 * t / denom, c + rho * (1 - t * t) / denom);
}

}  // namespace

int main() {
  const SweepBox box;  // g in [2, 60], r in [1, 40], chi in [-40, -1]

  criterion(1, "g = 28 table reproduction, (20,3) flagged", 1.0, [](Outcome& o) {
    const LabelGrid grid = compute_grid(28, 20, 26, 1, 7);
    const auto diffs = compare_with_reference(grid);
    int matched = 0;
    for (const auto& cell : reference_table_g28()) {
      const std::string computed = grid.labels[cell.d - 20][cell.r - 1];
      if (computed == reference_to_computed(cell.label)) {
        ++matched;
      } else if (!(cell.d == 20 && cell.r == 3)) {
        o.require(false, "cell (" + std::to_string(cell.d) + "," + std::to_string(cell.r) + ") published " +
                             cell.label + ", computed " + computed);
      }
    }
    o.require(matched == 48, "expected 48 matching cells, got " + std::to_string(matched));
    o.require(diffs.size() == 1 && diffs[0].d == 20 && diffs[0].r == 3 && diffs[0].expected &&
                  diffs[0].computed == "EMPTY",
              "(20,3) is not the single flagged discrepancy");
    const auto [main_form, klm_form] = oracle::brute_bn_forms(28, 20, 3);
    o.require(!main_form && !klm_form, "brute forms at (20,3) are not both EMPTY");
    if (o.ok) {
      o.detail << "48/49 cells match; (20,3): published KLM, computed EMPTY, both brute forms EMPTY";
    }
  });

  criterion(2, "non-emptiness bound equals the older bound on g<=60, r<=40, chi>=-40", 10.0, [&](Outcome& o) {
    const oracle::Report rep = oracle::brute_klm_equivalence(box.g_max, box.r_max, box.chi_min);
    o.absorb(rep);
    long long checks = 0;
    for (Integer g = 2; g <= box.g_max; ++g) {
      for (Integer r = 1; r <= box.r_max; ++r) {
        for (Integer chi = box.chi_min; chi <= -1; ++chi) {
          ++checks;
          if (bn_inequality_holds(g, r, chi) != klm_bound_holds(g, r, chi)) {
            o.require(false, "bncore forms disagree at g=" + g.str() + " r=" + r.str() + " chi=" + chi.str());
          }
        }
      }
    }
    o.require(rep.checks == checks && checks == 59 * 40 * 40, "sweep size mismatch");
    if (o.ok) {
      o.detail << checks << " instances, 0 disagreements (oracle and bncore)";
    }
  });

  criterion(3, "Delta: integers, functional equation, recursive oracle", 1.0, [](Outcome& o) {
    const oracle::Report rep = suite_delta(100, 2000);
    o.absorb(rep);
    if (o.ok) {
      o.detail << rep.checks << " checks";
    }
  });

  criterion(4, "integrality suites", 0, [&](Outcome& o) {
    const oracle::Report rep = suite_integrality(box, 200);
    o.absorb(rep);
    if (o.ok) {
      o.detail << rep.checks << " checks, 0 failures";
    }
  });

  criterion(5, "stratification recursion for (chi, H^2) in {(-1,6), (-3,54), (-7,54)}, k <= 20", 10.0,
            [](Outcome& o) {
              long long checks = 0;
              for (const auto& [chi, h2] : {std::pair{-1, 6}, std::pair{-3, 54}, std::pair{-7, 54}}) {
                const oracle::Report rep = oracle::brute_stratum_recursion(20, chi, Surface(h2));
                o.absorb(rep);
                checks += rep.checks;
                // The oracle's max_h scan must agree with bncore's.
                for (int k = 0; k <= 20; ++k) {
                  o.require(oracle::brute_max_h(k, chi) == max_h(k, chi), "max_h disagrees");
                  for (Integer h = 0; h <= max_h(k, chi); ++h) {
                    o.require(stratum_status(k, k_red_for(k, h, chi), h, chi, Surface(h2)).status ==
                                  StratumStatus::NonEmpty,
                              "equality stratum not non-empty");
                  }
                }
              }
              if (o.ok) {
                o.detail << checks << " checks, 0 violations";
              }
            });

  criterion(6, "worked equality case (g, d, r) = (28, 24, 5)", 0, [](Outcome& o) {
    const BNVerdict v = bn_verdict(28, 24, 5);
    o.require(v.nonempty, "not non-empty");
    o.require(v.dim == Integer(0), "dim != 0");
    o.require(v.structure == BNStructure::GrassmannianUnion && v.component_count == Integer(81),
              "not 81 Grassmannians");
    o.require(v.fiber == GrassmannianFiber{0, 3}, "fiber is not Gr(0,3)");
    const ModuliVerdict m = moduli_verdict(0, -3, 5, Surface(54));
    o.require(m.v == Character(0, 1, -3), "moduli class is not (0,1,-3)");
    o.require(m.nonempty && m.dim == Integer(2) && *m.dim == *v.dim + 2, "moduli dim is not 0 + 2");
    if (o.ok) {
      o.detail << "non-empty, dim 0, 81 x Gr(0,3); moduli dim 2 = 0 + 2";
    }
  });

  criterion(7, "wall geometry of the first wall", 30.0, [](Outcome& o) {
    const Surface s54(54);
    const Character v(0, 1, -3);
    const Character u(1, 0, 0);
    const auto w = wall_between(v, u, s54);
    o.require(w && w->a() == 9 && w->b() == 1 && w->c() == 0, "wall is not 9(a^2+b^2)+b=0");
    int points = 0;
    for (int i = 1; points < 20; ++i) {
      const StabilityPoint p = circle_point(Rational(-1, 18), Rational(1, 18), Rational(i, 2 * i + 1));
      // Independent check that p is on the circle: 9(alpha^2 + beta^2) + beta = 0.
      o.require(9 * (p.alpha() * p.alpha() + p.beta() * p.beta()) + p.beta() == 0, "point off the circle");
      o.require(slope_nu(u, p, s54) == slope_nu(v, p, s54), "slopes differ at a wall point");
      ++points;
    }
    const Region reg(-2, 0, Rational(1, 100), 2);
    long long checks = 0;
    for (const auto& [chi, h2] : {std::pair{-1, 6}, std::pair{-3, 54}}) {
      const oracle::Report rep = oracle::verify_first_wall(chi, Surface(h2), reg);
      o.absorb(rep);
      checks += rep.checks;
    }
    if (o.ok) {
      o.detail << "20 rational points; first-wall checks " << checks << ", 0 violations";
    }
  });

  criterion(8, "dual-path verdicts and duality involution", 0, [&](Outcome& o) {
    const oracle::Report rep = suite_dual_path(box);
    o.absorb(rep);
    if (o.ok) {
      o.detail << rep.checks << " checks (chi < 0 instances with d >= 1)";
    }
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures;
}
