#include "abn/verify.hpp"

#include <random>

#include "abn/bncore.hpp"
#include "abn/io.hpp"

namespace abn {

namespace {

Integer remainder_of(const Integer& n, const Integer& m) { return mod_floor(n, m); }

std::string at(const Integer& g, const Integer& r, const Integer& chi) {
  return "g=" + g.str() + " r=" + r.str() + " chi=" + chi.str();
}

}  // namespace

oracle::Report suite_delta(int n_max, int samples) {
  oracle::Report report{"delta", 0, {}};
  for (int n = 0; n <= n_max; ++n) {
    ++report.checks;
    if (delta_klm(Rational(n)) != Rational(n * (n + 1), 2)) {
      report.fail("Delta(" + std::to_string(n) + ") != n(n+1)/2");
    }
  }
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> den(1, 97);
  for (int i = 0; i < samples; ++i) {
    // t uniform over rationals in [1, 50] with denominator below 100.
    const int q = den(rng);
    const Rational t(std::uniform_int_distribution<int>(q, 50 * q)(rng), q);
    const Rational closed = delta_klm(t);
    report.checks += 2;
    if (closed != delta_klm(t - 1) + t) {
      report.fail("functional equation fails at t=" + t.str());
    }
    if (closed != oracle::recursive_delta(t)) {
      report.fail("closed form and recursion disagree at t=" + t.str());
    }
  }
  return report;
}

oracle::Report suite_integrality(const SweepBox& box, int h_max) {
  oracle::Report report{"integrality", 0, {}};
  for (Integer chi = box.chi_min; chi <= -1; ++chi) {
    const Integer m = -chi;
    for (Integer h = 0; h <= h_max; ++h) {
      ++report.checks;
      if (!is_integral(Rational(chi) * delta_klm(Rational(h, m)))) {
        report.fail("chi*Delta(h/m) not integral at chi=" + chi.str() + " h=" + h.str());
      }
    }
    for (Integer r = 0; r <= h_max; ++r) {
      const Integer D = remainder_of(r + 1, m);
      const Integer s = floor_div(r + 1, m);
      ++report.checks;
      if (!is_integral(Rational((r + 1 + D) * (s + 1), 2))) {
        report.fail("(r+1+D)(s+1)/2 not integral at chi=" + chi.str() + " r=" + r.str());
      }
    }
  }
  for (Integer g = 2; g <= box.g_max; ++g) {
    for (Integer r = 1; r <= box.r_max; ++r) {
      for (Integer chi = box.chi_min; chi <= -1; ++chi) {
        const Integer m = -chi;
        const Integer rho = g - (r + 1) * (r + 1 - chi);
        const Integer D = remainder_of(r + 1, m);
        if (rho + g - 2 != D * m - D * D) {
          continue;
        }
        report.checks += 2;
        if (mod_floor(g - 1, m) != 0) {
          report.fail("equality case with |chi| not dividing g-1: " + at(g, r, chi));
          continue;
        }
        const Integer root = (g - 1) / m;
        const Integer count = root * root;
        if (mp::sqrt(count) * mp::sqrt(count) != count) {
          report.fail("component count not a square: " + at(g, r, chi));
        }
        const Integer d = g - 1 + chi;
        if (d >= 1) {
          ++report.checks;
          const BNVerdict v = bn_verdict(g, d, r);
          if (v.structure != BNStructure::GrassmannianUnion || v.component_count != count) {
            report.fail("bn_verdict misses the equality case: " + at(g, r, chi));
          }
        }
      }
    }
  }
  return report;
}

oracle::Report suite_dual_path(const SweepBox& box) {
  oracle::Report report{"dual-path", 0, {}};
  for (Integer g = 2; g <= box.g_max; ++g) {
    const Surface s = Surface::from_genus(g);
    for (Integer r = 1; r <= box.r_max; ++r) {
      for (Integer chi = box.chi_min; chi <= -1; ++chi) {
        const Integer d = g - 1 + chi;
        if (d < 1) {
          continue;
        }
        ++report.checks;
        const Integer R = first_wall_data(chi, s).R;
        if (bn_verdict(g, d, r).nonempty != mhk_nonempty(R, r + 1, chi)) {
          report.fail("verdict and M^{r+1}_R disagree: " + at(g, r, chi));
        }
      }
      // chi > 0 side: d in (g - 1, 2g - 2].
      for (Integer d = g; d <= 2 * g - 2; ++d) {
        report.checks += 2;
        const auto [dd, rd] = serre_dual(g, d, r);
        const Integer chi_dual = dd + 1 - g;
        if (chi_dual != -(d + 1 - g)) {
          report.fail("duality does not flip chi at g=" + g.str() + " d=" + d.str() + " r=" + r.str());
        }
        if (serre_dual(g, dd, rd) != std::pair<Integer, Integer>(d, r)) {
          report.fail("duality is not an involution at g=" + g.str() + " d=" + d.str() + " r=" + r.str());
        }
      }
    }
  }
  return report;
}

oracle::Report suite_table() {
  oracle::Report report{"table", 0, {}};
  const LabelGrid grid = compute_grid(28, 20, 26, 1, 7);
  const auto diffs = compare_with_reference(grid);
  report.checks += static_cast<long long>(reference_table_g28().size());
  bool saw_expected = false;
  for (const auto& diff : diffs) {
    if (diff.expected) {
      saw_expected = true;
      continue;
    }
    report.fail("cell (" + std::to_string(diff.d) + "," + std::to_string(diff.r) + "): published " +
                diff.published + ", computed " + diff.computed);
  }
  ++report.checks;
  if (!saw_expected) {
    report.fail("cell (20,3) no longer differs from the published table");
  }
  ++report.checks;
  const auto [main_form, klm_form] = oracle::brute_bn_forms(28, 20, 3);
  if (main_form || klm_form) {
    report.fail("brute forms do not both say empty at (20,3)");
  }
  return report;
}

}  // namespace abn
