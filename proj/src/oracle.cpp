#include "abn/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <thread>

namespace abn::oracle {

namespace {

Integer first_wall_rank(const Integer& chi, const Surface& s) {
  // Largest R >= 0 with (-R, 1, chi)^2 >= 0, found by scanning.
  Integer R = 0;
  while (square(Character(-(R + 1), Integer(1), chi), s) >= 0) {
    ++R;
  }
  return R;
}

Character w(const Integer& k, const Integer& chi, const Integer& R) {
  return Character(k - R, Integer(1), chi);
}

// d(k, h) = w_k^2 + 2 + h chi - h^2, straight from the lattice.
Integer dim_from_lattice(const Integer& k, const Integer& h, const Integer& chi, const Integer& R,
                         const Surface& s) {
  return square(w(k, chi, R), s) + 2 + h * chi - h * h;
}

}  // namespace

void Report::fail(std::string message) { violations.push_back(std::move(message)); }

std::vector<JHPartition> jh_partitions(const Integer& k, const Integer& chi, const Surface& s) {
  const Integer R = first_wall_rank(chi, s);
  const Character structure(1, 0, 0);
  std::vector<JHPartition> out;
  for (Integer kp = 0; kp <= k; ++kp) {
    JHPartition p{k, kp, k - kp};
    const Character sum = Character(p.structure_copies * structure.coords()) + w(kp, chi, R);
    if (!(sum == w(k, chi, R))) {
      throw IntegralityViolation("Jordan-Hoelder character sum does not reproduce w_k");
    }
    out.push_back(p);
  }
  return out;
}

Rational recursive_delta(const Rational& t) {
  if (t < 0) {
    throw Error(ErrorKind::NegativeArgument, "Delta is defined for t >= 0");
  }
  thread_local std::map<Rational, Rational> memo;
  if (t <= 1) {
    return t;
  }
  auto it = memo.find(t);
  if (it != memo.end()) {
    return it->second;
  }
  Rational value = recursive_delta(t - 1) + t;
  memo.emplace(t, value);
  return value;
}

Integer brute_max_h(const Integer& k, const Integer& chi) {
  const Integer m = -chi;
  Integer h = 0;
  while (recursive_delta(Rational(h + 1, m)) <= Rational(k, m)) {
    ++h;
  }
  return h;
}

Report brute_stratum_recursion(const Integer& k_max, const Integer& chi, const Surface& s) {
  Report report{"strata", 0, {}};
  if (chi >= 0) {
    report.fail("chi must be negative");
    return report;
  }
  const Integer m = -chi;
  const Integer R = first_wall_rank(chi, s);

  // Equality k_red for (k, h), or -1 when none / not unique.
  auto equality_k_red = [&](const Integer& k, const Integer& h, Report& rep) -> Integer {
    const Rational need = recursive_delta(Rational(h, m));
    Integer found = -1;
    int count = 0;
    for (Integer kr = 0; kr <= k; ++kr) {
      if (Rational(k - kr, m) == need) {
        found = kr;
        ++count;
      }
    }
    if (count != 1) {
      rep.fail("k=" + k.str() + " h=" + h.str() + ": " + std::to_string(count) +
               " equality strata (expected exactly one)");
      return -1;
    }
    return found;
  };

  for (Integer k = 0; k <= k_max; ++k) {
    const Integer top_h = brute_max_h(k, chi);
    for (Integer h = 0; h <= top_h; ++h) {
      const Integer dkh = dim_from_lattice(k, h, chi, R, s);
      const Integer l_min = std::max(Integer(0), Integer(h + chi));
      const Integer l_max = brute_max_h(k - h, chi);
      for (Integer l = l_min; l <= l_max; ++l) {
        ++report.checks;
        const Integer bound = dim_from_lattice(k - h, l, chi, R, s) + h * (l - chi - h);
        const std::string where = "k=" + k.str() + " h=" + h.str() + " l=" + l.str();
        if (bound > dkh) {
          report.fail(where + ": reduction exceeds d(k,h)");
        }
        const bool tight = bound == dkh;
        const bool endpoint = l == 0 || l == h + chi;
        if (tight != endpoint) {
          report.fail(where + ": equality at a non-endpoint (or missed at an endpoint)");
        }
      }

      ++report.checks;
      const Integer k0 = equality_k_red(k, h, report);
      if (h >= 1 && h + chi >= 0) {
        ++report.checks;
        const Integer k_next = k - h;
        const Integer h_next = h + chi;
        if (dim_from_lattice(k_next, h_next, chi, R, s) != dkh) {
          report.fail("k=" + k.str() + " h=" + h.str() + ": d(k-h, h+chi) != d(k,h)");
        }
        if (h_next > brute_max_h(k_next, chi)) {
          report.fail("k=" + k.str() + " h=" + h.str() + ": reduced stratum is empty");
        } else if (k0 >= 0 && equality_k_red(k_next, h_next, report) != k0) {
          report.fail("k=" + k.str() + " h=" + h.str() + ": k_red changes along the chain");
        }
      }
    }
  }
  return report;
}

std::pair<bool, bool> brute_bn_forms(long long g, long long d, long long r) {
  const long long chi = d + 1 - g;
  if (chi >= 0) {
    throw Error(ErrorKind::NonNegativeChi, "brute_bn_forms needs chi < 0");
  }
  const long long m = -chi;
  const long long rho = g - (r + 1) * (r + 1 - chi);
  long long D = r + 1;
  while (D >= m) {
    D -= m;
  }
  long long q = 0;
  while ((q + 1) * m <= r) {
    ++q;
  }
  // Second form: twice both sides of rho + r(r+2) >= q m (r + 1 - m (q+1) / 2).
  return {rho + g - 2 >= D * m - D * D, 2 * (rho + r * (r + 2)) >= q * m * (2 * (r + 1) - m * (q + 1))};
}

Report brute_klm_equivalence(const Integer& g_max, const Integer& r_max, const Integer& chi_min) {
  Report report{"klm-equivalence", 0, {}};
  if (chi_min >= 0) {
    report.fail("chi_min must be negative");
    return report;
  }
  const long long gmax = to_int64(g_max);
  const long long rmax = to_int64(r_max);
  const long long cmin = to_int64(chi_min);
  if (gmax < 2 || rmax < 1) {
    return report;
  }

  const unsigned workers = std::max(1u, std::min<unsigned>(sweep_threads(), static_cast<unsigned>(gmax - 1)));
  std::vector<Report> partial(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      Report& rep = partial[w];
      for (long long g = 2 + w; g <= gmax; g += workers) {
        for (long long r = 1; r <= rmax; ++r) {
          for (long long chi = cmin; chi <= -1; ++chi) {
            // d may be <= 0 here; the forms only see g, r and chi.
            const auto [main_form, klm_form] = brute_bn_forms(g, g - 1 + chi, r);
            ++rep.checks;
            if (main_form != klm_form) {
              rep.fail("g=" + std::to_string(g) + " r=" + std::to_string(r) +
                       " chi=" + std::to_string(chi) + ": forms disagree");
            }
          }
        }
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
  for (auto& rep : partial) {
    report.checks += rep.checks;
    for (auto& v : rep.violations) {
      report.violations.push_back(std::move(v));
    }
  }
  std::sort(report.violations.begin(), report.violations.end());
  return report;
}

Report verify_first_wall(const Integer& chi, const Surface& s, const Region& reg) {
  Report report{"first-wall", 0, {}};
  if (chi >= 0) {
    report.fail("chi must be negative");
    return report;
  }
  if (reg.beta_lo() >= 0) {
    return report;
  }
  const Region clipped(reg.beta_lo(), std::min(reg.beta_hi(), Rational(0)), reg.alpha_lo(), reg.alpha_hi());
  const Character v(0, 1, chi);
  const FirstWallData first = first_wall_data(chi, s);
  const auto walls = enumerate_walls(v, clipped, s);

  bool listed = false;
  for (const auto& rec : walls) {
    ++report.checks;
    const std::string tag = "wall " + rec.wall.a().str() + "(a^2+b^2) + " + rec.wall.b().str() +
                            " b + " + rec.wall.c().str();
    if (meets_beta_zero_ray(rec.wall)) {
      report.fail(tag + " meets the ray beta = 0");
    }
    if (!circle_weakly_inside(rec.wall, first.wall)) {
      report.fail(tag + " leaves the first wall");
    }
    listed = listed || rec.wall.same_locus(first.wall);
  }
  // The first wall is an actual wall; if its top lies in the region it must be found.
  const Rational top = first.wall.center();
  ++report.checks;
  if (clipped.contains(first.wall.alpha_sq_at(top), top) && !listed) {
    report.fail("first wall not enumerated although its top lies in the region");
  }
  return report;
}

unsigned sweep_threads() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ABN_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) {
      n = std::min(n, static_cast<unsigned>(cap));
    }
  }
  return n;
}

}  // namespace abn::oracle
