#pragma once

// Brute-force verifiers. Nothing here calls into bncore: Delta is
// recomputed by its recursive definition, section counts by upward scans,
// and expected dimensions straight from the lattice.

#include <string>
#include <utility>
#include <vector>

#include "abn/lattice.hpp"
#include "abn/stability.hpp"

namespace abn::oracle {

struct JHPartition {
  Integer k;
  Integer k_prime;
  Integer structure_copies;  // copies of (1, 0, 0)
};

// All splittings w_k = (k - k') (1, 0, 0) + w_{k'}, each checked exactly.
std::vector<JHPartition> jh_partitions(const Integer& k, const Integer& chi, const Surface& s);

// Delta by Delta(t) = t on [0, 1] and Delta(t) = Delta(t - 1) + t, memoized.
Rational recursive_delta(const Rational& t);

Integer brute_max_h(const Integer& k, const Integer& chi);

struct Report {
  std::string name;
  long long checks = 0;
  std::vector<std::string> violations;

  bool passed() const { return violations.empty(); }
  void fail(std::string message);
};

// For every k <= k_max and h <= max_h(k): the reduction inequality
// d(k-h, l) + h(l - chi - h) <= d(k, h) over l >= max(0, h + chi), with
// equality exactly at l in {0, h + chi}; a unique equality k_red; and
// d(k-h, h+chi) = d(k, h) along the reduction chain.
Report brute_stratum_recursion(const Integer& k_max, const Integer& chi, const Surface& s);

// Both non-emptiness forms evaluated in 64-bit arithmetic from scratch:
// first = rho + g - 2 >= D m - D^2, second = the older closed-form bound.
// Requires chi = d + 1 - g < 0.
std::pair<bool, bool> brute_bn_forms(long long g, long long d, long long r);

// Non-emptiness inequality vs. the older closed-form bound over
// g in [2, g_max], r in [1, r_max], chi in [chi_min, -1].
Report brute_klm_equivalence(const Integer& g_max, const Integer& r_max, const Integer& chi_min);

// Potential walls for (0, 1, chi) on reg (clipped to beta <= 0): none meets
// the ray beta = 0, all lie weakly inside the first wall.
Report verify_first_wall(const Integer& chi, const Surface& s, const Region& reg);

// Worker count for box sweeps; ABN_THREADS caps it.
unsigned sweep_threads();

}  // namespace abn::oracle
