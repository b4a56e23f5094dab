#pragma once

// Cross-checks of the closed forms in bncore against the brute-force
// oracles. Each suite returns an oracle::Report; the CLI `verify`
// subcommand and the acceptance binary are thin wrappers around these.

#include "abn/oracle.hpp"

namespace abn {

struct SweepBox {
  Integer g_max = 60;
  Integer r_max = 40;
  Integer chi_min = -40;
};

// Delta(n) = n(n+1)/2 for n <= n_max, the functional equation and
// agreement with the recursive oracle on `samples` seeded rational points.
oracle::Report suite_delta(int n_max = 100, int samples = 2000);

// chi Delta(h/(-chi)) and (r+1+D)(s+1)/2 are integers, and every equality
// case in the box has |chi| | g - 1 with a square component count.
oracle::Report suite_integrality(const SweepBox& box = {}, int h_max = 200);

// bn_verdict agrees with mhk_nonempty(R, r+1, chi) on every chi < 0, d >= 1
// instance of the box, and Serre duality is an involution on chi > 0.
oracle::Report suite_dual_path(const SweepBox& box = {});

// The g = 28 table against the published one; only (20, 3) may differ, and
// there both brute forms must say empty.
oracle::Report suite_table();

}  // namespace abn
