#pragma once

// Non-emptiness, dimension and component structure of Brill-Noether loci
// V^r_d(|H|) and of the strata M^h_k, M^h_{k,k_red} of sigma_+-stable
// objects of class w_k = (k - R, 1, chi) with h global sections.
//
// Conventions: chi < 0 unless stated, m = -chi, and the remainder D of a
// section count by m always lies in [0, m). Every comparison is exact.

#include <optional>
#include <string>

#include "abn/lattice.hpp"

namespace abn {

// Piecewise-linear Delta(t) = (t - floor(t)/2)(floor(t) + 1).
// Throws Error(NegativeArgument) for t < 0.
Rational delta_klm(const Rational& t);

// d(k, h) = w0^2 - 2 k chi + 2 + h chi - h^2. Both algebraic forms are
// evaluated and must agree.
Integer expected_dim(const Integer& k, const Integer& h, const Integer& chi, const Surface& s);

// M^h_k is non-empty iff k / (-chi) >= Delta(h / (-chi)).
bool mhk_nonempty(const Integer& k, const Integer& h, const Integer& chi);

Integer max_h(const Integer& k, const Integer& chi);

// The unique k0 in [0, k] with (k - k0) / (-chi) = Delta(h / (-chi)).
// Throws Error(Empty) if M^h_k is empty.
Integer k_red_for(const Integer& k, const Integer& h, const Integer& chi);

struct GrassmannianFiber {
  Integer D;
  Integer n;  // = -chi

  friend bool operator==(const GrassmannianFiber&, const GrassmannianFiber&) = default;
};

enum class StratumStatus { Empty, NonEmpty, UnknownNonMaximal };

const char* to_string(StratumStatus status);

struct StratumDescriptor {
  Integer k;
  Integer k_red;
  Integer h;
  StratumStatus status = StratumStatus::Empty;
  bool equality = false;
  std::optional<Integer> dim;               // set iff equality
  std::optional<GrassmannianFiber> fiber;   // set iff equality
};

// Throws Error(NonNegativeChi) or Error(InvalidRange) on bad input.
StratumDescriptor stratum_status(const Integer& k, const Integer& k_red, const Integer& h,
                                 const Integer& chi, const Surface& s);

// rho + g - 2 >= D |chi| - D^2 with D = (r + 1) mod |chi|; chi != 0.
bool bn_inequality_holds(const Integer& g, const Integer& r, const Integer& chi);

enum class BNStructure { Empty, Irreducible, GrassmannianUnion };

const char* to_string(BNStructure structure);

struct BNVerdict {
  Integer g, d, r;
  Integer chi;
  Integer rho;
  Integer D;
  bool nonempty = false;
  std::optional<Integer> dim;
  BNStructure structure = BNStructure::Empty;
  std::optional<Integer> component_count;   // GrassmannianUnion only
  std::optional<GrassmannianFiber> fiber;   // GrassmannianUnion only

  // Audit trail.
  bool dualized = false;
  Integer reduced_d, reduced_r, reduced_chi;  // data after Serre duality (chi < 0)
  Integer lhs;        // rho + g - 2
  Integer threshold;  // D |chi| - D^2
  std::optional<Integer> R;
  std::optional<Character> w0;
  std::string note;
};

// Throws Error(ChiZero) when d = g - 1, Error(InvalidRange) unless g >= 2,
// d >= 1, r >= 1.
BNVerdict bn_verdict(const Integer& g, const Integer& d, const Integer& r);

// (d, r) -> (2g - 2 - d, r - chi); an involution that flips the sign of chi.
std::pair<Integer, Integer> serre_dual(const Integer& g, const Integer& d, const Integer& r);

struct ModuliVerdict {
  Character v;
  Integer r;
  Integer square;
  Integer D;
  bool nonempty = false;
  std::optional<Integer> dim;
};

// M^{r+1}_H(v) for v = (k, 1, chi), chi < 0.
ModuliVerdict moduli_verdict(const Integer& k, const Integer& chi, const Integer& r, const Surface& s);

// rho + r(r+2) >= -floor(r/(-chi)) chi (r + 1 + chi (floor(r/(-chi)) + 1) / 2).
bool klm_bound_holds(const Integer& g, const Integer& r, const Integer& chi);

enum class CellLabel { Empty, BN, KLM, New };

const char* to_string(CellLabel label);

// EMPTY if the locus is empty; BN if rho >= 0; KLM if d >= r(r+1); NEW otherwise.
CellLabel classify_cell(const Integer& g, const Integer& d, const Integer& r);

}  // namespace abn
