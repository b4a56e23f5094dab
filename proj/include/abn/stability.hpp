#pragma once

// Central charges Z_{alpha,beta}, the tilt slope, and numerical walls in
// the (beta, alpha) upper half-plane.
//
// Walls are kept radical-free: a wall is the locus a(alpha^2 + beta^2) +
// b beta + c = 0 with integer coefficients, and points on a wall with
// irrational alpha are handled through alpha^2.

#include <optional>
#include <utility>
#include <vector>

#include "abn/lattice.hpp"

namespace abn {

class StabilityPoint {
 public:
  // Throws Error(InvalidRange) unless alpha > 0.
  StabilityPoint(Rational alpha, Rational beta);

  const Rational& alpha() const noexcept { return alpha_; }
  const Rational& beta() const noexcept { return beta_; }

 private:
  Rational alpha_;
  Rational beta_;
};

struct ChargeValue {
  Rational re;
  Rational im;

  friend bool operator==(const ChargeValue&, const ChargeValue&) = default;
};

// Z = -ch2^beta + i alpha H.ch1^beta + (alpha^2 / 2) H^2 ch0.
ChargeValue central_charge(const Character& v, const StabilityPoint& p, const Surface& s);

// Z with its imaginary part divided by alpha. Depends on alpha only through
// alpha^2, so it is exact at wall points whose alpha is irrational.
ChargeValue scaled_central_charge(const Character& v, const Rational& alpha_sq,
                                  const Rational& beta, const Surface& s);

// Slope nu = -Re Z / Im Z; nullopt stands for +infinity (Im Z = 0).
// Throws Error(ZeroCharge) when Z(v) = 0.
using Slope = std::optional<Rational>;
Slope slope_nu(const Character& v, const StabilityPoint& p, const Surface& s);

// Slopes of u and v agree at (alpha^2, beta); both infinite counts as equal.
bool same_slope(const Character& u, const Character& v, const Rational& alpha_sq,
                const Rational& beta, const Surface& s);

class Wall {
 public:
  // Normalizes (a, b, c) to lowest terms with positive leading coefficient.
  // Throws Error(InvalidRange) if all three vanish.
  Wall(Integer a, Integer b, Integer c, Character first, Character second);

  const Integer& a() const noexcept { return a_; }
  const Integer& b() const noexcept { return b_; }
  const Integer& c() const noexcept { return c_; }
  const std::pair<Character, Character>& defining_pair() const noexcept { return pair_; }

  bool is_vertical() const { return a_ == 0; }

  // Circle data; only meaningful when !is_vertical().
  Rational center() const;
  Rational radius_sq() const;

  // Vertical line position; only meaningful when is_vertical() and b != 0.
  Rational vertical_beta() const;

  // a(alpha^2 + beta^2) + b beta + c.
  Rational evaluate(const Rational& alpha_sq, const Rational& beta) const;

  // alpha^2 of the wall point above beta (a != 0).
  Rational alpha_sq_at(const Rational& beta) const;

  bool meets_upper_half_plane() const;

  // Same locus; the defining pair is ignored.
  bool same_locus(const Wall& other) const {
    return a_ == other.a_ && b_ == other.b_ && c_ == other.c_;
  }

 private:
  Integer a_;
  Integer b_;
  Integer c_;
  std::pair<Character, Character> pair_;
};

// Numerical wall where nu(v) = nu(u). nullopt when the locus misses the
// open upper half-plane. Throws Error(Proportional) if u is in Q v.
std::optional<Wall> wall_between(const Character& v, const Character& u, const Surface& s);

bool on_wall(const Wall& w, const StabilityPoint& p);

class Region {
 public:
  // Throws Error(InvalidRange) unless beta_lo < beta_hi and
  // 0 < alpha_lo < alpha_hi.
  Region(Rational beta_lo, Rational beta_hi, Rational alpha_lo, Rational alpha_hi);

  const Rational& beta_lo() const noexcept { return beta_lo_; }
  const Rational& beta_hi() const noexcept { return beta_hi_; }
  const Rational& alpha_lo() const noexcept { return alpha_lo_; }
  const Rational& alpha_hi() const noexcept { return alpha_hi_; }

  bool contains(const Rational& alpha_sq, const Rational& beta) const;

 private:
  Rational beta_lo_;
  Rational beta_hi_;
  Rational alpha_lo_;
  Rational alpha_hi_;
};

struct WallRecord {
  Character destabilizer;
  Wall wall;
};

// Potential walls for v inside reg: every integral u with u^2 >= 0,
// (v-u)^2 >= 0, u not in Q v, and 0 < Im Z(u) < Im Z(v) at some wall point
// inside reg. One record per wall locus, sorted by center then radius.
// Throws Error(NegativeSquare) if v^2 < 0.
//
// The list over-approximates actual walls: it does not decide whether
// strictly semistable objects of class u exist.
std::vector<WallRecord> enumerate_walls(const Character& v, const Region& reg, const Surface& s);

// Largest |rank| a destabilizing class can have along any wall for v that
// reaches alpha >= alpha_lo.
Integer destabilizer_rank_bound(const Character& v, const Rational& alpha_lo, const Surface& s);

struct FirstWallData {
  Integer R;
  Character w0;
  Wall wall;
};

// R = floor(H^2 / (-2 chi)), w0 = (-R, 1, chi) and the wall spanned by
// (1, 0, 0) and w0. Throws Error(NonNegativeChi) if chi >= 0.
FirstWallData first_wall_data(const Integer& chi, const Surface& s);

// Circle containment and crossing tests, exact (compare squared radii).
bool circle_weakly_inside(const Wall& inner, const Wall& outer);
bool circles_cross(const Wall& a, const Wall& b);

// alpha^2 > 0 solution on beta = 0, if the wall meets that ray.
bool meets_beta_zero_ray(const Wall& w);

}  // namespace abn
