#include "abn/stability.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace abn {

StabilityPoint::StabilityPoint(Rational alpha, Rational beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (alpha_ <= 0) {
    throw Error(ErrorKind::InvalidRange, "alpha must be positive, got " + alpha_.str());
  }
}

ChargeValue scaled_central_charge(const Character& v, const Rational& alpha_sq,
                                  const Rational& beta, const Surface& s) {
  const TwistedCharacter tw = twisted_character(v, beta, s);
  const Rational h(s.h_squared());
  return {-tw.chi() + alpha_sq / 2 * h * tw.r(), h * tw.c()};
}

ChargeValue central_charge(const Character& v, const StabilityPoint& p, const Surface& s) {
  ChargeValue z = scaled_central_charge(v, p.alpha() * p.alpha(), p.beta(), s);
  z.im *= p.alpha();
  return z;
}

Slope slope_nu(const Character& v, const StabilityPoint& p, const Surface& s) {
  const ChargeValue z = central_charge(v, p, s);
  if (z.im == 0) {
    if (z.re == 0) {
      throw Error(ErrorKind::ZeroCharge, "central charge vanishes: point lies on the kernel line");
    }
    return std::nullopt;
  }
  return Rational(-z.re / z.im);
}

bool same_slope(const Character& u, const Character& v, const Rational& alpha_sq,
                const Rational& beta, const Surface& s) {
  const ChargeValue zu = scaled_central_charge(u, alpha_sq, beta, s);
  const ChargeValue zv = scaled_central_charge(v, alpha_sq, beta, s);
  if (zu.im == 0 || zv.im == 0) {
    return zu.im == 0 && zv.im == 0;
  }
  // alpha cancels from -re / (alpha im).
  return zu.re * zv.im == zv.re * zu.im;
}

Wall::Wall(Integer a, Integer b, Integer c, Character first, Character second)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)),
      pair_(std::move(first), std::move(second)) {
  Integer g = mp::gcd(mp::gcd(abs(a_), abs(b_)), abs(c_));
  if (g == 0) {
    throw Error(ErrorKind::InvalidRange, "wall coefficients are all zero");
  }
  const Integer& lead = a_ != 0 ? a_ : (b_ != 0 ? b_ : c_);
  if (lead < 0) {
    g = -g;
  }
  a_ /= g;
  b_ /= g;
  c_ /= g;
}

Rational Wall::center() const { return Rational(-b_, 2 * a_); }

Rational Wall::radius_sq() const { return Rational(b_ * b_ - 4 * a_ * c_, 4 * a_ * a_); }

Rational Wall::vertical_beta() const { return Rational(-c_, b_); }

Rational Wall::evaluate(const Rational& alpha_sq, const Rational& beta) const {
  return Rational(a_) * (alpha_sq + beta * beta) + Rational(b_) * beta + Rational(c_);
}

Rational Wall::alpha_sq_at(const Rational& beta) const {
  return -(Rational(a_) * beta * beta + Rational(b_) * beta + Rational(c_)) / Rational(a_);
}

bool Wall::meets_upper_half_plane() const {
  if (a_ != 0) {
    return b_ * b_ - 4 * a_ * c_ > 0;
  }
  return b_ != 0;
}

std::optional<Wall> wall_between(const Character& v, const Character& u, const Surface& s) {
  if (proportional(v, u)) {
    throw Error(ErrorKind::Proportional, "classes are proportional; they share a kernel line");
  }
  const Integer& h = s.h_squared();
  Integer a = h / 2 * (v.r() * u.c() - u.r() * v.c());
  Integer b = v.chi() * u.r() - u.chi() * v.r();
  Integer c = u.chi() * v.c() - v.chi() * u.c();
  Wall w(std::move(a), std::move(b), std::move(c), v, u);
  if (!w.meets_upper_half_plane()) {
    return std::nullopt;
  }
  return w;
}

bool on_wall(const Wall& w, const StabilityPoint& p) {
  return w.evaluate(p.alpha() * p.alpha(), p.beta()) == 0;
}

Region::Region(Rational beta_lo, Rational beta_hi, Rational alpha_lo, Rational alpha_hi)
    : beta_lo_(std::move(beta_lo)), beta_hi_(std::move(beta_hi)),
      alpha_lo_(std::move(alpha_lo)), alpha_hi_(std::move(alpha_hi)) {
  if (!(beta_lo_ < beta_hi_) || !(alpha_lo_ > 0) || !(alpha_lo_ < alpha_hi_)) {
    throw Error(ErrorKind::InvalidRange,
                "region needs beta_lo < beta_hi and 0 < alpha_lo < alpha_hi");
  }
}

bool Region::contains(const Rational& alpha_sq, const Rational& beta) const {
  return beta >= beta_lo_ && beta <= beta_hi_ && alpha_sq >= alpha_lo_ * alpha_lo_ &&
         alpha_sq <= alpha_hi_ * alpha_hi_;
}

namespace {

struct Endpoint {
  Rational value;
  bool closed;
};

struct BetaInterval {
  Endpoint lo;
  Endpoint hi;

  bool empty() const {
    return lo.value > hi.value || (lo.value == hi.value && !(lo.closed && hi.closed));
  }
  bool contains(const Rational& x) const {
    bool above = lo.closed ? x >= lo.value : x > lo.value;
    bool below = hi.closed ? x <= hi.value : x < hi.value;
    return above && below;
  }
};

// Tighten iv to the open half-line {beta : k - beta m > 0}. Returns false if
// that set is empty.
bool restrict_positive(BetaInterval& iv, const Integer& k, const Integer& m) {
  if (m == 0) {
    return k > 0;
  }
  const Rational root(k, m);
  if (m > 0) {
    if (root < iv.hi.value || (root == iv.hi.value && iv.hi.closed)) {
      iv.hi = {root, false};
    }
  } else {
    if (root > iv.lo.value || (root == iv.lo.value && iv.lo.closed)) {
      iv.lo = {root, false};
    }
  }
  return true;
}

// Is there a point of the (circular) wall inside reg at which
// 0 < Im Z(u) < Im Z(v)?
bool wall_point_in_region(const Wall& w, const Character& v, const Character& u, const Region& reg) {
  BetaInterval iv{{reg.beta_lo(), true}, {reg.beta_hi(), true}};
  if (!restrict_positive(iv, u.c(), u.r())) {
    return false;
  }
  if (!restrict_positive(iv, Integer(v.c() - u.c()), Integer(v.r() - u.r()))) {
    return false;
  }
  if (iv.empty()) {
    return false;
  }

  // alpha^2 along the wall is a concave parabola in beta; its image of iv
  // is an interval [inf, sup] whose endpoints may or may not be attained.
  const Rational top = w.center();
  Rational sup;
  bool sup_attained;
  if (iv.contains(top)) {
    sup = w.alpha_sq_at(top);
    sup_attained = true;
  } else if (top <= iv.lo.value) {
    sup = w.alpha_sq_at(iv.lo.value);
    sup_attained = iv.lo.closed;
  } else {
    sup = w.alpha_sq_at(iv.hi.value);
    sup_attained = iv.hi.closed;
  }
  const Rational q_lo = w.alpha_sq_at(iv.lo.value);
  const Rational q_hi = w.alpha_sq_at(iv.hi.value);
  Rational inf;
  bool inf_attained;
  if (q_lo < q_hi) {
    inf = q_lo;
    inf_attained = iv.lo.closed;
  } else if (q_hi < q_lo) {
    inf = q_hi;
    inf_attained = iv.hi.closed;
  } else {
    inf = q_lo;
    inf_attained = iv.lo.closed || iv.hi.closed;
  }

  const Rational lower = reg.alpha_lo() * reg.alpha_lo();
  const Rational upper = reg.alpha_hi() * reg.alpha_hi();
  const bool reaches_lower = sup > lower || (sup == lower && sup_attained);
  const bool reaches_upper = inf < upper || (inf == upper && inf_attained);
  return reaches_lower && reaches_upper;
}

// Integers in the closed interval spanned by x and y (either order).
std::pair<Integer, Integer> integer_span(const Rational& x, const Rational& y) {
  const Rational& lo = x < y ? x : y;
  const Rational& hi = x < y ? y : x;
  return {ceil(lo), floor(hi)};
}

using WallKey = std::tuple<Integer, Integer, Integer>;

// Destabilizer preference on one wall: smaller |rank|, then smaller
// Im Z at the top of the wall, then lexicographic.
bool preferred(const Character& lhs, const Character& rhs, const Rational& top) {
  const Integer lr = abs(lhs.r());
  const Integer rr = abs(rhs.r());
  if (lr != rr) {
    return lr < rr;
  }
  const Rational li = Rational(lhs.c()) - top * Rational(lhs.r());
  const Rational ri = Rational(rhs.c()) - top * Rational(rhs.r());
  if (li != ri) {
    return li < ri;
  }
  return lhs < rhs;
}

}  // namespace

Integer destabilizer_rank_bound(const Character& v, const Rational& alpha_lo, const Surface& s) {
  // At the top of any wall for v, Re Z(v) = 0, so Re Z(u) = 0 as well and
  // u^2 >= 0 becomes |ch1^beta(u)| >= alpha |r(u)|. Summing this for u and
  // v - u bounds |r(u)| by (|ch1^beta(v)| / alpha + |r(v)|) / 2, and
  // ch1^beta(v)^2 / alpha^2 = r(v)^2 + v^2 / (H^2 alpha^2) at the top.
  const Rational h(s.h_squared());
  const Rational ratio_sq = Rational(v.r() * v.r()) + Rational(square(v, s)) / (h * alpha_lo * alpha_lo);
  return floor(Rational(ceil_sqrt(ratio_sq) + abs(v.r()), 2));
}

std::vector<WallRecord> enumerate_walls(const Character& v, const Region& reg, const Surface& s) {
  const Integer t = square(v, s);
  if (t < 0) {
    throw Error(ErrorKind::NegativeSquare, "v^2 < 0: no semistable objects of this class");
  }
  std::vector<WallRecord> out;
  if (t == 0) {
    return out;
  }
  const Integer& h = s.h_squared();
  const Integer bound = destabilizer_rank_bound(v, reg.alpha_lo(), s);

  std::map<WallKey, WallRecord> best;

  // On a wall u and v - u lie in the same positive cone component of a
  // hyperbolic plane, so <u, v - u> >= 0. With u^2, (v-u)^2 >= 0 this gives
  // 0 <= u^2 <= <u, v> <= v^2, which bounds c and then chi for each rank.
  for (Integer r = -bound; r <= bound; ++r) {
    Integer c_lo, c_hi;
    if (v.r() != 0) {
      const Rational mid(r * v.c(), v.r());
      const Rational spread = Rational(abs(r), abs(v.r())) + 1;
      const Integer width = ceil_sqrt(Rational(t) * spread * spread / Rational(h));
      c_lo = ceil(Rational(mid - width));
      c_hi = floor(Rational(mid + width));
    } else {
      if (r == 0) {
        continue;  // two rank-zero classes never share a finite slope
      }
      std::tie(c_lo, c_hi) = integer_span(Rational(r * v.chi(), h * v.c()),
                                          Rational(t + r * v.chi(), h * v.c()));
    }
    // 0 < c - beta r < v.c - beta v.r for some beta in the region.
    {
      const Rational lo_a = reg.beta_lo() * Rational(r);
      const Rational lo_b = reg.beta_hi() * Rational(r);
      const Rational hi_a = Rational(v.c()) + reg.beta_lo() * Rational(r - v.r());
      const Rational hi_b = Rational(v.c()) + reg.beta_hi() * Rational(r - v.r());
      c_lo = std::max(c_lo, Integer(floor(std::min(lo_a, lo_b)) + 1));
      c_hi = std::min(c_hi, Integer(ceil(std::max(hi_a, hi_b)) - 1));
    }
    for (Integer c = c_lo; c <= c_hi; ++c) {
      Integer x_lo, x_hi;
      if (r != 0) {
        std::tie(x_lo, x_hi) = integer_span(Rational(h * c * c - t, 2 * r), Rational(h * c * c, 2 * r));
      } else {
        std::tie(x_lo, x_hi) = integer_span(Rational(h * c * v.c() - t, v.r()), Rational(h * c * v.c(), v.r()));
      }
      for (Integer x = x_lo; x <= x_hi; ++x) {
        const Character u(r, c, x);
        if (proportional(u, v)) {
          continue;
        }
        const Character rest = v - u;
        if (square(u, s) < 0 || square(rest, s) < 0 || mukai_pairing(u, rest, s) < 0) {
          continue;
        }
        auto wall = wall_between(v, u, s);
        if (!wall || wall->is_vertical()) {
          continue;
        }
        if (!wall_point_in_region(*wall, v, u, reg)) {
          continue;
        }
        WallKey key{wall->a(), wall->b(), wall->c()};
        auto it = best.find(key);
        if (it == best.end()) {
          best.emplace(std::move(key), WallRecord{u, *wall});
        } else if (preferred(u, it->second.destabilizer, wall->center())) {
          it->second = WallRecord{u, *wall};
        }
      }
    }
  }

  out.reserve(best.size());
  for (auto& [key, rec] : best) {
    out.push_back(std::move(rec));
  }
  std::sort(out.begin(), out.end(), [](const WallRecord& x, const WallRecord& y) {
    const Rational cx = x.wall.center();
    const Rational cy = y.wall.center();
    if (cx != cy) {
      return cx < cy;
    }
    return x.wall.radius_sq() < y.wall.radius_sq();
  });
  return out;
}

FirstWallData first_wall_data(const Integer& chi, const Surface& s) {
  if (chi >= 0) {
    throw Error(ErrorKind::NonNegativeChi, "first wall requires chi < 0, got " + chi.str());
  }
  Integer R = s.h_squared() / (-2 * chi);
  Character w0(-R, Integer(1), chi);
  auto wall = wall_between(Character(0, 1, chi), Character(1, 0, 0), s);
  return {std::move(R), std::move(w0), *wall};
}

bool circle_weakly_inside(const Wall& inner, const Wall& outer) {
  const Rational ri = inner.radius_sq();
  const Rational ro = outer.radius_sq();
  if (ri > ro) {
    return false;
  }
  const Rational d = inner.center() - outer.center();
  const Rational x = ro + ri - d * d;
  return x >= 0 && x * x >= 4 * ro * ri;
}

bool circles_cross(const Wall& a, const Wall& b) {
  const Rational d = a.center() - b.center();
  const Rational y = d * d - a.radius_sq() - b.radius_sq();
  return y * y < 4 * a.radius_sq() * b.radius_sq();
}

bool meets_beta_zero_ray(const Wall& w) {
  if (w.is_vertical()) {
    return w.b() != 0 && w.vertical_beta() == 0;
  }
  return w.alpha_sq_at(Rational(0)) > 0;
}

}  // namespace abn
