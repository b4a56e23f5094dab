#include "abn/bncore.hpp"

#include <tuple>

namespace abn {

namespace {

void require_negative_chi(const Integer& chi) {
  if (chi >= 0) {
    throw Error(ErrorKind::NonNegativeChi, "chi must be negative, got " + chi.str());
  }
}

void require_nonnegative(const Integer& x, const char* name) {
  if (x < 0) {
    throw Error(ErrorKind::InvalidRange, std::string(name) + " must be >= 0, got " + x.str());
  }
}

Rational delta_at(const Integer& h, const Integer& chi) { return delta_klm(Rational(h, -chi)); }

}  // namespace

const char* to_string(StratumStatus status) {
  switch (status) {
    case StratumStatus::Empty: return "EMPTY";
    case StratumStatus::NonEmpty: return "NONEMPTY";
    case StratumStatus::UnknownNonMaximal: return "UNKNOWN_NON_MAXIMAL";
  }
  return "?";
}

const char* to_string(BNStructure structure) {
  switch (structure) {
    case BNStructure::Empty: return "EMPTY";
    case BNStructure::Irreducible: return "IRREDUCIBLE";
    case BNStructure::GrassmannianUnion: return "GRASSMANNIAN_UNION";
  }
  return "?";
}

const char* to_string(CellLabel label) {
  switch (label) {
    case CellLabel::Empty: return "EMPTY";
    case CellLabel::BN: return "BN";
    case CellLabel::KLM: return "KLM";
    case CellLabel::New: return "NEW";
  }
  return "?";
}

Rational delta_klm(const Rational& t) {
  if (t < 0) {
    throw Error(ErrorKind::NegativeArgument, "Delta is defined for t >= 0, got " + t.str());
  }
  const Rational n(floor(t));
  return (t - n / 2) * (n + 1);
}

Integer expected_dim(const Integer& k, const Integer& h, const Integer& chi, const Surface& s) {
  require_negative_chi(chi);
  require_nonnegative(k, "k");
  require_nonnegative(h, "h");
  const Integer R = s.h_squared() / (-2 * chi);
  const Character w0(-R, Integer(1), chi);
  const Character wk(k - R, Integer(1), chi);
  const Integer via_w0 = square(w0, s) - 2 * k * chi + 2 + h * chi - h * h;
  const Integer via_wk = square(wk, s) + 2 + h * chi - h * h;
  if (via_w0 != via_wk) {
    throw IntegralityViolation("the two forms of d(k, h) disagree");
  }
  return via_w0;
}

bool mhk_nonempty(const Integer& k, const Integer& h, const Integer& chi) {
  require_negative_chi(chi);
  require_nonnegative(k, "k");
  require_nonnegative(h, "h");
  return Rational(k, -chi) >= delta_at(h, chi);
}

Integer max_h(const Integer& k, const Integer& chi) {
  require_negative_chi(chi);
  require_nonnegative(k, "k");
  // Delta is strictly increasing and Delta(t) >= t, so h <= k.
  Integer h = 0;
  while (mhk_nonempty(k, h + 1, chi)) {
    ++h;
  }
  return h;
}

Integer k_red_for(const Integer& k, const Integer& h, const Integer& chi) {
  if (!mhk_nonempty(k, h, chi)) {
    throw Error(ErrorKind::Empty, "M^h_k is empty for k=" + k.str() + ", h=" + h.str());
  }
  const Rational k0 = Rational(k) + Rational(chi) * delta_at(h, chi);
  if (!is_integral(k0)) {
    throw IntegralityViolation("chi * Delta(h / -chi) is not an integer");
  }
  Integer result = numerator(k0);
  if (result < 0 || result > k) {
    throw IntegralityViolation("k_red outside [0, k]");
  }
  return result;
}

StratumDescriptor stratum_status(const Integer& k, const Integer& k_red, const Integer& h,
                                 const Integer& chi, const Surface& s) {
  require_negative_chi(chi);
  require_nonnegative(h, "h");
  if (k_red < 0 || k_red > k) {
    throw Error(ErrorKind::InvalidRange, "need 0 <= k_red <= k");
  }
  StratumDescriptor out{k, k_red, h, StratumStatus::Empty, false, std::nullopt, std::nullopt};
  const Rational budget(k - k_red, -chi);
  const Rational need = delta_at(h, chi);
  if (budget < need) {
    out.status = StratumStatus::Empty;
    return out;
  }
  const bool maximal = budget < delta_at(h + 1, chi);
  if (!maximal) {
    out.status = StratumStatus::UnknownNonMaximal;
    return out;
  }
  out.status = StratumStatus::NonEmpty;
  out.equality = budget == need;
  if (out.equality) {
    out.dim = expected_dim(k, h, chi, s);
    out.fiber = GrassmannianFiber{mod_floor(h, -chi), Integer(-chi)};
  }
  return out;
}

bool bn_inequality_holds(const Integer& g, const Integer& r, const Integer& chi) {
  if (chi == 0) {
    throw Error(ErrorKind::ChiZero, "chi = 0 is excluded");
  }
  const Integer m = abs(chi);
  const Integer rho = g - (r + 1) * (r + 1 - chi);
  const Integer D = mod_floor(r + 1, m);
  return rho + g - 2 >= D * m - D * D;
}

std::pair<Integer, Integer> serre_dual(const Integer& g, const Integer& d, const Integer& r) {
  const Integer chi = d + 1 - g;
  return {2 * g - 2 - d, r - chi};
}

BNVerdict bn_verdict(const Integer& g, const Integer& d, const Integer& r) {
  if (g < 2 || d < 1 || r < 1) {
    throw Error(ErrorKind::InvalidRange, "need g >= 2, d >= 1, r >= 1");
  }
  BNVerdict out;
  out.g = g;
  out.d = d;
  out.r = r;
  out.chi = d + 1 - g;
  if (out.chi == 0) {
    throw Error(ErrorKind::ChiZero, "chi = d + 1 - g vanishes (d = g - 1)");
  }

  out.reduced_d = d;
  out.reduced_r = r;
  if (out.chi > 0) {
    std::tie(out.reduced_d, out.reduced_r) = serre_dual(g, d, r);
    out.dualized = true;
  }
  out.reduced_chi = out.reduced_d + 1 - g;

  const Integer m = abs(out.chi);
  const Integer sections = out.reduced_r + 1;  // h^1 of the original data
  out.rho = g - (r + 1) * (r + 1 - out.chi);
  out.D = mod_floor(r + 1, m);
  out.lhs = out.rho + g - 2;
  out.threshold = out.D * m - out.D * out.D;

  if (sections < 0) {
    // h^0 >= chi always, so fewer than chi sections is impossible.
    out.nonempty = false;
    out.structure = BNStructure::Empty;
    out.note = "r + 1 < chi: no sheaf has fewer than chi sections";
    return out;
  }

  const Surface surface = Surface::from_genus(g);
  const Integer R = surface.h_squared() / (-2 * out.reduced_chi);
  out.R = R;
  out.w0 = Character(-R, Integer(1), out.reduced_chi);

  out.nonempty = out.lhs >= out.threshold;

  // Integer form: 2g - 2 >= (h + D)(h - D - chi') with h = reduced r + 1.
  {
    const Integer Dr = mod_floor(sections, m);
    const Integer s = (sections - Dr) / m;
    if (((sections + Dr) * (s + 1)) % 2 != 0) {
      throw IntegralityViolation("(r + 1 + D)(s + 1) / 2 is not an integer");
    }
    const bool integer_form = 2 * g - 2 >= (sections + Dr) * (sections - Dr - out.reduced_chi);
    if (integer_form != out.nonempty) {
      throw IntegralityViolation("integer form of the non-emptiness bound disagrees");
    }
  }

  if (!out.nonempty) {
    out.structure = BNStructure::Empty;
    return out;
  }
  out.dim = out.lhs;
  if (out.lhs > out.threshold) {
    out.structure = BNStructure::Irreducible;
    return out;
  }
  if ((g - 1) % m != 0) {
    throw IntegralityViolation("equality case with |chi| not dividing g - 1");
  }
  const Integer ratio = (g - 1) / m;
  out.structure = BNStructure::GrassmannianUnion;
  out.component_count = ratio * ratio;
  out.fiber = GrassmannianFiber{out.D, m};
  return out;
}

ModuliVerdict moduli_verdict(const Integer& k, const Integer& chi, const Integer& r, const Surface& s) {
  require_negative_chi(chi);
  require_nonnegative(r + 1, "r + 1");
  ModuliVerdict out;
  out.v = Character(k, Integer(1), chi);
  out.r = r;
  out.square = square(out.v, s);
  out.D = mod_floor(r + 1, -chi);
  if (out.square < 0) {
    out.nonempty = false;
    return out;
  }
  const Integer excess = out.square - (r + 1) * (r + 1 - chi);
  out.nonempty = excess >= out.D * (-chi) - out.D * out.D;
  if (out.nonempty) {
    out.dim = excess + 2;
  }
  return out;
}

bool klm_bound_holds(const Integer& g, const Integer& r, const Integer& chi) {
  require_negative_chi(chi);
  const Integer rho = g - (r + 1) * (r + 1 - chi);
  const Integer q = floor_div(r, -chi);
  const Rational rhs = -Rational(q * chi) * (Rational(r + 1) + Rational(chi * (q + 1), 2));
  return Rational(rho + r * (r + 2)) >= rhs;
}

CellLabel classify_cell(const Integer& g, const Integer& d, const Integer& r) {
  const BNVerdict verdict = bn_verdict(g, d, r);
  if (!verdict.nonempty) {
    return CellLabel::Empty;
  }
  if (verdict.rho >= 0) {
    return CellLabel::BN;
  }
  if (d >= r * (r + 1)) {
    return CellLabel::KLM;
  }
  return CellLabel::New;
}

}  // namespace abn
