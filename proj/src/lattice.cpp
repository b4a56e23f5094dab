#include "abn/lattice.hpp"

#include <cctype>
#include <limits>
#include <utility>

namespace abn {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NegativeArgument: return "NegativeArgument";
    case ErrorKind::NonNegativeChi: return "NonNegativeChi";
    case ErrorKind::ChiZero: return "ChiZero";
    case ErrorKind::ZeroCharge: return "ZeroCharge";
    case ErrorKind::Proportional: return "Proportional";
    case ErrorKind::NegativeSquare: return "NegativeSquare";
    case ErrorKind::Empty: return "Empty";
    case ErrorKind::InvalidRange: return "InvalidRange";
    case ErrorKind::InvalidSurface: return "InvalidSurface";
  }
  return "Unknown";
}

std::optional<Integer> parse_integer(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    ++i;
  }
  if (i == text.size()) {
    return std::nullopt;
  }
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      return std::nullopt;
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(digits);
}

std::optional<Rational> parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto n = parse_integer(text);
    if (!n) {
      return std::nullopt;
    }
    return Rational(*n);
  }
  auto num = parse_integer(text.substr(0, slash));
  auto den = parse_integer(text.substr(slash + 1));
  if (!num || !den || *den == 0) {
    return std::nullopt;
  }
  return Rational(*num, *den);
}

std::int64_t to_int64(const Integer& n) {
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("integer does not fit in 64 bits: " + n.str());
  }
  return n.convert_to<std::int64_t>();
}

Surface::Surface(Integer h_squared) : h_squared_(std::move(h_squared)) {
  if (h_squared_ < 2 || h_squared_ % 2 != 0) {
    throw Error(ErrorKind::InvalidSurface,
                "H^2 must be an even integer >= 2, got " + h_squared_.str());
  }
}

Surface Surface::from_genus(const Integer& g) {
  if (g < 2) {
    throw Error(ErrorKind::InvalidSurface, "genus must be >= 2, got " + g.str());
  }
  return Surface(2 * g - 2);
}

Integer genus(const Surface& s) { return s.h_squared() / 2 + 1; }

Matrix3<Rational> twist_matrix(const Rational& beta, const Surface& s) {
  const Rational h(s.h_squared());
  Matrix3<Rational> t = Matrix3<Rational>::Identity();
  t(1, 0) = -beta;
  t(2, 0) = beta * beta * h / 2;
  t(2, 1) = -beta * h;
  return t;
}

TwistedCharacter twisted_character(const Character& v, const Rational& beta, const Surface& s) {
  return TwistedCharacter(Vector3<Rational>(twist_matrix(beta, s) * v.coords().cast<Rational>()));
}

bool proportional(const Character& v, const Character& w) {
  return v.coords().cross(w.coords()).isZero();
}

Signature signature(const Matrix3<Rational>& symmetric) {
  // Symmetric Gaussian elimination: congruence preserves inertia.
  Matrix3<Rational> m = symmetric;
  Signature sig;
  int n = 3;
  for (int k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      int pivot = -1;
      for (int j = k + 1; j < n; ++j) {
        if (m(j, j) != 0) {
          pivot = j;
          break;
        }
      }
      if (pivot >= 0) {
        m.row(k).swap(m.row(pivot));
        m.col(k).swap(m.col(pivot));
      } else {
        int partner = -1;
        for (int j = k + 1; j < n; ++j) {
          if (m(k, j) != 0) {
            partner = j;
            break;
          }
        }
        if (partner < 0) {
          ++sig.zero;
          continue;
        }
        // e_k <- e_k + e_partner makes the diagonal entry 2 m(k, partner).
        m.row(k) += m.row(partner);
        m.col(k) += m.col(partner);
      }
    }
    const Rational pivot = m(k, k);
    for (int j = k + 1; j < n; ++j) {
      if (m(j, k) == 0) {
        continue;
      }
      const Rational factor = m(j, k) / pivot;
      m.row(j) -= factor * m.row(k);
      m.col(j) -= factor * m.col(k);
    }
    if (pivot > 0) {
      ++sig.positive;
    } else {
      ++sig.negative;
    }
  }
  return sig;
}

}  // namespace abn
