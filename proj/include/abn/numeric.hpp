#pragma once

// Exact scalar types shared by every module. Nothing in the library
// touches floating point except the SVG renderer.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <boost/multiprecision/eigen.hpp>

namespace abn {

namespace mp = boost::multiprecision;

using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

template <typename Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;

template <typename Scalar>
using Matrix3 = Eigen::Matrix<Scalar, 3, 3>;

inline Integer numerator(const Rational& q) { return mp::numerator(q); }
inline Integer denominator(const Rational& q) { return mp::denominator(q); }

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

// Division rounding toward negative infinity; b != 0.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) {
    q -= 1;
  }
  return q;
}

// Remainder in [0, |b|).
inline Integer mod_floor(const Integer& a, const Integer& b) {
  Integer m = a % b;
  if (m < 0) {
    m += (b < 0 ? Integer(-b) : b);
  }
  return m;
}

inline Integer floor(const Rational& q) { return floor_div(numerator(q), denominator(q)); }
inline Integer ceil(const Rational& q) { return -floor(Rational(-q)); }

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }
inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline int sign(const Rational& q) { return q < 0 ? -1 : (q > 0 ? 1 : 0); }

// Smallest non-negative integer n with n*n >= q.
inline Integer ceil_sqrt(const Rational& q) {
  if (q <= 0) {
    return Integer(0);
  }
  Integer upper = ceil(q);
  Integer n = mp::sqrt(upper);
  while (Rational(n * n) < q) {
    n += 1;
  }
  while (n > 0 && Rational((n - 1) * (n - 1)) >= q) {
    n -= 1;
  }
  return n;
}

// Exact rational from "p", "-p", "p/q"; nullopt on malformed input or q == 0.
std::optional<Rational> parse_rational(std::string_view text);
std::optional<Integer> parse_integer(std::string_view text);

inline std::string to_string(const Integer& n) { return n.str(); }
inline std::string to_string(const Rational& q) { return q.str(); }

// Narrowing that fails loudly; used at the I/O boundary only.
std::int64_t to_int64(const Integer& n);

}  // namespace abn
