#pragma once

// The algebraic Mukai lattice of a polarized abelian surface with Picard
// rank one, written in coordinates (ch0, ch1/H, ch2).
//
// ch1 is stored as an integer multiple of H; the self-intersection H^2
// enters only through the Gram matrix and the twist matrix. On an abelian
// surface the Todd class is trivial, so ch2 equals the Euler
// characteristic and the third coordinate is called chi throughout.

#include <array>
#include <compare>

#include "abn/errors.hpp"
#include "abn/numeric.hpp"

namespace abn {

class Surface {
 public:
  // Throws Error(InvalidSurface) unless h_squared is even and >= 2.
  explicit Surface(Integer h_squared);

  static Surface from_genus(const Integer& g);

  const Integer& h_squared() const noexcept { return h_squared_; }

  friend bool operator==(const Surface&, const Surface&) = default;

 private:
  Integer h_squared_;
};

// Arithmetic genus of curves in |H|.
Integer genus(const Surface& s);

// A vector (r, c, chi) of the rank-3 lattice, over any exact scalar.
template <typename Scalar>
class MukaiVector {
 public:
  using scalar_type = Scalar;

  MukaiVector() : coords_(Vector3<Scalar>::Zero()) {}
  MukaiVector(Scalar r, Scalar c, Scalar chi) : coords_(std::move(r), std::move(c), std::move(chi)) {}
  explicit MukaiVector(Vector3<Scalar> coords) : coords_(std::move(coords)) {}

  const Scalar& r() const { return coords_(0); }
  const Scalar& c() const { return coords_(1); }
  const Scalar& chi() const { return coords_(2); }

  const Vector3<Scalar>& coords() const noexcept { return coords_; }

  template <typename Other>
  MukaiVector<Other> cast() const {
    return MukaiVector<Other>(coords_.template cast<Other>());
  }

  friend MukaiVector operator+(const MukaiVector& a, const MukaiVector& b) {
    return MukaiVector(Vector3<Scalar>(a.coords_ + b.coords_));
  }
  friend MukaiVector operator-(const MukaiVector& a, const MukaiVector& b) {
    return MukaiVector(Vector3<Scalar>(a.coords_ - b.coords_));
  }
  friend MukaiVector operator-(const MukaiVector& a) {
    return MukaiVector(Vector3<Scalar>(-a.coords_));
  }
  friend MukaiVector operator*(const Scalar& k, const MukaiVector& a) {
    return MukaiVector(Vector3<Scalar>(k * a.coords_));
  }

  friend bool operator==(const MukaiVector& a, const MukaiVector& b) {
    return a.coords_ == b.coords_;
  }

  // Lexicographic on (r, c, chi); used only for deterministic ordering.
  friend bool operator<(const MukaiVector& a, const MukaiVector& b) {
    for (int i = 0; i < 3; ++i) {
      if (a.coords_(i) != b.coords_(i)) {
        return a.coords_(i) < b.coords_(i);
      }
    }
    return false;
  }

 private:
  Vector3<Scalar> coords_;
};

using Character = MukaiVector<Integer>;
using TwistedCharacter = MukaiVector<Rational>;

// Gram matrix of <v, w> = v1 w1 H^2 - v0 w2 - v2 w0 on the standard basis.
template <typename Scalar>
Matrix3<Scalar> gram_matrix(const Surface& s) {
  Matrix3<Scalar> g = Matrix3<Scalar>::Zero();
  g(0, 2) = Scalar(-1);
  g(2, 0) = Scalar(-1);
  g(1, 1) = Scalar(s.h_squared());
  return g;
}

// Matrix of multiplication by exp(-beta H) acting on (ch0, ch1/H, ch2).
Matrix3<Rational> twist_matrix(const Rational& beta, const Surface& s);

template <typename Scalar>
Scalar mukai_pairing(const MukaiVector<Scalar>& v, const MukaiVector<Scalar>& w, const Surface& s) {
  return v.coords().dot(gram_matrix<Scalar>(s) * w.coords());
}

template <typename Scalar>
Scalar square(const MukaiVector<Scalar>& v, const Surface& s) {
  return mukai_pairing(v, v, s);
}

// ch^beta = exp(-beta H) ch.
TwistedCharacter twisted_character(const Character& v, const Rational& beta, const Surface& s);

// True when v and w span at most a line (cross product vanishes).
bool proportional(const Character& v, const Character& w);

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

// Inertia of a symmetric rational matrix by exact congruence diagonalization.
Signature signature(const Matrix3<Rational>& symmetric);

}  // namespace abn
