#include <doctest.h>

#include <random>

#include "abn/lattice.hpp"

using namespace abn;

namespace {

// Pairing written out by hand, independent of the Gram matrix.
Integer pairing_by_hand(const Character& v, const Character& w, const Integer& h2) {
  return v.c() * w.c() * h2 - v.r() * w.chi() - v.chi() * w.r();
}

Character random_character(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  return Character(dist(rng), dist(rng), dist(rng));
}

}  // namespace

TEST_CASE("surface genus") {
  CHECK(genus(Surface(54)) == 28);
  CHECK(genus(Surface(2)) == 2);
  CHECK(genus(Surface(6)) == 4);
  CHECK(Surface::from_genus(28) == Surface(54));
  CHECK_THROWS_AS(Surface(3), Error);
  CHECK_THROWS_AS(Surface(0), Error);
  CHECK_THROWS_AS(Surface(-4), Error);
}

TEST_CASE("mukai pairing examples") {
  const Surface s(54);
  CHECK(mukai_pairing(Character(0, 1, -3), Character(0, 1, -3), s) == 54);
  CHECK(mukai_pairing(Character(1, 0, 0), Character(0, 0, 1), s) == -1);
  CHECK(mukai_pairing(Character(-9, 1, -3), Character(-9, 1, -3), s) == 0);
}

TEST_CASE("square examples") {
  const Surface s(54);
  for (int chi = -20; chi <= 20; ++chi) {
    CHECK(square(Character(0, 1, chi), s) == 54);
  }
  CHECK(square(Character(1, 1, -2), s) == 58);
  for (int k = -5; k <= 5; ++k) {
    CHECK(square(Character(k, 0, 0), s) == 0);
  }
}

TEST_CASE("pairing is symmetric, matches the hand formula, and squares are even") {
  std::mt19937_64 rng(7);
  for (const int h2 : {2, 6, 54, 1000}) {
    const Surface s(h2);
    for (int i = 0; i < 2500; ++i) {
      const Character v = random_character(rng, 1000);
      const Character w = random_character(rng, 1000);
      const Integer vw = mukai_pairing(v, w, s);
      REQUIRE(vw == mukai_pairing(w, v, s));
      REQUIRE(vw == pairing_by_hand(v, w, s.h_squared()));
      REQUIRE(mp::integer_modulus(square(v, s), 2) == 0);
    }
  }
}

TEST_CASE("pairing is bilinear over Z") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coeff(-50, 50);
  const Surface s(54);
  for (int i = 0; i < 2000; ++i) {
    const Character u = random_character(rng, 200);
    const Character v = random_character(rng, 200);
    const Character w = random_character(rng, 200);
    const Integer a = coeff(rng);
    const Integer b = coeff(rng);
    REQUIRE(mukai_pairing(a * u + b * v, w, s) == a * mukai_pairing(u, w, s) + b * mukai_pairing(v, w, s));
    REQUIRE(mukai_pairing(w, a * u + b * v, s) == a * mukai_pairing(w, u, s) + b * mukai_pairing(w, v, s));
  }
}

TEST_CASE("big integers do not overflow") {
  const Surface s(54);
  const Integer big = Integer(1) << 200;
  const Character v(big, big, big);
  CHECK(square(v, s) == big * big * 54 - 2 * big * big);
}

TEST_CASE("twisted character examples") {
  const Surface s(54);
  const Rational beta(3, 7);
  const TwistedCharacter t = twisted_character(Character(1, 0, 0), beta, s);
  CHECK(t == TwistedCharacter(1, -beta, 27 * beta * beta));
  CHECK(twisted_character(Character(0, 1, -3), 1, s) == TwistedCharacter(0, 1, -57));
  const Character v(4, -2, 9);
  CHECK(twisted_character(v, 0, s) == v.cast<Rational>());
}

TEST_CASE("the twist is an isometry") {
  std::mt19937_64 rng(3);
  for (const int h2 : {2, 6, 54}) {
    const Surface s(h2);
    const Matrix3<Rational> gram = gram_matrix<Rational>(s);
    for (int num = -12; num <= 12; ++num) {
      for (int den = 1; den <= 5; ++den) {
        const Rational beta(num, den);
        const Matrix3<Rational> t = twist_matrix(beta, s);
        REQUIRE(Matrix3<Rational>(t.transpose() * gram * t) == gram);
        const Character v = random_character(rng, 30);
        const Character w = random_character(rng, 30);
        REQUIRE(mukai_pairing(twisted_character(v, beta, s), twisted_character(w, beta, s), s) ==
                Rational(mukai_pairing(v, w, s)));
      }
    }
  }
}

TEST_CASE("gram matrix has signature (2,1)") {
  for (int h2 = 2; h2 <= 200; h2 += 2) {
    const Signature sig = signature(gram_matrix<Rational>(Surface(h2)));
    REQUIRE(sig == Signature{2, 1, 0});
  }
  Matrix3<Rational> degenerate = Matrix3<Rational>::Zero();
  degenerate(0, 0) = 1;
  degenerate(1, 2) = degenerate(2, 1) = 1;
  CHECK(signature(degenerate) == Signature{2, 1, 0});
  degenerate(1, 2) = degenerate(2, 1) = 0;
  CHECK(signature(degenerate) == Signature{1, 0, 2});
}

TEST_CASE("proportionality") {
  CHECK(proportional(Character(1, 0, 0), Character(2, 0, 0)));
  CHECK(proportional(Character(2, -4, 6), Character(-1, 2, -3)));
  CHECK_FALSE(proportional(Character(1, 0, 0), Character(0, 1, 0)));
  CHECK(proportional(Character(0, 0, 0), Character(5, 1, 2)));
}

TEST_CASE("parsing") {
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational(" 7 ") == std::nullopt);
  CHECK(parse_rational("1/0") == std::nullopt);
  CHECK(parse_integer("123456789012345678901234567890") == Integer("123456789012345678901234567890"));
  CHECK(parse_integer("12a") == std::nullopt);
  CHECK(parse_integer("") == std::nullopt);
}
