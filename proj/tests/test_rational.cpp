#include <stdexcept>

#include "bargain/rational.hpp"
#include "bargain/rng.hpp"
#include "doctest.h"

using bargain::Rational;

TEST_CASE("construction canonicalizes") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(2, 4).num() == 1);
  CHECK(Rational(2, 4).den() == 2);
  CHECK(Rational(-2, 4).num() == -1);
  CHECK(Rational(1, -2) == Rational(-1, 2));  // denominator sign normalized
  CHECK(Rational(0, 7).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("from_string fractions and decimals") {
  CHECK(Rational::from_string("3/4") == Rational(3, 4));
  CHECK(Rational::from_string("6/8") == Rational(3, 4));
  CHECK(Rational::from_string("0.99") == Rational(99, 100));
  CHECK(Rational::from_string("0.125") == Rational(1, 8));
  CHECK(Rational::from_string("1") == Rational(1));
  CHECK(Rational::from_string("1.0") == Rational(1));
  CHECK(Rational::from_string("3/2") == Rational(3, 2));  // range checks live in Collection

  CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1e3"), std::invalid_argument);
}

TEST_CASE("str round-trips through from_string") {
  CHECK(Rational(3).str() == "3");
  CHECK(Rational(1, 2).str() == "1/2");
  CHECK(Rational(-5, 3).str() == "-5/3");
  for (const char* s : {"0", "1", "7/9", "99/100", "-3/8"}) {
    CHECK(Rational::from_string(s).str() == s);
  }
}

TEST_CASE("arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(1, 2) <= Rational(1, 2));
  CHECK(Rational(2, 3) > Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(1, 3).sign() == 1);
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(-1, 3).sign() == -1);
}

TEST_CASE("min max abs") {
  CHECK(bargain::min(Rational(1, 3), Rational(1, 2)) == Rational(1, 3));
  CHECK(bargain::max(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
  CHECK(bargain::abs(Rational(-3, 4)) == Rational(3, 4));
  CHECK(bargain::abs(Rational(3, 4)) == Rational(3, 4));
}

TEST_CASE("fits_int64") {
  CHECK(Rational(1, 3).fits_int64());
  CHECK(Rational(1, 3).num_i64() == 1);
  CHECK(Rational(1, 3).den_i64() == 3);
  Rational big(1);
  for (int i = 0; i < 8; ++i) big *= Rational(1000000000);
  CHECK_FALSE(big.fits_int64());
}

TEST_CASE("canonical form preserved by random arithmetic") {
  bargain::TrialRng rng(7, 0);
  Rational acc(1, 3);
  for (int i = 0; i < 500; ++i) {
    Rational r(static_cast<long>(rng.range(0, 40)) - 20,
               static_cast<long>(rng.range(1, 20)));
    switch (rng.below(4)) {
      case 0: acc += r; break;
      case 1: acc -= r; break;
      case 2: acc *= r; break;
      default:
        if (r != Rational(0)) acc /= r;
        break;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), acc.num().get_mpz_t(), acc.den().get_mpz_t());
    CHECK(g == 1);
    CHECK(acc.den() > 0);
  }
}

TEST_CASE("to_double approximates") {
  CHECK(Rational(1, 2).to_double() == doctest::Approx(0.5));
  CHECK(Rational(99, 100).to_double() == doctest::Approx(0.99));
}
