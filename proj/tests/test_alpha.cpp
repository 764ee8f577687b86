#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lacuna/alpha.hpp"
#include "lacuna/analytic.hpp"

using namespace lacuna;

namespace {

CyclotomicNumber imag_rational(const Rational& r, unsigned conductor) {
  return root_of_unity(conductor, conductor / 4) * r;
}

}  // namespace

TEST_CASE("series route basics") {
  AlphaTable a1 = alpha_series(1, 4);
  for (const CyclotomicNumber& v : a1.values)
    CHECK(v == CyclotomicNumber::one(4));

  AlphaTable a2 = alpha_series(2, 1);
  CHECK(a2.values[0] == imag_rational(Rational(2), 4));

  AlphaTable a3 = alpha_series(3, 0);
  CHECK(a3.values[0] == CyclotomicNumber::from_rational(Rational(-6), 6));

  AlphaTable a6 = alpha_series(6, 0);
  CHECK(a6.values[0] == imag_rational(Rational(720), 12));
}

TEST_CASE("sign-vector route") {
  CHECK(alpha_signsum(2, 0) == imag_rational(Rational(2), 4));
  CHECK(alpha_signsum(2, 1) == imag_rational(Rational(-8), 4));
  CHECK(alpha_signsum(6, 0) == imag_rational(Rational(720), 12));
}

TEST_CASE("doubling route") {
  AlphaTable from1 = alpha_doubling(1, 0);
  CHECK(from1.values[0] == imag_rational(Rational(2), 4));

  AlphaTable from2 = alpha_doubling(2, 0);
  CHECK(from2.values[0] == imag_rational(Rational(-24), 8));

  AlphaTable from3 = alpha_doubling(3, 0);
  CHECK(from3.values[0] == imag_rational(Rational(720), 12));
}

TEST_CASE("doubling needs the factorial factor") {
  AlphaTable wrong = alpha_doubling(1, 0, /*original_form=*/true);
  // the unscaled form yields i where the true value is 2i
  CHECK(wrong.values[0] == imag_rational(Rational(1), 4));
  CHECK(wrong.values[0] != alpha_series(2, 0).values[0]);
}

TEST_CASE("orbit route for primes") {
  CHECK(alpha_orbit_prime(3, 0) == CyclotomicNumber::from_rational(Rational(-6), 6));
  CHECK(alpha_orbit_prime(5, 0) == CyclotomicNumber::from_rational(Rational(120), 10));
  AlphaTable series7 = alpha_series(7, 3);
  for (std::size_t k = 0; k <= 3; ++k)
    CHECK(alpha_orbit_prime(7, k) == series7.values[k]);
  CHECK_THROWS_AS(alpha_orbit_prime(4, 0), std::invalid_argument);
}

TEST_CASE("mzv closed forms") {
  for (unsigned N = 1; N <= 6; ++N) CHECK(mzv_closed(N, 0) == 1);
  // zeta({2}_1) = pi^2/6: r (2pi)^2 = pi^2/6 means r = 1/24
  CHECK(mzv_closed(1, 1) == Rational(1, 24));
  // zeta({6}_1) = pi^6/945: r = 6/9! and 64 r = 1/945
  CHECK(mzv_closed(3, 1) == Rational(6) / factorial(9));
  CHECK(Rational(64) * mzv_closed(3, 1) == Rational(1, 945));
  // zeta({2}_2) = pi^4/120: 16 r = 1/120
  CHECK(Rational(16) * mzv_closed(1, 2) == Rational(1, 120));
}

TEST_CASE("closed-form route") {
  CHECK(alpha_closed(5, 0) == CyclotomicNumber::from_rational(Rational(120), 10));
  // alpha_k^{(2)} = i (-1)^k 2^{2k+1}
  for (std::size_t k = 0; k <= 5; ++k) {
    Rational expect(int_pow(Integer(2), 2 * k + 1));
    if (k % 2 == 1) expect = -expect;
    CHECK(alpha_closed(2, k) == imag_rational(expect, 4));
  }
  CHECK(alpha_closed(2, 3) == imag_rational(Rational(-128), 4));
  // N=6, k=1: -12 i 2^12 a_9
  CHECK(alpha_closed(6, 1) ==
        imag_rational(Rational(-12) * Rational(int_pow(Integer(2), 12)) * Rational(140964),
                      12));
}

TEST_CASE("closed-form phase for odd N fails in the original form") {
  CyclotomicNumber wrong = alpha_closed(3, 0, /*original_form=*/true);
  CHECK(wrong == imag_rational(Rational(6), 12));  // 6i instead of -6
  CHECK(wrong != lift_conductor(alpha_series(3, 0).values[0], 12));
}

TEST_CASE("companion sequences") {
  CHECK(a_sequence(6, 3) == 60);
  CHECK(a_sequence(6, 9) == 140964);
  CHECK(a_sequence(4, 2) == 3);
  CHECK(a_sequence(4, 6) == Rational(99, 4));
  CHECK(a_sequence(5, 5) == 12);  // L_5 + 1
  CHECK_THROWS_AS(a_sequence(3, 1), std::invalid_argument);
}

TEST_CASE("integral route") {
  for (std::size_t n = 0; n <= 3; ++n)
    CHECK(alpha_integral(1, n) == CyclotomicNumber::one(4));
  CHECK(alpha_integral(2, 0) == imag_rational(Rational(2), 4));
  CHECK(alpha_integral(3, 0) == CyclotomicNumber::from_rational(Rational(-6), 6));
  for (unsigned N = 1; N <= 3; ++N) {
    AlphaTable series = alpha_series(N, 2);
    for (std::size_t n = 0; n <= 2; ++n) CHECK(alpha_integral(N, n) == series.values[n]);
  }
  // wider sweep inside the enumeration budget
  AlphaTable series2 = alpha_series(2, 4);
  for (std::size_t n = 3; n <= 4; ++n) CHECK(alpha_integral(2, n) == series2.values[n]);
  CHECK(alpha_integral(4, 2) == alpha_series(4, 2).values[2]);
  CHECK_THROWS_AS(alpha_integral(7, 4), std::invalid_argument);
}

TEST_CASE("generalized-Bernoulli route") {
  for (std::size_t n = 0; n <= 3; ++n)
    CHECK(alpha_via_barnes(1, n) == CyclotomicNumber::one(4));
  CHECK(alpha_via_barnes(2, 1) == imag_rational(Rational(-8), 4));
  for (unsigned N = 1; N <= 6; ++N) {
    AlphaTable series = alpha_series(N, 2);
    for (std::size_t n = 0; n <= 2; ++n) CHECK(alpha_via_barnes(N, n) == series.values[n]);
  }
}

TEST_CASE("cross-method agreement") {
  for (unsigned N = 1; N <= 6; ++N) {
    AlphaTable series = alpha_series(N, 4);
    for (std::size_t k = 0; k <= 4; ++k) {
      CHECK(alpha_signsum(N, k) == series.values[k]);
      CHECK(alpha_closed(N, k) == series.values[k]);
    }
  }
  for (unsigned N : {1u, 2u, 3u}) {
    AlphaTable doubled = alpha_doubling(N, 2);
    AlphaTable direct = alpha_series(2 * N, 2);
    for (std::size_t k = 0; k <= 2; ++k) CHECK(doubled.values[k] == direct.values[k]);
  }
}

TEST_CASE("parity of the coefficients") {
  for (unsigned N = 1; N <= 6; ++N) {
    AlphaTable series = alpha_series(N, 3);
    for (const CyclotomicNumber& v : series.values) {
      if (N % 2 == 1)
        CHECK(conjugate(v) == v);  // real
      else
        CHECK(conjugate(v) == -v);  // purely imaginary
    }
  }
}

TEST_CASE("relation to the 12-gap weight sequence") {
  AlphaTable series = alpha_series(6, 4);
  for (std::size_t k = 0; k <= 4; ++k) {
    Rational magnitude =
        Rational(12) * Rational(int_pow(Integer(2), 12 * k)) * a_sequence(6, 6 * k + 3);
    if (k % 2 == 1) magnitude = -magnitude;
    CHECK(series.values[k] == imag_rational(magnitude, 12));
  }
}

TEST_CASE("nested-sum numerics bridge to the closed forms") {
  double z22 = mzv_numeric(1, 2, 2000);
  double expect = std::pow(M_PI, 4) / 120.0;
  CHECK(std::abs(z22 - expect) < 1e-6);
}
