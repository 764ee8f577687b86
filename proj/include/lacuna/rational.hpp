#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lacuna {

using Integer = mpz_class;

// Canonical form throughout: gcd(|num|, den) = 1, den > 0, zero is 0/1.
// mpq_class maintains this for all arithmetic results.
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational q(num);
  q /= Rational(den);
  return q;
}

// The raw two-argument mpq_class constructor does not reduce; this does.
inline Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("rational: cannot parse '" + text + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer factorial_int(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Rational factorial(unsigned long n) { return Rational(factorial_int(n)); }

inline Integer binomial_int(unsigned long n, unsigned long k) {
  if (k > n) return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Rational binomial(unsigned long n, unsigned long k) {
  return Rational(binomial_int(n, k));
}

inline Integer int_pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational rat_pow(const Rational& base, unsigned long e) {
  // num and den stay coprime under powers, so the result is canonical.
  Integer num = int_pow(Integer(base.get_num()), e);
  Integer den = int_pow(Integer(base.get_den()), e);
  Rational r(num);
  r /= Rational(den);
  return r;
}

}  // namespace lacuna
