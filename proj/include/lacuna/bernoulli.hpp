#pragma once

#include <cstddef>
#include <vector>

#include "lacuna/rational.hpp"
#include "lacuna/series.hpp"

namespace lacuna {

// Exact table B_0..B_nmax from the defining recurrence
// sum_{k=0}^{n} C(n+1,k) B_k = 0. This table is the ground truth every
// lacunary identity in the suite is checked against.
class BernoulliTable {
 public:
  explicit BernoulliTable(std::size_t max_index);
  const Rational& value(std::size_t n) const { return values_.at(n); }
  std::size_t max_index() const { return values_.size() - 1; }

 private:
  std::vector<Rational> values_;
};

BernoulliTable bernoulli_numbers(std::size_t nmax);

// B_n(x) = sum_k C(n,k) B_k x^{n-k} over any ring with rational scalars.
template <class R>
R bernoulli_poly(const BernoulliTable& table, std::size_t n, const R& x) {
  const R zero = RingTraits<R>::zero_like(x);
  R acc = zero;
  R xpow = RingTraits<R>::from_rational(Rational(1), x);  // x^0
  // iterate j = n-k from 0 upward so powers of x are built incrementally
  for (std::size_t j = 0; j <= n; ++j) {
    const std::size_t k = n - j;
    Rational c = binomial(n, k) * table.value(k);
    if (c != 0) acc = acc + RingTraits<R>::scale(xpow, c);
    if (j < n) xpow = xpow * x;
  }
  return acc;
}

template <class R>
R bernoulli_poly(std::size_t n, const R& x) {
  return bernoulli_poly(bernoulli_numbers(n), n, x);
}

// Series sum_m B_m t^m / m! truncated at `order`, lifted into the ring of
// `proto`. Built from the oracle table, never by series division.
template <class R>
TruncSeries<R> bernoulli_egf(const BernoulliTable& table, std::size_t order, const R& proto) {
  TruncSeries<R> s(order, RingTraits<R>::zero_like(proto));
  for (std::size_t m = 0; m <= order; ++m)
    s.set(m, RingTraits<R>::from_rational(table.value(m) / factorial(m), proto));
  return s;
}

// (e^{ct} - 1) / (c t): coefficients c^j / (j+1)!.
template <class R>
TruncSeries<R> exp_minus_one_over_t(const R& c, std::size_t order) {
  const R zero = RingTraits<R>::zero_like(c);
  TruncSeries<R> s(order, zero);
  R cpow = RingTraits<R>::from_rational(Rational(1), c);
  for (std::size_t j = 0; j <= order; ++j) {
    s.set(j, RingTraits<R>::scale(cpow, Rational(1) / factorial(j + 1)));
    if (j < order) cpow = cpow * c;
  }
  return s;
}

// e^{xt} truncated at `order`.
template <class R>
TruncSeries<R> exponential_series(const R& x, std::size_t order) {
  const R zero = RingTraits<R>::zero_like(x);
  TruncSeries<R> s(order, zero);
  R xpow = RingTraits<R>::from_rational(Rational(1), x);
  for (std::size_t j = 0; j <= order; ++j) {
    s.set(j, RingTraits<R>::scale(xpow, Rational(1) / factorial(j)));
    if (j < order) xpow = xpow * x;
  }
  return s;
}

// n! [t^n] (t/(e^t-1))^a e^{xt}. Positive orders are powers of the Bernoulli
// series; negative orders multiply (e^t-1)/t factors, so no series division
// ever happens.
template <class R>
R norlund_poly(std::size_t n, long order_a, const R& x) {
  const R zero = RingTraits<R>::zero_like(x);
  const R one = RingTraits<R>::from_rational(Rational(1), x);
  TruncSeries<R> acc = exponential_series(x, n);
  if (order_a > 0) {
    BernoulliTable table(n);
    TruncSeries<R> base = bernoulli_egf(table, n, x);
    for (long i = 0; i < order_a; ++i) acc = acc * base;
  } else if (order_a < 0) {
    TruncSeries<R> base = exp_minus_one_over_t(one, n);
    for (long i = 0; i < -order_a; ++i) acc = acc * base;
  }
  return egf_coefficient(acc, n);
}

// n! [z^n] e^{zx} prod_k (e^{a_k z} - 1)/(a_k z), the negative-order
// multi-parameter generalization of the Bernoulli polynomials.
template <class R>
R barnes_poly(std::size_t n, std::size_t m, const R& x, const std::vector<R>& alphas) {
  if (alphas.size() < m)
    throw std::invalid_argument("barnes_poly: expected at least m parameters");
  for (std::size_t k = 0; k < m; ++k)
    if (RingTraits<R>::is_zero(alphas[k]))
      throw std::invalid_argument("barnes_poly: parameters must be nonzero");
  TruncSeries<R> acc = exponential_series(x, n);
  for (std::size_t k = 0; k < m; ++k) acc = acc * exp_minus_one_over_t(alphas[k], n);
  return egf_coefficient(acc, n);
}

// Complete Bell polynomials by the recurrence
// B_{n+1} = sum_{k=0}^{n} C(n,k) B_{n-k} x_{k+1}, B_0 = 1.
template <class R>
R bell_complete(std::size_t n, const std::vector<R>& xs) {
  if (xs.size() < n)
    throw std::invalid_argument("bell_complete: need at least n arguments");
  R proto = xs.empty() ? R() : xs[0];
  const R one = RingTraits<R>::from_rational(Rational(1), proto);
  std::vector<R> b;
  b.push_back(one);
  for (std::size_t m = 0; m < n; ++m) {
    R acc = RingTraits<R>::zero_like(proto);
    for (std::size_t k = 0; k <= m; ++k)
      acc = acc + RingTraits<R>::scale(b[m - k] * xs[k], binomial(m, k));
    b.push_back(acc);
  }
  return b[n];
}

// Solves the 12-gap recurrence for B_0, B_12, ..., B_{12*nmax}, consuming the
// integer weights a_{6k+3} from the closed-form sequence generator.
std::vector<Rational> lacunary_bernoulli12(std::size_t nmax);

// sum_{k=0}^{n} C(6n+3, 6k) B_{6k}; equals 2n+1.
Rational lehmer_sum(std::size_t n);

}  // namespace lacuna
