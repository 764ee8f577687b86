#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "lacuna/cyclotomic.hpp"
#include "lacuna/rational.hpp"

namespace lacuna {

// Glue between TruncSeries and its coefficient rings. A ring element may
// carry context (a cyclotomic conductor), so constructions take a prototype.
template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static Rational zero_like(const Rational&) { return Rational(0); }
  static Rational from_rational(const Rational& q, const Rational&) { return q; }
  static Rational scale(const Rational& x, const Rational& q) { return x * q; }
  static bool is_zero(const Rational& x) { return x == 0; }
};

template <>
struct RingTraits<CyclotomicNumber> {
  static CyclotomicNumber zero_like(const CyclotomicNumber& proto) {
    return CyclotomicNumber::zero(proto.conductor());
  }
  static CyclotomicNumber from_rational(const Rational& q, const CyclotomicNumber& proto) {
    return CyclotomicNumber::from_rational(q, proto.conductor());
  }
  static CyclotomicNumber scale(const CyclotomicNumber& x, const Rational& q) {
    return x * q;
  }
  static bool is_zero(const CyclotomicNumber& x) { return x.is_zero(); }
};

template <>
struct RingTraits<std::complex<double>> {
  static std::complex<double> zero_like(const std::complex<double>&) { return {0.0, 0.0}; }
  static std::complex<double> from_rational(const Rational& q, const std::complex<double>&) {
    return {q.get_d(), 0.0};
  }
  static std::complex<double> scale(const std::complex<double>& x, const Rational& q) {
    return x * q.get_d();
  }
  static bool is_zero(const std::complex<double>& x) { return x == std::complex<double>(0.0, 0.0); }
};

// Power series truncated at an explicit order T: coefficients c_0..c_T of a
// uniform coefficient ring. Binary operations truncate to the smaller order.
template <class R>
class TruncSeries {
 public:
  TruncSeries(std::size_t order, const R& zero)
      : zero_(zero), coeffs_(order + 1, zero) {}

  static TruncSeries monomial(std::size_t k, const R& value, std::size_t order) {
    TruncSeries s(order, RingTraits<R>::zero_like(value));
    if (k <= order) s.coeffs_[k] = value;
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const R& operator[](std::size_t n) const { return coeffs_.at(n); }
  void set(std::size_t n, R v) { coeffs_.at(n) = std::move(v); }
  const R& zero_element() const { return zero_; }

  const std::vector<R>& coefficients() const { return coeffs_; }

  TruncSeries& operator+=(const TruncSeries& rhs) {
    truncate_to(std::min(order(), rhs.order()));
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] = coeffs_[n] + rhs.coeffs_[n];
    return *this;
  }

  TruncSeries& operator-=(const TruncSeries& rhs) {
    truncate_to(std::min(order(), rhs.order()));
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] = coeffs_[n] - rhs.coeffs_[n];
    return *this;
  }

  void truncate_to(std::size_t order) {
    if (order + 1 < coeffs_.size()) coeffs_.resize(order + 1, zero_);
  }

 private:
  R zero_;
  std::vector<R> coeffs_;
};

template <class R>
TruncSeries<R> operator+(TruncSeries<R> lhs, const TruncSeries<R>& rhs) {
  lhs += rhs;
  return lhs;
}

template <class R>
TruncSeries<R> operator-(TruncSeries<R> lhs, const TruncSeries<R>& rhs) {
  lhs -= rhs;
  return lhs;
}

// Cauchy product truncated at min(order a, order b).
template <class R>
TruncSeries<R> operator*(const TruncSeries<R>& a, const TruncSeries<R>& b) {
  const std::size_t order = std::min(a.order(), b.order());
  const R zero = RingTraits<R>::zero_like(a[0]);
  TruncSeries<R> out(order, zero);
  for (std::size_t i = 0; i <= order; ++i) {
    if (RingTraits<R>::is_zero(a[i])) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (RingTraits<R>::is_zero(b[j])) continue;
      out.set(i + j, out[i + j] + a[i] * b[j]);
    }
  }
  return out;
}

template <class R>
TruncSeries<R> scale(const TruncSeries<R>& a, const R& c) {
  TruncSeries<R> out = a;
  for (std::size_t n = 0; n <= a.order(); ++n) out.set(n, a[n] * c);
  return out;
}

template <class R>
TruncSeries<R> scale(const TruncSeries<R>& a, const Rational& q) {
  TruncSeries<R> out = a;
  for (std::size_t n = 0; n <= a.order(); ++n) out.set(n, RingTraits<R>::scale(a[n], q));
  return out;
}

template <class R>
bool operator==(const TruncSeries<R>& a, const TruncSeries<R>& b) {
  if (a.order() != b.order()) return false;
  for (std::size_t n = 0; n <= a.order(); ++n)
    if (!(a[n] == b[n])) return false;
  return true;
}

// Termwise derivative, one order lower.
template <class R>
TruncSeries<R> derivative(const TruncSeries<R>& a) {
  const R zero = RingTraits<R>::zero_like(a[0]);
  if (a.order() == 0) return TruncSeries<R>(0, zero);
  TruncSeries<R> out(a.order() - 1, zero);
  for (std::size_t n = 1; n <= a.order(); ++n)
    out.set(n - 1, RingTraits<R>::scale(a[n], Rational(static_cast<long>(n))));
  return out;
}

// Multiplication by the series variable, one order higher.
template <class R>
TruncSeries<R> shift_up(const TruncSeries<R>& a) {
  const R zero = RingTraits<R>::zero_like(a[0]);
  TruncSeries<R> out(a.order() + 1, zero);
  for (std::size_t n = 0; n <= a.order(); ++n) out.set(n + 1, a[n]);
  return out;
}

// exp of a series with zero constant term, by the derivative recurrence
// n b_n = sum_{k=1}^{n} k a_k b_{n-k}.
template <class R>
TruncSeries<R> exp_series(const TruncSeries<R>& a) {
  if (!RingTraits<R>::is_zero(a[0]))
    throw std::invalid_argument("exp_series: constant term must be zero");
  const R zero = RingTraits<R>::zero_like(a[0]);
  TruncSeries<R> out(a.order(), zero);
  out.set(0, RingTraits<R>::from_rational(Rational(1), a[0]));
  for (std::size_t n = 1; n <= a.order(); ++n) {
    R acc = zero;
    for (std::size_t k = 1; k <= n; ++k) {
      if (RingTraits<R>::is_zero(a[k])) continue;
      acc = acc + RingTraits<R>::scale(a[k] * out[n - k], Rational(static_cast<long>(k)));
    }
    out.set(n, RingTraits<R>::scale(acc, Rational(1, static_cast<long>(n))));
  }
  return out;
}

// log of a series with constant term one: c_n = a_n - (1/n) sum k c_k a_{n-k}.
template <class R>
TruncSeries<R> log_series(const TruncSeries<R>& a) {
  const R one = RingTraits<R>::from_rational(Rational(1), a[0]);
  if (!(a[0] == one))
    throw std::invalid_argument("log_series: constant term must be one");
  const R zero = RingTraits<R>::zero_like(a[0]);
  TruncSeries<R> out(a.order(), zero);
  for (std::size_t n = 1; n <= a.order(); ++n) {
    R acc = zero;
    for (std::size_t k = 1; k < n; ++k) {
      if (RingTraits<R>::is_zero(out[k]) || RingTraits<R>::is_zero(a[n - k])) continue;
      acc = acc + RingTraits<R>::scale(out[k] * a[n - k], Rational(static_cast<long>(k)));
    }
    out.set(n, a[n] - RingTraits<R>::scale(acc, Rational(1, static_cast<long>(n))));
  }
  return out;
}

// Keep only coefficients with index congruent to p mod q.
template <class R>
TruncSeries<R> multisect(const TruncSeries<R>& a, unsigned q, unsigned p) {
  if (q == 0 || p >= q) throw std::invalid_argument("multisect: need 0 <= p < q");
  TruncSeries<R> out = a;
  const R zero = RingTraits<R>::zero_like(a[0]);
  for (std::size_t n = 0; n <= a.order(); ++n)
    if (n % q != p) out.set(n, zero);
  return out;
}

// Coefficient n multiplied by c^n.
template <class R>
TruncSeries<R> compose_scale(const TruncSeries<R>& a, const R& c) {
  TruncSeries<R> out = a;
  R cpow = RingTraits<R>::from_rational(Rational(1), a[0]);
  for (std::size_t n = 1; n <= a.order(); ++n) {
    cpow = cpow * c;
    out.set(n, a[n] * cpow);
  }
  return out;
}

// Roots-of-unity filter: (1/q) sum_k w^{-kp} a(z w^k) with w the primitive
// q-th root of unity in Q(zeta_M); requires q | M. Computed literally, as an
// independent route to the same coefficients multisect keeps.
inline TruncSeries<CyclotomicNumber> roots_average(const TruncSeries<CyclotomicNumber>& a,
                                                   unsigned q, unsigned p) {
  if (q == 0 || p >= q) throw std::invalid_argument("roots_average: need 0 <= p < q");
  const unsigned conductor = a[0].conductor();
  if (conductor % q != 0)
    throw std::invalid_argument("roots_average: ring Q(zeta_" + std::to_string(conductor) +
                                ") has no primitive root of unity of order " + std::to_string(q));
  const long step = static_cast<long>(conductor / q);
  TruncSeries<CyclotomicNumber> acc(a.order(), CyclotomicNumber::zero(conductor));
  for (unsigned k = 0; k < q; ++k) {
    CyclotomicNumber wk = root_of_unity(conductor, step * static_cast<long>(k));
    CyclotomicNumber w_minus_kp =
        root_of_unity(conductor, -step * static_cast<long>(k) * static_cast<long>(p));
    acc += scale(compose_scale(a, wk), w_minus_kp);
  }
  return scale(acc, Rational(1, static_cast<long>(q)));
}

// EGF views: a series stores plain coefficients c_n; its EGF coefficient is
// c_n * n!, and from_egf_coefficients divides by n!.
template <class R>
R egf_coefficient(const TruncSeries<R>& a, std::size_t n) {
  return RingTraits<R>::scale(a[n], factorial(static_cast<unsigned long>(n)));
}

template <class R>
TruncSeries<R> series_from_egf(const std::vector<R>& egf, std::size_t order, const R& proto) {
  TruncSeries<R> out(order, RingTraits<R>::zero_like(proto));
  for (std::size_t n = 0; n <= order && n < egf.size(); ++n)
    out.set(n, RingTraits<R>::scale(egf[n], Rational(1) / factorial(static_cast<unsigned long>(n))));
  return out;
}

}  // namespace lacuna
