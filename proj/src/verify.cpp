#include "lacuna/verify.hpp"

#include <chrono>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

#include "lacuna/alpha.hpp"
#include "lacuna/bernoulli.hpp"
#include "lacuna/series.hpp"

namespace lacuna {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

VerificationReport make_exact_report(std::string identity, std::string params,
                                     const CyclotomicNumber& residual,
                                     Clock::time_point start, bool erratum = false) {
  VerificationReport r;
  r.identity = std::move(identity);
  r.params = std::move(params);
  r.residual_is_zero = residual.is_zero();
  r.pass = r.residual_is_zero;
  r.residual = to_string(residual);
  r.erratum = erratum;
  r.millis = elapsed_ms(start);
  return r;
}

VerificationReport make_exact_report(std::string identity, std::string params,
                                     const Rational& residual, Clock::time_point start,
                                     bool erratum = false) {
  VerificationReport r;
  r.identity = std::move(identity);
  r.params = std::move(params);
  r.residual_is_zero = residual == 0;
  r.pass = r.residual_is_zero;
  r.residual = to_string(residual);
  r.erratum = erratum;
  r.millis = elapsed_ms(start);
  return r;
}

CyclotomicNumber imaginary_unit(unsigned conductor) {
  if (conductor % 4 != 0)
    throw std::invalid_argument("imaginary unit needs 4 | conductor");
  return root_of_unity(conductor, conductor / 4);
}

}  // namespace

std::string to_json(const VerificationReport& report) {
  nlohmann::json j = {{"identity", report.identity}, {"params", report.params},
                      {"status", report.pass ? "pass" : "fail"},
                      {"residual_is_zero", report.residual_is_zero},
                      {"erratum", report.erratum},   {"millis", report.millis}};
  return j.dump();
}

std::string to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const VerificationReport& r : reports) arr.push_back(nlohmann::json::parse(to_json(r)));
  return arr.dump(2);
}

VerificationReport verify_prop_main(std::size_t n, unsigned p, unsigned q,
                                    const CyclotomicNumber& z, bool original_exponent) {
  auto start = Clock::now();
  if (q == 0 || p >= q) throw std::invalid_argument("verify_prop_main: need 0 <= p < q");
  const unsigned M = std::lcm(z.conductor(), 4 * q);
  const CyclotomicNumber z_lifted = lift_conductor(z, M);
  const std::size_t top = 2 * q * n + p + q;
  BernoulliTable table(top);

  CyclotomicNumber lhs = CyclotomicNumber::zero(M);
  for (std::size_t k = 0; k <= n; ++k) {
    const std::size_t exponent = original_exponent ? 2 * q * k + p : 2 * q * k + q;
    Rational c = binomial(top, 2 * q * k + q) * table.value(2 * q * n + p - 2 * q * k);
    if (k % 2 == 1) c = -c;
    lhs += pow(z_lifted, exponent) * c;
  }

  CyclotomicNumber rhs = CyclotomicNumber::zero(M);
  const long quarter_step = static_cast<long>(M / (4 * q));  // zeta_{4q} inside M
  for (unsigned j = 0; j < 2 * q; ++j) {
    CyclotomicNumber point =
        z_lifted * root_of_unity(M, -quarter_step * (2 * static_cast<long>(j) + 1));
    CyclotomicNumber term = bernoulli_poly(table, top, point);
    rhs += j % 2 == 0 ? term : -term;
  }
  rhs *= Rational(1, 2 * static_cast<long>(q));
  rhs = imaginary_unit(M) * rhs;

  std::ostringstream params;
  params << "n=" << n << " p=" << p << " q=" << q << " z=" << to_string(z);
  return make_exact_report("prop_main", params.str(), lhs - rhs, start, original_exponent);
}

std::string to_string(TwoIntervalVariant v) {
  switch (v) {
    case TwoIntervalVariant::sqrt2: return "sqrt2";
    case TwoIntervalVariant::inv_sqrt2: return "inv_sqrt2";
    case TwoIntervalVariant::three_over_sqrt2: return "three_over_sqrt2";
  }
  return "?";
}

VerificationReport verify_two_interval(std::size_t n, TwoIntervalVariant variant,
                                       bool original_sign) {
  auto start = Clock::now();
  BernoulliTable table(4 * n);

  // z^{4k+2} for the three choices z = sqrt2, 1/sqrt2, 3/sqrt2
  auto z_power = [&](std::size_t k) -> Rational {
    switch (variant) {
      case TwoIntervalVariant::sqrt2:
        return Rational(int_pow(Integer(2), 2 * k + 1));
      case TwoIntervalVariant::inv_sqrt2:
        return make_rational(Integer(1), int_pow(Integer(2), 2 * k + 1));
      case TwoIntervalVariant::three_over_sqrt2:
        return rat_pow(Rational(9, 2), 2 * k + 1);
    }
    return Rational(0);
  };

  Rational lhs(0);
  for (std::size_t k = 0; k <= n; ++k) {
    Rational term = binomial(4 * n + 2, 4 * k + 2) * z_power(k) * table.value(4 * n - 4 * k);
    lhs += k % 2 == 0 ? term : -term;
  }

  Rational rhs(0);
  const long sign_n = n % 2 == 0 ? 1 : -1;
  switch (variant) {
    case TwoIntervalVariant::sqrt2:
      rhs = Rational(sign_n) * Rational(2 * static_cast<long>(n) + 1) *
            (Rational(int_pow(Integer(2), 2 * n)) + Rational(sign_n));
      break;
    case TwoIntervalVariant::inv_sqrt2: {
      long s = original_sign ? -sign_n : sign_n;
      rhs = Rational(s) * make_rational(Integer(2 * static_cast<long>(n) + 1),
                                        int_pow(Integer(2), 2 * n + 1));
      break;
    }
    case TwoIntervalVariant::three_over_sqrt2: {
      // (2n+1) [ Im(1+3i)^{4n+1} / 2^{4n} + (-1)^n 3^{4n+1} / 2^{2n+1} ]
      CyclotomicNumber base = CyclotomicNumber::from_rational(Rational(1), 4) +
                              imaginary_unit(4) * Rational(3);
      CyclotomicNumber power = pow(base, 4 * n + 1);
      CyclotomicNumber im_part =
          (power - conjugate(power)) * Rational(1, 2);  // i * Im(...)
      Rational im = (im_part * (-imaginary_unit(4))).rational_value();
      rhs = Rational(2 * static_cast<long>(n) + 1) *
            (im / Rational(int_pow(Integer(2), 4 * n)) +
             Rational(sign_n) * Rational(int_pow(Integer(3), 4 * n + 1)) /
                 Rational(int_pow(Integer(2), 2 * n + 1)));
      break;
    }
  }

  std::ostringstream params;
  params << "n=" << n << " variant=" << to_string(variant)
         << (original_sign ? " sign=original" : "");
  // the inverse variant's sign is an oracle correction either way round
  bool erratum = original_sign || variant == TwoIntervalVariant::inv_sqrt2;
  return make_exact_report("two_interval", params.str(), lhs - rhs, start, erratum);
}

VerificationReport verify_four_interval(std::size_t n) {
  auto start = Clock::now();
  BernoulliTable table(8 * n);
  Rational lhs(0);
  for (std::size_t k = 0; k <= n; ++k) {
    Rational term =
        binomial(8 * n + 4, 8 * k + 4) * a_sequence(4, 4 * k + 2) * table.value(8 * n - 8 * k);
    lhs += k % 2 == 0 ? -term : term;  // (-1)^{k+1}
  }
  Rational rhs = Rational(2 * static_cast<long>(n) + 1) * a_sequence(4, 4 * n + 2);
  if (n % 2 == 0) rhs = -rhs;  // (-1)^{n+1}
  std::ostringstream params;
  params << "n=" << n;
  return make_exact_report("four_interval", params.str(), lhs - rhs, start);
}

std::vector<VerificationReport> verify_ramanujan12(std::size_t nmax) {
  BernoulliTable table(12 * nmax);
  std::vector<VerificationReport> out;
  for (std::size_t n = 0; n <= nmax; ++n) {
    auto start = Clock::now();
    Rational lhs(0);
    for (std::size_t k = 0; k <= n; ++k) {
      Rational term = a_sequence(6, 6 * k + 3) / factorial(12 * k + 6) *
                      table.value(12 * n - 12 * k) / factorial(12 * n - 12 * k);
      lhs += k % 2 == 0 ? term : -term;
    }
    lhs *= 6;
    Rational rhs = a_sequence(6, 6 * n + 3) / factorial(12 * n + 5);
    if (n % 2 == 1) rhs = -rhs;
    std::ostringstream params;
    params << "n=" << n;
    out.push_back(make_exact_report("ramanujan12", params.str(), lhs - rhs, start));
  }
  return out;
}

VerificationReport verify_norlund_two_interval(std::size_t n, long a) {
  auto start = Clock::now();
  const unsigned M = 4;
  const CyclotomicNumber i = imaginary_unit(M);
  const CyclotomicNumber one = CyclotomicNumber::one(M);

  Rational lhs(0);
  for (std::size_t k = 0; k <= n; ++k) {
    Rational b = norlund_poly(4 * n - 4 * k, a, Rational(0));
    Rational term =
        binomial(4 * n + 2, 4 * k + 2) * Rational(int_pow(Integer(2), 2 * k + 1)) * b;
    lhs += k % 2 == 0 ? term : -term;
  }

  CyclotomicNumber rhs = norlund_poly(4 * n + 1, a - 1, -one - i) +
                         norlund_poly(4 * n + 1, a - 1, -i) -
                         norlund_poly(4 * n + 1, a - 1, i - one) -
                         norlund_poly(4 * n + 1, a - 1, i);
  rhs = i * rhs * Rational(4 * static_cast<long>(n) + 2, 4);

  std::ostringstream params;
  params << "n=" << n << " a=" << a;
  return make_exact_report("norlund", params.str(),
                           rhs - CyclotomicNumber::from_rational(lhs, M), start);
}

VerificationReport verify_bernoulli_poly_ext(std::size_t n, unsigned N, std::size_t p,
                                             const CyclotomicNumber& w) {
  auto start = Clock::now();
  const unsigned M = std::lcm(w.conductor(), alpha_conductor(N));
  const CyclotomicNumber w_lifted = lift_conductor(w, M);
  const std::size_t m = 2 * n * N + N + 2 * p;
  const std::size_t kmax = (m - N) / (2 * N);
  AlphaTable alpha = alpha_series(N, kmax);
  BernoulliTable table(m);

  CyclotomicNumber lhs = CyclotomicNumber::zero(M);
  for (std::size_t k = 0; k <= kmax; ++k) {
    CyclotomicNumber bp = bernoulli_poly(table, m - 2 * k * N - N, w_lifted);
    lhs += lift_conductor(alpha.values[k], M) * bp *
           binomial(m, 2 * k * N + N);
  }

  // half-configuration sum over epsilon in {+-1}^{N-1}
  const long step = static_cast<long>(M / (2 * N));
  CyclotomicNumber rhs = CyclotomicNumber::zero(M);
  const std::size_t count = std::size_t(1) << (N - 1);
  for (std::size_t maski = 0; maski < count; ++maski) {
    CyclotomicNumber shift = CyclotomicNumber::zero(M);
    int signature = 1;
    for (unsigned j = 1; j < N; ++j) {
      bool minus = (maski >> (j - 1)) & 1;
      CyclotomicNumber wj = root_of_unity(M, step * j);
      shift += minus ? -wj : wj;
      if (minus) signature = -signature;
    }
    CyclotomicNumber term = pow(w_lifted + shift, m - 1) +
                            pow(w_lifted - CyclotomicNumber::one(M) + shift, m - 1);
    rhs += signature > 0 ? term : -term;
  }
  rhs *= make_rational(Integer(m), int_pow(Integer(2), N));

  std::ostringstream params;
  params << "n=" << n << " N=" << N << " p=" << p << " w=" << to_string(w);
  return make_exact_report("poly_ext", params.str(), lhs - rhs, start);
}

VerificationReport verify_general_lacunary(unsigned N, std::size_t order) {
  auto start = Clock::now();
  if (order < 3 * N)
    throw std::invalid_argument("verify_general_lacunary: order must be >= 3N");
  const unsigned M = 4 * N;
  BernoulliTable table(order);

  // psi = stride-2N section of the Bernoulli EGF, lifted into Q(zeta_4N)
  TruncSeries<CyclotomicNumber> psi =
      multisect(bernoulli_egf(table, order, CyclotomicNumber::zero(M)), 2 * N, 0);

  // f = i^{1-N} (2^N / 2N) prod_j sinh(w^j z / 2)
  const long step = static_cast<long>(M / (2 * N));
  TruncSeries<CyclotomicNumber> f(order, CyclotomicNumber::zero(M));
  f.set(0, CyclotomicNumber::one(M));
  for (unsigned j = 0; j < N; ++j) {
    CyclotomicNumber c = root_of_unity(M, step * j) * Rational(1, 2);
    TruncSeries<CyclotomicNumber> factor(order, CyclotomicNumber::zero(M));
    CyclotomicNumber cpow = c;
    for (std::size_t t = 1; t <= order; t += 2) {
      factor.set(t, cpow * (Rational(1) / factorial(t)));
      cpow = cpow * c * c;
    }
    f = f * factor;
  }
  long e = 1 - static_cast<long>(N);
  long r = ((e % 4) + 4) % 4;
  CyclotomicNumber phase = r == 0   ? CyclotomicNumber::one(M)
                           : r == 2 ? CyclotomicNumber::from_rational(Rational(-1), M)
                                    : root_of_unity(M, static_cast<long>(M / 4) * r);
  f = scale(f, phase);
  f = scale(f, Rational(int_pow(Integer(2), N)) / Rational(2 * static_cast<long>(N)));

  TruncSeries<CyclotomicNumber> lhs = scale(psi * f, Rational(static_cast<long>(N)));
  TruncSeries<CyclotomicNumber> rhs = shift_up(derivative(f));  // z f'
  rhs.truncate_to(lhs.order());

  CyclotomicNumber residual = CyclotomicNumber::zero(M);
  for (std::size_t t = 0; t <= lhs.order(); ++t) {
    CyclotomicNumber d = lhs[t] - rhs[t];
    if (!d.is_zero()) {
      residual = d;
      break;
    }
  }
  std::ostringstream params;
  params << "N=" << N << " order=" << order;
  return make_exact_report("general_lacunary", params.str(), residual, start);
}

VerificationReport verify_polynomial_identity(unsigned N, std::size_t n, std::size_t p,
                                              const CyclotomicNumber& w) {
  auto start = Clock::now();
  if (N > 10) throw std::invalid_argument("verify_polynomial_identity: N <= 10");
  const unsigned M = std::lcm(w.conductor(), alpha_conductor(N));
  const CyclotomicNumber w_lifted = lift_conductor(w, M);
  const std::size_t m = 2 * n * N + N + 2 * p;
  const std::size_t kmax = (m - N) / (2 * N);
  AlphaTable alpha = alpha_series(N, kmax);

  CyclotomicNumber lhs = CyclotomicNumber::zero(M);
  for (std::size_t k = 0; k <= kmax; ++k)
    lhs += lift_conductor(alpha.values[k], M) * pow(w_lifted, m - 2 * k * N - N) *
           binomial(m, 2 * k * N + N);

  const long step = static_cast<long>(M / (2 * N));
  CyclotomicNumber rhs = CyclotomicNumber::zero(M);
  for (std::size_t maski = 0; maski < (std::size_t(1) << N); ++maski) {
    CyclotomicNumber shift = CyclotomicNumber::zero(M);
    int signature = 1;
    for (unsigned j = 0; j < N; ++j) {
      bool minus = (maski >> j) & 1;
      CyclotomicNumber wj = root_of_unity(M, step * j);
      shift += minus ? -wj : wj;
      if (minus) signature = -signature;
    }
    CyclotomicNumber term = pow(w_lifted + shift, m);
    rhs += signature > 0 ? term : -term;
  }
  rhs *= make_rational(Integer(1), int_pow(Integer(2), N));

  std::ostringstream params;
  params << "N=" << N << " n=" << n << " p=" << p << " w=" << to_string(w);
  return make_exact_report("polynomial_identity", params.str(), lhs - rhs, start);
}

std::vector<VerificationReport> verify_moment_cancellation(std::size_t nmax) {
  BernoulliTable table(nmax);
  std::vector<VerificationReport> out;
  for (std::size_t n = 1; n <= nmax; ++n) {
    auto start = Clock::now();
    Rational acc(0);
    for (std::size_t k = 0; k <= n; ++k)
      acc += binomial(n, k) * table.value(k) / Rational(static_cast<long>(n - k) + 1);
    std::ostringstream params;
    params << "n=" << n;
    out.push_back(make_exact_report("moments", params.str(), acc, start));
  }
  return out;
}

VerificationReport verify_b_sequence(std::size_t order) {
  auto start = Clock::now();
  if (order % 6 != 0)
    throw std::invalid_argument("verify_b_sequence: order must be a multiple of 6");
  const unsigned M = 3;
  // U(cz) with coefficients c^m/(m+1)!
  auto u_series = [&](long e) {
    TruncSeries<CyclotomicNumber> s(order, CyclotomicNumber::zero(M));
    CyclotomicNumber c = root_of_unity(M, e);
    CyclotomicNumber cpow = CyclotomicNumber::one(M);
    for (std::size_t m = 0; m <= order; ++m) {
      s.set(m, cpow * (Rational(1) / factorial(m + 1)));
      if (m < order) cpow = cpow * c;
    }
    return s;
  };
  TruncSeries<CyclotomicNumber> s01 = u_series(1) * u_series(2);
  TruncSeries<CyclotomicNumber> s02 = u_series(0) * u_series(2);
  TruncSeries<CyclotomicNumber> s03 = u_series(0) * u_series(1);
  TruncSeries<CyclotomicNumber> total = scale(s01 + s02 + s03, Rational(1, 3));

  CyclotomicNumber residual = CyclotomicNumber::zero(M);
  for (std::size_t t = 0; t <= order; ++t) {
    CyclotomicNumber expected = CyclotomicNumber::zero(M);
    if (t % 6 == 0) {
      std::size_t n = t / 6;
      Rational b = Rational(2) / Rational((6 * static_cast<long>(n) + 1) *
                                          (6 * static_cast<long>(n) + 2));
      expected = CyclotomicNumber::from_rational(b / factorial(t), M);
    }
    CyclotomicNumber d = total[t] - expected;
    if (!d.is_zero()) {
      residual = d;
      break;
    }
  }
  std::ostringstream params;
  params << "order=" << order;
  return make_exact_report("b_sequence", params.str(), residual, start);
}

std::vector<VerificationReport> verify_lehmer(std::size_t nmax) {
  std::vector<VerificationReport> out;
  for (std::size_t n = 0; n <= nmax; ++n) {
    auto start = Clock::now();
    Rational residual = lehmer_sum(n) - Rational(2 * static_cast<long>(n) + 1);
    std::ostringstream params;
    params << "n=" << n;
    out.push_back(make_exact_report("lehmer", params.str(), residual, start));
  }
  return out;
}

VerificationReport verify_multisection(std::size_t cases, std::uint64_t seed) {
  auto start = Clock::now();
  const unsigned M = 12;
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  std::uniform_int_distribution<std::size_t> deg(0, 24);
  const unsigned qs[] = {2, 3, 4, 6, 12};
  std::uniform_int_distribution<std::size_t> qpick(0, 4);

  CyclotomicNumber residual = CyclotomicNumber::zero(M);
  std::size_t checked = 0;
  for (std::size_t c = 0; c < cases && residual.is_zero(); ++c) {
    std::size_t degree = deg(gen);
    TruncSeries<CyclotomicNumber> poly(degree, CyclotomicNumber::zero(M));
    auto ctx = CyclotomicContext::get(M);
    for (std::size_t t = 0; t <= degree; ++t) {
      std::vector<Rational> coeffs(ctx->degree());
      for (Rational& r : coeffs) r = make_rational(num(gen), den(gen));
      poly.set(t, CyclotomicNumber(ctx, std::move(coeffs)));
    }
    unsigned q = qs[qpick(gen)];
    for (unsigned p = 0; p < q && residual.is_zero(); ++p) {
      TruncSeries<CyclotomicNumber> direct = multisect(poly, q, p);
      TruncSeries<CyclotomicNumber> averaged = roots_average(poly, q, p);
      ++checked;
      for (std::size_t t = 0; t <= degree; ++t) {
        CyclotomicNumber d = direct[t] - averaged[t];
        if (!d.is_zero()) {
          residual = d;
          break;
        }
      }
    }
  }
  std::ostringstream params;
  params << "cases=" << cases << " seed=" << seed << " sections=" << checked;
  return make_exact_report("multisection", params.str(), residual, start);
}

std::vector<VerificationReport> verify_prop_main_random(std::size_t cases,
                                                        std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<unsigned> qdist(1, 3);
  std::uniform_int_distribution<std::size_t> ndist(0, 3);
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 6);
  const unsigned conductors[] = {1, 2, 3, 4, 6, 8, 12, 24};
  std::uniform_int_distribution<std::size_t> cpick(0, 7);

  std::vector<VerificationReport> out;
  for (std::size_t c = 0; c < cases; ++c) {
    unsigned q = qdist(gen);
    std::uniform_int_distribution<unsigned> pdist(0, q - 1);
    unsigned p = pdist(gen);
    std::size_t n = ndist(gen);
    unsigned conductor = conductors[cpick(gen)];
    auto ctx = CyclotomicContext::get(conductor);
    std::vector<Rational> coeffs(ctx->degree());
    for (Rational& r : coeffs) r = make_rational(num(gen), den(gen));
    CyclotomicNumber z(ctx, std::move(coeffs));
    out.push_back(verify_prop_main(n, p, q, z));
  }
  return out;
}

}  // namespace lacuna
