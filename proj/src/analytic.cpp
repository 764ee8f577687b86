#include "lacuna/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "lacuna/alpha.hpp"
#include "lacuna/bernoulli.hpp"
#include "lacuna/series.hpp"

namespace lacuna {
namespace {

constexpr ComplexD kI{0.0, 1.0};

ComplexD cpow_int(ComplexD base, long e) {
  if (e < 0) return 1.0 / cpow_int(base, -e);
  ComplexD r{1.0, 0.0};
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

std::string fmt(ComplexD z) {
  std::ostringstream os;
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

// Adaptive Simpson on complex integrands.
ComplexD simpson_step(const std::function<ComplexD(double)>& f, double a, double b,
                      ComplexD fa, ComplexD fm, ComplexD fb, ComplexD whole,
                      double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  ComplexD flm = f(lm), frm = f(rm);
  ComplexD left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  ComplexD right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return simpson_step(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

ComplexD integrate(const std::function<ComplexD(double)>& f, double a, double b,
                   double tol) {
  ComplexD fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  ComplexD whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, b, fa, fm, fb, whole, tol, 48);
}

}  // namespace

std::string to_json(const NumericReport& report) {
  nlohmann::json j = {{"identity", report.identity}, {"params", report.params},
                      {"residual", report.residual}, {"budget", report.budget},
                      {"tolerance", report.tolerance}, {"pass", report.pass}};
  return j.dump();
}

ComplexD hurwitz_zeta(ComplexD w, int s, double tol) {
  if (s < 2) throw std::invalid_argument("hurwitz_zeta: s >= 2 required");
  if (w.imag() == 0.0 && w.real() <= 0.0 && w.real() == std::floor(w.real()))
    throw std::domain_error("hurwitz_zeta: pole on the summation ray");
  // Remainder bound |s| M^{-s-1} / 12 assumes |w+x| >= x on [M, inf).
  if (w.real() < 0.0)
    throw std::domain_error("hurwitz_zeta: Re(w) >= 0 required by the tail bound");
  std::size_t M = 16;
  while (static_cast<double>(s) * std::pow(static_cast<double>(M), -s - 1) / 12.0 > tol)
    M *= 2;
  ComplexD acc{0.0, 0.0};
  for (std::size_t m = 0; m < M; ++m) acc += cpow_int(w + static_cast<double>(m), -s);
  ComplexD edge = w + static_cast<double>(M);
  acc += cpow_int(edge, 1 - s) / static_cast<double>(s - 1);  // integral tail
  acc += 0.5 * cpow_int(edge, -s);                            // midpoint correction
  return acc;
}

BarnesValue barnes_zeta2(ComplexD w, int s, int R) {
  if (s < 3) throw std::invalid_argument("barnes_zeta2: s >= 3 required");
  if (w.real() <= 0.0 || w.imag() < 0.0)
    throw std::domain_error("barnes_zeta2: need Re(w) > 0 and Im(w) >= 0");
  ComplexD acc{0.0, 0.0};
  for (int m1 = 0; m1 <= R; ++m1)
    for (int m2 = 0; m2 <= R; ++m2)
      acc += cpow_int(w + ComplexD(m1, m2), -s);
  // |w+m1+i m2| >= sqrt(m1^2+m2^2) on the quadrant, so the tail outside the
  // R-square is below 2 [ R^{1-s}/(s-1) + R^{2-s}/(s-2) ].
  double Rd = static_cast<double>(R);
  double tail = 2.0 * (std::pow(Rd, 1 - s) / (s - 1) + std::pow(Rd, 2 - s) / (s - 2));
  return {acc, tail};
}

NumericReport verify_barnes_lacunary(ComplexD w, int p, int kmax, double tol,
                                     bool original_form) {
  if (std::abs(w) <= std::sqrt(2.0))
    throw std::domain_error("verify_barnes_lacunary: |w| > sqrt(2) required for convergence");
  double budget = 0.0;
  ComplexD ksum{0.0, 0.0};
  double prev_term = 0.0, last_term = 0.0;
  for (int k = 0; k <= kmax; ++k) {
    int s = p + 4 * k + 2;
    double coeff = binomial(4 * k + p + 1, p - 1).get_d() * std::pow(2.0, 2 * k + 1);
    int R = 32;
    BarnesValue zeta2 = barnes_zeta2(w, s, R);
    while (coeff * zeta2.tail_bound > tol / (8.0 * (kmax + 1)) && R < 2048) {
      R *= 2;
      zeta2 = barnes_zeta2(w, s, R);
    }
    budget += coeff * zeta2.tail_bound;
    ComplexD term = coeff * zeta2.value;
    if (k % 2 == 1) term = -term;
    ksum += term;
    prev_term = last_term;
    last_term = std::abs(term);
  }
  // geometric estimate for the truncated k-tail
  if (prev_term > 0.0 && last_term < prev_term)
    budget += last_term * (last_term / prev_term) / (1.0 - last_term / prev_term);

  ComplexD lhs = cpow_int(kI, p) * ksum;
  ComplexD rhs;
  if (original_form) {
    double htol = tol / 16.0;
    double ps = (p % 2 == 0) ? 1.0 : -1.0;
    rhs = hurwitz_zeta(-kI * w, p, htol) - ps * hurwitz_zeta(kI * w, p, htol) +
          hurwitz_zeta(-kI * (w - 1.0), p, htol) - ps * hurwitz_zeta(kI * (w - 1.0), p, htol);
    budget += 4 * tol / 16.0;
  } else {
    ComplexD corner = (cpow_int(w, -p) + cpow_int(w - 1.0, -p) + cpow_int(w - kI, -p) +
                       cpow_int(w - 1.0 - kI, -p)) /
                      (4.0 * kI);
    rhs = cpow_int(kI, p) * corner;
  }

  NumericReport report;
  report.identity = "barnes_lacunary";
  std::ostringstream params;
  params << "w=" << fmt(w) << " p=" << p << " kmax=" << kmax
         << (original_form ? " form=original" : " form=corrected");
  report.params = params.str();
  report.residual = std::abs(lhs - rhs);
  report.budget = budget;
  report.tolerance = tol;
  report.pass = report.residual < tol && report.budget < tol;
  return report;
}

ComplexD eisenstein_G(ComplexD tau, int k2, int R) {
  if (tau.imag() <= 0.0) throw std::invalid_argument("eisenstein_G: Im(tau) > 0 required");
  ComplexD acc{0.0, 0.0};
  for (int m = -R; m <= R; ++m)
    for (int n = -R; n <= R; ++n) {
      if (m == 0 && n == 0) continue;
      acc += cpow_int(ComplexD(m, 0) + ComplexD(n, 0) * tau, -k2);
    }
  return acc;
}

EisensteinTable eisenstein_table(ComplexD tau, unsigned N, std::size_t mmax, double tol) {
  EisensteinTable table;
  table.tau = tau;
  table.N = N;
  table.values.assign(mmax, ComplexD{0.0, 0.0});
  int R = 32;
  std::vector<ComplexD> prev(mmax);
  for (std::size_t m = 0; m < mmax; ++m)
    prev[m] = eisenstein_G(tau, static_cast<int>(2 * N * (m + 1)), R);
  std::vector<ComplexD> refined = prev;
  double change = tol + 1.0;
  while (change > tol / 10.0 && R < 512) {
    R *= 2;
    change = 0.0;
    for (std::size_t m = 0; m < mmax; ++m) {
      int k2 = static_cast<int>(2 * N * (m + 1));
      ComplexD next = eisenstein_G(tau, k2, R);
      ComplexD step = next - prev[m];
      change = std::max(change, std::abs(step));
      // square truncation converges like R^-2; one Richardson step removes
      // that term (skipped at weight 2, which is only conditionally convergent)
      refined[m] = k2 >= 4 ? next + step / 3.0 : next;
      prev[m] = next;
    }
  }
  table.values = refined;
  table.R = R;
  table.est_error = change;  // conservative: the extrapolated error is far smaller
  table.conditionally_convergent_entry = (2 * N == 2);
  return table;
}

namespace {

WeierstrassCoeffs coeffs_from_table(const EisensteinTable& table, unsigned N,
                                    std::size_t nmax) {
  const std::size_t order = 2 * N * nmax;  // exp part needs z^{2Nn} up to n = nmax
  TruncSeries<ComplexD> exponent(order, ComplexD{0.0, 0.0});
  for (std::size_t m = 1; m * 2 * N <= order; ++m)
    exponent.set(2 * N * m, -table.values[m - 1] / (2.0 * m));
  TruncSeries<ComplexD> expanded = exp_series(exponent);

  // Bell route: x_k = -N (k-1)! G_k for 2N | k, else 0.
  std::vector<ComplexD> xs(order, ComplexD{0.0, 0.0});
  for (std::size_t k = 1; k <= order; ++k)
    if (k % (2 * N) == 0)
      xs[k - 1] = -static_cast<double>(N) * factorial(k - 1).get_d() *
                  table.values[k / (2 * N) - 1];

  WeierstrassCoeffs out;
  out.table_error = table.est_error;
  const ComplexD lead = kI / (2.0 * static_cast<double>(N));
  for (std::size_t n = 0; n <= nmax; ++n) {
    ComplexD exp_c = lead * expanded[2 * N * n];
    ComplexD bell_c =
        lead * bell_complete(2 * N * n, xs) / factorial(2 * N * n).get_d();
    out.exp_route.push_back(exp_c);
    out.bell_route.push_back(bell_c);
    out.egf_values.push_back(exp_c * factorial((2 * n + 1) * N).get_d());
    out.two_route_max_diff = std::max(out.two_route_max_diff, std::abs(exp_c - bell_c));
  }
  return out;
}

}  // namespace

WeierstrassCoeffs weierstrass_f_coeffs(ComplexD tau, unsigned N, std::size_t nmax,
                                       double tol) {
  return coeffs_from_table(eisenstein_table(tau, N, nmax, tol), N, nmax);
}

NumericReport verify_eisenstein_ode(ComplexD tau, unsigned N, std::size_t order,
                                    double tol) {
  const std::size_t mmax = order / (2 * N);
  EisensteinTable table = eisenstein_table(tau, N, std::max<std::size_t>(mmax, 1), tol);

  TruncSeries<ComplexD> phi(order, ComplexD{0.0, 0.0});
  phi.set(0, ComplexD{1.0, 0.0});
  for (std::size_t m = 1; m <= mmax; ++m) phi.set(2 * N * m, -table.values[m - 1]);

  TruncSeries<ComplexD> exponent(order, ComplexD{0.0, 0.0});
  for (std::size_t m = 1; m <= mmax; ++m)
    exponent.set(2 * N * m, -table.values[m - 1] / (2.0 * m));
  TruncSeries<ComplexD> f = exp_series(exponent);
  // shift by z^N and scale i/(2N)
  TruncSeries<ComplexD> fshift(order, ComplexD{0.0, 0.0});
  for (std::size_t t = N; t <= order; ++t)
    fshift.set(t, f[t - N] * kI / (2.0 * static_cast<double>(N)));

  TruncSeries<ComplexD> lhs = phi * fshift;
  TruncSeries<ComplexD> rhs = shift_up(derivative(fshift));
  rhs.truncate_to(lhs.order());
  double residual = 0.0;
  for (std::size_t t = 0; t <= lhs.order(); ++t)
    residual = std::max(residual,
                        std::abs(static_cast<double>(N) * lhs[t] - rhs[t]));

  NumericReport report;
  report.identity = "eisenstein_ode";
  std::ostringstream params;
  params << "tau=" << fmt(tau) << " N=" << N << " order=" << order << " R=" << table.R;
  report.params = params.str();
  report.residual = residual;
  report.budget = 0.0;  // the ODE holds for any coefficient table; pure arithmetic check
  report.tolerance = tol;
  report.pass = residual < tol;
  return report;
}

NumericReport verify_eisenstein_limit(double tau_im, unsigned N, std::size_t kmax,
                                      double tol) {
  if (tau_im < 5.0)
    throw std::invalid_argument("verify_eisenstein_limit: Im(tau) >= 5 required");
  WeierstrassCoeffs coeffs =
      weierstrass_f_coeffs(ComplexD(0.0, tau_im), N, kmax, 1e-9);
  AlphaTable alpha = alpha_series(N, kmax);

  std::vector<ComplexD> ratios;
  for (std::size_t k = 0; k <= kmax; ++k) {
    ComplexD alpha_f = embed_to_float(alpha.values[k]);
    ComplexD scale = cpow_int(kI * M_PI, static_cast<long>((2 * k + 1) * N));
    ratios.push_back(coeffs.egf_values[k] / (scale * alpha_f));
  }
  double worst = 0.0;
  for (std::size_t k = 1; k <= kmax; ++k)
    worst = std::max(worst, std::abs(ratios[k] / ratios[0] - 1.0));

  NumericReport report;
  report.identity = "eisenstein_limit";
  std::ostringstream params;
  params << "tau=" << fmt(ComplexD(0.0, tau_im)) << " N=" << N << " kmax=" << kmax
         << " pinned_constant=" << fmt(ratios[0]);
  report.params = params.str();
  report.residual = worst;
  report.budget = coeffs.table_error;
  report.tolerance = tol;
  report.pass = worst < tol && report.budget < tol;
  return report;
}

ComplexD sech2_moment(unsigned n, double tol) {
  double X = 8.0;
  auto tail_bound = [&](double x) {
    return 4.0 * std::pow(x + 1.0, static_cast<double>(n)) * std::exp(-2.0 * M_PI * x);
  };
  while (tail_bound(X) > tol / 4.0) X += 2.0;
  auto integrand = [n](double x) {
    double sech = 1.0 / std::cosh(M_PI * x);
    return cpow_int(ComplexD(-0.5, x), n) * (sech * sech);
  };
  return 0.5 * M_PI * integrate(integrand, -X, X, tol / 8.0);
}

double ramanujan_integral(unsigned n, double tol) {
  if (n == 0) throw std::invalid_argument("ramanujan_integral: n >= 1 required");
  double X = 10.0;
  auto tail_bound = [&](double x) {
    return std::pow(x, 2.0 * n) * std::exp(-2.0 * M_PI * x);
  };
  while (tail_bound(X) > tol / 4.0) X += 2.0;
  auto integrand = [n](double x) -> ComplexD {
    if (x == 0.0) return n == 1 ? ComplexD(1.0 / (4.0 * M_PI * M_PI), 0.0) : ComplexD(0.0, 0.0);
    double sh = std::sinh(M_PI * x);
    return ComplexD(std::pow(x, 2.0 * n) / (4.0 * sh * sh), 0.0);
  };
  return integrate(integrand, 0.0, X, tol / 8.0).real();
}

double mzv_numeric(unsigned N, unsigned k, std::size_t M) {
  const double s = 2.0 * static_cast<double>(N);
  // midpoint-rule estimate for sum_{m > M} m^{-s}
  const double outer_tail = std::pow(static_cast<double>(M) + 0.5, 1.0 - s) / (s - 1.0);
  if (k == 1) {
    double acc = 0.0;
    for (std::size_t m = M; m >= 1; --m) acc += std::pow(static_cast<double>(m), -s);
    return acc + outer_tail;
  }
  if (k == 2) {
    // sum_{m > n >= 1, m <= M} (m n)^{-s} via the running inner partial sum,
    // plus the outer tail weighted by the saturated inner sum
    double acc = 0.0, inner = 0.0;
    for (std::size_t m = 1; m <= M; ++m) {
      if (m > 1) inner += std::pow(static_cast<double>(m - 1), -s);
      acc += std::pow(static_cast<double>(m), -s) * inner;
    }
    inner += std::pow(static_cast<double>(M), -s);
    return acc + inner * outer_tail;
  }
  throw std::invalid_argument("mzv_numeric: depth k must be 1 or 2");
}

}  // namespace lacuna
