#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "lacuna/rational.hpp"

namespace lacuna {

using ComplexD = std::complex<double>;

// Outcome of a floating-point identity check. `budget` is the accumulated
// truncation-error bound; a check passes only when both the residual and the
// budget sit below the requested tolerance.
struct NumericReport {
  std::string identity;
  std::string params;
  double residual = 0.0;
  double budget = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

std::string to_json(const NumericReport& report);

// sum_{m>=0} (w+m)^{-s} by direct summation plus integral and midpoint tail
// corrections; the Euler-Maclaurin remainder bound is pushed below tol.
ComplexD hurwitz_zeta(ComplexD w, int s, double tol);

struct BarnesValue {
  ComplexD value;
  double tail_bound;
};

// sum_{m1,m2>=0} (w+m1+i m2)^{-s} truncated at 0 <= m1,m2 <= R, with the
// quadrant tail bound reported; requires Re(w) > 0, Im(w) >= 0, s >= 3.
BarnesValue barnes_zeta2(ComplexD w, int s, int R);

// The 4-gap convolution of the double zeta against its collapsed form.
// `original_form` compares against the combination of four Hurwitz zeta
// values; the corrected form compares against the finite corner expression
// (1/4i)[w^-p + (w-1)^-p + (w-i)^-p + (w-1-i)^-p] that the shift operator
// actually telescopes to.
NumericReport verify_barnes_lacunary(ComplexD w, int p, int kmax, double tol,
                                     bool original_form = false);

// sum over (m,n) != (0,0), |m|,|n| <= R of (m + n tau)^{-k2}. Weight 2 is
// conditionally convergent and evaluated in this fixed symmetric order.
ComplexD eisenstein_G(ComplexD tau, int k2, int R);

struct EisensteinTable {
  ComplexD tau;
  unsigned N = 1;
  std::vector<ComplexD> values;  // G_{2N}, G_{4N}, ..., G_{2N*mmax}
  int R = 0;
  double est_error = 0.0;
  bool conditionally_convergent_entry = false;  // table contains weight-2 term
};

EisensteinTable eisenstein_table(ComplexD tau, unsigned N, std::size_t mmax, double tol);

struct WeierstrassCoeffs {
  // plain coefficients c_n = [z^{(2n+1)N}] f for the two routes
  std::vector<ComplexD> exp_route;
  std::vector<ComplexD> bell_route;
  // ((2n+1)N)! c_n, the EGF values used by the large-lattice limit check
  std::vector<ComplexD> egf_values;
  double two_route_max_diff = 0.0;
  double table_error = 0.0;
};

// Coefficients of f(z) = (i z^N / 2N) exp(-1/2 sum_m G_{2Nm} z^{2Nm}/m),
// computed both through exp_series and through complete Bell polynomials
// with x_k = -N (k-1)! G_k for 2N | k (zero otherwise).
WeierstrassCoeffs weierstrass_f_coeffs(ComplexD tau, unsigned N, std::size_t nmax,
                                       double tol = 1e-10);

// Coefficientwise residual of N Phi_N(z) f(z) = z f'(z) through `order`.
NumericReport verify_eisenstein_ode(ComplexD tau, unsigned N, std::size_t order,
                                    double tol);

// For tau = i T with T large the coefficients approach a fixed multiple of
// (i pi)^{2kN+N} alpha_k^{(N)}; the constant is pinned at k = 0 and the ratio
// is asserted stable (relative error < tol) for k = 1..kmax.
NumericReport verify_eisenstein_limit(double tau_im, unsigned N, std::size_t kmax,
                                      double tol);

// (pi/2) int (i x - 1/2)^n sech^2(pi x) dx; equals B_n. (The density
// normalization pi/2 is fixed by the n = 0 case.)
ComplexD sech2_moment(unsigned n, double tol);

// int_0^infty x^{2n} / (e^{pi x} - e^{-pi x})^2 dx; equals |B_{2n}| / (4 pi).
double ramanujan_integral(unsigned n, double tol);

// Truncated nested sum for zeta({2N}_k), k in {1, 2}, indices up to M.
double mzv_numeric(unsigned N, unsigned k, std::size_t M);

}  // namespace lacuna
