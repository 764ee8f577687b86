#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lacuna/cyclotomic.hpp"
#include "lacuna/rational.hpp"

namespace lacuna {

// alpha_k^{(N)} are the EGF coefficients of prod_{j<N} sinh(w^j z) with
// w = zeta_{2N}: sum_k alpha_k z^{2kN+N} / (2kN+N)!. They are computed here
// by several independent routes that must agree exactly.

enum class AlphaMethod { series, signsum, doubling, orbit, closed, integral, barnes };

std::string to_string(AlphaMethod m);

struct AlphaTable {
  unsigned N = 1;
  unsigned conductor = 4;
  AlphaMethod method = AlphaMethod::series;
  std::vector<CyclotomicNumber> values;  // alpha_0 .. alpha_kmax
};

// Storage conductor for alpha values: 2N, widened to 4 for N = 1 so that
// purely imaginary values and the reality checks stay expressible.
unsigned alpha_conductor(unsigned N);

// Route 1: multiply the N sinh factors as truncated series over Q(zeta_2N).
AlphaTable alpha_series(unsigned N, std::size_t kmax);

// Route 2: 2^{-N} sum over all sign vectors s of pi(s) (w.s)^{2kN+N}.
CyclotomicNumber alpha_signsum(unsigned N, std::size_t k);

// Route 3: bisection recurrence from N to 2N. The factorial (4Nn+2N)! is
// part of the corrected form; `original_form` reproduces the formula as it
// circulates, which fails its oracle already at N=1 -> 2, n=0.
AlphaTable alpha_doubling(const AlphaTable& source, std::size_t kmax,
                          bool original_form = false);
AlphaTable alpha_doubling(unsigned N, std::size_t kmax, bool original_form = false);

// Route 4: for prime p, the redundancy-free sum over orbit representatives
// of the twisted cyclic action, (p / 2^{p-1}) sum_l pi(a_l) (w.a_l)^{2kp+p}.
CyclotomicNumber alpha_orbit_prime(unsigned p, std::size_t k);

// Route 5: closed forms through multiple zeta values,
// alpha_k^{(N)} = i^{N-1} (-1)^{(N+1)k} (2kN+N)! zeta({2N}_k) / pi^{2kN}.
// `original_form` uses the phase i (-1)^{(N+1)(k+1)} instead, which fails the
// oracle at N=3, k=0 (gives 6i where the true value is -6).
CyclotomicNumber alpha_closed(unsigned N, std::size_t k, bool original_form = false);

// zeta({2N}_k) = r * (2pi)^{2Nk} with r exact rational; N in [1,6].
Rational mzv_closed(unsigned N, std::size_t k);

// Closed-form companion sequences, by integer/rational linear recurrences:
//   N=6: a_n = s_n + 2^n,           s_n = 4 s_{n-1} - s_{n-2}, s_0=2, s_1=4
//   N=4: a_n = 2 a_{n-1} - a_{n-2}/2,  a_0 = a_1 = 2
//   N=5: a_n = L_n + 1 with Lucas numbers L_1 = 1, L_2 = 3
Rational a_sequence(unsigned N, std::size_t n);

// Route 6: multinomial expansion of the box integral
// i^{N-1} 2^{-N} ((2nN+N)!/(2nN)!) int_{[-1,1]^N} (sum_j w^j u_j)^{2nN} du.
CyclotomicNumber alpha_integral(unsigned N, std::size_t n);

// Route 7: proportional to a negative-order multi-parameter Bernoulli value;
// the scalar c_N is pinned once against alpha_series at n = 0 and then
// asserted constant in n (it comes out as i^{N-1}).
CyclotomicNumber alpha_via_barnes(unsigned N, std::size_t n);

}  // namespace lacuna
