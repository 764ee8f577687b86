#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lacuna/cyclotomic.hpp"
#include "lacuna/rational.hpp"

namespace lacuna {

// Outcome of one exact identity check. Every check in this module is exact:
// pass holds if and only if the residual is the zero field element, with no
// tolerance anywhere. `erratum` marks checks run against an original
// formulation that is known to deviate from the oracle-corrected one.
struct VerificationReport {
  std::string identity;
  std::string params;
  bool pass = false;
  bool residual_is_zero = false;
  std::string residual = "0";
  bool erratum = false;
  double millis = 0.0;
};

std::string to_json(const VerificationReport& report);
std::string to_json(const std::vector<VerificationReport>& reports);

// sum_k (-1)^k C(2qn+p+q, 2qk+q) z^{2qk+q} B_{2qn+p-2qk}
//   = (i/2q) sum_j (-1)^j B_{2qn+p+q}(z / w^{j+1/2}),  w = zeta_{2q}.
// `original_exponent` uses z^{2qk+p} on the left, the variant that fails its
// oracle at n=0, q=2, p=1, z=sqrt(2).
VerificationReport verify_prop_main(std::size_t n, unsigned p, unsigned q,
                                    const CyclotomicNumber& z,
                                    bool original_exponent = false);

enum class TwoIntervalVariant { sqrt2, inv_sqrt2, three_over_sqrt2 };

std::string to_string(TwoIntervalVariant v);

// The three specializations of the 4-gap identity. For inv_sqrt2 the right
// side is (-1)^n (2n+1) / 2^{2n+1}; `original_sign` flips it to the variant
// with (-1)^{n+1}, which fails at n = 0.
VerificationReport verify_two_interval(std::size_t n, TwoIntervalVariant variant,
                                       bool original_sign = false);

// sum_k (-1)^{k+1} C(8n+4, 8k+4) a_{4k+2} B_{8n-8k} = (2n+1)(-1)^{n+1} a_{4n+2}.
VerificationReport verify_four_interval(std::size_t n);

// The 12-gap identity, exact for each n in [0, nmax].
std::vector<VerificationReport> verify_ramanujan12(std::size_t nmax);

// The z = sqrt(2) identity for order-a generalized Bernoulli polynomials.
VerificationReport verify_norlund_two_interval(std::size_t n, long a);

// sum_k alpha_k C(m, 2kN+N) B_{m-2kN-N... }(w) against the half-configuration
// sum, m = 2nN+N+2p.
VerificationReport verify_bernoulli_poly_ext(std::size_t n, unsigned N, std::size_t p,
                                             const CyclotomicNumber& w);

// Coefficientwise check of N psi(z) f(z) = z f'(z) through the given order,
// with psi the stride-2N section of the Bernoulli EGF and f the scaled
// product of sinh(w^j z / 2).
VerificationReport verify_general_lacunary(unsigned N, std::size_t order);

// The polynomial identity behind the sign-vector expansion, checked exactly
// at one (N, n, p, w).
VerificationReport verify_polynomial_identity(unsigned N, std::size_t n, std::size_t p,
                                              const CyclotomicNumber& w);

// sum_{k=0}^{n} C(n,k) B_k / (n-k+1) = 0 for n >= 1 (uniform moments against
// Bernoulli moments).
std::vector<VerificationReport> verify_moment_cancellation(std::size_t nmax);

// S = (1/3)[U(wz)U(w^2 z) + U(z)U(w^2 z) + U(z)U(wz)] over Q(zeta_3) with
// U = (e^z-1)/z has support on multiples of 6 and coefficients
// b_n/(6n)! with b_n = 2/((6n+1)(6n+2)); checked through `order`.
VerificationReport verify_b_sequence(std::size_t order);

// Lehmer's 6-gap sum equals 2n+1 for each n in [0, nmax].
std::vector<VerificationReport> verify_lehmer(std::size_t nmax);

// multisect == roots_average on random polynomials over Q(zeta_12) of degree
// <= 24, for q in {2,3,4,6,12} and every p.
VerificationReport verify_multisection(std::size_t cases, std::uint64_t seed);

// Randomized battery of verify_prop_main cases (q <= 3, conductor | 24).
std::vector<VerificationReport> verify_prop_main_random(std::size_t cases,
                                                        std::uint64_t seed);

}  // namespace lacuna
