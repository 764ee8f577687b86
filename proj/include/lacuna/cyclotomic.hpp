#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lacuna/rational.hpp"

namespace lacuna {

// Coefficients of the M-th cyclotomic polynomial, ascending degree,
// computed by exact division of x^M - 1 by the lower-index factors.
std::vector<Integer> cyclotomic_polynomial(unsigned conductor);

// Immutable arithmetic context for Q(zeta_M): the minimal polynomial of a
// primitive M-th root of unity and the reductions of zeta^k, 0 <= k < 2M,
// to the power basis 1, zeta, ..., zeta^{phi(M)-1}.
class CyclotomicContext {
 public:
  static std::shared_ptr<const CyclotomicContext> get(unsigned conductor);

  unsigned conductor() const { return conductor_; }
  unsigned degree() const { return degree_; }  // phi(conductor)
  const std::vector<Integer>& minimal_polynomial() const { return minpoly_; }

  // zeta^k mod Phi_M as a length-degree() integer vector; requires k < 2M.
  const std::vector<Integer>& power_basis_form(unsigned k) const;

  CyclotomicContext(const CyclotomicContext&) = delete;
  CyclotomicContext& operator=(const CyclotomicContext&) = delete;

 private:
  explicit CyclotomicContext(unsigned conductor);

  unsigned conductor_;
  unsigned degree_;
  std::vector<Integer> minpoly_;
  std::vector<std::vector<Integer>> power_table_;
};

// Element of Q(zeta_M) in the power basis modulo Phi_M. Values are immutable;
// every operation returns a reduced element, so equality is plain coefficient
// comparison. Operations never change the conductor implicitly: mixing
// conductors raises an error telling the caller to lift_conductor first.
class CyclotomicNumber {
 public:
  CyclotomicNumber();  // zero in Q(zeta_1) = Q
  CyclotomicNumber(std::shared_ptr<const CyclotomicContext> ctx,
                   std::vector<Rational> coeffs);

  static CyclotomicNumber zero(unsigned conductor);
  static CyclotomicNumber one(unsigned conductor);
  static CyclotomicNumber from_rational(const Rational& value, unsigned conductor);

  unsigned conductor() const { return ctx_->conductor(); }
  const std::shared_ptr<const CyclotomicContext>& context() const { return ctx_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // throws unless is_rational()

  CyclotomicNumber operator-() const;
  CyclotomicNumber& operator+=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator-=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator*=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator*=(const Rational& scalar);

 private:
  std::shared_ptr<const CyclotomicContext> ctx_;
  std::vector<Rational> coeffs_;  // length == ctx_->degree()
};

CyclotomicNumber operator+(CyclotomicNumber lhs, const CyclotomicNumber& rhs);
CyclotomicNumber operator-(CyclotomicNumber lhs, const CyclotomicNumber& rhs);
CyclotomicNumber operator*(CyclotomicNumber lhs, const CyclotomicNumber& rhs);
CyclotomicNumber operator*(CyclotomicNumber lhs, const Rational& scalar);
CyclotomicNumber operator*(const Rational& scalar, CyclotomicNumber rhs);
CyclotomicNumber operator+(CyclotomicNumber lhs, const Rational& scalar);
CyclotomicNumber operator-(CyclotomicNumber lhs, const Rational& scalar);

bool operator==(const CyclotomicNumber& lhs, const CyclotomicNumber& rhs);
bool operator!=(const CyclotomicNumber& lhs, const CyclotomicNumber& rhs);

// zeta_M^k, exponent taken mod M (negative k allowed).
CyclotomicNumber root_of_unity(unsigned conductor, long exponent);

// The automorphism zeta -> zeta^{M-1}, i.e. complex conjugation.
CyclotomicNumber conjugate(const CyclotomicNumber& z);

CyclotomicNumber pow(const CyclotomicNumber& base, unsigned long exponent);

// Image under zeta_M -> zeta_{M2}^{M2/M}; requires conductor() | target.
CyclotomicNumber lift_conductor(const CyclotomicNumber& z, unsigned target);

// The nonzero integer m with z = w + m, when one exists. Both tests are
// exact: Im(z-w) = 0 via d == conjugate(d), and Re(z-w) integral via the
// reduced representation of d + conjugate(d).
std::optional<long> horizontal_integer_gap(const CyclotomicNumber& z,
                                           const CyclotomicNumber& w);

std::complex<double> embed_to_float(const CyclotomicNumber& z);

std::string to_string(const CyclotomicNumber& z);
std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& z);

}  // namespace lacuna
