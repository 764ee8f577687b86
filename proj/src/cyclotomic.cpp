#include "lacuna/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace lacuna {
namespace {

// Quotient of num by a monic integer polynomial that divides it exactly.
std::vector<Integer> divide_exact(std::vector<Integer> num,
                                  const std::vector<Integer>& den) {
  const std::size_t dn = num.size() - 1;
  const std::size_t dd = den.size() - 1;
  std::vector<Integer> quot(dn - dd + 1, Integer(0));
  for (std::size_t i = dn + 1; i-- > dd;) {
    Integer c = num[i];
    if (c == 0) continue;
    quot[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (const Integer& c : num)
    if (c != 0) throw std::logic_error("cyclotomic: inexact polynomial division");
  return quot;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(unsigned conductor) {
  if (conductor == 0) throw std::invalid_argument("cyclotomic: conductor must be >= 1");
  // x^M - 1
  std::vector<Integer> f(conductor + 1, Integer(0));
  f[0] = -1;
  f[conductor] = 1;
  for (unsigned d = 1; d < conductor; ++d)
    if (conductor % d == 0) f = divide_exact(std::move(f), cyclotomic_polynomial(d));
  return f;
}

CyclotomicContext::CyclotomicContext(unsigned conductor) : conductor_(conductor) {
  minpoly_ = cyclotomic_polynomial(conductor);
  degree_ = static_cast<unsigned>(minpoly_.size() - 1);

  // power_table_[k] = zeta^k mod Phi_M for k in [0, 2M).
  power_table_.reserve(2 * conductor);
  std::vector<Integer> cur(degree_, Integer(0));
  cur[0] = 1;
  power_table_.push_back(cur);
  for (unsigned k = 1; k < 2 * conductor; ++k) {
    Integer lead = cur[degree_ - 1];
    for (std::size_t j = degree_ - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (lead != 0)
      for (unsigned j = 0; j < degree_; ++j) cur[j] -= lead * minpoly_[j];
    power_table_.push_back(cur);
  }
}

const std::vector<Integer>& CyclotomicContext::power_basis_form(unsigned k) const {
  return power_table_.at(k);
}

std::shared_ptr<const CyclotomicContext> CyclotomicContext::get(unsigned conductor) {
  static std::mutex mutex;
  static std::map<unsigned, std::shared_ptr<const CyclotomicContext>> registry;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = registry.find(conductor);
  if (it != registry.end()) return it->second;
  auto ctx = std::shared_ptr<const CyclotomicContext>(new CyclotomicContext(conductor));
  registry.emplace(conductor, ctx);
  return ctx;
}

CyclotomicNumber::CyclotomicNumber()
    : ctx_(CyclotomicContext::get(1)), coeffs_(1, Rational(0)) {}

CyclotomicNumber::CyclotomicNumber(std::shared_ptr<const CyclotomicContext> ctx,
                                   std::vector<Rational> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != ctx_->degree())
    throw std::invalid_argument("cyclotomic: coefficient vector has wrong length");
}

CyclotomicNumber CyclotomicNumber::zero(unsigned conductor) {
  auto ctx = CyclotomicContext::get(conductor);
  std::vector<Rational> c(ctx->degree(), Rational(0));
  return CyclotomicNumber(std::move(ctx), std::move(c));
}

CyclotomicNumber CyclotomicNumber::one(unsigned conductor) {
  return from_rational(Rational(1), conductor);
}

CyclotomicNumber CyclotomicNumber::from_rational(const Rational& value,
                                                 unsigned conductor) {
  auto ctx = CyclotomicContext::get(conductor);
  std::vector<Rational> c(ctx->degree(), Rational(0));
  c[0] = value;
  return CyclotomicNumber(std::move(ctx), std::move(c));
}

bool CyclotomicNumber::is_zero() const {
  for (const Rational& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return false;
  return true;
}

Rational CyclotomicNumber::rational_value() const {
  if (!is_rational())
    throw std::domain_error("cyclotomic: value is not rational");
  return coeffs_[0];
}

namespace {
void require_same_conductor(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.conductor() != b.conductor())
    throw std::invalid_argument(
        "cyclotomic: conductor mismatch (" + std::to_string(a.conductor()) + " vs " +
        std::to_string(b.conductor()) + "); lift_conductor to a common multiple first");
}
}  // namespace

CyclotomicNumber CyclotomicNumber::operator-() const {
  std::vector<Rational> c(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] = -coeffs_[k];
  return CyclotomicNumber(ctx_, std::move(c));
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& rhs) {
  require_same_conductor(*this, rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& rhs) {
  require_same_conductor(*this, rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& rhs) {
  require_same_conductor(*this, rhs);
  const unsigned n = ctx_->degree();
  std::vector<Rational> prod(2 * n - 1, Rational(0));
  for (unsigned i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (unsigned j = 0; j < n; ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  std::vector<Rational> out(n, Rational(0));
  for (unsigned k = 0; k < n; ++k) out[k] = prod[k];
  for (unsigned k = n; k < 2 * n - 1; ++k) {
    if (prod[k] == 0) continue;
    const std::vector<Integer>& rep = ctx_->power_basis_form(k);
    for (unsigned j = 0; j < n; ++j)
      if (rep[j] != 0) out[j] += prod[k] * Rational(rep[j]);
  }
  coeffs_ = std::move(out);
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& scalar) {
  for (Rational& c : coeffs_) c *= scalar;
  return *this;
}

CyclotomicNumber operator+(CyclotomicNumber lhs, const CyclotomicNumber& rhs) {
  lhs += rhs;
  return lhs;
}
CyclotomicNumber operator-(CyclotomicNumber lhs, const CyclotomicNumber& rhs) {
  lhs -= rhs;
  return lhs;
}
CyclotomicNumber operator*(CyclotomicNumber lhs, const CyclotomicNumber& rhs) {
  lhs *= rhs;
  return lhs;
}
CyclotomicNumber operator*(CyclotomicNumber lhs, const Rational& scalar) {
  lhs *= scalar;
  return lhs;
}
CyclotomicNumber operator*(const Rational& scalar, CyclotomicNumber rhs) {
  rhs *= scalar;
  return rhs;
}
CyclotomicNumber operator+(CyclotomicNumber lhs, const Rational& scalar) {
  lhs += CyclotomicNumber::from_rational(scalar, lhs.conductor());
  return lhs;
}
CyclotomicNumber operator-(CyclotomicNumber lhs, const Rational& scalar) {
  lhs -= CyclotomicNumber::from_rational(scalar, lhs.conductor());
  return lhs;
}

bool operator==(const CyclotomicNumber& lhs, const CyclotomicNumber& rhs) {
  require_same_conductor(lhs, rhs);
  return lhs.coefficients() == rhs.coefficients();
}

bool operator!=(const CyclotomicNumber& lhs, const CyclotomicNumber& rhs) {
  return !(lhs == rhs);
}

CyclotomicNumber root_of_unity(unsigned conductor, long exponent) {
  auto ctx = CyclotomicContext::get(conductor);
  long m = static_cast<long>(conductor);
  long k = ((exponent % m) + m) % m;
  const std::vector<Integer>& rep = ctx->power_basis_form(static_cast<unsigned>(k));
  std::vector<Rational> c(ctx->degree());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = Rational(rep[j]);
  return CyclotomicNumber(std::move(ctx), std::move(c));
}

CyclotomicNumber conjugate(const CyclotomicNumber& z) {
  const auto& ctx = z.context();
  const unsigned n = ctx->degree();
  const unsigned m = ctx->conductor();
  std::vector<Rational> out(n, Rational(0));
  out[0] = z.coefficients()[0];
  for (unsigned k = 1; k < n; ++k) {
    const Rational& c = z.coefficients()[k];
    if (c == 0) continue;
    const std::vector<Integer>& rep = ctx->power_basis_form(m - k);
    for (unsigned j = 0; j < n; ++j)
      if (rep[j] != 0) out[j] += c * Rational(rep[j]);
  }
  return CyclotomicNumber(ctx, std::move(out));
}

CyclotomicNumber pow(const CyclotomicNumber& base, unsigned long exponent) {
  CyclotomicNumber result = CyclotomicNumber::one(base.conductor());
  CyclotomicNumber sq = base;
  unsigned long e = exponent;
  while (e > 0) {
    if (e & 1) result *= sq;
    e >>= 1;
    if (e > 0) sq *= sq;
  }
  return result;
}

CyclotomicNumber lift_conductor(const CyclotomicNumber& z, unsigned target) {
  const unsigned m = z.conductor();
  if (target % m != 0)
    throw std::invalid_argument("cyclotomic: conductor " + std::to_string(m) +
                                " does not divide lift target " + std::to_string(target));
  if (target == m) return z;
  auto ctx2 = CyclotomicContext::get(target);
  const unsigned scale = target / m;
  const unsigned n2 = ctx2->degree();
  std::vector<Rational> out(n2, Rational(0));
  for (std::size_t k = 0; k < z.coefficients().size(); ++k) {
    const Rational& c = z.coefficients()[k];
    if (c == 0) continue;
    const std::vector<Integer>& rep = ctx2->power_basis_form(static_cast<unsigned>(k) * scale);
    for (unsigned j = 0; j < n2; ++j)
      if (rep[j] != 0) out[j] += c * Rational(rep[j]);
  }
  return CyclotomicNumber(std::move(ctx2), std::move(out));
}

std::optional<long> horizontal_integer_gap(const CyclotomicNumber& z,
                                           const CyclotomicNumber& w) {
  CyclotomicNumber d = z - w;
  CyclotomicNumber dbar = conjugate(d);
  if (!(d == dbar)) return std::nullopt;  // nonzero imaginary part
  CyclotomicNumber twice_re = d + dbar;
  if (!twice_re.is_rational()) return std::nullopt;
  Rational m = twice_re.rational_value() / 2;
  if (m == 0 || !is_integer(m)) return std::nullopt;
  if (!m.get_num().fits_slong_p())
    throw std::overflow_error("cyclotomic: integer gap does not fit in long");
  return m.get_num().get_si();
}

std::complex<double> embed_to_float(const CyclotomicNumber& z) {
  const unsigned m = z.conductor();
  std::complex<double> acc(0.0, 0.0);
  for (std::size_t k = 0; k < z.coefficients().size(); ++k) {
    const Rational& c = z.coefficients()[k];
    if (c == 0) continue;
    double cd = c.get_d();
    if (!std::isfinite(cd))
      throw std::domain_error("cyclotomic: coefficient overflows double");
    double ang = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(m);
    acc += cd * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  if (!std::isfinite(acc.real()) || !std::isfinite(acc.imag()))
    throw std::domain_error("cyclotomic: embedding is not finite");
  return acc;
}

std::string to_string(const CyclotomicNumber& z) {
  if (z.is_rational()) return to_string(z.coefficients()[0]);
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < z.coefficients().size(); ++k) {
    const Rational& c = z.coefficients()[k];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    Rational a = (!first && c < 0) ? Rational(-c) : c;
    if (first && c < 0) os << "-", a = -c;
    if (k == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "z" << z.conductor();
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& z) {
  return os << to_string(z);
}

}  // namespace lacuna
