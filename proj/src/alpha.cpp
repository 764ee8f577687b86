#include "lacuna/alpha.hpp"

#include <numeric>

#include "lacuna/bernoulli.hpp"
#include "lacuna/lattice.hpp"
#include "lacuna/series.hpp"

namespace lacuna {
namespace {

// i^e inside Q(zeta_conductor); needs 4 | conductor unless e is even.
CyclotomicNumber imaginary_power(long e, unsigned conductor) {
  long r = ((e % 4) + 4) % 4;
  if (r == 0) return CyclotomicNumber::one(conductor);
  if (r == 2) return CyclotomicNumber::from_rational(Rational(-1), conductor);
  if (conductor % 4 != 0)
    throw std::invalid_argument("imaginary unit not available in Q(zeta_" +
                                std::to_string(conductor) + ")");
  return root_of_unity(conductor, static_cast<long>(conductor / 4) * r);
}

// sinh(c z) truncated at `order`: c^{2m+1} / (2m+1)! at the odd indices.
TruncSeries<CyclotomicNumber> sinh_series(const CyclotomicNumber& c, std::size_t order) {
  TruncSeries<CyclotomicNumber> s(order, CyclotomicNumber::zero(c.conductor()));
  CyclotomicNumber cpow = c;
  for (std::size_t m = 0; 2 * m + 1 <= order; ++m) {
    s.set(2 * m + 1, cpow * (Rational(1) / factorial(2 * m + 1)));
    if (2 * m + 3 <= order) cpow = cpow * c * c;
  }
  return s;
}

}  // namespace

std::string to_string(AlphaMethod m) {
  switch (m) {
    case AlphaMethod::series: return "series";
    case AlphaMethod::signsum: return "signsum";
    case AlphaMethod::doubling: return "doubling";
    case AlphaMethod::orbit: return "orbit";
    case AlphaMethod::closed: return "closed";
    case AlphaMethod::integral: return "integral";
    case AlphaMethod::barnes: return "barnes";
  }
  return "?";
}

unsigned alpha_conductor(unsigned N) { return N == 1 ? 4u : 2 * N; }

AlphaTable alpha_series(unsigned N, std::size_t kmax) {
  const unsigned conductor = alpha_conductor(N);
  const long step = static_cast<long>(conductor / (2 * N));
  const std::size_t order = 2 * N * kmax + N;
  TruncSeries<CyclotomicNumber> prod =
      sinh_series(root_of_unity(conductor, 0), order);
  for (unsigned j = 1; j < N; ++j)
    prod = prod * sinh_series(root_of_unity(conductor, step * j), order);

  AlphaTable table;
  table.N = N;
  table.conductor = conductor;
  table.method = AlphaMethod::series;
  for (std::size_t k = 0; k <= kmax; ++k)
    table.values.push_back(egf_coefficient(prod, 2 * N * k + N));
  return table;
}

CyclotomicNumber alpha_signsum(unsigned N, std::size_t k) {
  const unsigned conductor = alpha_conductor(N);
  CyclotomicNumber acc = CyclotomicNumber::zero(conductor);
  for (const SignVector& s : enumerate_sign_vectors(N)) {
    CyclotomicNumber value = pow(omega_dot(s, conductor), 2 * N * k + N);
    acc += s.signature() > 0 ? value : -value;
  }
  return acc * Rational(Integer(1), int_pow(Integer(2), N));
}

AlphaTable alpha_doubling(const AlphaTable& source, std::size_t kmax, bool original_form) {
  const unsigned N = source.N;
  const unsigned target_conductor = alpha_conductor(2 * N);
  if (source.values.size() < 2 * kmax + 1)
    throw std::invalid_argument("alpha_doubling: source table needs indices up to 2*kmax");

  std::vector<CyclotomicNumber> lifted;
  lifted.reserve(source.values.size());
  for (const CyclotomicNumber& v : source.values)
    lifted.push_back(lift_conductor(v, target_conductor));
  const CyclotomicNumber i_unit = imaginary_power(1, target_conductor);

  AlphaTable table;
  table.N = 2 * N;
  table.conductor = target_conductor;
  table.method = AlphaMethod::doubling;
  for (std::size_t n = 0; n <= kmax; ++n) {
    CyclotomicNumber acc = CyclotomicNumber::zero(target_conductor);
    for (std::size_t l = 0; l <= 2 * n; ++l) {
      Rational weight = Rational(1) / (factorial(2 * N * (2 * n - l) + N) *
                                       factorial(2 * N * l + N));
      if (l % 2 == 1) weight = -weight;
      acc += lifted[2 * n - l] * lifted[l] * weight;
    }
    if (!original_form) acc *= factorial(4 * N * n + 2 * N);
    table.values.push_back(i_unit * acc);
  }
  return table;
}

AlphaTable alpha_doubling(unsigned N, std::size_t kmax, bool original_form) {
  return alpha_doubling(alpha_series(N, 2 * kmax), kmax, original_form);
}

CyclotomicNumber alpha_orbit_prime(unsigned p, std::size_t k) {
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument("alpha_orbit_prime: p must be a prime >= 3");
  const unsigned conductor = alpha_conductor(p);
  CyclotomicNumber acc = CyclotomicNumber::zero(conductor);
  std::size_t long_orbits = 0;
  for (const Orbit& orbit : cyclic_orbits(p)) {
    if (orbit.elements.size() != 2 * p) continue;  // the alternating pair maps to 0
    ++long_orbits;
    CyclotomicNumber value =
        pow(omega_dot(orbit.representative, conductor), 2 * p * k + p);
    acc += orbit.representative.signature() > 0 ? value : -value;
  }
  const std::size_t expected = (std::size_t(1) << (p - 1)) / p;  // (2^{p-1}-1)/p
  if (long_orbits != expected)
    throw std::logic_error("alpha_orbit_prime: unexpected orbit count");
  return acc * make_rational(Integer(p), int_pow(Integer(2), p - 1));
}

Rational mzv_closed(unsigned N, std::size_t k) {
  switch (N) {
    case 1:  // 2 (2pi)^{2k} (1/2)^{2k+1} / (2k+1)!
      return Rational(2) * rat_pow(Rational(1, 2), 2 * k + 1) / factorial(2 * k + 1);
    case 2:
      return Rational(4) * rat_pow(Rational(1, 2), 2 * k + 1) / factorial(4 * k + 2);
    case 3:
      return Rational(6) / factorial(6 * k + 3);
    case 4:
      return Rational(8) * a_sequence(4, 4 * k + 2) / factorial(8 * k + 4);
    case 5:
      return Rational(10) * a_sequence(5, 10 * k + 5) / factorial(10 * k + 5);
    case 6:
      return Rational(12) * a_sequence(6, 6 * k + 3) / factorial(12 * k + 6);
    default:
      throw std::invalid_argument("mzv_closed: closed forms tabulated for N in [1,6]");
  }
}

CyclotomicNumber alpha_closed(unsigned N, std::size_t k, bool original_form) {
  if (N < 1 || N > 6)
    throw std::invalid_argument("alpha_closed: N must be in [1,6]");
  // zeta({2N}_k)/pi^{2kN} = mzv_closed * 2^{2kN}
  Rational magnitude = factorial(2 * N * k + N) * mzv_closed(N, k) *
                       Rational(int_pow(Integer(2), 2 * N * k));
  unsigned conductor = alpha_conductor(N);
  long phase_exponent;
  bool negate;
  if (!original_form) {
    phase_exponent = static_cast<long>(N) - 1;
    negate = ((N + 1) * k) % 2 == 1;
  } else {
    conductor = std::lcm(conductor, 4u);
    phase_exponent = 1;
    negate = ((N + 1) * (k + 1)) % 2 == 1;
  }
  if (negate) magnitude = -magnitude;
  return imaginary_power(phase_exponent, conductor) * magnitude;
}

Rational a_sequence(unsigned N, std::size_t n) {
  switch (N) {
    case 6: {
      Rational s_prev(2), s_cur(4);  // s_0, s_1
      if (n == 0) s_cur = s_prev;
      for (std::size_t i = 2; i <= n; ++i) {
        Rational next = Rational(4) * s_cur - s_prev;
        s_prev = s_cur;
        s_cur = next;
      }
      return s_cur + Rational(int_pow(Integer(2), n));
    }
    case 4: {
      Rational a_prev(2), a_cur(2);  // a_0, a_1
      if (n == 0) return a_prev;
      for (std::size_t i = 2; i <= n; ++i) {
        Rational next = Rational(2) * a_cur - a_prev / 2;
        a_prev = a_cur;
        a_cur = next;
      }
      return a_cur;
    }
    case 5: {
      Rational l_prev(2), l_cur(1);  // L_0, L_1
      if (n == 0) return l_prev + 1;
      for (std::size_t i = 2; i <= n; ++i) {
        Rational next = l_cur + l_prev;
        l_prev = l_cur;
        l_cur = next;
      }
      return l_cur + 1;
    }
    default:
      throw std::invalid_argument("a_sequence: defined for N in {4,5,6}");
  }
}

namespace {

// sum over even compositions (e_0,...,e_{N-1}) of 2nN of
// multinomial(2nN; e) * w^{sum j e_j} * prod_j 2/(e_j+1)
void integral_enumerate(unsigned N, unsigned j, std::size_t remaining,
                        std::size_t exponent_acc, const Rational& weight_acc,
                        std::vector<Rational>& by_exponent) {
  if (j + 1 == N) {
    if (remaining % 2 != 0) return;
    Rational w = weight_acc / factorial(remaining) *
                 make_rational(2L, static_cast<long>(remaining) + 1);
    by_exponent[(exponent_acc + j * remaining) % by_exponent.size()] += w;
    return;
  }
  for (std::size_t e = 0; e <= remaining; e += 2) {
    Rational w = weight_acc / factorial(e) * make_rational(2L, static_cast<long>(e) + 1);
    integral_enumerate(N, j + 1, remaining - e, exponent_acc + j * e, w, by_exponent);
  }
}

}  // namespace

CyclotomicNumber alpha_integral(unsigned N, std::size_t n) {
  if (N * (2 * n + 1) > 40)
    throw std::invalid_argument("alpha_integral: enumeration budget exceeded (N(2n+1) <= 40)");
  const unsigned conductor = alpha_conductor(N);
  const long step = static_cast<long>(conductor / (2 * N));
  // collect multinomial weights by w-exponent mod 2N, then assemble exactly
  std::vector<Rational> by_exponent(2 * N, Rational(0));
  integral_enumerate(N, 0, 2 * n * N, 0, factorial(2 * n * N), by_exponent);
  CyclotomicNumber box = CyclotomicNumber::zero(conductor);
  for (std::size_t e = 0; e < by_exponent.size(); ++e)
    if (by_exponent[e] != 0)
      box += root_of_unity(conductor, step * static_cast<long>(e)) * by_exponent[e];
  Rational scale = factorial(2 * n * N + N) / factorial(2 * n * N) /
                   Rational(int_pow(Integer(2), N));
  return imaginary_power(static_cast<long>(N) - 1, conductor) * box * scale;
}

CyclotomicNumber alpha_via_barnes(unsigned N, std::size_t n) {
  const unsigned conductor = alpha_conductor(N);
  const long step = static_cast<long>(conductor / (2 * N));
  // prod_j sinh(w^j z) = i^{N-1} z^N sum_m B_m^{(-N)}(x; 2, 2w, ..., 2w^{N-1}) z^m/m!
  // with x = 2/(w-1) = -(1 + w + ... + w^{N-1}); no field inversion needed.
  CyclotomicNumber x = CyclotomicNumber::zero(conductor);
  std::vector<CyclotomicNumber> alphas;
  for (unsigned j = 0; j < N; ++j) {
    CyclotomicNumber wj = root_of_unity(conductor, step * j);
    x -= wj;
    alphas.push_back(wj * Rational(2));
  }
  CyclotomicNumber core = barnes_poly(2 * n * N, N, x, alphas);
  Rational scale = factorial(2 * n * N + N) / factorial(2 * n * N);
  // pin the overall scalar once against the series oracle at n = 0
  CyclotomicNumber alpha0 = alpha_series(N, 0).values.at(0);
  CyclotomicNumber c_N = alpha0 * (Rational(1) / factorial(N));
  return c_N * core * scale;
}

}  // namespace lacuna
