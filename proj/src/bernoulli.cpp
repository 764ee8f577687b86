#include "lacuna/bernoulli.hpp"

#include "lacuna/alpha.hpp"

namespace lacuna {

BernoulliTable::BernoulliTable(std::size_t max_index) {
  values_.reserve(max_index + 1);
  values_.push_back(Rational(1));
  for (std::size_t n = 1; n <= max_index; ++n) {
    Rational acc(0);
    for (std::size_t k = 0; k < n; ++k)
      acc += binomial(n + 1, k) * values_[k];
    values_.push_back(-acc / Rational(static_cast<long>(n) + 1));
  }
}

BernoulliTable bernoulli_numbers(std::size_t nmax) { return BernoulliTable(nmax); }

std::vector<Rational> lacunary_bernoulli12(std::size_t nmax) {
  // 6 sum_{k=0}^{n} (-1)^k a_{6k+3} / (12k+6)! * B_{12n-12k} / (12n-12k)!
  //   = (-1)^n a_{6n+3} / (12n+5)!
  // solved for the k = 0 term, whose weight 6 a_3 / 6! is 1/2.
  std::vector<Rational> out;
  out.reserve(nmax + 1);
  const Rational head_weight = Rational(6) * a_sequence(6, 3) / factorial(6);
  for (std::size_t n = 0; n <= nmax; ++n) {
    Rational rhs = a_sequence(6, 6 * n + 3) / factorial(12 * n + 5);
    if (n % 2 == 1) rhs = -rhs;
    Rational tail(0);
    for (std::size_t k = 1; k <= n; ++k) {
      Rational term = a_sequence(6, 6 * k + 3) / factorial(12 * k + 6) * out[n - k] /
                      factorial(12 * (n - k));
      if (k % 2 == 1) term = -term;
      tail += term;
    }
    out.push_back((rhs - Rational(6) * tail) / head_weight * factorial(12 * n));
  }
  return out;
}

Rational lehmer_sum(std::size_t n) {
  BernoulliTable table(6 * n);
  Rational acc(0);
  for (std::size_t k = 0; k <= n; ++k)
    acc += binomial(6 * n + 3, 6 * k) * table.value(6 * k);
  return acc;
}

}  // namespace lacuna
