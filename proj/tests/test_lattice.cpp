#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>

#include <json.hpp>

#include "lacuna/alpha.hpp"
#include "lacuna/bernoulli.hpp"
#include "lacuna/lattice.hpp"

using namespace lacuna;

TEST_CASE("sign vector enumeration") {
  CHECK(enumerate_sign_vectors(1).size() == 2);
  CHECK(enumerate_sign_vectors(3).size() == 8);
  CHECK(enumerate_sign_vectors(7).size() == 128);
  CHECK_THROWS_AS(enumerate_sign_vectors(23), std::invalid_argument);
}

TEST_CASE("orbit decomposition") {
  auto orbits3 = cyclic_orbits(3);
  std::multiset<std::size_t> sizes3;
  for (const Orbit& o : orbits3) sizes3.insert(o.elements.size());
  CHECK(sizes3 == std::multiset<std::size_t>{2, 6});

  // the size-2 orbit is the alternating pair
  for (const Orbit& o : orbits3) {
    if (o.elements.size() != 2) continue;
    for (const SignVector& s : o.elements) {
      CHECK(omega_dot(s, 6).is_zero());
      for (std::size_t i = 0; i + 1 < s.bits.size(); ++i)
        CHECK(s.bits[i] == -s.bits[i + 1]);
    }
  }

  auto orbits7 = cyclic_orbits(7);
  std::size_t small = 0, large = 0, covered = 0;
  for (const Orbit& o : orbits7) {
    covered += o.elements.size();
    if (o.elements.size() == 2) ++small;
    if (o.elements.size() == 14) ++large;
  }
  CHECK(covered == 128);
  CHECK(small == 1);
  CHECK(large == 9);

  for (const Orbit& o : cyclic_orbits(4))
    CHECK(8 % o.elements.size() == 0);
}

TEST_CASE("orbit action matches multiplication by the rotation") {
  const unsigned conductor = 10;
  CyclotomicNumber w = root_of_unity(conductor, 1);
  for (const SignVector& s : enumerate_sign_vectors(5)) {
    CHECK(omega_dot(cyclic_shift(s), conductor) == w * omega_dot(s, conductor));
  }
}

TEST_CASE("distinct sign vectors give distinct points except the alternating pair") {
  for (unsigned p : {3u, 5u, 7u}) {
    const unsigned conductor = 2 * p;
    auto all = enumerate_sign_vectors(p);
    std::size_t zero_count = 0;
    std::map<std::vector<std::string>, std::size_t> seen;
    for (const SignVector& s : all) {
      CyclotomicNumber z = omega_dot(s, conductor);
      if (z.is_zero()) {
        ++zero_count;
        continue;
      }
      std::vector<std::string> key;
      for (const Rational& c : z.coefficients()) key.push_back(to_string(c));
      ++seen[key];
    }
    CHECK(zero_count == 2);
    for (const auto& [key, count] : seen) CHECK(count == 1);
  }
}

TEST_CASE("orbit radii are constant across each orbit") {
  for (const Orbit& o : cyclic_orbits(5)) {
    CyclotomicNumber rep = omega_dot(o.representative, 10);
    CyclotomicNumber rep_sq = rep * conjugate(rep);
    for (const SignVector& s : o.elements) {
      CyclotomicNumber z = omega_dot(s, 10);
      CHECK(z * conjugate(z) == rep_sq);
    }
  }
}

TEST_CASE("minimal-argument table for p=7") {
  auto rows = orbit_representatives_min_arg(7);
  REQUIRE(rows.size() == 9);
  const double expected_radii[] = {0.890084, 1.109916, 1.603875, 2.000000, 2.493959,
                                   2.828427, 2.828427, 3.603875, 4.493959};
  for (std::size_t i = 0; i < 9; ++i)
    CHECK(std::abs(rows[i].radius - expected_radii[i]) < 1e-5);
  // the two radius-2.828 rows are separated by argument
  CHECK(std::abs(rows[5].arg - 0.136968) < 1e-5);
  CHECK(std::abs(rows[6].arg - 0.311831) < 1e-5);
  // a handful of exact rows
  CHECK(std::abs(rows[3].radius - 2.0) < 1e-12);
  CHECK(rows[3].representative.bits == std::vector<int>{1, 1, -1, 1, -1, 1, -1});
}

TEST_CASE("minimal-argument table for p=3") {
  auto rows = orbit_representatives_min_arg(3);
  REQUIRE(rows.size() == 1);
  CHECK(std::abs(rows[0].radius - 2.0) < 1e-12);
  CHECK(std::abs(rows[0].arg) < 1e-12);
}

TEST_CASE("two-interval lattice") {
  auto pts = two_interval_lattice();
  REQUIRE(pts.size() == 4);
  PairingReport report = find_integral_pairs(pts);
  CHECK(report.unpaired.empty());
  REQUIRE(report.pairs.size() == 2);
  for (const IntegralPair& p : report.pairs) CHECK(p.gap == 2);
}

TEST_CASE("four-interval lattice") {
  auto pts = four_interval_lattice();
  REQUIRE(pts.size() == 16);
  PairingReport report = find_integral_pairs(pts);
  CHECK(report.unpaired.empty());
  REQUIRE(report.pairs.size() == 8);
  for (const IntegralPair& p : report.pairs) CHECK(p.gap == 1);
}

TEST_CASE("six-interval lattice geometry") {
  auto pts = six_interval_lattice();
  REQUIRE(pts.size() == 36);

  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < pts.size(); ++i) index[pts[i].label] = i;

  // outer radius sqrt(2+sqrt 3), middle sqrt 2, inner sqrt(2-sqrt 3)
  CHECK(std::abs(std::abs(embed_to_float(pts[index["A0"]].position)) - 1.93185) < 1e-5);
  CHECK(std::abs(std::abs(embed_to_float(pts[index["B0"]].position)) - std::sqrt(2.0)) < 1e-9);
  CHECK(std::abs(std::abs(embed_to_float(pts[index["C0"]].position)) - 0.51764) < 1e-5);

  // golden pairs
  auto gap_of = [&](const std::string& a, const std::string& b) {
    return horizontal_integer_gap(pts[index.at(a)].position, pts[index.at(b)].position);
  };
  const std::pair<const char*, const char*> unit_pairs[] = {
      {"A1", "B2"}, {"A2", "A3"}, {"B3", "A4"}, {"C4", "B5"},
      {"C7", "B6"}, {"B8", "A7"}, {"A9", "A8"}, {"A10", "B9"},
      {"B11", "C10"}, {"B0", "C1"}, {"C11", "C6"}, {"C0", "C5"}};
  for (const auto& [x, y] : unit_pairs) {
    auto g = gap_of(x, y);
    REQUIRE(g.has_value());
    CHECK(*g == 1);
  }
  const std::pair<const char*, const char*> double_pairs[] = {
      {"A0", "C3"}, {"C2", "A5"}, {"C9", "A6"},
      {"A11", "C8"}, {"B10", "B7"}, {"B1", "B4"}};
  for (const auto& [x, y] : double_pairs) {
    auto g = gap_of(x, y);
    REQUIRE(g.has_value());
    CHECK(*g == 2);
  }
}

TEST_CASE("six-interval pairing statistics") {
  auto pts = six_interval_lattice();
  PairingReport report = find_integral_pairs(pts);
  CHECK(report.unpaired.empty());
  std::multiset<long> gaps;
  for (const IntegralPair& p : report.pairs) gaps.insert(p.gap);
  CHECK(gaps.count(1) == 12);
  CHECK(gaps.count(2) == 6);
  CHECK(report.pairs.size() == 18);
}

TEST_CASE("unpaired points are reported") {
  std::vector<LabeledPoint> pts;
  pts.push_back({"S", lift_conductor(root_of_unity(8, 1) + root_of_unity(8, 7), 8), 1});
  PairingReport report = find_integral_pairs(pts);
  CHECK(report.pairs.empty());
  REQUIRE(report.unpaired.size() == 1);
}

namespace {

// sum over the listed lower points of (-1)^{index-1} f(Z) with
// f(Z) = (12n+6) Z^{12n+5}, evaluated exactly.
CyclotomicNumber signed_power_sum(const std::vector<LabeledPoint>& pts,
                                  const std::vector<std::string>& labels,
                                  std::size_t n, bool shifted) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < pts.size(); ++i) index[pts[i].label] = i;
  CyclotomicNumber acc = CyclotomicNumber::zero(24);
  for (const std::string& label : labels) {
    std::size_t j = std::stoul(label.substr(1));
    const CyclotomicNumber& z = pts[index.at(label)].position;
    CyclotomicNumber term = pow(z, 12 * n + 5);
    if (shifted) term += pow(z + Rational(1), 12 * n + 5);
    term *= Rational(12 * static_cast<long>(n) + 6);
    acc += (j % 2 == 1) ? term : -term;  // (-1)^{j-1}
  }
  return acc;
}

const std::vector<std::string> kUnitLower = {"A3", "A4", "A7", "A8", "B2", "B5",
                                             "B6", "B9", "C1", "C5", "C6", "C10"};
const std::vector<std::string> kDoubleLower = {"A5", "A6", "B4", "B7", "C3", "C8"};

}  // namespace

TEST_CASE("gap-2 contributions reduce to gap-1 form") {
  auto pts = six_interval_lattice();
  for (std::size_t n = 0; n <= 3; ++n) {
    CyclotomicNumber with_shift = signed_power_sum(pts, kDoubleLower, n, true);
    CyclotomicNumber without = signed_power_sum(pts, kDoubleLower, n, false);
    CHECK(with_shift == without);
  }
}

TEST_CASE("geometric evaluation reproduces the 12-gap sum") {
  auto pts = six_interval_lattice();
  std::vector<std::string> all_lower = kUnitLower;
  all_lower.insert(all_lower.end(), kDoubleLower.begin(), kDoubleLower.end());
  BernoulliTable table(36);
  for (std::size_t n = 0; n <= 3; ++n) {
    CyclotomicNumber sum = signed_power_sum(pts, all_lower, n, false);
    CyclotomicNumber s_n = root_of_unity(24, 6) * sum * Rational(1, 12);

    // the binomial-sum route to the same quantity:
    // S_n = sum_k (-1)^k C(12n+6, 12k+6) a_{6k+3} B_{12n-12k}
    Rational series_route(0);
    for (std::size_t k = 0; k <= n; ++k) {
      Rational term = binomial(12 * n + 6, 12 * k + 6) * a_sequence(6, 6 * k + 3) *
                      table.value(12 * n - 12 * k);
      series_route += k % 2 == 0 ? term : -term;
    }
    CHECK(s_n == CyclotomicNumber::from_rational(series_route, 24));

    // and its closed value: S_n = (-1)^n (2n+1) a_{6n+3}
    Rational expect = Rational(2 * static_cast<long>(n) + 1) * a_sequence(6, 6 * n + 3);
    if (n % 2 == 1) expect = -expect;
    CHECK(s_n == CyclotomicNumber::from_rational(expect, 24));
  }
}

TEST_CASE("figure export") {
  std::string six = figure_data_json("six_interval", 6);
  nlohmann::json j = nlohmann::json::parse(six);
  CHECK(j["points"].size() == 36);
  CHECK(j["edges"].size() == 18);
  CHECK(j["meta"]["conductor"] == 24);

  nlohmann::json sign7 = nlohmann::json::parse(figure_data_json("sign_lattice", 7));
  CHECK(sign7["points"].size() == 128);
  std::set<long> orbit_ids;
  std::set<long> radii_bucketed;
  for (const auto& p : sign7["points"]) {
    orbit_ids.insert(p["orbit"].get<long>());
    double r = std::hypot(p["re"].get<double>(), p["im"].get<double>());
    if (r > 1e-9) radii_bucketed.insert(std::lround(r * 1e6));
  }
  CHECK(orbit_ids.size() == 10);  // 9 full orbits + the alternating pair
  // nine full orbits, one shared radius value (2.828427 appears twice)
  CHECK(radii_bucketed.size() == 8);

  nlohmann::json two = nlohmann::json::parse(figure_data_json("two_interval", 2));
  CHECK(two["points"].size() == 4);
  CHECK(two["edges"].size() == 2);

  // write / read back
  std::string path = "lattice_test_figure.json";
  std::string csv = "lattice_test_figure.csv";
  export_figure_data("two_interval", 2, path, csv);
  std::ifstream in(path);
  nlohmann::json round;
  in >> round;
  CHECK(round["points"].size() == 4);
  std::ifstream csvin(csv);
  std::string header;
  std::getline(csvin, header);
  CHECK(header == "label,re,im,sign,orbit");
  std::remove(path.c_str());
  std::remove(csv.c_str());
}
