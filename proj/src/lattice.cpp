#include "lacuna/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace lacuna {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

SignVector cyclic_shift(const SignVector& s) {
  SignVector out;
  out.bits.reserve(s.bits.size());
  out.bits.push_back(-s.bits.back());
  for (std::size_t i = 0; i + 1 < s.bits.size(); ++i) out.bits.push_back(s.bits[i]);
  return out;
}

CyclotomicNumber omega_dot(const SignVector& s, unsigned conductor) {
  const unsigned N = static_cast<unsigned>(s.bits.size());
  if (conductor % (2 * N) != 0)
    throw std::invalid_argument("omega_dot: conductor must be a multiple of 2N");
  const long step = static_cast<long>(conductor / (2 * N));
  CyclotomicNumber acc = CyclotomicNumber::zero(conductor);
  for (unsigned i = 0; i < N; ++i) {
    CyclotomicNumber w = root_of_unity(conductor, step * i);
    acc += s.bits[i] > 0 ? w : -w;
  }
  return acc;
}

std::vector<SignVector> enumerate_sign_vectors(unsigned N) {
  if (N == 0 || N > 22)
    throw std::invalid_argument("enumerate_sign_vectors: N must be in [1,22]");
  std::vector<SignVector> out;
  out.reserve(std::size_t(1) << N);
  for (std::size_t mask = 0; mask < (std::size_t(1) << N); ++mask) {
    SignVector s;
    s.bits.reserve(N);
    for (unsigned i = 0; i < N; ++i)
      s.bits.push_back((mask >> (N - 1 - i)) & 1 ? -1 : 1);
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

std::size_t encode(const SignVector& s) {
  std::size_t mask = 0;
  for (std::size_t i = 0; i < s.bits.size(); ++i)
    if (s.bits[i] < 0) mask |= std::size_t(1) << (s.bits.size() - 1 - i);
  return mask;
}

// arg of the exact point, normalized to [0, 2pi); points on the real axis are
// detected exactly so the minimal-argument selection cannot wobble there.
double point_arg(const CyclotomicNumber& z) {
  if (z.is_zero()) return 0.0;
  if (z == conjugate(z)) return embed_to_float(z).real() > 0 ? 0.0 : M_PI;
  std::complex<double> e = embed_to_float(z);
  double a = std::atan2(e.imag(), e.real());
  if (a < 0) a += 2 * M_PI;
  return a;
}

}  // namespace

std::vector<Orbit> cyclic_orbits(unsigned N) {
  const unsigned conductor = N == 1 ? 4u : 2 * N;
  std::vector<SignVector> all = enumerate_sign_vectors(N);
  std::vector<bool> seen(all.size(), false);
  std::vector<Orbit> orbits;
  for (const SignVector& start : all) {
    if (seen[encode(start)]) continue;
    std::vector<SignVector> elements;
    SignVector cur = start;
    do {
      seen[encode(cur)] = true;
      elements.push_back(cur);
      cur = cyclic_shift(cur);
    } while (!(cur == start));

    // minimal-argument representative; ties broken lexicographically
    std::size_t best = 0;
    double best_arg = 0.0;
    double radius = 0.0;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      CyclotomicNumber z = omega_dot(elements[i], conductor);
      double a = point_arg(z);
      double r = std::abs(embed_to_float(z));
      if (i == 0) {
        best_arg = a;
        radius = r;
        continue;
      }
      constexpr double kTie = 1e-12;
      if (a < best_arg - kTie ||
          (std::abs(a - best_arg) <= kTie && encode(elements[i]) < encode(elements[best]))) {
        best = i;
        best_arg = a;
      }
    }
    Orbit orbit;
    orbit.representative = elements[best];
    orbit.representative_arg = best_arg;
    orbit.radius = radius;
    // rotate so the orbit is listed in cyclic order from its representative
    std::rotate(elements.begin(), elements.begin() + static_cast<long>(best), elements.end());
    orbit.elements = std::move(elements);
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

std::vector<OrbitRow> orbit_representatives_min_arg(unsigned p) {
  if (!is_prime(p) || p < 3)
    throw std::invalid_argument("orbit_representatives_min_arg: p must be a prime >= 3");
  std::vector<OrbitRow> rows;
  for (const Orbit& orbit : cyclic_orbits(p)) {
    if (orbit.elements.size() != 2 * p) continue;
    rows.push_back({orbit.representative, orbit.representative.signature(),
                    orbit.representative_arg, orbit.radius});
  }
  std::sort(rows.begin(), rows.end(), [](const OrbitRow& a, const OrbitRow& b) {
    if (a.radius != b.radius) return a.radius < b.radius;
    return a.arg < b.arg;
  });
  return rows;
}

std::vector<LabeledPoint> two_interval_lattice() {
  // z/w^{j+1/2} for z = sqrt(2), w = i: the points +-1 +- i.
  std::vector<LabeledPoint> pts;
  CyclotomicNumber sqrt2 =
      lift_conductor(root_of_unity(8, 1) + root_of_unity(8, 7), 8);
  for (unsigned j = 0; j < 4; ++j) {
    CyclotomicNumber rot = root_of_unity(8, -(2 * static_cast<long>(j) + 1));
    LabeledPoint p;
    p.label = "P" + std::to_string(j);
    p.position = sqrt2 * rot;
    p.sign = j % 2 == 0 ? 1 : -1;
    pts.push_back(std::move(p));
  }
  // the points are Gaussian integers; store them at conductor 4
  for (LabeledPoint& p : pts) {
    std::vector<Rational> c(2, Rational(0));
    CyclotomicNumber z8 = p.position;
    // coefficients of 1 and zeta_8^2 = i carry the value; others must vanish
    const auto& coeffs = z8.coefficients();
    c[0] = coeffs[0];
    c[1] = coeffs[2];
    if (coeffs[1] != 0 || coeffs[3] != 0)
      throw std::logic_error("two_interval_lattice: point not Gaussian");
    p.position = CyclotomicNumber(CyclotomicContext::get(4), std::move(c));
  }
  return pts;
}

std::vector<LabeledPoint> four_interval_lattice() {
  // z/w^{j+1/2} for w = zeta_8 and the two radii sqrt(1 +- 1/sqrt(2)),
  // j = 0..7; conductor 16.
  const unsigned M = 16;
  CyclotomicNumber cos8 = root_of_unity(M, 1) + root_of_unity(M, 15);   // 2cos(pi/8)
  CyclotomicNumber sin8 = root_of_unity(M, 3) + root_of_unity(M, 13);   // 2sin(pi/8)
  CyclotomicNumber inv_sqrt2 =
      (root_of_unity(M, 2) + root_of_unity(M, 14)) * Rational(1, 2);    // cos(pi/4)
  CyclotomicNumber outer = cos8 * inv_sqrt2;  // sqrt(1 + 1/sqrt 2)
  CyclotomicNumber inner = sin8 * inv_sqrt2;  // sqrt(1 - 1/sqrt 2)
  std::vector<LabeledPoint> pts;
  for (unsigned j = 0; j < 8; ++j) {
    CyclotomicNumber rot = root_of_unity(M, -(2 * static_cast<long>(j) + 1));
    int sign = j % 2 == 0 ? 1 : -1;
    pts.push_back({"A" + std::to_string(j), outer * rot, sign});
  }
  for (unsigned j = 0; j < 8; ++j) {
    CyclotomicNumber rot = root_of_unity(M, -(2 * static_cast<long>(j) + 1));
    int sign = j % 2 == 0 ? 1 : -1;
    pts.push_back({"B" + std::to_string(j), inner * rot, sign});
  }
  return pts;
}

std::vector<LabeledPoint> six_interval_lattice() {
  // w = zeta_12 represented inside conductor 24 as zeta_24^2.
  const unsigned M = 24;
  auto w_power = [&](long e) { return root_of_unity(M, 2 * e); };
  std::vector<LabeledPoint> pts;
  for (unsigned j = 0; j < 12; ++j) {
    long b = 11 * static_cast<long>(j);
    int sign = j % 2 == 0 ? 1 : -1;
    pts.push_back({"A" + std::to_string(j), w_power(b) + w_power(b + 11), sign});
  }
  for (unsigned j = 0; j < 12; ++j) {
    long b = 11 * static_cast<long>(j);
    int sign = j % 2 == 0 ? 1 : -1;
    pts.push_back({"B" + std::to_string(j), w_power(b + 1) + w_power(b + 10), sign});
  }
  for (unsigned j = 0; j < 12; ++j) {
    long b = 11 * static_cast<long>(j);
    int sign = j % 2 == 0 ? 1 : -1;
    pts.push_back({"C" + std::to_string(j), w_power(b + 2) + w_power(b + 9), sign});
  }
  return pts;
}

PairingReport find_integral_pairs(const std::vector<LabeledPoint>& points) {
  const std::size_t n = points.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (horizontal_integer_gap(points[i].position, points[j].position))
        parent[find(i)] = find(j);

  std::vector<std::vector<std::size_t>> components(n);
  for (std::size_t i = 0; i < n; ++i) components[find(i)].push_back(i);

  PairingReport report;
  for (std::vector<std::size_t>& comp : components) {
    if (comp.empty()) continue;
    std::sort(comp.begin(), comp.end(), [&](std::size_t a, std::size_t b) {
      double ra = embed_to_float(points[a].position).real();
      double rb = embed_to_float(points[b].position).real();
      if (ra != rb) return ra < rb;
      return a < b;
    });
    std::size_t i = 0;
    while (i + 1 < comp.size()) {
      auto gap = horizontal_integer_gap(points[comp[i + 1]].position,
                                        points[comp[i]].position);
      if (gap) {
        report.pairs.push_back({comp[i + 1], comp[i], *gap});
        i += 2;
      } else {
        report.unpaired.push_back(comp[i]);
        i += 1;
      }
    }
    if (i < comp.size()) report.unpaired.push_back(comp[i]);
  }
  std::sort(report.unpaired.begin(), report.unpaired.end());
  return report;
}

namespace {

nlohmann::json point_record(const std::string& label, const CyclotomicNumber& z,
                            int sign, const nlohmann::json& orbit) {
  std::complex<double> e = embed_to_float(z);
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Rational& c : z.coefficients()) coeffs.push_back(to_string(c));
  return {{"label", label}, {"re", e.real()},      {"im", e.imag()},
          {"coeffs", coeffs}, {"sign", sign}, {"orbit", orbit}};
}

nlohmann::json labeled_figure(const std::vector<LabeledPoint>& pts, unsigned N) {
  nlohmann::json j;
  j["points"] = nlohmann::json::array();
  for (const LabeledPoint& p : pts)
    j["points"].push_back(point_record(p.label, p.position, p.sign, nullptr));
  PairingReport report = find_integral_pairs(pts);
  j["edges"] = nlohmann::json::array();
  for (const IntegralPair& pair : report.pairs)
    j["edges"].push_back({{"a", pts[pair.left].label},
                          {"b", pts[pair.right].label},
                          {"gap", pair.gap}});
  j["meta"] = {{"N", N}, {"conductor", pts.empty() ? 1 : pts.front().position.conductor()}};
  return j;
}

nlohmann::json sign_lattice_figure(unsigned N) {
  const unsigned conductor = N == 1 ? 4u : 2 * N;
  nlohmann::json j;
  j["points"] = nlohmann::json::array();
  std::vector<Orbit> orbits = cyclic_orbits(N);
  for (std::size_t oid = 0; oid < orbits.size(); ++oid) {
    for (const SignVector& s : orbits[oid].elements) {
      std::ostringstream label;
      for (int b : s.bits) label << (b > 0 ? '+' : '-');
      j["points"].push_back(point_record(label.str(), omega_dot(s, conductor),
                                         s.signature(), oid));
    }
  }
  j["edges"] = nlohmann::json::array();
  j["meta"] = {{"N", N}, {"conductor", conductor}};
  return j;
}

nlohmann::json figure_data(const std::string& selector, unsigned N) {
  if (selector == "two_interval") return labeled_figure(two_interval_lattice(), 2);
  if (selector == "four_interval") return labeled_figure(four_interval_lattice(), 4);
  if (selector == "six_interval") return labeled_figure(six_interval_lattice(), 6);
  if (selector == "sign_lattice") return sign_lattice_figure(N);
  throw std::invalid_argument("figure data: unknown selector '" + selector + "'");
}

}  // namespace

std::string figure_data_json(const std::string& selector, unsigned N) {
  return figure_data(selector, N).dump(2);
}

std::string figure_data_csv(const std::string& selector, unsigned N) {
  nlohmann::json j = figure_data(selector, N);
  std::ostringstream os;
  os << "label,re,im,sign,orbit\n";
  for (const auto& p : j["points"]) {
    os << p["label"].get<std::string>() << "," << p["re"].get<double>() << ","
       << p["im"].get<double>() << "," << p["sign"].get<int>() << ",";
    if (!p["orbit"].is_null()) os << p["orbit"].get<std::size_t>();
    os << "\n";
  }
  return os.str();
}

void export_figure_data(const std::string& selector, unsigned N,
                        const std::string& json_path, const std::string& csv_path) {
  {
    std::ofstream out(json_path);
    if (!out) throw std::runtime_error("export: cannot write '" + json_path + "'");
    out << figure_data_json(selector, N) << "\n";
  }
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) throw std::runtime_error("export: cannot write '" + csv_path + "'");
    out << figure_data_csv(selector, N);
  }
}

}  // namespace lacuna
