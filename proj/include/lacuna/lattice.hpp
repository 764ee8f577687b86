#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lacuna/cyclotomic.hpp"

namespace lacuna {

bool is_prime(unsigned n);

// Element of S(N) = {+1,-1}^N with signature pi(s) = prod s_i.
struct SignVector {
  std::vector<int> bits;

  int signature() const {
    int s = 1;
    for (int b : bits) s *= b;
    return s;
  }
  bool operator==(const SignVector& other) const { return bits == other.bits; }
};

// The twisted cyclic shift c.(s_1..s_N) = (-s_N, s_1, ..., s_{N-1}); taking
// the dot product with (1, w, ..., w^{N-1}) it acts as multiplication by
// w = zeta_{2N}.
SignVector cyclic_shift(const SignVector& s);

// sum_i s_i w^{i-1} in Q(zeta_conductor); requires 2N | conductor.
CyclotomicNumber omega_dot(const SignVector& s, unsigned conductor);

// All 2^N sign vectors in lexicographic order (+1 before -1); N <= 22.
std::vector<SignVector> enumerate_sign_vectors(unsigned N);

struct Orbit {
  std::vector<SignVector> elements;  // in cyclic order from the representative
  SignVector representative;         // minimal-argument element
  double representative_arg = 0.0;   // arg of w.rep, normalized to [0, 2pi)
  double radius = 0.0;               // |w.s|, shared across the orbit
};

// Partition of S(N) under the twisted cyclic action, deterministic order.
std::vector<Orbit> cyclic_orbits(unsigned N);

struct OrbitRow {
  SignVector representative;
  int signature;
  double arg;
  double radius;
};

// For prime p: one row per full-length (2p) orbit, sorted by (radius, arg).
// The alternating size-2 orbit maps to the origin and is excluded.
std::vector<OrbitRow> orbit_representatives_min_arg(unsigned p);

struct LabeledPoint {
  std::string label;
  CyclotomicNumber position;
  int sign;  // the (-1)^j weight the point carries in the lattice sum
};

struct IntegralPair {
  std::size_t left;   // index of the point with larger real part
  std::size_t right;  // index of the point `gap` to its left
  long gap;           // positive integer: position(left) = position(right) + gap
};

struct PairingReport {
  std::vector<IntegralPair> pairs;
  std::vector<std::size_t> unpaired;
};

// The four points +-1 +- i (conductor 4), alternating signs.
std::vector<LabeledPoint> two_interval_lattice();

// Sixteen points on two circles, conductor 16.
std::vector<LabeledPoint> four_interval_lattice();

// The 36 points A_j, B_j, C_j (outer, middle, inner circle), conductor 24,
// A_j = w^{11j} + w^{11j+11} etc. with w = zeta_12, signs (-1)^j.
std::vector<LabeledPoint> six_interval_lattice();

// Exact maximum matching of the integer-horizontal-gap graph: components are
// found with pairwise exact gap tests; inside a component every pair of
// distinct points is joined, so sorting by real part and pairing neighbours
// is maximal.
PairingReport find_integral_pairs(const std::vector<LabeledPoint>& points);

// Figure data as JSON text. Selectors: two_interval, four_interval,
// six_interval, sign_lattice (sign_lattice uses N; the others ignore it).
std::string figure_data_json(const std::string& selector, unsigned N);
std::string figure_data_csv(const std::string& selector, unsigned N);
void export_figure_data(const std::string& selector, unsigned N,
                        const std::string& json_path, const std::string& csv_path = "");

}  // namespace lacuna
