#include "lorenz/invariants.hpp"

#include <stdexcept>

namespace lorenz {

Mat2 Mat2::identity() {
  Mat2 m;
  m.a[0] = m.a[3] = 1;
  return m;
}

Mat2 Mat2::operator*(const Mat2& o) const {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.a[i * 2 + j] = a[i * 2] * o.a[j] + a[i * 2 + 1] * o.a[2 + j];
  return r;
}

Mat2 Mat2::pow(unsigned n) const {
  Mat2 result = identity(), base = *this;
  for (; n > 0; n >>= 1) {
    if (n & 1) result = result * base;
    base = base * base;
  }
  return result;
}

Mat3 Mat3::identity() {
  Mat3 m;
  m.a[0] = m.a[4] = m.a[8] = 1;
  return m;
}

Mat3 Mat3::operator*(const Mat3& o) const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      BigInt s = 0;
      for (int k = 0; k < 3; ++k) s += a[i * 3 + k] * o.a[k * 3 + j];
      r.a[i * 3 + j] = s;
    }
  return r;
}

Mat3 Mat3::pow(unsigned n) const {
  Mat3 result = identity(), base = *this;
  for (; n > 0; n >>= 1) {
    if (n & 1) result = result * base;
    base = base * base;
  }
  return result;
}

Vec3 row_times(const Vec3& row, const Mat3& m) {
  Vec3 r;
  for (int j = 0; j < 3; ++j)
    r[j] = row[0] * m.a[j] + row[1] * m.a[3 + j] + row[2] * m.a[6 + j];
  return r;
}

BigInt dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

PairInvariants pair_invariants(const KneadingPair& pair) {
  if (pair.degenerate)
    throw DegeneratePairError("pair invariants need two distinct orbits (degenerate pair)");
  const auto counts = count_crossings(lorenz_braid(OrbitSet::make({pair.x, pair.y})));
  return {counts.within[0], counts.within[1], counts.between[0][1]};
}

CountMatrices count_matrices(const KneadingPair& inner) {
  const auto cs = counts(inner.x);
  const auto cw = counts(inner.y);
  const BigInt ls = cs.n_l, rs = cs.n_r, lw = cw.n_l, rw = cw.n_r;
  CountMatrices m;
  m.m2.a = {ls, lw, rs, rw};
  m.a33.a = {ls * ls, lw * lw, 2 * ls * lw,
             rs * rs, rw * rw, 2 * rs * rw,
             ls * rs, lw * rw, lw * rs + ls * rw};
  m.b13 = {(ls + lw) * (ls + lw), (rs + rw) * (rs + rw), (ls + lw) * (rs + rw)};
  return m;
}

namespace {

int tail_sign(const KneadingPair& pair) { return pair.tail_symbol == Symbol::L ? 1 : -1; }

BigInt pair_total_crossings(const PairInvariants& pi) { return pi.c_x + pi.c_y + pi.l_xy; }

}  // namespace

BigInt c_star(const KneadingPair& pair, const Word& s) {
  const PairInvariants pi = pair_invariants(pair);
  const auto cs = counts(s);
  const BigInt nl = cs.n_l, nr = cs.n_r;
  const BigInt c_s = crossing_number(OrbitSet::make({s}));
  return pi.c_x * nl * nl + pi.c_y * nr * nr + pi.l_xy * nl * nr + tail_sign(pair) * c_s;
}

BigInt l_star(const KneadingPair& pair, const Word& s, const Word& w) {
  const PairInvariants pi = pair_invariants(pair);
  const auto cs = counts(s);
  const auto cw = counts(w);
  const BigInt ls = cs.n_l, rs = cs.n_r, lw = cw.n_l, rw = cw.n_r;
  const BigInt l_sw = linking_number(OrbitSet::make({s, w}), 1, 2);
  return 2 * pi.c_x * ls * lw + 2 * pi.c_y * rs * rw + pi.l_xy * (lw * rs + rw * ls) +
         tail_sign(pair) * l_sw;
}

BigInt c_star_pair(const KneadingPair& pair, const KneadingPair& inner) {
  const PairInvariants outer = pair_invariants(pair);
  const PairInvariants in = pair_invariants(inner);
  const CountMatrices m = count_matrices(inner);
  const Vec3 row{outer.c_x, outer.c_y, outer.l_xy};
  return dot(row, m.b13) + tail_sign(pair) * pair_total_crossings(in);
}

BigInt c_star_power(const KneadingPair& pair, const KneadingPair& inner, unsigned n) {
  if (n == 0) throw std::invalid_argument("c_star_power: n must be >= 1");
  const SignCase sc = sign_case(pair, inner);
  const PairInvariants outer = pair_invariants(pair);
  const PairInvariants in = pair_invariants(inner);
  const CountMatrices m = count_matrices(inner);
  const Vec3 row_outer{outer.c_x, outer.c_y, outer.l_xy};
  const Vec3 row_inner{in.c_x, in.c_y, in.l_xy};

  // sum_{i=0}^{n-2} a(i,n) A^i and A^{n-1} in one sweep.
  Mat3 power = Mat3::identity();
  Vec3 correction{0, 0, 0};
  for (unsigned i = 0; i + 1 < n; ++i) {
    const int s = sc.a(i, n);
    const Vec3 term = row_times(row_inner, power);
    for (int j = 0; j < 3; ++j) correction[j] += s * term[j];
    power = power * m.a33;
  }
  Vec3 row = row_times(row_outer, power);
  for (int j = 0; j < 3; ++j) row[j] += correction[j];
  return dot(row, m.b13) + sc.alpha(n) * pair_total_crossings(in);
}

ComponentInvariants component_invariants_power(const KneadingPair& pair,
                                               const KneadingPair& inner, unsigned n) {
  const PairInvariants outer = pair_invariants(pair);
  if (n == 0) return {outer.c_x, outer.c_y, outer.l_xy};
  const SignCase sc = sign_case(pair, inner);
  const PairInvariants in = pair_invariants(inner);
  const CountMatrices m = count_matrices(inner);
  Vec3 row{outer.c_x, outer.c_y, outer.l_xy};
  const Vec3 row_inner{in.c_x, in.c_y, in.l_xy};
  for (unsigned level = 0; level < n; ++level) {
    row = row_times(row, m.a33);
    const int s = sc.tail_sign(level);
    for (int j = 0; j < 3; ++j) row[j] += s * row_inner[j];
  }
  return {row[0], row[1], row[2]};
}

BigInt string_index_power(const KneadingPair& pair, const KneadingPair& inner, unsigned n) {
  const Mat2 m = count_matrices(inner).m2.pow(n);
  const BigInt lx = pair.x.size(), ly = pair.y.size();
  // (lx ly) m (1 1)^T
  return lx * (m.a[0] + m.a[1]) + ly * (m.a[2] + m.a[3]);
}

BigInt trip_star(const KneadingPair& pair, const Word& s) {
  const auto cs = counts(s);
  BigInt t = cs.n_l * trip_number(pair.x) + cs.n_r * trip_number(pair.y);
  if (pair.x_last() != pair.y_last())
    t += (pair.x_last() == Symbol::L ? 1 : -1) * trip_number(s);
  return t;
}

namespace {

std::array<BigInt, 2> mat2_times(const Mat2& m, const std::array<BigInt, 2>& v) {
  return {m.a[0] * v[0] + m.a[1] * v[1], m.a[2] * v[0] + m.a[3] * v[1]};
}

}  // namespace

TripPair trip_star_power(const KneadingPair& pair, const KneadingPair& inner, unsigned n) {
  if (n == 0) throw std::invalid_argument("trip_star_power: n must be >= 1");
  const auto cs = counts(inner.x);
  const auto cw = counts(inner.y);
  Mat2 t;  // transposed count matrix
  t.a = {BigInt(cs.n_l), BigInt(cs.n_r), BigInt(cw.n_l), BigInt(cw.n_r)};
  const std::array<BigInt, 2> outer_trips{trip_number(pair.x), trip_number(pair.y)};
  const std::array<BigInt, 2> inner_trips{trip_number(inner.x), trip_number(inner.y)};

  std::array<BigInt, 2> result;
  if (pair.x_last() == pair.y_last()) {
    result = mat2_times(t.pow(n), outer_trips);
  } else if (inner.x_last() != inner.y_last()) {
    const SignCase sc = sign_case(pair, inner);
    result = mat2_times(t.pow(n), outer_trips);
    Mat2 power = Mat2::identity();
    for (unsigned i = 0; i < n; ++i) {
      const int s = sc.trip_a(i, n);
      const auto term = mat2_times(power, inner_trips);
      result[0] += s * term[0];
      result[1] += s * term[1];
      power = power * t;
    }
  } else {
    const int s = pair.x_last() == Symbol::L ? 1 : -1;
    auto base = mat2_times(t, outer_trips);
    base[0] += s * inner_trips[0];
    base[1] += s * inner_trips[1];
    result = mat2_times(t.pow(n - 1), base);
  }
  return {result[0], result[1]};
}

namespace {

BigInt half_exact(BigInt v, const char* what) {
  if (v % 2 != 0) throw std::logic_error(std::string(what) + ": value is not even");
  return v / 2;
}

}  // namespace

BigInt genus_star_knot(const KneadingPair& pair, const Word& s) {
  const Word product = star(pair, s);
  if (!is_primitive(product))
    throw InvalidOrbitError("genus_star_knot: (X,Y)*S is not a single orbit");
  const PairInvariants pi = pair_invariants(pair);
  const auto cs = counts(s);
  const BigInt nl = cs.n_l, nr = cs.n_r;
  const BigInt c_s = crossing_number(OrbitSet::make({s}));
  const BigInt numerator = pi.c_x * nl * nl + pi.c_y * nr * nr + pi.l_xy * nl * nr -
                           nl * BigInt(pair.x.size()) - nr * BigInt(pair.y.size()) + 1 +
                           tail_sign(pair) * c_s;
  return half_exact(numerator, "genus_star_knot");
}

BigInt genus_star_link(const KneadingPair& pair, const KneadingPair& inner) {
  return half_exact(c_star_pair(pair, inner) - string_index_power(pair, inner, 1),
                    "genus_star_link");
}

BigInt genus_power(const KneadingPair& pair, const KneadingPair& inner, unsigned n) {
  return half_exact(c_star_power(pair, inner, n) - string_index_power(pair, inner, n),
                    "genus_power");
}

BigInt genus_from_counts(const BigInt& crossings, const BigInt& strands, int components) {
  return half_exact(crossings - strands - components, "genus_from_counts") + 1;
}

InvariantReport direct_invariants(const OrbitSet& orbits) {
  const LorenzBraid braid = lorenz_braid(orbits);
  const CrossingCounts counts = count_crossings(braid);
  InvariantReport report;
  report.components = orbits.components();
  report.string_index = orbits.total_length();
  report.crossings = counts.total;
  for (int a = 1; a <= report.components; ++a)
    for (int b = a + 1; b <= report.components; ++b)
      report.linking[{a, b}] = counts.between[a - 1][b - 1];
  for (const Word& w : orbits.words()) report.trip.push_back(trip_number(w));
  report.genus = genus_from_counts(counts.total, report.string_index, report.components);
  return report;
}

InvariantReport closed_form_invariants(const KneadingPair& pair, const KneadingPair& inner,
                                       unsigned n) {
  InvariantReport report;
  report.components = 2;
  report.string_index = string_index_power(pair, inner, n);
  const ComponentInvariants rows = component_invariants_power(pair, inner, n);
  report.crossings = rows.c_a + rows.c_b + rows.l_ab;
  report.linking[{1, 2}] = rows.l_ab;
  const TripPair trips = trip_star_power(pair, inner, n);
  report.trip = {trips.t_a, trips.t_b};
  report.genus = genus_power(pair, inner, n);
  return report;
}

}  // namespace lorenz
