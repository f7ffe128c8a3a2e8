#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "lorenz/braid.hpp"

namespace lorenz {

/// Exact 2x2 / 3x3 integer matrices; just enough for the count recursions.
struct Mat2 {
  std::array<BigInt, 4> a{};  // row major
  static Mat2 identity();
  Mat2 operator*(const Mat2& o) const;
  Mat2 pow(unsigned n) const;
};

struct Mat3 {
  std::array<BigInt, 9> a{};
  static Mat3 identity();
  Mat3 operator*(const Mat3& o) const;
  Mat3 pow(unsigned n) const;
};

using Vec3 = std::array<BigInt, 3>;

Vec3 row_times(const Vec3& row, const Mat3& m);
BigInt dot(const Vec3& a, const Vec3& b);

/// Crossing data of the pair's own two-component link:
/// c_x = c(X), c_y = c(Y), l_xy = l(X,Y). Requires a non-degenerate pair.
struct PairInvariants {
  BigInt c_x, c_y, l_xy;
};
PairInvariants pair_invariants(const KneadingPair& pair);

/// Letter-count matrices of an inner pair (S,W):
///   m2  = [[nL(S), nL(W)], [nR(S), nR(W)]], drives word lengths;
///   a33 acts on row vectors (c(A), c(B), l(A,B)) under one more product;
///   b13 collapses such a row vector to a total crossing count.
/// a33 * (1,1,1)^T = b13.
struct CountMatrices {
  Mat3 a33;
  Vec3 b13;
  Mat2 m2;
};
CountMatrices count_matrices(const KneadingPair& inner);

/// Crossing number of the knot (X,Y)*S:
///   c(X) nL(S)^2 + c(Y) nR(S)^2 + l(X,Y) nL(S) nR(S) +- c(S),
/// + exactly when the tail symbol of (X,Y) is L.
BigInt c_star(const KneadingPair& pair, const Word& s);

/// Linking number of the two components (X,Y)*S, (X,Y)*W:
///   2 c(X) nL(S) nL(W) + 2 c(Y) nR(S) nR(W)
///   + l(X,Y) (nL(W) nR(S) + nR(W) nL(S)) +- l(S,W), same sign rule.
BigInt l_star(const KneadingPair& pair, const Word& s, const Word& w);

/// Total crossing number of the link (X,Y)*(S,W); c(S,W) means
/// c(S) + c(W) + l(S,W).
BigInt c_star_pair(const KneadingPair& pair, const KneadingPair& inner);

/// Total crossing number of (X,Y)*(S,W)^n, n >= 1, by the closed form
///   ((c(X),c(Y),l) A^{n-1} + (c(S),c(W),l(S,W)) sum_{i<=n-2} a_i A^i) b13
///   + alpha c(S,W),
/// signs a_i, alpha from the sign case of the two pairs.
BigInt c_star_power(const KneadingPair& pair, const KneadingPair& inner, unsigned n);

/// (c(A), c(B), l(A,B)) of the components A,B of (X,Y)*(S,W)^n, by iterating
/// the a33 action n times. n = 0 gives the pair's own invariants.
struct ComponentInvariants {
  BigInt c_a, c_b, l_ab;
};
ComponentInvariants component_invariants_power(const KneadingPair& pair,
                                               const KneadingPair& inner, unsigned n);

/// Strand count (|A| + |B|) of (X,Y)*(S,W)^n: (|X| |Y|) m2^n (1 1)^T. n >= 0.
BigInt string_index_power(const KneadingPair& pair, const KneadingPair& inner, unsigned n);

/// Trip number of (X,Y)*S: nL(S) t(X) + nR(S) t(Y), corrected by +-t(S) when
/// the last symbols of X and Y differ (+ exactly when X ends in L; the sign
/// reads X_{|X|-1}, not the tail symbol).
BigInt trip_star(const KneadingPair& pair, const Word& s);

/// Trip numbers (t(A), t(B)) of the components of (X,Y)*(S,W)^n, n >= 1,
/// via the transposed count matrix T = [[nL(S), nR(S)], [nL(W), nR(W)]]:
///   last symbols of X,Y equal:            T^n (t(X) t(Y))^T
///   X,Y differ and S,W differ:            + sum_{i<=n-1} a'_i T^i (t(S) t(W))^T
///   X,Y differ and S,W equal:             T^{n-1} (T (t(X) t(Y))^T +- (t(S) t(W))^T)
struct TripPair {
  BigInt t_a, t_b;
};
TripPair trip_star_power(const KneadingPair& pair, const KneadingPair& inner, unsigned n);

/// Genus of the knot (X,Y)*S (the product must be a single orbit):
///   (c(X) nL^2 + c(Y) nR^2 + l nL nR - nL |X| - nR |Y| + 1 +- c(S)) / 2.
BigInt genus_star_knot(const KneadingPair& pair, const Word& s);

/// Genus of the link (X,Y)*(S,W):  (c_star_pair - string index) / 2.
BigInt genus_star_link(const KneadingPair& pair, const KneadingPair& inner);

/// Genus of (X,Y)*(S,W)^n, n >= 1:  (c_star_power - string index) / 2.
BigInt genus_power(const KneadingPair& pair, const KneadingPair& inner, unsigned n);

/// Genus of the closed positive braid with the given crossing and strand
/// counts and number of components: (c - n - u)/2 + 1. The parity c - n - u
/// is always even for these links; odd input is an internal error.
BigInt genus_from_counts(const BigInt& crossings, const BigInt& strands, int components);

/// Invariants of one link, from either construction route.
struct InvariantReport {
  int components = 0;
  BigInt string_index;
  BigInt crossings;
  std::map<std::pair<int, int>, BigInt> linking;  // keys (a,b), a < b, 1-based
  std::vector<BigInt> trip;                       // per component
  BigInt genus;
};

InvariantReport direct_invariants(const OrbitSet& orbits);
InvariantReport closed_form_invariants(const KneadingPair& pair, const KneadingPair& inner,
                                       unsigned n);

}  // namespace lorenz
