#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lorenz/kneading.hpp"

namespace lorenz {

/// Words of the periodic orbits forming a link, one component per word.
/// Valid iff every word is primitive and no two words are rotations of each
/// other (otherwise two strands would coincide).
class OrbitSet {
 public:
  static OrbitSet make(std::vector<Word> words);

  const std::vector<Word>& words() const { return words_; }
  int components() const { return static_cast<int>(words_.size()); }
  std::size_t total_length() const;

 private:
  explicit OrbitSet(std::vector<Word> w) : words_(std::move(w)) {}
  std::vector<Word> words_;
};

struct ShiftLabel {
  int orbit = 0;  // 0-based word index
  int shift = 0;  // 1..k; shift k is the word itself (s^k = id)
};

/// Lorenz braid of an orbit set. Strand i starts at the position ranking
/// s^i(word^inf) among all shifts of all words and ends at the position of
/// the next shift, so pi(phi(i)) = phi(i+1) with i+1 wrapping per component.
struct LorenzBraid {
  int strands = 0;
  /// phi[g] = 1-based rank of global shift g; shifts are enumerated per
  /// orbit in input order, g = orbit_offset + (shift - 1).
  std::vector<int> phi;
  /// strand[r] = the shift occupying rank r+1 (inverse of phi).
  std::vector<ShiftLabel> strand;
  /// 1-based image list: pi[i-1] = endpoint of the strand starting at i.
  std::vector<int> pi;
  /// component_of[r] = 1-based component label of rank r+1, labels follow
  /// input order of the words.
  std::vector<int> component_of;

  int rank_of(int orbit, int shift) const;

 private:
  friend LorenzBraid lorenz_braid(const OrbitSet&);
  std::vector<int> orbit_offset_;
};

/// The rank table phi on its own.
std::vector<int> sorted_shifts(const OrbitSet& orbits);

LorenzBraid lorenz_braid(const OrbitSet& orbits);

/// Canonical positive word realizing pi: repeated left-to-right passes, each
/// emitting a column of disjoint adjacent transpositions; exactly
/// inversions(pi) letters. Generator indices are 1-based.
std::vector<int> braid_word(const std::vector<int>& pi);

BigInt inversions(const std::vector<int>& pi);

/// Crossing counts of a Lorenz braid, split by component: within[a] counts
/// crossings of component a+1 with itself, between[a][b] those of distinct
/// components (symmetric, zero diagonal), total their sum.
struct CrossingCounts {
  BigInt total = 0;
  std::vector<BigInt> within;
  std::vector<std::vector<BigInt>> between;
};
CrossingCounts count_crossings(const LorenzBraid& braid);

BigInt crossing_number(const OrbitSet& orbits);
/// comp_a, comp_b are distinct 1-based labels.
BigInt linking_number(const OrbitSet& orbits, int comp_a, int comp_b);

/// Renormalization data of an admissible pair: the braid of {X,Y} (of {X}
/// alone in the degenerate case) followed by one branch-line generator
/// beta_j, positive iff the tail symbol is L, at the strip j holding the
/// shift s^{|X|-m}(X).
struct TemplateWord {
  int strips = 0;
  std::vector<int> sigmas;
  int beta_index = 0;
  bool beta_positive = true;
  std::string to_string() const;  // e.g. "s2 s1 b2-"
};
TemplateWord renorm_template(const KneadingPair& pair);

/// Structural comparison of the braid of the products (X,Y) * Z^i against
/// the braid of {X,Y} with each strip inflated by the braid of {Z^1..Z^q}:
/// (a) strands fall into consecutive intervals, one per strip, X-strips
/// carrying sum(n_L(Z^i)) strands and Y-strips sum(n_R(Z^i)), with the m
/// tail levels sharing merged adjacent interval pairs; (b) the permutation
/// induced at the branch chart equals the inner permutation, composed with
/// the strip-block swap when the tail symbol is R.
struct MainTheoremReport {
  bool pass = true;
  int strands = 0;
  std::int64_t x_strip_strands = 0;  // per X-strip
  std::int64_t y_strip_strands = 0;  // per Y-strip
  int chart_index = 0;               // strip j of the branch generator
  bool chart_positive = true;
  std::vector<std::string> failures;
};
MainTheoremReport main_theorem_check(const KneadingPair& pair, const OrbitSet& inner);

}  // namespace lorenz
