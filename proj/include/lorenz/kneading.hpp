#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

#include "lorenz/word.hpp"

namespace lorenz {

inline constexpr std::size_t default_length_cap = 1'000'000;

/// Admissible pair (X,Y): X starts with L, Y starts with R, and for each of
/// the two words, every shift taken at an L position is strictly below X and
/// every shift taken at an R position is strictly above Y, in the finite
/// order. Equivalently (X_0...X_{|X|-1})^inf, (Y_0...Y_{|Y|-1})^inf is the
/// kneading invariant of some Lorenz map. Carries the tail data used by the
/// renormalization sign rules.
struct KneadingPair {
  Word x;
  Word y;
  /// m: number of trailing positions (read backwards, cyclically) on which
  /// x and y agree before first disagreeing.
  std::size_t tail_length = 0;
  /// x at position |x|-m-1 (the last position where the words still agree,
  /// or the last letter of x when m = 0).
  Symbol tail_symbol = Symbol::L;
  /// True when some shift of x^inf equals y^inf, i.e. both words trace the
  /// same closed orbit.
  bool degenerate = false;

  Symbol x_last() const { return x.last(); }
  Symbol y_last() const { return y.last(); }
};

enum class AdmissibilityCondition {
  x_starts_with_l,
  y_starts_with_r,
  shift_not_below_x,  // z_i = L but s^i(z) >= x
  shift_not_above_y,  // z_i = R but s^i(z) <= y
};

struct AdmissibilityFailure {
  int word_index = 0;  // 0 = X, 1 = Y
  std::size_t shift = 0;
  AdmissibilityCondition condition = AdmissibilityCondition::x_starts_with_l;
  std::string describe() const;
};

using AdmissibilityResult = std::variant<KneadingPair, AdmissibilityFailure>;

/// Full check; reports the first violated condition (X scanned before Y,
/// shifts in increasing order).
AdmissibilityResult check_admissible(const Word& x, const Word& y);

/// check_admissible or throw InadmissiblePairError.
KneadingPair require_admissible(const Word& x, const Word& y);

/// "X,Y" -> admissible pair (ParseError / InadmissiblePairError).
KneadingPair parse_pair(std::string_view text);

/// First backward position where x and y disagree, indices cyclic.
std::size_t tail_length(const Word& x, const Word& y);

/// Substitution x for L, y for R in u. No admissibility requirement; the
/// KneadingPair overload is the usual entry point.
Word star(const Word& x, const Word& y, const Word& u);
Word star(const KneadingPair& pair, const Word& u);

/// Componentwise product; the result is admissible whenever both factors
/// are, which is asserted (an assertion failure is an implementation bug).
KneadingPair star_pair(const KneadingPair& outer, const KneadingPair& inner);

/// outer * inner^n, expanding left to right. Throws ResourceLimitError as
/// soon as the next expansion would exceed length_cap symbols in either
/// component. n = 0 returns outer.
KneadingPair star_power(const KneadingPair& outer, const KneadingPair& inner, unsigned n,
                        std::size_t length_cap = default_length_cap);

/// Sign bookkeeping for iterated products, keyed by the tail symbols of the
/// outer and the inner pair:
///   case 1 = (L,L), case 2 = (L,R), case 3 = (R,L), case 4 = (R,R).
/// predicted_tail(j) is the tail symbol of outer * inner^j:
///   case 1: always L               case 2: L exactly for even j
///   case 3: always R               case 4: L exactly for odd j
/// a/alpha are the signs appearing in the iterated crossing formula, trip_a
/// the ones in the iterated trip formula; all three are re-indexed reads of
/// predicted_tail (a(i,n) at level n-2-i, alpha(n) at level n-1, trip_a(i,n)
/// at level n-1-i).
struct SignCase {
  int case_id = 1;

  Symbol predicted_tail(unsigned level) const;
  int tail_sign(unsigned level) const {
    return predicted_tail(level) == Symbol::L ? 1 : -1;
  }

  int a(unsigned i, unsigned n) const { return tail_sign(n - 2 - i); }
  int alpha(unsigned n) const { return tail_sign(n - 1); }
  int trip_a(unsigned i, unsigned n) const { return tail_sign(n - 1 - i); }
};

/// Requires both pairs non-degenerate (the sign rules read tail symbols of
/// genuine two-orbit pairs).
SignCase sign_case(const KneadingPair& outer, const KneadingPair& inner);

}  // namespace lorenz
