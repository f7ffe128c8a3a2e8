#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "lorenz/core.hpp"

namespace lorenz {

/// The two letters of a Lorenz itinerary. The terminal marker `0` that
/// finite comparisons use is not a Symbol; it exists only inside cmp_finite.
enum class Symbol : char { L = 'L', R = 'R' };

inline char to_char(Symbol s) { return static_cast<char>(s); }
inline Symbol opposite(Symbol s) { return s == Symbol::L ? Symbol::R : Symbol::L; }

/// Nonempty finite word over {L,R}. A Word stands either for the finite
/// sequence w_0...w_{k-1}0 or for the periodic sequence (w_0...w_{k-1})^inf;
/// the comparison function applied (cmp_finite vs cmp_periodic) picks the
/// reading, the data is the same.
class Word {
 public:
  /// Accepts exactly [LR]+. Use parse() for user-facing text.
  explicit Word(std::string symbols);

  /// Accepts [LR]+0?, i.e. an optional single trailing 0 marker.
  static Word parse(std::string_view text);

  std::size_t size() const { return symbols_.size(); }
  Symbol at(std::size_t i) const { return static_cast<Symbol>(symbols_[i]); }
  Symbol cyclic(std::size_t i) const {
    return static_cast<Symbol>(symbols_[i % symbols_.size()]);
  }
  Symbol last() const { return at(size() - 1); }
  const std::string& str() const { return symbols_; }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::string symbols_;
};

/// "X,Y" -> two words (no admissibility check).
std::pair<Word, Word> parse_pair_words(std::string_view text);

/// Order of finite sequences: compare a_0...a_{|a|-1}0 with b_0...b_{|b|-1}0
/// position by position under L < 0 < R.
std::strong_ordering cmp_finite(const Word& a, const Word& b);

/// cmp_finite with the left operand replaced by its shift a_i...a_{|a|-1}0.
std::strong_ordering cmp_finite_suffix(const Word& a, std::size_t i, const Word& b);

/// Order of the periodic sequences s^{shift_a}(a^inf) vs s^{shift_b}(b^inf).
/// Decided within |a| + |b| positions; sequences agreeing that long are equal.
std::strong_ordering cmp_periodic(const Word& a, std::size_t shift_a,
                                  const Word& b, std::size_t shift_b);

/// True if w is not a power u^k, k >= 2, of a shorter word.
bool is_primitive(const Word& w);

/// w starts with L and every shift from an L position is strictly below w
/// (finite comparison). Dual for is_minimal with R and strictly above.
bool is_maximal(const Word& w);
bool is_minimal(const Word& w);

/// Same length and b occurs among the cyclic rotations of a.
bool rotation_equivalent(const Word& a, const Word& b);

struct LetterCounts {
  std::int64_t n_l = 0;
  std::int64_t n_r = 0;
};
LetterCounts counts(const Word& w);

/// Number of cyclic L->R transitions (trip number of the closed orbit).
std::int64_t trip_number(const Word& w);

}  // namespace lorenz
