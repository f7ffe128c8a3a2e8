#include "lorenz/kneading.hpp"

#include <cstdint>
#include <stdexcept>

namespace lorenz {

std::string AdmissibilityFailure::describe() const {
  const char* z = word_index == 0 ? "X" : "Y";
  switch (condition) {
    case AdmissibilityCondition::x_starts_with_l:
      return "X must start with L";
    case AdmissibilityCondition::y_starts_with_r:
      return "Y must start with R";
    case AdmissibilityCondition::shift_not_below_x:
      return std::string("s^") + std::to_string(shift) + "(" + z +
             ") starts with L but is not strictly below X";
    case AdmissibilityCondition::shift_not_above_y:
      return std::string("s^") + std::to_string(shift) + "(" + z +
             ") starts with R but is not strictly above Y";
  }
  return "unknown condition";
}

namespace {

// w at position (|w|-1-i) mod |w|: the word read backwards, cyclically.
Symbol backward(const Word& w, std::size_t i) {
  return w.at(w.size() - 1 - (i % w.size()));
}

}  // namespace

std::size_t tail_length(const Word& x, const Word& y) {
  const std::size_t bound = x.size() + y.size();
  for (std::size_t i = 0; i < bound; ++i)
    if (backward(x, i) != backward(y, i)) return i;
  // Identical backward-periodic sequences would force X0 = Y0 at some index;
  // words of interest have X0 = L, Y0 = R.
  throw std::logic_error("tail_length: words have no backward disagreement");
}

namespace {

bool word_degenerate(const Word& x, const Word& y) {
  if (x.size() != y.size()) return false;
  return rotation_equivalent(x, y);
}

KneadingPair make_kneading(const Word& x, const Word& y) {
  KneadingPair p{x, y};
  p.tail_length = tail_length(x, y);
  p.tail_symbol = backward(x, p.tail_length);
  p.degenerate = word_degenerate(x, y);
  return p;
}

}  // namespace

AdmissibilityResult check_admissible(const Word& x, const Word& y) {
  if (x.at(0) != Symbol::L)
    return AdmissibilityFailure{0, 0, AdmissibilityCondition::x_starts_with_l};
  if (y.at(0) != Symbol::R)
    return AdmissibilityFailure{1, 0, AdmissibilityCondition::y_starts_with_r};
  for (int w = 0; w < 2; ++w) {
    const Word& z = w == 0 ? x : y;
    for (std::size_t i = 1; i < z.size(); ++i) {
      if (z.at(i) == Symbol::L) {
        if (cmp_finite_suffix(z, i, x) != std::strong_ordering::less)
          return AdmissibilityFailure{w, i, AdmissibilityCondition::shift_not_below_x};
      } else {
        if (cmp_finite_suffix(z, i, y) != std::strong_ordering::greater)
          return AdmissibilityFailure{w, i, AdmissibilityCondition::shift_not_above_y};
      }
    }
  }
  return make_kneading(x, y);
}

KneadingPair require_admissible(const Word& x, const Word& y) {
  auto result = check_admissible(x, y);
  if (auto* fail = std::get_if<AdmissibilityFailure>(&result))
    throw InadmissiblePairError("pair (" + x.str() + "," + y.str() +
                                ") is not admissible: " + fail->describe());
  return std::get<KneadingPair>(std::move(result));
}

KneadingPair parse_pair(std::string_view text) {
  auto [x, y] = parse_pair_words(text);
  return require_admissible(x, y);
}

Word star(const Word& x, const Word& y, const Word& u) {
  const auto cu = counts(u);
  std::string out;
  out.reserve(static_cast<std::size_t>(cu.n_l) * x.size() +
              static_cast<std::size_t>(cu.n_r) * y.size());
  for (char c : u.str()) out += (c == 'L' ? x.str() : y.str());
  return Word(std::move(out));
}

Word star(const KneadingPair& pair, const Word& u) { return star(pair.x, pair.y, u); }

KneadingPair star_pair(const KneadingPair& outer, const KneadingPair& inner) {
  Word px = star(outer, inner.x);
  Word py = star(outer, inner.y);
  auto result = check_admissible(px, py);
  if (auto* fail = std::get_if<AdmissibilityFailure>(&result))
    throw std::logic_error("star_pair: product of admissible pairs failed the check: " +
                           fail->describe());
  return std::get<KneadingPair>(std::move(result));
}

KneadingPair star_power(const KneadingPair& outer, const KneadingPair& inner, unsigned n,
                        std::size_t length_cap) {
  KneadingPair cur = outer;
  const auto cs = counts(inner.x);
  const auto cw = counts(inner.y);
  for (unsigned level = 1; level <= n; ++level) {
    const std::uint64_t lx = cur.x.size(), ly = cur.y.size();
    const std::uint64_t next_x = std::uint64_t(cs.n_l) * lx + std::uint64_t(cs.n_r) * ly;
    const std::uint64_t next_y = std::uint64_t(cw.n_l) * lx + std::uint64_t(cw.n_r) * ly;
    if (next_x > length_cap || next_y > length_cap)
      throw ResourceLimitError("star_power: expansion at level " + std::to_string(level) +
                               " needs " + std::to_string(std::max(next_x, next_y)) +
                               " symbols, cap is " + std::to_string(length_cap));
    cur = star_pair(cur, inner);
  }
  return cur;
}

Symbol SignCase::predicted_tail(unsigned level) const {
  switch (case_id) {
    case 1: return Symbol::L;
    case 2: return level % 2 == 0 ? Symbol::L : Symbol::R;
    case 3: return Symbol::R;
    default: return level % 2 == 1 ? Symbol::L : Symbol::R;
  }
}

SignCase sign_case(const KneadingPair& outer, const KneadingPair& inner) {
  if (outer.degenerate || inner.degenerate)
    throw DegeneratePairError("sign_case: both pairs must be non-degenerate");
  const bool outer_l = outer.tail_symbol == Symbol::L;
  const bool inner_l = inner.tail_symbol == Symbol::L;
  SignCase sc;
  sc.case_id = outer_l ? (inner_l ? 1 : 2) : (inner_l ? 3 : 4);
  return sc;
}

}  // namespace lorenz
