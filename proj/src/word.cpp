#include "lorenz/word.hpp"

#include <algorithm>

namespace lorenz {

namespace {

// L < 0 < R, with '0' standing for the end-of-word marker.
inline int rank_of(char c) { return c == 'L' ? 0 : (c == 'R' ? 2 : 1); }

std::strong_ordering cmp_finite_ranges(const std::string& a, std::size_t i,
                                       const std::string& b, std::size_t j) {
  const std::size_t la = a.size(), lb = b.size();
  for (;; ++i, ++j) {
    const int ra = i < la ? rank_of(a[i]) : 1;
    const int rb = j < lb ? rank_of(b[j]) : 1;
    if (ra != rb) return ra < rb ? std::strong_ordering::less : std::strong_ordering::greater;
    if (i >= la && j >= lb) return std::strong_ordering::equal;
  }
}

}  // namespace

Word::Word(std::string symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw ParseError("word is empty");
  for (char c : symbols_)
    if (c != 'L' && c != 'R')
      throw ParseError("word may contain only L and R, got '" + std::string(1, c) + "'");
}

Word Word::parse(std::string_view text) {
  std::string body(text);
  const auto zero = body.find('0');
  if (zero != std::string::npos) {
    if (zero + 1 != body.size())
      throw ParseError("the 0 marker may only terminate a word: '" + body + "'");
    body.erase(zero);
  }
  if (body.empty()) throw ParseError("word is empty");
  return Word(std::move(body));
}

std::pair<Word, Word> parse_pair_words(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos)
    throw ParseError("pair must be written X,Y: '" + std::string(text) + "'");
  if (text.find(',', comma + 1) != std::string_view::npos)
    throw ParseError("pair has more than one comma: '" + std::string(text) + "'");
  return {Word::parse(text.substr(0, comma)), Word::parse(text.substr(comma + 1))};
}

std::strong_ordering cmp_finite(const Word& a, const Word& b) {
  return cmp_finite_ranges(a.str(), 0, b.str(), 0);
}

std::strong_ordering cmp_finite_suffix(const Word& a, std::size_t i, const Word& b) {
  return cmp_finite_ranges(a.str(), i, b.str(), 0);
}

std::strong_ordering cmp_periodic(const Word& a, std::size_t shift_a,
                                  const Word& b, std::size_t shift_b) {
  const std::string& sa = a.str();
  const std::string& sb = b.str();
  const std::size_t la = sa.size(), lb = sb.size();
  std::size_t i = shift_a % la, j = shift_b % lb;
  for (std::size_t t = la + lb; t > 0; --t) {
    if (sa[i] != sb[j])
      return sa[i] == 'L' ? std::strong_ordering::less : std::strong_ordering::greater;
    if (++i == la) i = 0;
    if (++j == lb) j = 0;
  }
  return std::strong_ordering::equal;
}

bool is_primitive(const Word& w) {
  const std::string& s = w.str();
  const std::size_t k = s.size();
  for (std::size_t d = 1; d * 2 <= k; ++d) {
    if (k % d != 0) continue;
    bool period = true;
    for (std::size_t i = d; i < k && period; ++i) period = s[i] == s[i - d];
    if (period) return false;
  }
  return true;
}

bool is_maximal(const Word& w) {
  if (w.at(0) != Symbol::L) return false;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w.at(i) == Symbol::L && cmp_finite_suffix(w, i, w) != std::strong_ordering::less)
      return false;
  return true;
}

bool is_minimal(const Word& w) {
  if (w.at(0) != Symbol::R) return false;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w.at(i) == Symbol::R && cmp_finite_suffix(w, i, w) != std::strong_ordering::greater)
      return false;
  return true;
}

bool rotation_equivalent(const Word& a, const Word& b) {
  if (a.size() != b.size()) return false;
  return (a.str() + a.str()).find(b.str()) != std::string::npos;
}

LetterCounts counts(const Word& w) {
  LetterCounts c;
  for (char ch : w.str()) (ch == 'L' ? c.n_l : c.n_r)++;
  return c;
}

std::int64_t trip_number(const Word& w) {
  std::int64_t t = 0;
  const std::size_t k = w.size();
  for (std::size_t i = 0; i < k; ++i)
    if (w.at(i) == Symbol::L && w.cyclic(i + 1) == Symbol::R) ++t;
  return t;
}

}  // namespace lorenz
