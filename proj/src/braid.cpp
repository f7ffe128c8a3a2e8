#include "lorenz/braid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lorenz {

OrbitSet OrbitSet::make(std::vector<Word> words) {
  if (words.empty()) throw InvalidOrbitError("orbit set is empty");
  for (std::size_t i = 0; i < words.size(); ++i)
    if (!is_primitive(words[i]))
      throw InvalidOrbitError("word " + std::to_string(i + 1) + " (" + words[i].str() +
                              ") is not primitive");
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      if (rotation_equivalent(words[i], words[j]))
        throw InvalidOrbitError("words " + std::to_string(i + 1) + " and " +
                                std::to_string(j + 1) + " trace the same orbit (" +
                                words[i].str() + " ~ " + words[j].str() + ")");
  return OrbitSet(std::move(words));
}

std::size_t OrbitSet::total_length() const {
  std::size_t n = 0;
  for (const Word& w : words_) n += w.size();
  return n;
}

int LorenzBraid::rank_of(int orbit, int shift) const {
  return phi[static_cast<std::size_t>(orbit_offset_[orbit]) + shift - 1];
}

std::vector<int> sorted_shifts(const OrbitSet& orbits) { return lorenz_braid(orbits).phi; }

LorenzBraid lorenz_braid(const OrbitSet& orbits) {
  const auto& words = orbits.words();
  LorenzBraid b;
  b.strands = static_cast<int>(orbits.total_length());
  b.orbit_offset_.resize(words.size());
  std::vector<ShiftLabel> labels;
  labels.reserve(b.strands);
  int off = 0;
  for (std::size_t o = 0; o < words.size(); ++o) {
    b.orbit_offset_[o] = off;
    const int k = static_cast<int>(words[o].size());
    for (int i = 1; i <= k; ++i) labels.push_back({static_cast<int>(o), i});
    off += k;
  }

  std::vector<int> order(labels.size());
  std::iota(order.begin(), order.end(), 0);
  auto less = [&](int ga, int gb) {
    const ShiftLabel& a = labels[ga];
    const ShiftLabel& c = labels[gb];
    return cmp_periodic(words[a.orbit], a.shift % words[a.orbit].size(),
                        words[c.orbit], c.shift % words[c.orbit].size()) ==
           std::strong_ordering::less;
  };
  std::sort(order.begin(), order.end(), less);
  for (std::size_t r = 0; r + 1 < order.size(); ++r) {
    if (!less(order[r], order[r + 1]) && !less(order[r + 1], order[r])) {
      const ShiftLabel& a = labels[order[r]];
      const ShiftLabel& c = labels[order[r + 1]];
      throw InvalidOrbitError("shifts coincide: word " + std::to_string(a.orbit + 1) +
                              " shift " + std::to_string(a.shift) + " equals word " +
                              std::to_string(c.orbit + 1) + " shift " +
                              std::to_string(c.shift));
    }
  }

  b.phi.assign(labels.size(), 0);
  b.strand.resize(labels.size());
  b.component_of.resize(labels.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    b.phi[order[r]] = static_cast<int>(r) + 1;
    b.strand[r] = labels[order[r]];
    b.component_of[r] = labels[order[r]].orbit + 1;
  }

  b.pi.assign(labels.size(), 0);
  for (std::size_t o = 0; o < words.size(); ++o) {
    const int k = static_cast<int>(words[o].size());
    for (int i = 1; i <= k; ++i) {
      const int next = i == k ? 1 : i + 1;
      b.pi[b.rank_of(static_cast<int>(o), i) - 1] = b.rank_of(static_cast<int>(o), next);
    }
  }
  return b;
}

std::vector<int> braid_word(const std::vector<int>& pi) {
  std::vector<int> cur(pi);
  std::vector<int> word;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t j = 0; j + 1 < cur.size(); ++j) {
      if (cur[j] > cur[j + 1]) {
        std::swap(cur[j], cur[j + 1]);
        word.push_back(static_cast<int>(j) + 1);
        moved = true;
        ++j;  // transpositions within one pass are disjoint
      }
    }
  }
  return word;
}

BigInt inversions(const std::vector<int>& pi) {
  // Merge sort, counting the pairs i < j with pi[i] > pi[j].
  std::vector<int> a(pi), tmp(pi.size());
  BigInt count = 0;
  for (std::size_t width = 1; width < a.size(); width *= 2) {
    for (std::size_t lo = 0; lo + width < a.size(); lo += 2 * width) {
      const std::size_t mid = lo + width;
      const std::size_t hi = std::min(lo + 2 * width, a.size());
      std::size_t i = lo, j = mid, k = lo;
      while (i < mid && j < hi) {
        if (a[i] <= a[j]) {
          tmp[k++] = a[i++];
        } else {
          count += static_cast<long long>(mid - i);
          tmp[k++] = a[j++];
        }
      }
      while (i < mid) tmp[k++] = a[i++];
      while (j < hi) tmp[k++] = a[j++];
      std::copy(tmp.begin() + lo, tmp.begin() + hi, a.begin() + lo);
    }
  }
  return count;
}

namespace {

// Fenwick tree over 1..n.
class Bit {
 public:
  explicit Bit(int n) : tree_(n + 1, 0) {}
  void add(int i) {
    for (; i < static_cast<int>(tree_.size()); i += i & -i) ++tree_[i];
  }
  long long prefix(int i) const {
    long long s = 0;
    for (; i > 0; i -= i & -i) s += tree_[i];
    return s;
  }
  long long total() const { return prefix(static_cast<int>(tree_.size()) - 1); }

 private:
  std::vector<long long> tree_;
};

}  // namespace

CrossingCounts count_crossings(const LorenzBraid& braid) {
  // One Fenwick tree per component; scanning ranks left to right, the pairs
  // already inserted with larger pi value are exactly the crossings.
  int ncomp = 0;
  for (int c : braid.component_of) ncomp = std::max(ncomp, c);
  CrossingCounts out;
  out.within.assign(ncomp, 0);
  out.between.assign(ncomp, std::vector<BigInt>(ncomp, 0));
  std::vector<Bit> bits(ncomp, Bit(braid.strands));
  for (int r = 0; r < braid.strands; ++r) {
    const int v = braid.pi[r];
    const int c = braid.component_of[r] - 1;
    for (int a = 0; a < ncomp; ++a) {
      const long long above = bits[a].total() - bits[a].prefix(v);
      if (above == 0) continue;
      if (a == c) {
        out.within[c] += above;
      } else {
        out.between[a][c] += above;
        out.between[c][a] += above;
      }
      out.total += above;
    }
    bits[c].add(v);
  }
  return out;
}

BigInt crossing_number(const OrbitSet& orbits) {
  return inversions(lorenz_braid(orbits).pi);
}

BigInt linking_number(const OrbitSet& orbits, int comp_a, int comp_b) {
  if (comp_a == comp_b || comp_a < 1 || comp_b < 1 || comp_a > orbits.components() ||
      comp_b > orbits.components())
    throw std::invalid_argument("linking_number: components must be distinct labels in range");
  const auto counts = count_crossings(lorenz_braid(orbits));
  return counts.between[comp_a - 1][comp_b - 1];
}

std::string TemplateWord::to_string() const {
  std::string s;
  for (int g : sigmas) s += "s" + std::to_string(g) + " ";
  s += "b" + std::to_string(beta_index) + (beta_positive ? "+" : "-");
  return s;
}

TemplateWord renorm_template(const KneadingPair& pair) {
  const int m = static_cast<int>(pair.tail_length);
  OrbitSet orbits = pair.degenerate ? OrbitSet::make({pair.x})
                                    : OrbitSet::make({pair.x, pair.y});
  LorenzBraid braid = lorenz_braid(orbits);
  TemplateWord t;
  t.strips = braid.strands;
  t.sigmas = braid_word(braid.pi);
  t.beta_index = braid.rank_of(0, static_cast<int>(pair.x.size()) - m);
  t.beta_positive = pair.tail_symbol == Symbol::L;
  return t;
}

namespace {

struct BlockTable {
  // Per offset of the product word: the outer strand this position shadows
  // (head positions) or the tail level 1..m (tail positions).
  std::vector<int> head_strand;  // global outer shift index, -1 on tail positions
  std::vector<int> tail_level;   // 0 on head positions
  std::vector<int> block_of;     // index of the enclosing block
  std::vector<int> block_start;  // per block
  std::vector<int> block_len;    // per block
};

BlockTable block_table(const KneadingPair& pair, const Word& z, int m) {
  const int lx = static_cast<int>(pair.x.size());
  const int ly = static_cast<int>(pair.y.size());
  BlockTable t;
  const std::size_t total = static_cast<std::size_t>(counts(z).n_l) * lx +
                            static_cast<std::size_t>(counts(z).n_r) * ly;
  t.head_strand.reserve(total);
  t.tail_level.reserve(total);
  t.block_of.reserve(total);
  int start = 0;
  for (std::size_t b = 0; b < z.size(); ++b) {
    const bool is_x = z.at(b) == Symbol::L;
    const int len = is_x ? lx : ly;
    t.block_start.push_back(start);
    t.block_len.push_back(len);
    for (int u = 0; u < len; ++u) {
      t.block_of.push_back(static_cast<int>(b));
      if (u >= len - m) {
        t.head_strand.push_back(-1);
        t.tail_level.push_back(len - u);
      } else {
        const int shift = u == 0 ? len : u;  // s^len = id within the block word
        t.head_strand.push_back(is_x ? shift - 1 : lx + shift - 1);
        t.tail_level.push_back(0);
      }
    }
    start += len;
  }
  return t;
}

}  // namespace

MainTheoremReport main_theorem_check(const KneadingPair& pair, const OrbitSet& inner) {
  if (pair.degenerate)
    throw DegeneratePairError("main_theorem_check: outer pair must be non-degenerate");
  const int m = static_cast<int>(pair.tail_length);
  const int lx = static_cast<int>(pair.x.size());
  const int ly = static_cast<int>(pair.y.size());

  MainTheoremReport report;
  auto fail = [&](std::string msg) {
    report.pass = false;
    if (report.failures.size() < 20) report.failures.push_back(std::move(msg));
  };

  std::vector<Word> products;
  products.reserve(inner.words().size());
  for (const Word& z : inner.words()) products.push_back(star(pair, z));
  OrbitSet product_set = OrbitSet::make(std::move(products));

  const LorenzBraid outer = lorenz_braid(OrbitSet::make({pair.x, pair.y}));
  const LorenzBraid inner_braid = lorenz_braid(inner);
  const LorenzBraid product_braid = lorenz_braid(product_set);
  report.strands = product_braid.strands;

  std::int64_t nl = 0, nr = 0;
  for (const Word& z : inner.words()) {
    const auto c = counts(z);
    nl += c.n_l;
    nr += c.n_r;
  }
  report.x_strip_strands = nl;
  report.y_strip_strands = nr;

  // Interval of product ranks expected under each outer strip, in rank order.
  const int strips = outer.strands;
  std::vector<std::int64_t> interval_start(strips + 1, 0);
  for (int p = 0; p < strips; ++p) {
    const std::int64_t size = outer.strand[p].orbit == 0 ? nl : nr;
    interval_start[p + 1] = interval_start[p] + size;
  }
  if (interval_start[strips] != product_braid.strands)
    fail("strip sizes do not add up to the strand count");

  std::vector<BlockTable> tables;
  tables.reserve(inner.words().size());
  for (const Word& z : inner.words()) tables.push_back(block_table(pair, z, m));

  // Tail levels pair the strips of s^{|X|-l}(X) and s^{|Y|-l}(Y); those two
  // must be adjacent in the outer order.
  std::vector<int> tail_rank_x(m + 1, 0);
  for (int l = 1; l <= m; ++l) {
    const int rx = outer.rank_of(0, lx - l);
    const int ry = outer.rank_of(1, ly - l);
    if (ry != rx + 1)
      fail("tail level " + std::to_string(l) + ": strips " + std::to_string(rx) + " and " +
           std::to_string(ry) + " are not adjacent");
    tail_rank_x[l] = rx;
  }

  // (a) every strand lies in the interval of its strip (head strands) or in
  // the merged interval pair of its tail level.
  for (int r = 0; r < product_braid.strands; ++r) {
    const ShiftLabel s = product_braid.strand[r];
    const BlockTable& t = tables[s.orbit];
    const int plen = static_cast<int>(product_set.words()[s.orbit].size());
    const int offset = s.shift % plen;
    std::int64_t lo, hi;
    if (t.tail_level[offset] > 0) {
      const int rx = tail_rank_x[t.tail_level[offset]];
      lo = interval_start[rx - 1];
      hi = interval_start[rx + 1];
    } else {
      const int strip_rank = outer.phi[t.head_strand[offset]];
      lo = interval_start[strip_rank - 1];
      hi = interval_start[strip_rank];
    }
    if (r < lo || r >= hi)
      fail("component " + std::to_string(s.orbit + 1) + " shift " + std::to_string(s.shift) +
           ": rank " + std::to_string(r + 1) + " outside its strip interval");
  }

  // Branch chart strip: the strip of s^{|X|-m}(X), with the Y side adjacent.
  const int j = outer.rank_of(0, lx - m == 0 ? lx : lx - m);
  report.chart_index = j;
  report.chart_positive = pair.tail_symbol == Symbol::L;
  if (outer.rank_of(1, ly - m == 0 ? ly : ly - m) != j + 1)
    fail("branch strips are not adjacent");

  // (b) the sub-permutation the product braid induces between the pre-tail
  // strands and their shift images must be the inner permutation, composed
  // with the X/Y block swap xi when the branch generator is negative.
  const int q = inner_braid.strands;
  std::vector<std::int64_t> rank_in(q), rank_out(q);
  for (int k = 0; k < q; ++k) {
    const ShiftLabel s = inner_braid.strand[k];
    const Word& z = inner.words()[s.orbit];
    const BlockTable& t = tables[s.orbit];
    const int b = s.shift % static_cast<int>(z.size());
    const int plen = static_cast<int>(product_set.words()[s.orbit].size());
    const int off_in = t.block_start[b] + t.block_len[b] - (m + 1);
    const int off_out = off_in + 1;
    rank_in[k] = product_braid.rank_of(s.orbit, off_in == 0 ? plen : off_in);
    rank_out[k] = product_braid.rank_of(s.orbit, off_out == plen ? plen : off_out % plen);
  }
  auto ordinals = [q](const std::vector<std::int64_t>& ranks) {
    std::vector<int> idx(q), ord(q);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return ranks[a] < ranks[b]; });
    for (int p = 0; p < q; ++p) ord[idx[p]] = p + 1;
    return ord;
  };
  const std::vector<int> in_pos = ordinals(rank_in);
  const std::vector<int> out_pos = ordinals(rank_out);
  // xi swaps the X strip block and the Y strip block of the chart.
  auto xi = [&](int r) { return r <= nr ? static_cast<int>(nl) + r : r - static_cast<int>(nr); };
  for (int k = 0; k < q; ++k) {
    const int expected_in =
        report.chart_positive ? k + 1
                              : (k + 1 <= nl ? k + 1 + static_cast<int>(nr)
                                             : k + 1 - static_cast<int>(nl));
    if (in_pos[k] != expected_in)
      fail("chart entry order: inner strand " + std::to_string(k + 1) + " expected position " +
           std::to_string(expected_in) + ", got " + std::to_string(in_pos[k]));
  }
  for (int r = 1; r <= q; ++r) {
    int k = -1;
    for (int t = 0; t < q; ++t)
      if (in_pos[t] == r) k = t;
    const int got = out_pos[k];
    const int expected = report.chart_positive ? inner_braid.pi[r - 1]
                                               : inner_braid.pi[xi(r) - 1];
    if (got != expected)
      fail("chart permutation at position " + std::to_string(r) + ": expected " +
           std::to_string(expected) + ", got " + std::to_string(got));
  }

  return report;
}

}  // namespace lorenz
