#include "lorenz/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>

namespace lorenz {

namespace {

constexpr std::uint64_t golden = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

}  // namespace

std::uint64_t Rng::next() {
  state += golden;
  return mix64(state);
}

Rng Rng::for_trial(std::uint64_t seed, std::uint64_t trial) {
  return Rng(mix64(seed ^ mix64(trial + golden)));
}

Word gen_word(Rng& rng, std::size_t max_len) {
  const std::size_t len = 1 + rng.below(max_len);
  std::string s(len, 'L');
  for (char& c : s) c = rng.coin() ? 'L' : 'R';
  return Word(std::move(s));
}

Word gen_word_starting(Rng& rng, Symbol first, std::size_t max_len) {
  Word w = gen_word(rng, max_len);
  std::string s = w.str();
  s[0] = to_char(first);
  return Word(std::move(s));
}

Word gen_primitive_word(Rng& rng, std::size_t max_len, int retry_cap) {
  for (int attempt = 0; attempt < retry_cap; ++attempt) {
    Word w = gen_word(rng, max_len);
    if (is_primitive(w)) return w;
  }
  throw ResourceLimitError("gen_primitive_word: retry budget exhausted");
}

KneadingPair gen_admissible_pair(Rng& rng, std::size_t max_len, int retry_cap) {
  for (int attempt = 0; attempt < retry_cap; ++attempt) {
    Word x = gen_word_starting(rng, Symbol::L, max_len);
    Word y = gen_word_starting(rng, Symbol::R, max_len);
    auto result = check_admissible(x, y);
    if (auto* pair = std::get_if<KneadingPair>(&result)) return *pair;
  }
  throw ResourceLimitError("gen_admissible_pair: retry budget exhausted");
}

KneadingPair gen_nondegenerate_pair(Rng& rng, std::size_t max_len, int retry_cap) {
  for (int attempt = 0; attempt < retry_cap; ++attempt) {
    KneadingPair p = gen_admissible_pair(rng, max_len, retry_cap);
    if (!p.degenerate) return p;
  }
  throw ResourceLimitError("gen_nondegenerate_pair: retry budget exhausted");
}

OrbitSet gen_orbit_set(Rng& rng, std::size_t max_words, std::size_t max_len, int retry_cap) {
  const std::size_t count = 1 + rng.below(max_words);
  std::vector<Word> words;
  int attempts = 0;
  while (words.size() < count) {
    if (++attempts > retry_cap)
      throw ResourceLimitError("gen_orbit_set: retry budget exhausted");
    Word w = gen_primitive_word(rng, max_len, retry_cap);
    bool fresh = true;
    for (const Word& seen : words) fresh = fresh && !rotation_equivalent(seen, w);
    if (fresh) words.push_back(std::move(w));
  }
  return OrbitSet::make(std::move(words));
}

bool VerifyReport::all_passed() const {
  for (const auto& f : formulas)
    if (f.failed > 0) return false;
  return true;
}

namespace {

class Suite {
 public:
  explicit Suite(const VerifyConfig& config) : config_(config) {
    for (const char* name :
         {"c_star", "l_star", "c_star_pair", "c_star_power", "string_index_power",
          "trip_star", "trip_star_power", "genus_star_knot", "genus_star_link",
          "genus_power", "main_theorem", "tail_recurrence"}) {
      FormulaStats f;
      f.name = name;
      stats_.push_back(std::move(f));
    }
  }

  VerifyReport run() {
    const auto start = std::chrono::steady_clock::now();
    for (int t = 0; t < config_.trials; ++t) {
      Rng rng = Rng::for_trial(config_.seed, static_cast<std::uint64_t>(t));
      trial(rng);
    }
    VerifyReport report;
    report.config = config_;
    report.formulas = stats_;
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  }

 private:
  FormulaStats& stat(const std::string& name) {
    for (auto& f : stats_)
      if (f.name == name) return f;
    throw std::logic_error("unknown formula " + name);
  }

  void skip(const std::string& name, const std::string& reason) {
    auto& f = stat(name);
    ++f.skipped;
    ++f.skip_reasons[reason];
  }

  void compare(const std::string& name, const std::string& inputs, const BigInt& expected,
               const BigInt& got) {
    auto& f = stat(name);
    if (expected == got) {
      ++f.passed;
    } else {
      ++f.failed;
      if (!f.first_failure)
        f.first_failure = Counterexample{inputs, expected.str(), got.str()};
    }
  }

  void outcome(const std::string& name, const std::string& inputs, bool ok,
               const std::string& detail) {
    auto& f = stat(name);
    if (ok) {
      ++f.passed;
    } else {
      ++f.failed;
      if (!f.first_failure) f.first_failure = Counterexample{inputs, "pass", detail};
    }
  }

  // Expansion size of (X,Y)*U.
  std::uint64_t star_size(const KneadingPair& pair, const Word& u) const {
    const auto c = counts(u);
    return std::uint64_t(c.n_l) * pair.x.size() + std::uint64_t(c.n_r) * pair.y.size();
  }

  void trial(Rng& rng) {
    const KneadingPair outer =
        gen_admissible_pair(rng, config_.max_outer_len, config_.retry_cap);
    const KneadingPair inner =
        gen_admissible_pair(rng, config_.max_inner_len, config_.retry_cap);
    const Word s = gen_primitive_word(rng, config_.max_inner_len, config_.retry_cap);
    Word w = s;
    for (int attempt = 0; rotation_equivalent(s, w); ++attempt) {
      if (attempt > config_.retry_cap)
        throw ResourceLimitError("verify trial: no second orbit word found");
      w = gen_primitive_word(rng, config_.max_inner_len, config_.retry_cap);
    }
    const unsigned n = 1 + static_cast<unsigned>(rng.below(config_.max_power));
    const std::string tag = "outer=(" + outer.x.str() + "," + outer.y.str() + ") inner=(" +
                            inner.x.str() + "," + inner.y.str() + ") S=" + s.str() +
                            " W=" + w.str() + " n=" + std::to_string(n);

    if (outer.degenerate) {
      for (const char* name :
           {"c_star", "l_star", "c_star_pair", "c_star_power", "string_index_power",
            "trip_star", "trip_star_power", "genus_star_knot", "genus_star_link",
            "genus_power", "main_theorem", "tail_recurrence"})
        skip(name, "degenerate outer pair");
      return;
    }

    single_product_checks(outer, s, w, tag);

    if (inner.degenerate) {
      for (const char* name : {"c_star_pair", "c_star_power", "string_index_power",
                               "trip_star_power", "genus_star_link", "genus_power",
                               "tail_recurrence"})
        skip(name, "degenerate inner pair");
    } else {
      pair_product_checks(outer, inner, n, tag);
    }

    main_theorem_trial(outer, rng, tag);
  }

  void single_product_checks(const KneadingPair& outer, const Word& s, const Word& w,
                             const std::string& tag) {
    if (star_size(outer, s) > config_.length_cap ||
        star_size(outer, w) > config_.length_cap) {
      for (const char* name : {"c_star", "l_star", "trip_star", "genus_star_knot"})
        skip(name, "expansion exceeds length cap");
      return;
    }
    const Word ps = star(outer, s);
    const Word pw = star(outer, w);

    compare("c_star", tag, crossing_number(OrbitSet::make({ps})), c_star(outer, s));
    compare("l_star", tag, linking_number(OrbitSet::make({ps, pw}), 1, 2),
            l_star(outer, s, w));
    compare("trip_star", tag, trip_number(ps), trip_star(outer, s));
    const auto knot = direct_invariants(OrbitSet::make({ps}));
    compare("genus_star_knot", tag, knot.genus, genus_star_knot(outer, s));
  }

  void pair_product_checks(const KneadingPair& outer, const KneadingPair& inner, unsigned n,
                           const std::string& tag) {
    // Tail recurrence: expand levels while they fit and compare each tail
    // symbol against the sign-case prediction.
    {
      const SignCase sc = sign_case(outer, inner);
      bool ok = true;
      std::string detail;
      unsigned checked = 0;
      KneadingPair cur = outer;
      for (unsigned level = 1; level <= std::max(n, 3u); ++level) {
        if (star_size(cur, inner.x) > config_.length_cap ||
            star_size(cur, inner.y) > config_.length_cap)
          break;
        cur = star_pair(cur, inner);
        ++checked;
        if (cur.tail_symbol != sc.predicted_tail(level)) {
          ok = false;
          detail = "level " + std::to_string(level) + " tail mismatch";
          break;
        }
      }
      if (checked == 0)
        skip("tail_recurrence", "expansion exceeds length cap");
      else
        outcome("tail_recurrence", tag, ok, detail);
    }

    compare("string_index_power", tag, string_index_power(outer, inner, 0),
            BigInt(outer.x.size() + outer.y.size()));

    KneadingPair expanded = outer;
    bool fits = true;
    for (unsigned level = 1; level <= n; ++level) {
      if (star_size(expanded, inner.x) > config_.length_cap ||
          star_size(expanded, inner.y) > config_.length_cap) {
        fits = false;
        break;
      }
      expanded = star_pair(expanded, inner);
    }
    if (!fits) {
      for (const char* name : {"c_star_pair", "c_star_power", "string_index_power",
                               "trip_star_power", "genus_star_link", "genus_power"})
        skip(name, "expansion exceeds length cap");
      return;
    }

    const auto oracle = direct_invariants(OrbitSet::make({expanded.x, expanded.y}));
    compare("c_star_power", tag, oracle.crossings, c_star_power(outer, inner, n));
    compare("string_index_power", tag, oracle.string_index,
            string_index_power(outer, inner, n));
    const TripPair trips = trip_star_power(outer, inner, n);
    compare("trip_star_power", tag + " [component 1]", oracle.trip[0], trips.t_a);
    compare("trip_star_power", tag + " [component 2]", oracle.trip[1], trips.t_b);
    compare("genus_power", tag, oracle.genus, genus_power(outer, inner, n));
    if (n == 1) {
      compare("c_star_pair", tag, oracle.crossings, c_star_pair(outer, inner));
      compare("genus_star_link", tag, oracle.genus, genus_star_link(outer, inner));
    } else {
      const auto one = star_pair(outer, inner);
      const auto oracle1 = direct_invariants(OrbitSet::make({one.x, one.y}));
      compare("c_star_pair", tag, oracle1.crossings, c_star_pair(outer, inner));
      compare("genus_star_link", tag, oracle1.genus, genus_star_link(outer, inner));
    }
  }

  void main_theorem_trial(const KneadingPair& outer, Rng& rng, const std::string& tag) {
    OrbitSet orbit = gen_orbit_set(rng, 3, config_.max_inner_len, config_.retry_cap);
    std::uint64_t total = 0;
    for (const Word& z : orbit.words()) total += star_size(outer, z);
    if (total > config_.length_cap) {
      skip("main_theorem", "expansion exceeds length cap");
      return;
    }
    std::string inputs = tag + " orbit={";
    for (const Word& z : orbit.words()) inputs += z.str() + " ";
    inputs += "}";
    const auto report = main_theorem_check(outer, orbit);
    outcome("main_theorem", inputs, report.pass,
            report.failures.empty() ? "fail" : report.failures.front());
  }

  VerifyConfig config_;
  std::vector<FormulaStats> stats_;
};

}  // namespace

VerifyReport run_suite(const VerifyConfig& config) { return Suite(config).run(); }

bool GrowthTable::all_match() const {
  for (const auto& row : rows)
    if (!row.oracle_match) return false;
  return true;
}

GrowthTable growth_table(const KneadingPair& pair, const KneadingPair& inner, unsigned n_max,
                         std::size_t length_cap) {
  if (pair.degenerate || inner.degenerate)
    throw DegeneratePairError("growth_table: both pairs must be non-degenerate");
  GrowthTable table;
  const GrowthRow* prev = nullptr;
  for (unsigned n = 1; n <= n_max; ++n) {
    GrowthRow row;
    row.n = n;
    row.string_index = string_index_power(pair, inner, n);
    row.crossings = c_star_power(pair, inner, n);
    row.genus = genus_power(pair, inner, n);
    const TripPair trips = trip_star_power(pair, inner, n);
    row.trip_a = trips.t_a;
    row.trip_b = trips.t_b;
    if (prev) {
      row.si_ratio = Rational(row.string_index, prev->string_index);
      if (prev->genus != 0) row.genus_ratio = Rational(row.genus, prev->genus);
      if (prev->trip_a != 0) row.trip_ratio = Rational(row.trip_a, prev->trip_a);
    }
    if (row.string_index <= length_cap) {
      try {
        const KneadingPair expanded = star_power(pair, inner, n, length_cap);
        const auto oracle = direct_invariants(OrbitSet::make({expanded.x, expanded.y}));
        row.oracle_checked = true;
        row.oracle_match = oracle.crossings == row.crossings &&
                           oracle.string_index == row.string_index &&
                           oracle.genus == row.genus && oracle.trip[0] == row.trip_a &&
                           oracle.trip[1] == row.trip_b;
      } catch (const ResourceLimitError&) {
        row.oracle_checked = false;
      }
    }
    table.rows.push_back(std::move(row));
    prev = &table.rows.back();
  }
  return table;
}

}  // namespace lorenz
