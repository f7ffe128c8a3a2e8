// Acceptance gate: nine end-to-end checks, one line of output each, exit
// code = number of failed checks.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "lorenz/cli.hpp"
#include "lorenz/verify.hpp"

using namespace lorenz;
using nlohmann::json;

namespace {

struct Check {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }

  template <typename A, typename B>
  void equal(const A& got, const B& want, const std::string& what) {
    std::ostringstream os;
    os << what << ": got " << got << ", want " << want;
    require(got == want, os.str());
  }
};

double run_timed(const std::function<void(Check&)>& body, Check& check) {
  const auto start = std::chrono::steady_clock::now();
  body(check);
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// r versus a * (2 + sqrt(6)) in exact arithmetic: r - 2a < a sqrt(6) is
// decided by sign and then by squaring (equality cannot occur, sqrt(6) being
// irrational).
int cmp_ratio(const Rational& r, const Rational& a) {
  const Rational d = r - 2 * a;
  if (d < 0) return -1;
  const Rational lhs = d * d;
  const Rational rhs = 6 * a * a;
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

bool within_one_percent_of_growth_rate(const Rational& r) {
  return cmp_ratio(r, Rational(99, 100)) >= 0 && cmp_ratio(r, Rational(101, 100)) <= 0;
}

void criterion_1(Check& c) {
  std::ostringstream out, err;
  const int code = run_cli({"--json", "braid", "LRRLR"}, out, err);
  c.equal(code, 0, "exit code");
  const json r = json::parse(out.str()).at("result");
  c.require(r.at("pi") == json::array({4, 5, 1, 2, 3}), "pi = [4,5,1,2,3]");
  c.require(r.at("word") == json::array({2, 1, 3, 2, 4, 3}), "word s2 s1 s3 s2 s4 s3");
  c.equal(r.at("word").size(), std::size_t{6}, "word length");
  c.require(r.at("crossings") == "6", "crossing number 6");
  c.require(r.at("trip") == json::array({"2"}), "trip number 2");
  c.require(r.at("genus") == "1", "genus 1");

  // The emitted word really realizes pi: each letter swaps a descent of the
  // endpoint list until sorted.
  std::vector<int> cur{4, 5, 1, 2, 3};
  for (const auto& g : r.at("word")) {
    const int a = g.get<int>();
    c.require(a >= 1 && a < 5 && cur[a - 1] > cur[a], "letter swaps a descent");
    std::swap(cur[a - 1], cur[a]);
  }
  c.require(std::is_sorted(cur.begin(), cur.end()), "word realizes pi");
}

void criterion_2(Check& c) {
  const KneadingPair p = parse_pair("LR,RL");
  c.equal(star(p, Word("LR")).str(), std::string("LRRL"), "(LR,RL)*LR");
  c.equal(star(p, Word("RL")).str(), std::string("RLLR"), "(LR,RL)*RL");
  c.require(is_maximal(Word("LRRL")), "LRRL maximal");
  c.require(is_minimal(Word("RLLR")), "RLLR minimal");
}

void criterion_3(Check& c) {
  const KneadingPair named = parse_pair("LRRRL,RLLR");
  const Word z = named.x;
  const Word prod = star(named, z);
  c.equal(prod.str(), std::string("LRRRL") + "RLLR" + "RLLR" + "RLLR" + "LRRRL",
          "22-symbol expansion");
  c.equal(prod.size(), std::size_t{22}, "expansion length");
  c.equal(trip_number(prod), std::int64_t{6}, "trip number");
  c.equal(trip_star(named, z),
          BigInt(2 * trip_number(named.x) + 3 * trip_number(named.y) + trip_number(z)),
          "trip formula 2 t(X) + 3 t(Y) + t(Z)");
  c.equal(string_index_power(named, named, 1), BigInt(40), "string index at n=1");
}

void criterion_4(Check& c) {
  Rng rng = Rng::for_trial(2024, 0);
  for (int t = 0; t < 200; ++t) {
    const KneadingPair outer = gen_nondegenerate_pair(rng, 8);
    const Word s = gen_primitive_word(rng, 6);
    Word w = gen_primitive_word(rng, 6);
    while (rotation_equivalent(s, w)) w = gen_primitive_word(rng, 6);
    const KneadingPair inner = gen_nondegenerate_pair(rng, 6);

    const Word ps = star(outer, s);
    const Word pw = star(outer, w);
    const std::string tag = " [trial " + std::to_string(t) + "]";
    if (!is_primitive(ps) || rotation_equivalent(ps, pw)) {
      c.require(false, "sampled products not a valid link" + tag);
      continue;
    }
    const OrbitSet knot = OrbitSet::make({ps});
    const InvariantReport knot_report = direct_invariants(knot);
    c.equal(c_star(outer, s), knot_report.crossings, "c_star" + tag);
    c.equal(trip_star(outer, s), knot_report.trip[0], "trip_star" + tag);
    c.equal(genus_star_knot(outer, s), knot_report.genus, "genus_star_knot" + tag);
    c.equal(l_star(outer, s, w), linking_number(OrbitSet::make({ps, pw}), 1, 2),
            "l_star" + tag);

    const KneadingPair prod = star_pair(outer, inner);
    const InvariantReport link_report =
        direct_invariants(OrbitSet::make({prod.x, prod.y}));
    c.equal(c_star_pair(outer, inner), link_report.crossings, "c_star_pair" + tag);
    c.equal(genus_star_link(outer, inner), link_report.genus, "genus_star_link" + tag);
    if (!c.pass) break;
  }
}

void criterion_5(Check& c) {
  Rng rng = Rng::for_trial(2024, 1);
  std::vector<std::pair<KneadingPair, KneadingPair>> cases;
  const KneadingPair named = parse_pair("LRRRL,RLLR");
  cases.emplace_back(named, named);
  while (cases.size() < 6) {
    const KneadingPair outer = gen_nondegenerate_pair(rng, 6);
    const KneadingPair inner = gen_nondegenerate_pair(rng, 5);
    try {
      star_power(outer, inner, 3);
    } catch (const ResourceLimitError&) {
      continue;
    }
    cases.emplace_back(outer, inner);
  }
  c.equal(string_index_power(named, named, 2), BigInt(178), "named pair n=2 string index");
  for (std::size_t k = 0; k < cases.size(); ++k) {
    const auto& [outer, inner] = cases[k];
    for (unsigned n = 1; n <= 3; ++n) {
      const std::string tag =
          " [pair " + std::to_string(k) + " n=" + std::to_string(n) + "]";
      const KneadingPair expanded = star_power(outer, inner, n);
      const InvariantReport direct =
          direct_invariants(OrbitSet::make({expanded.x, expanded.y}));
      c.equal(c_star_power(outer, inner, n), direct.crossings, "c_star_power" + tag);
      c.equal(string_index_power(outer, inner, n), direct.string_index,
              "string_index_power" + tag);
      c.equal(genus_power(outer, inner, n), direct.genus, "genus_power" + tag);
      const TripPair tp = trip_star_power(outer, inner, n);
      c.equal(tp.t_a, direct.trip[0], "trip_star_power a" + tag);
      c.equal(tp.t_b, direct.trip[1], "trip_star_power b" + tag);
      if (!c.pass) return;
    }
  }
}

void criterion_6(Check& c) {
  const KneadingPair tail_l = parse_pair("LRRRL,RLLR");
  const KneadingPair tail_r = parse_pair("LRR,RLLR");
  const std::vector<std::pair<KneadingPair, KneadingPair>> combos = {
      {tail_l, tail_l}, {tail_l, tail_r}, {tail_r, tail_l}, {tail_r, tail_r}};
  for (const auto& [outer, inner] : combos) {
    const SignCase sc = sign_case(outer, inner);
    KneadingPair cur = outer;
    for (unsigned n = 1; n <= 6; ++n) {
      cur = star_pair(cur, inner);
      const std::string tag = " [case " + std::to_string(sc.case_id) + " n=" +
                              std::to_string(n) + "]";
      c.equal(std::string(1, to_char(cur.tail_symbol)),
              std::string(1, to_char(sc.predicted_tail(n))), "tail symbol" + tag);
    }
  }
}

void criterion_7(Check& c) {
  Rng rng = Rng::for_trial(2024, 2);
  int checked = 0;
  int attempts = 0;
  while (checked < 50 && attempts < 5000) {
    ++attempts;
    const KneadingPair pair = gen_nondegenerate_pair(rng, 7);
    const OrbitSet inner = gen_orbit_set(rng, 3, 6);
    if (pair.x.size() * inner.total_length() > 4000) continue;
    const MainTheoremReport report = main_theorem_check(pair, inner);
    if (!report.pass) {
      c.require(false, "sample " + std::to_string(checked) + ": " +
                           (report.failures.empty() ? "unspecified" : report.failures[0]));
      return;
    }
    ++checked;
  }
  c.equal(checked, 50, "verified sample count");
}

void criterion_8(Check& c) {
  Rng rng = Rng::for_trial(2024, 3);
  for (int t = 0; t < 100; ++t) {
    const OrbitSet os = gen_orbit_set(rng, 4, 7);
    const BigInt parity =
        crossing_number(os) - static_cast<long long>(os.total_length()) - os.components();
    c.require(parity % 2 == 0, "crossings - strands - components even [trial " +
                                   std::to_string(t) + "]");
  }

  auto admissible = [](const Word& x, const Word& y) {
    return std::holds_alternative<KneadingPair>(check_admissible(x, y));
  };
  auto flip_first = [](const Word& w) {
    std::string s = w.str();
    s[0] = s[0] == 'L' ? 'R' : 'L';
    return Word(std::move(s));
  };
  for (int t = 0; t < 100; ++t) {
    const KneadingPair outer = gen_admissible_pair(rng, 6);
    const KneadingPair inner = gen_admissible_pair(rng, 5);
    const std::string tag = " [trial " + std::to_string(t) + "]";
    c.require(admissible(star(outer, inner.x), star(outer, inner.y)),
              "product of admissible factors admissible" + tag);

    Word cx = outer.x, cy = outer.y, cs = inner.x, cw = inner.y;
    switch (rng.below(4)) {
      case 0: cx = flip_first(cx); break;
      case 1: cy = flip_first(cy); break;
      case 2: cs = flip_first(cs); break;
      default: cw = flip_first(cw); break;
    }
    const bool factor_ok = admissible(cx, cy) && admissible(cs, cw);
    c.require(!factor_ok, "corrupted factor inadmissible" + tag);
    c.require(!admissible(star(cx, cy, cs), star(cx, cy, cw)),
              "product of corrupted factors inadmissible" + tag);
  }
}

void criterion_9(Check& c) {
  const KneadingPair named = parse_pair("LRRRL,RLLR");
  const GrowthTable table = growth_table(named, named, 10, 2000);
  c.equal(table.rows.size(), std::size_t{10}, "row count");
  c.require(table.all_match(), "brute-force cross-checks match");
  int oracle_rows = 0;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const GrowthRow& row = table.rows[i];
    if (row.oracle_checked) ++oracle_rows;
    if (i > 0) {
      c.require(row.genus > table.rows[i - 1].genus,
                "genus strictly increasing at n=" + std::to_string(row.n));
      c.require(row.trip_a > table.rows[i - 1].trip_a,
                "trip strictly increasing at n=" + std::to_string(row.n));
    }
    if (row.n >= 6) {
      c.require(row.si_ratio.has_value(), "ratio present at n=" + std::to_string(row.n));
      if (row.si_ratio)
        c.require(within_one_percent_of_growth_rate(*row.si_ratio),
                  "string-index ratio within 1% of 2+sqrt(6) at n=" + std::to_string(row.n));
    }
  }
  c.require(oracle_rows >= 3, "at least three rows cross-checked brute force");
}

struct Criterion {
  const char* title;
  std::function<void(Check&)> body;
  double time_limit = 0;  // seconds, 0 = no bound
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"braid LRRLR reproduces the worked example", criterion_1, 1.0},
      {"(LR,RL) products LRRL / RLLR with maximality and minimality", criterion_2, 0},
      {"22-symbol expansion, trip formula and n=1 string index", criterion_3, 0},
      {"200-trial exact equivalence of single-product closed forms", criterion_4, 60.0},
      {"iterated closed forms match brute force for n = 1..3", criterion_5, 0},
      {"tail-symbol recurrence across the four sign cases, n = 1..6", criterion_6, 0},
      {"product braid structure on 50 random samples", criterion_7, 0},
      {"crossing parity and product admissibility equivalence", criterion_8, 0},
      {"exponential growth of string-index ratios toward 2+sqrt(6)", criterion_9, 5.0},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    double seconds = 0;
    try {
      seconds = run_timed(criteria[i].body, check);
    } catch (const std::exception& e) {
      check.require(false, std::string("exception: ") + e.what());
    }
    if (criteria[i].time_limit > 0 && seconds > criteria[i].time_limit) {
      std::ostringstream os;
      os << "runtime " << seconds << " s exceeds " << criteria[i].time_limit << " s";
      check.require(false, os.str());
    }
    std::cout << (check.pass ? "PASS" : "FAIL") << " " << (i + 1) << ": "
              << criteria[i].title;
    if (!check.pass) std::cout << " -- " << check.detail;
    std::cout << "\n";
    if (!check.pass) ++failures;
  }
  return failures;
}
