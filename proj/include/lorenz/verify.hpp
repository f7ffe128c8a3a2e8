#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lorenz/invariants.hpp"

namespace lorenz {

/// splitmix64. Hand-rolled so that verification runs are byte-identical
/// across platforms and standard library versions; <random> distributions
/// make no such promise.
struct Rng {
  std::uint64_t state = 0;
  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next();
  /// Uniform-ish value in [0, n); n > 0. Modulo bias is irrelevant here.
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  bool coin() { return next() & 1; }

  /// Independent stream per (seed, trial): trials can run in any order.
  static Rng for_trial(std::uint64_t seed, std::uint64_t trial);
};

inline constexpr int default_retry_cap = 10'000;

Word gen_word(Rng& rng, std::size_t max_len);
Word gen_word_starting(Rng& rng, Symbol first, std::size_t max_len);
Word gen_primitive_word(Rng& rng, std::size_t max_len, int retry_cap = default_retry_cap);

/// Rejection sampling over random (L..., R...) word pairs of length
/// <= max_len until check_admissible succeeds.
KneadingPair gen_admissible_pair(Rng& rng, std::size_t max_len,
                                 int retry_cap = default_retry_cap);
KneadingPair gen_nondegenerate_pair(Rng& rng, std::size_t max_len,
                                    int retry_cap = default_retry_cap);

/// 1..max_words primitive, pairwise non-rotation-equivalent words.
OrbitSet gen_orbit_set(Rng& rng, std::size_t max_words, std::size_t max_len,
                       int retry_cap = default_retry_cap);

struct VerifyConfig {
  std::uint64_t seed = 1;
  int trials = 200;
  int max_outer_len = 8;
  int max_inner_len = 6;
  int max_power = 3;
  std::size_t length_cap = default_length_cap;
  int retry_cap = default_retry_cap;
};

struct Counterexample {
  std::string inputs;
  std::string expected;
  std::string got;
};

struct FormulaStats {
  std::string name;
  long passed = 0;
  long failed = 0;
  long skipped = 0;
  std::map<std::string, long> skip_reasons;
  std::optional<Counterexample> first_failure;
};

struct VerifyReport {
  VerifyConfig config;
  std::vector<FormulaStats> formulas;
  double wall_seconds = 0;
  bool all_passed() const;
};

/// Per trial: sample outer/inner pairs, inner words and an orbit set, then
/// compare every closed form against the brute-force braid, run the
/// structural product-braid check and the tail-symbol recurrence. All
/// comparisons are exact; degenerate pairs and over-cap expansions are
/// recorded as skips, never silently dropped.
VerifyReport run_suite(const VerifyConfig& config);

struct GrowthRow {
  unsigned n = 0;
  BigInt string_index;
  BigInt crossings;
  BigInt genus;
  BigInt trip_a;
  BigInt trip_b;
  std::optional<Rational> si_ratio;     // string_index(n) / string_index(n-1)
  std::optional<Rational> genus_ratio;  // and so on
  std::optional<Rational> trip_ratio;
  bool oracle_checked = false;
  bool oracle_match = true;
};

struct GrowthTable {
  std::vector<GrowthRow> rows;
  bool all_match() const;
};

/// Closed-form invariants of (X,Y)*(S,W)^n for n = 1..n_max; rows whose
/// expansion fits length_cap are additionally rebuilt brute force and
/// compared. Requires both pairs non-degenerate.
GrowthTable growth_table(const KneadingPair& pair, const KneadingPair& inner, unsigned n_max,
                         std::size_t length_cap = default_length_cap);

}  // namespace lorenz
