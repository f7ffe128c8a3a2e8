#include "lorenz/cli.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "lorenz/verify.hpp"

namespace lorenz {

namespace {

using OJson = nlohmann::ordered_json;

std::string ratio_text(const std::optional<Rational>& r) {
  if (!r) return "-";
  std::ostringstream os;
  os << std::fixed << std::setprecision(5) << r->convert_to<double>();
  return os.str();
}

OJson ratio_json(const std::optional<Rational>& r) {
  if (!r) return nullptr;
  return r->str();
}

std::string word_list_text(const std::vector<int>& word) {
  if (word.empty()) return "(empty)";
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i)
    s += (i ? " s" : "s") + std::to_string(word[i]);
  return s;
}

std::string int_list_text(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::string linking_key(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void braid_fields(OJson& result, const LorenzBraid& braid) {
  result["strands"] = braid.strands;
  result["pi"] = braid.pi;
  result["word"] = braid_word(braid.pi);
  result["components"] = braid.component_of;
}

void invariant_fields(OJson& result, const InvariantReport& report) {
  result["crossings"] = report.crossings.str();
  OJson linking = OJson::object();
  for (const auto& [key, value] : report.linking)
    linking[linking_key(key.first, key.second)] = value.str();
  result["linking"] = std::move(linking);
  OJson trip = OJson::array();
  for (const BigInt& t : report.trip) trip.push_back(t.str());
  result["trip"] = std::move(trip);
  result["genus"] = report.genus.str();
  result["string_index"] = report.string_index.str();
}

void invariant_text(std::ostream& out, const InvariantReport& report) {
  out << "components: " << report.components << "\n";
  out << "string index: " << report.string_index << "\n";
  out << "crossings: " << report.crossings << "\n";
  for (const auto& [key, value] : report.linking)
    out << "linking " << linking_key(key.first, key.second) << ": " << value << "\n";
  out << "trip:";
  for (const BigInt& t : report.trip) out << " " << t;
  out << "\n";
  out << "genus: " << report.genus << "\n";
}

void emit(std::ostream& out, bool json, const std::string& command, OJson input,
          OJson result, const std::function<void(std::ostream&)>& text) {
  if (json) {
    OJson doc;
    doc["command"] = command;
    doc["input"] = std::move(input);
    doc["result"] = std::move(result);
    out << doc.dump(2) << "\n";
  } else {
    text(out);
  }
}

struct CheckArgs {
  std::string pair;
};

int cmd_check(const CheckArgs& args, bool json, std::ostream& out) {
  const auto [x, y] = parse_pair_words(args.pair);
  const auto verdict = check_admissible(x, y);
  OJson input{{"pair", args.pair}};
  if (const auto* fail = std::get_if<AdmissibilityFailure>(&verdict)) {
    OJson result;
    result["admissible"] = false;
    const char* condition = nullptr;
    switch (fail->condition) {
      case AdmissibilityCondition::x_starts_with_l: condition = "x_starts_with_l"; break;
      case AdmissibilityCondition::y_starts_with_r: condition = "y_starts_with_r"; break;
      case AdmissibilityCondition::shift_not_below_x: condition = "shift_not_below_x"; break;
      case AdmissibilityCondition::shift_not_above_y: condition = "shift_not_above_y"; break;
    }
    result["violation"] = OJson{{"word", fail->word_index == 0 ? "X" : "Y"},
                                {"shift", fail->shift},
                                {"condition", condition},
                                {"detail", fail->describe()}};
    emit(out, json, "check", std::move(input), std::move(result), [&](std::ostream& os) {
      os << "admissible: no\n" << "violation: " << fail->describe() << "\n";
    });
    return 3;
  }
  const KneadingPair& pair = std::get<KneadingPair>(verdict);
  OJson result;
  result["admissible"] = true;
  result["m"] = pair.tail_length;
  result["tail"] = std::string(1, to_char(pair.tail_symbol));
  result["degenerate"] = pair.degenerate;
  result["x"] = OJson{{"word", pair.x.str()},
                      {"maximal", is_maximal(pair.x)},
                      {"minimal", is_minimal(pair.x)}};
  result["y"] = OJson{{"word", pair.y.str()},
                      {"maximal", is_maximal(pair.y)},
                      {"minimal", is_minimal(pair.y)}};
  emit(out, json, "check", std::move(input), std::move(result), [&](std::ostream& os) {
    os << "admissible: yes\n";
    os << "m: " << pair.tail_length << "\n";
    os << "tail: " << to_char(pair.tail_symbol) << "\n";
    os << "degenerate: " << (pair.degenerate ? "yes" : "no") << "\n";
    os << "X " << pair.x.str() << ": maximal " << (is_maximal(pair.x) ? "yes" : "no")
       << ", minimal " << (is_minimal(pair.x) ? "yes" : "no") << "\n";
    os << "Y " << pair.y.str() << ": maximal " << (is_maximal(pair.y) ? "yes" : "no")
       << ", minimal " << (is_minimal(pair.y) ? "yes" : "no") << "\n";
  });
  return 0;
}

struct StarArgs {
  std::string pair;
  std::string word;
  std::string inner;
  unsigned power = 1;
  std::size_t length_cap = default_length_cap;
};

int cmd_star(const StarArgs& args, bool json, std::ostream& out) {
  const KneadingPair pair = parse_pair(args.pair);
  OJson input{{"pair", args.pair}};
  if (!args.word.empty()) {
    const Word product = star(pair, Word::parse(args.word));
    input["word"] = args.word;
    emit(out, json, "star", std::move(input), OJson{{"word", product.str()}},
         [&](std::ostream& os) { os << product.str() << "\n"; });
    return 0;
  }
  const KneadingPair inner = parse_pair(args.inner);
  input["inner"] = args.inner;
  input["power"] = args.power;
  const KneadingPair result = star_power(pair, inner, args.power, args.length_cap);
  emit(out, json, "star", std::move(input),
       OJson{{"x", result.x.str()}, {"y", result.y.str()}}, [&](std::ostream& os) {
         os << result.x.str() << "," << result.y.str() << "\n";
       });
  return 0;
}

struct BraidArgs {
  std::vector<std::string> words;
};

int cmd_braid(const BraidArgs& args, bool json, std::ostream& out) {
  std::vector<Word> words;
  words.reserve(args.words.size());
  for (const auto& text : args.words) words.push_back(Word::parse(text));
  const OrbitSet orbits = OrbitSet::make(std::move(words));
  const InvariantReport report = direct_invariants(orbits);
  const LorenzBraid braid = lorenz_braid(orbits);
  OJson input{{"words", args.words}};
  OJson result;
  braid_fields(result, braid);
  invariant_fields(result, report);
  result["mode"] = "direct";
  emit(out, json, "braid", std::move(input), std::move(result), [&](std::ostream& os) {
    os << "strands: " << braid.strands << "\n";
    os << "pi: " << int_list_text(braid.pi) << "\n";
    os << "word: " << word_list_text(braid_word(braid.pi)) << "\n";
    os << "components: " << int_list_text(braid.component_of) << "\n";
    os << "crossings: " << report.crossings << "\n";
    for (const auto& [key, value] : report.linking)
      os << "linking " << linking_key(key.first, key.second) << ": " << value << "\n";
  });
  return 0;
}

struct TemplateArgs {
  std::string pair;
};

int cmd_template(const TemplateArgs& args, bool json, std::ostream& out) {
  const KneadingPair pair = parse_pair(args.pair);
  const TemplateWord word = renorm_template(pair);
  OJson result;
  result["strips"] = word.strips;
  result["sigmas"] = word.sigmas;
  result["beta_index"] = word.beta_index;
  result["beta_sign"] = word.beta_positive ? "+" : "-";
  emit(out, json, "template", OJson{{"pair", args.pair}}, std::move(result),
       [&](std::ostream& os) {
         os << "strips: " << word.strips << "\n";
         os << "word: " << word.to_string() << "\n";
       });
  return 0;
}

struct InvariantsArgs {
  std::vector<std::string> inputs;
  std::string inner;
  unsigned power = 1;
  bool both = false;
  std::size_t length_cap = default_length_cap;
};

int cmd_invariants(const InvariantsArgs& args, bool json, std::ostream& out,
                   std::ostream& err) {
  const bool pair_mode = args.inputs.size() == 1 &&
                         args.inputs.front().find(',') != std::string::npos;
  if (pair_mode) {
    const KneadingPair pair = parse_pair(args.inputs.front());
    if (args.inner.empty())
      throw CLI::ValidationError("invariants", "pair form requires --inner S,W");
    const KneadingPair inner = parse_pair(args.inner);
    const InvariantReport closed = closed_form_invariants(pair, inner, args.power);
    OJson input{{"pair", args.inputs.front()},
                {"inner", args.inner},
                {"power", args.power}};
    OJson result;
    invariant_fields(result, closed);
    bool match = true;
    if (args.both) {
      const KneadingPair expanded = star_power(pair, inner, args.power, args.length_cap);
      const InvariantReport direct =
          direct_invariants(OrbitSet::make({expanded.x, expanded.y}));
      match = direct.crossings == closed.crossings &&
              direct.string_index == closed.string_index && direct.genus == closed.genus &&
              direct.linking == closed.linking && direct.trip == closed.trip;
      result["mode"] = "both";
      result["match"] = match;
      OJson direct_result;
      invariant_fields(direct_result, direct);
      result["direct"] = std::move(direct_result);
    } else {
      result["mode"] = "closed-form";
    }
    emit(out, json, "invariants", std::move(input), std::move(result),
         [&](std::ostream& os) {
           invariant_text(os, closed);
           os << "mode: " << (args.both ? "both" : "closed-form") << "\n";
           if (args.both) os << "match: " << (match ? "yes" : "no") << "\n";
         });
    if (!match) {
      err << "closed-form and direct invariants disagree\n";
      return 4;
    }
    return 0;
  }
  std::vector<Word> words;
  for (const auto& text : args.inputs) words.push_back(Word::parse(text));
  const OrbitSet orbits = OrbitSet::make(std::move(words));
  const InvariantReport report = direct_invariants(orbits);
  OJson result;
  invariant_fields(result, report);
  result["mode"] = "direct";
  emit(out, json, "invariants", OJson{{"words", args.inputs}}, std::move(result),
       [&](std::ostream& os) {
         invariant_text(os, report);
         os << "mode: direct\n";
       });
  return 0;
}

struct VerifyArgs {
  VerifyConfig config;
};

int cmd_verify(const VerifyArgs& args, bool json, std::ostream& out) {
  const VerifyReport report = run_suite(args.config);
  if (json) {
    OJson formulas = OJson::array();
    for (const auto& f : report.formulas) {
      OJson entry;
      entry["name"] = f.name;
      entry["passed"] = f.passed;
      entry["failed"] = f.failed;
      entry["skipped"] = f.skipped;
      OJson reasons = OJson::object();
      for (const auto& [reason, count] : f.skip_reasons) reasons[reason] = count;
      entry["skip_reasons"] = std::move(reasons);
      if (f.first_failure) {
        entry["first_failure"] = OJson{{"inputs", f.first_failure->inputs},
                                       {"expected", f.first_failure->expected},
                                       {"got", f.first_failure->got}};
      } else {
        entry["first_failure"] = nullptr;
      }
      formulas.push_back(std::move(entry));
    }
    OJson doc;
    doc["command"] = "verify";
    doc["input"] = OJson{{"seed", report.config.seed},
                         {"trials", report.config.trials},
                         {"max_outer", report.config.max_outer_len},
                         {"max_inner", report.config.max_inner_len},
                         {"max_power", report.config.max_power},
                         {"length_cap", report.config.length_cap}};
    doc["result"] = OJson{{"formulas", std::move(formulas)},
                          {"all_passed", report.all_passed()},
                          {"wall_seconds", report.wall_seconds}};
    out << doc.dump(2) << "\n";
  } else {
    out << "trials: " << report.config.trials << "  seed: " << report.config.seed << "\n";
    out << std::left << std::setw(20) << "formula" << std::right << std::setw(8) << "passed"
        << std::setw(8) << "failed" << std::setw(9) << "skipped" << "\n";
    for (const auto& f : report.formulas) {
      out << std::left << std::setw(20) << f.name << std::right << std::setw(8) << f.passed
          << std::setw(8) << f.failed << std::setw(9) << f.skipped << "\n";
      if (f.first_failure)
        out << "  first failure: " << f.first_failure->inputs << " expected "
            << f.first_failure->expected << ", got " << f.first_failure->got << "\n";
    }
    out << (report.all_passed() ? "all formulas verified" : "MISMATCH FOUND") << "\n";
  }
  return report.all_passed() ? 0 : 4;
}

struct GrowthArgs {
  std::string pair;
  std::string inner;
  unsigned n_max = 10;
  std::size_t length_cap = default_length_cap;
};

int cmd_growth(const GrowthArgs& args, bool json, std::ostream& out) {
  const KneadingPair pair = parse_pair(args.pair);
  const KneadingPair inner = parse_pair(args.inner);
  const GrowthTable table = growth_table(pair, inner, args.n_max, args.length_cap);
  if (json) {
    OJson rows = OJson::array();
    for (const auto& row : table.rows) {
      OJson r;
      r["n"] = row.n;
      r["string_index"] = row.string_index.str();
      r["crossings"] = row.crossings.str();
      r["trip"] = OJson::array({row.trip_a.str(), row.trip_b.str()});
      r["genus"] = row.genus.str();
      r["si_ratio"] = ratio_json(row.si_ratio);
      r["genus_ratio"] = ratio_json(row.genus_ratio);
      r["trip_ratio"] = ratio_json(row.trip_ratio);
      r["oracle"] = row.oracle_checked ? (row.oracle_match ? "match" : "mismatch")
                                       : "skipped";
      rows.push_back(std::move(r));
    }
    OJson doc;
    doc["command"] = "growth";
    doc["input"] = OJson{{"pair", args.pair},
                         {"inner", args.inner},
                         {"n_max", args.n_max},
                         {"length_cap", args.length_cap}};
    doc["result"] = OJson{{"rows", std::move(rows)}, {"all_match", table.all_match()}};
    out << doc.dump(2) << "\n";
  } else {
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"n", "strings", "crossings", "trip", "genus", "si_ratio", "oracle"});
    for (const auto& row : table.rows)
      cells.push_back({std::to_string(row.n), row.string_index.str(), row.crossings.str(),
                       row.trip_a.str() + "/" + row.trip_b.str(), row.genus.str(),
                       ratio_text(row.si_ratio),
                       row.oracle_checked ? (row.oracle_match ? "match" : "MISMATCH")
                                          : "-"});
    std::vector<std::size_t> widths(cells.front().size(), 0);
    for (const auto& row : cells)
      for (std::size_t c = 0; c < row.size(); ++c)
        widths[c] = std::max(widths[c], row[c].size());
    for (const auto& row : cells) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out << "  ";
        out << (c == 0 ? std::left : std::right) << std::setw(static_cast<int>(widths[c]))
            << row[c];
      }
      out << "\n";
    }
  }
  return table.all_match() ? 0 : 4;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lorenz knots and links from symbolic dynamics"};
  app.name("lorenz");
  bool json = false;
  app.add_flag("--json", json, "emit a JSON document instead of text");
  app.require_subcommand(1);

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "admissibility verdict for a pair X,Y");
  check->add_option("pair", check_args.pair, "pair written X,Y")->required();

  StarArgs star_args;
  auto* star_cmd = app.add_subcommand("star", "expand a *-product");
  star_cmd->add_option("pair", star_args.pair, "outer pair X,Y")->required();
  star_cmd->add_option("word", star_args.word, "word Z for (X,Y)*Z");
  star_cmd->add_option("--inner", star_args.inner, "inner pair S,W");
  star_cmd->add_option("--power", star_args.power, "iterate the inner pair n times");
  star_cmd->add_option("--length-cap", star_args.length_cap, "symbol budget");

  BraidArgs braid_args;
  auto* braid_cmd = app.add_subcommand("braid", "Lorenz braid of closed orbits");
  braid_cmd->add_option("words", braid_args.words, "orbit words")->required();

  TemplateArgs template_args;
  auto* template_cmd =
      app.add_subcommand("template", "renormalization template word of a pair");
  template_cmd->add_option("pair", template_args.pair, "pair written X,Y")->required();

  InvariantsArgs inv_args;
  auto* inv_cmd = app.add_subcommand("invariants", "link invariants");
  inv_cmd->add_option("input", inv_args.inputs,
                      "either one pair X,Y (with --inner) or orbit words")
      ->required();
  inv_cmd->add_option("--inner", inv_args.inner, "inner pair S,W");
  inv_cmd->add_option("--power", inv_args.power, "iterate the inner pair n times");
  inv_cmd->add_flag("--both", inv_args.both, "compute closed form and brute force, compare");
  inv_cmd->add_option("--length-cap", inv_args.length_cap, "symbol budget");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "randomized formula verification");
  verify_cmd->add_option("--trials", verify_args.config.trials, "number of trials");
  verify_cmd->add_option("--seed", verify_args.config.seed, "RNG seed");
  verify_cmd->add_option("--max-outer", verify_args.config.max_outer_len,
                         "outer word length bound");
  verify_cmd->add_option("--max-inner", verify_args.config.max_inner_len,
                         "inner word length bound");
  verify_cmd->add_option("--max-power", verify_args.config.max_power, "power bound");
  verify_cmd->add_option("--length-cap", verify_args.config.length_cap, "symbol budget");

  GrowthArgs growth_args;
  auto* growth_cmd = app.add_subcommand("growth", "invariant growth under iteration");
  growth_cmd->add_option("pair", growth_args.pair, "outer pair X,Y")->required();
  growth_cmd->add_option("--inner", growth_args.inner, "inner pair S,W")->required();
  growth_cmd->add_option("--n-max", growth_args.n_max, "largest power");
  growth_cmd->add_option("--length-cap", growth_args.length_cap,
                         "oracle cross-check budget");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (star_cmd->parsed()) {
      const bool has_word = !star_args.word.empty();
      const bool has_inner = !star_args.inner.empty();
      if (has_word == has_inner)
        throw CLI::ValidationError("star", "give either a word Z or --inner S,W");
    }
    if (check->parsed()) return cmd_check(check_args, json, out);
    if (star_cmd->parsed()) return cmd_star(star_args, json, out);
    if (braid_cmd->parsed()) return cmd_braid(braid_args, json, out);
    if (template_cmd->parsed()) return cmd_template(template_args, json, out);
    if (inv_cmd->parsed()) return cmd_invariants(inv_args, json, out, err);
    if (verify_cmd->parsed()) return cmd_verify(verify_args, json, out);
    if (growth_cmd->parsed()) return cmd_growth(growth_args, json, out);
    err << "no command given\n";
    return 2;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const InadmissiblePairError& e) {
    err << "invalid input: " << e.what() << "\n";
    return 3;
  } catch (const InvalidOrbitError& e) {
    err << "invalid input: " << e.what() << "\n";
    return 3;
  } catch (const DegeneratePairError& e) {
    err << "invalid input: " << e.what() << "\n";
    return 3;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return 5;
  }
}

}  // namespace lorenz
