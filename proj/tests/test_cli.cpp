#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "lorenz/cli.hpp"

using namespace lorenz;
using nlohmann::json;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json result_of(const CliRun& run) { return json::parse(run.out).at("result"); }

}  // namespace

TEST_CASE("check command, text and json") {
  const CliRun ok = cli({"check", "LRRRL,RLLR"});
  CHECK(ok.code == 0);
  CHECK(ok.out ==
        "admissible: yes\n"
        "m: 0\n"
        "tail: L\n"
        "degenerate: no\n"
        "X LRRRL: maximal yes, minimal no\n"
        "Y RLLR: maximal no, minimal yes\n");
  CHECK(ok.err.empty());

  const CliRun bad = cli({"check", "LR,RLR"});
  CHECK(bad.code == 3);  // the verdict goes to stdout, the exit code flags it
  CHECK(bad.out ==
        "admissible: no\n"
        "violation: s^1(Y) starts with L but is not strictly below X\n");

  const CliRun jok = cli({"--json", "check", "LR,RL"});
  CHECK(jok.code == 0);
  const json doc = json::parse(jok.out);
  CHECK(doc.at("command") == "check");
  CHECK(doc.at("input").at("pair") == "LR,RL");
  CHECK(doc.at("result").at("admissible") == true);
  CHECK(doc.at("result").at("degenerate") == true);
  CHECK(doc.at("result").at("m") == 0);
  CHECK(doc.at("result").at("tail") == "R");

  const CliRun jbad = cli({"--json", "check", "RL,RL"});
  CHECK(jbad.code == 3);
  const json verdict = result_of(jbad);
  CHECK(verdict.at("admissible") == false);
  CHECK(verdict.at("violation").at("condition") == "x_starts_with_l");
  CHECK(verdict.at("violation").at("word") == "X");
}

TEST_CASE("star command") {
  const CliRun prod = cli({"star", "LRRRL,RLLR", "LRRRL"});
  CHECK(prod.code == 0);
  CHECK(prod.out == "LRRRLRLLRRLLRRLLRLRRRL\n");

  const CliRun squared = cli({"star", "LR,RL", "--inner", "LR,RL", "--power", "2"});
  CHECK(squared.code == 0);
  CHECK(squared.out == "LRRLRLLR,RLLRLRRL\n");

  const CliRun jprod = cli({"--json", "star", "LR,RL", "--inner", "LR,RL"});
  CHECK(result_of(jprod).at("x") == "LRRL");
  CHECK(result_of(jprod).at("y") == "RLLR");

  // Exactly one of word / --inner.
  CHECK(cli({"star", "LR,RL"}).code == 2);
  CHECK(cli({"star", "LR,RL", "LR", "--inner", "LR,RL"}).code == 2);

  // The terminal-0 spelling of a word is accepted.
  CHECK(cli({"star", "LR,RL", "LR0"}).out == "LRRL\n");
}

TEST_CASE("braid command") {
  const CliRun knot = cli({"braid", "LRRLR"});
  CHECK(knot.code == 0);
  CHECK(knot.out ==
        "strands: 5\n"
        "pi: 4 5 1 2 3\n"
        "word: s2 s1 s3 s2 s4 s3\n"
        "components: 1 1 1 1 1\n"
        "crossings: 6\n");

  const CliRun jknot = cli({"--json", "braid", "LRRLR"});
  const json r = result_of(jknot);
  CHECK(r.at("strands") == 5);
  CHECK(r.at("pi") == json::array({4, 5, 1, 2, 3}));
  CHECK(r.at("word") == json::array({2, 1, 3, 2, 4, 3}));
  CHECK(r.at("components") == json::array({1, 1, 1, 1, 1}));
  CHECK(r.at("crossings") == "6");
  CHECK(r.at("trip") == json::array({"2"}));
  CHECK(r.at("genus") == "1");
  CHECK(r.at("string_index") == "5");
  CHECK(r.at("mode") == "direct");
  CHECK(r.at("linking") == json::object());

  const CliRun link = cli({"--json", "braid", "LRRRL", "RLLR"});
  CHECK(result_of(link).at("crossings") == "13");
  CHECK(result_of(link).at("linking").at("(1,2)") == "6");

  const CliRun imprimitive = cli({"braid", "LRLR"});
  CHECK(imprimitive.code == 3);
  CHECK(imprimitive.err.find("invalid input") != std::string::npos);
}

TEST_CASE("template command") {
  const CliRun t = cli({"template", "LRR,RL"});
  CHECK(t.code == 0);
  CHECK(t.out ==
        "strips: 5\n"
        "word: s2 s1 s3 s2 s4 b2-\n");

  const CliRun jt = cli({"--json", "template", "LR,RL"});
  const json r = result_of(jt);
  CHECK(r.at("strips") == 2);
  CHECK(r.at("sigmas") == json::array({1}));
  CHECK(r.at("beta_index") == 1);
  CHECK(r.at("beta_sign") == "-");
}

TEST_CASE("invariants command: direct word mode") {
  const CliRun knot = cli({"invariants", "LRRLR"});
  CHECK(knot.code == 0);
  CHECK(knot.out ==
        "components: 1\n"
        "string index: 5\n"
        "crossings: 6\n"
        "trip: 2\n"
        "genus: 1\n"
        "mode: direct\n");
}

TEST_CASE("invariants command: closed form against brute force") {
  const CliRun both = cli({"--json", "invariants", "LRRRL,RLLR", "--inner", "LRRRL,RLLR",
                           "--power", "2", "--both"});
  CHECK(both.code == 0);
  const json r = result_of(both);
  CHECK(r.at("crossings") == "5396");
  CHECK(r.at("string_index") == "178");
  CHECK(r.at("genus") == "2609");
  CHECK(r.at("trip") == json::array({"28", "23"}));
  CHECK(r.at("linking").at("(1,2)") == "2670");
  CHECK(r.at("mode") == "both");
  CHECK(r.at("match") == true);
  CHECK(r.at("direct").at("crossings") == "5396");

  const CliRun text = cli({"invariants", "LRRRL,RLLR", "--inner", "LRRRL,RLLR", "--power",
                           "2", "--both"});
  CHECK(text.code == 0);
  CHECK(text.out.find("match: yes\n") != std::string::npos);
  CHECK(text.out.find("crossings: 5396\n") != std::string::npos);

  // Missing --inner in pair mode is a usage error.
  CHECK(cli({"invariants", "LRRRL,RLLR"}).code == 2);
  // Degenerate pairs have no closed forms.
  CHECK(cli({"invariants", "LR,RL", "--inner", "LR,RL"}).code == 3);
}

TEST_CASE("verify command") {
  const CliRun v = cli({"verify", "--trials", "10", "--seed", "3"});
  CHECK(v.code == 0);
  CHECK(v.out.find("all formulas verified") != std::string::npos);
  CHECK(v.out.find("trials: 10  seed: 3") != std::string::npos);

  const CliRun jv = cli({"--json", "verify", "--trials", "5", "--seed", "3"});
  CHECK(jv.code == 0);
  const json r = result_of(jv);
  CHECK(r.at("all_passed") == true);
  CHECK(r.at("formulas").size() == 12);
  CHECK(r.at("formulas").at(0).at("failed") == 0);
}

TEST_CASE("growth command") {
  const CliRun g = cli({"--json", "growth", "LRRRL,RLLR", "--inner", "LRRRL,RLLR",
                        "--n-max", "3"});
  CHECK(g.code == 0);
  const json r = result_of(g);
  CHECK(r.at("all_match") == true);
  REQUIRE(r.at("rows").size() == 3);
  CHECK(r.at("rows").at(0).at("string_index") == "40");
  CHECK(r.at("rows").at(0).at("si_ratio").is_null());
  CHECK(r.at("rows").at(1).at("string_index") == "178");
  CHECK(r.at("rows").at(1).at("si_ratio") == "89/20");
  CHECK(r.at("rows").at(1).at("oracle") == "match");
  CHECK(r.at("rows").at(2).at("string_index") == "792");

  const CliRun text = cli({"growth", "LRRRL,RLLR", "--inner", "LRRRL,RLLR", "--n-max", "2"});
  CHECK(text.code == 0);
  CHECK(text.out.find("si_ratio") != std::string::npos);
  CHECK(text.out.find("4.45000") != std::string::npos);  // 178/40
  CHECK(text.out.find("match") != std::string::npos);
}

TEST_CASE("exit codes and stability") {
  CHECK(cli({"nonsense"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"check"}).code == 2);
  CHECK(cli({"check", "LRX,RL"}).code == 2);  // parse error in the word
  CHECK(cli({"braid", "LR", "RL"}).code == 3);

  const CliRun capped = cli({"star", "LRRRL,RLLR", "--inner", "LRRRL,RLLR", "--power", "9",
                             "--length-cap", "1000"});
  CHECK(capped.code == 5);
  CHECK(capped.err.find("resource limit") != std::string::npos);

  const CliRun help = cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("lorenz") != std::string::npos);

  // Identical invocations give byte-identical JSON.
  const CliRun a = cli({"--json", "braid", "LRRRL", "RLLR"});
  const CliRun b = cli({"--json", "braid", "LRRRL", "RLLR"});
  CHECK(a.out == b.out);
  const CliRun v1 = cli({"--json", "growth", "LRR,RLLR", "--inner", "LRR,RLLR",
                         "--n-max", "4"});
  const CliRun v2 = cli({"--json", "growth", "LRR,RLLR", "--inner", "LRR,RLLR",
                         "--n-max", "4"});
  CHECK(v1.out == v2.out);
}
