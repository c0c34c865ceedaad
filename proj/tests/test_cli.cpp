#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>

#include "stallings/algebraic.hpp"
#include "stallings/rng.hpp"

using namespace stallings;
using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(STALLINGS_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  RunResult r{-1, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Word random_reduced_word(Rng& rng, int k, int max_len) {
  std::vector<Letter> ls;
  int len = static_cast<int>(rng.below(max_len)) + 1;
  for (int i = 0; i < len; ++i)
    ls.emplace_back(static_cast<int>(rng.below(k)) + 1, rng.below(2) ? +1 : -1);
  return Word(std::move(ls), k);
}

}  // namespace

TEST_CASE("worked examples from the front end") {
  CHECK(run_cli("primitive -k 2 \"x1 x2 X1 X2\"").out ==
        "not primitive; pi=2; crit=[F_2]\n");
  CHECK(run_cli("phi -k 2 \"x1 x2 X1 X2\"").out == "n/(n - 1), valid for n >= 2\n");
  RunResult fr = run_cli("fringe -k 2 \"x1 x2 X1 X2\"");
  CHECK(fr.out.substr(0, 8) == "nodes 7\n");
  CHECK(run_cli("primitive -k 2 x1").out == "primitive; pi=inf; crit=[]\n");
}

TEST_CASE("fold output re-parses to the identical canonical form") {
  RunResult r = run_cli("fold -k 2 \"x1 X2 x1\" \"X1 X1 x2\"");
  REQUIRE(r.exit_code == 0);
  CoreGraph g = CoreGraph::parse(r.out, 2);
  CHECK(g.serialize() == r.out);
  CHECK(g.num_vertices() == 4);
  CHECK(g.num_edges() == 5);
}

TEST_CASE("primitive agrees with pirank on a random corpus") {
  Rng rng(20240);
  int tested = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Word w = random_reduced_word(rng, 2, 6);
    if (w.is_identity()) continue;
    ++tested;
    std::string quoted = "\"" + w.str() + "\"";
    RunResult prim = run_cli("primitive -k 2 " + quoted);
    RunResult rank = run_cli("pirank -k 2 " + quoted);
    REQUIRE(prim.exit_code == 0);
    REQUIRE(rank.exit_code == 0);
    bool says_primitive = prim.out.rfind("primitive;", 0) == 0;
    bool pi_infinite = rank.out.rfind("pi=inf", 0) == 0;
    CHECK(says_primitive == pi_infinite);
  }
  CHECK(tested >= 90);
}

TEST_CASE("exit codes: 0 success, 1 domain error, 2 usage error") {
  CHECK(run_cli("member -k 2 x1 x1").exit_code == 0);
  CHECK(run_cli("fold -k 2 x3").exit_code == 1);          // index out of rank
  CHECK(run_cli("phi -k 2 --n 1 \"x1 x2 X1 X2\"").exit_code == 1);  // below threshold
  CHECK(run_cli("dist -k 2 --target x2 x1").exit_code == 1);        // not a quotient
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("fold").exit_code == 2);  // missing -k and words
}

TEST_CASE("json outputs are well formed") {
  json phi = json::parse(run_cli("phi --json -k 2 \"x1 x2 X1 X2\"").out);
  CHECK(phi["text"] == "n/(n - 1)");
  CHECK(phi["valid_from"] == 2);

  json prim = json::parse(run_cli("primitive --json -k 2 \"x1 x1\"").out);
  CHECK(prim["primitive"] == false);
  CHECK(prim["pi"] == 1);
  CHECK(prim["critical"].size() == 1);

  json fr = json::parse(run_cli("fringe --json -k 2 \"x1 x2 X1 X2\"").out);
  CHECK(fr["nodes"].size() == 7);

  json ver = json::parse(
      run_cli("verify --json -k 2 --n 10 --trials 2000 --seed 5 \"x1 x2 X1 X2\"").out);
  CHECK(ver["n"] == 10);
  CHECK(ver["seed"] == 5);
  CHECK(ver["exact"] == "10/9");

  json ex = json::parse(run_cli("expand --json -k 2 \"x1 x1\"").out);
  CHECK(ex["leading_exponent"] == 0);
  CHECK(ex["coefficients"][0] == "2");
}

TEST_CASE("derive emits consistent tables") {
  json d = json::parse(run_cli("derive --json -k 2 \"x1 x1\"").out);
  REQUIRE(d["nodes"].size() == 2);
  // the chain has three comparable pairs
  CHECK(d["pairs"].size() == 3);
  for (const auto& p : d["pairs"]) {
    if (p["from"] == 0 && p["to"] == 1) {
      CHECK(p["phi"] == "2");
      CHECK(p["R"] == "1");
    }
  }
}

TEST_CASE("verify is reproducible for a fixed seed") {
  std::string cmd = "verify -k 2 --n 10 --trials 3000 --seed 11 \"x1 x2 X1 X2\"";
  CHECK(run_cli(cmd).out == run_cli(cmd).out);
}

TEST_CASE("word lists load from @files") {
  std::string path = "/tmp/stallings_cli_words.txt";
  {
    std::ofstream f(path);
    f << "x1 X2 x1\nX1 X1 x2\n";
  }
  RunResult from_file = run_cli("fold -k 2 @" + path);
  RunResult inline_args = run_cli("fold -k 2 \"x1 X2 x1\" \"X1 X1 x2\"");
  CHECK(from_file.out == inline_args.out);
  std::remove(path.c_str());
}
