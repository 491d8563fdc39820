#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mmlab/cli.hpp"

namespace {

int run_cli(const std::vector<std::string>& args, std::string* out_text =
                                                      nullptr) {
  std::ostringstream out, err;
  int code = mmlab::cli::run(args, out, err);
  if (out_text) *out_text = out.str() + err.str();
  return code;
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path("/tmp/mmlab_test_" + name) {
    std::ofstream f(path);
    f << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

const char* kSession = R"(
ring Q[x,y,z];
ideal I = x^2 - y, x*y - z;
ideal K = x, y;
ideal L = y, z;
poly g = x^4;
task verify identities d=1;
)";

nlohmann::json scrub_timings(nlohmann::json j) {
  for (auto& c : j["claims"]) c.erase("timings");
  return j;
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli({}) == 2);
  CHECK(run_cli({"frobnicate"}) == 2);
  CHECK(run_cli({"mm", "verify"}) == 2);               // missing --d
  CHECK(run_cli({"gb", "/nonexistent.mm", "--ideal", "I"}) == 2);
  std::string text;
  CHECK(run_cli({"mm", "verify", "--claim", "nope", "--d", "1"}, &text) == 2);
  CHECK(text.find("unknown claim") != std::string::npos);
}

TEST_CASE("gb subcommand prints the reduced basis") {
  TempFile session("gb.mm", kSession);
  std::string text;
  CHECK(run_cli({"gb", session.path, "--ideal", "K", "--order", "grevlex"},
                &text) == 0);
  CHECK(text == "y\nx\n");  // ascending leading monomials, grevlex y < x
  CHECK(run_cli({"gb", session.path, "--ideal", "I", "--order", "lex"},
                &text) == 0);
  CHECK(!text.empty());
}

TEST_CASE("nf subcommand") {
  TempFile session("nf.mm", kSession);
  std::string text;
  CHECK(run_cli({"nf", session.path, "--ideal", "I", "--expr", "x^2 - y"},
                &text) == 0);
  CHECK(text == "0\n");
  CHECK(run_cli({"nf", session.path, "--ideal", "I", "--poly", "g"}, &text) ==
        0);
  CHECK(text != "0\n");
}

TEST_CASE("ideal subcommands") {
  TempFile session("ideal.mm", kSession);
  std::string text;
  CHECK(run_cli({"ideal", "intersect", session.path, "--left", "K", "--right",
                 "L"},
                &text) == 0);
  CHECK(text.find("y") != std::string::npos);
  CHECK(run_cli({"ideal", "equal", session.path, "--left", "K", "--right",
                 "L"},
                &text) == 0);
  CHECK(text == "false\n");
  CHECK(run_cli({"ideal", "member", session.path, "--ideal", "I", "--expr",
                 "x^2 - y"},
                &text) == 0);
  CHECK(text == "true\n");
  CHECK(run_cli({"ideal", "radical-member", session.path, "--ideal", "I",
                 "--expr", "x^2 - y"},
                &text) == 0);
  CHECK(text == "true\n");
  CHECK(run_cli({"ideal", "dim", session.path, "--ideal", "I"}, &text) == 0);
  CHECK(text == "1\n");
  CHECK(run_cli({"ideal", "eliminate", session.path, "--ideal", "I", "--vars",
                 "x"},
                &text) == 0);
  CHECK(run_cli({"ideal", "colon", session.path, "--ideal", "I", "--expr",
                 "x"},
                &text) == 0);
}

TEST_CASE("mm verify exits 0 on pass, 1 on failure") {
  std::string text;
  CHECK(run_cli({"mm", "verify", "--claim", "identities", "--d", "1"},
                &text) == 0);
  CHECK(text.find("[PASS] identities") != std::string::npos);
  // an impossible degree cap makes prop6 fail honestly
  CHECK(run_cli({"mm", "verify", "--claim", "prop6", "--d", "2", "--dmax",
                 "1"},
                &text) == 1);
  CHECK(text.find("[FAIL] prop6") != std::string::npos);
}

TEST_CASE("mm verify JSON reports are byte-identical modulo timings") {
  TempFile j1("r1.json", ""), j2("r2.json", "");
  CHECK(run_cli({"mm", "verify", "--claim", "lemma2", "--d", "1", "--json",
                 j1.path}) == 0);
  CHECK(run_cli({"mm", "verify", "--claim", "lemma2", "--d", "1", "--json",
                 j2.path}) == 0);
  std::ifstream f1(j1.path), f2(j2.path);
  nlohmann::json a = nlohmann::json::parse(f1);
  nlohmann::json b = nlohmann::json::parse(f2);
  CHECK(a["schema"] == "mmlab-report-v1");
  CHECK(scrub_timings(a) == scrub_timings(b));
}

TEST_CASE("parallel claims produce the same report as sequential") {
  TempFile j1("par1.json", ""), j2("par2.json", "");
  CHECK(run_cli({"mm", "verify", "--claim", "all", "--d", "1", "--jobs", "8",
                 "--json", j1.path}) == 0);
  CHECK(run_cli({"mm", "verify", "--claim", "all", "--d", "1", "--json",
                 j2.path}) == 0);
  std::ifstream f1(j1.path), f2(j2.path);
  nlohmann::json a = nlohmann::json::parse(f1);
  nlohmann::json b = nlohmann::json::parse(f2);
  CHECK(scrub_timings(a) == scrub_timings(b));
}

TEST_CASE("mm gen output parses back as a session") {
  std::string text;
  CHECK(run_cli({"mm", "gen", "--d", "1", "--what", "all"}, &text) == 0);
  TempFile session("roundtrip.mm", text);
  std::string gb;
  CHECK(run_cli({"gb", session.path, "--ideal", "J"}, &gb) == 0);
  CHECK(!gb.empty());
}

TEST_CASE("cert subcommand prints the minimal degree") {
  std::string text;
  CHECK(run_cli({"cert", "--d", "1", "--target", "s*(c4 - c1)", "--gens", "J",
                 "--max-deg", "3"},
                &text) == 0);
  CHECK(text.find("D* = 1") != std::string::npos);
  CHECK(run_cli({"cert", "--d", "2", "--target", "s*(c4 - c1)", "--gens", "J",
                 "--max-deg", "10"},
                &text) == 0);
  CHECK(text.find("D* = 3") != std::string::npos);
  CHECK(run_cli({"cert", "--d", "3", "--target", "s*(c4 - c1)", "--gens",
                 "radical", "--max-deg", "10", "--restriction",
                 "subring-b-bihom"},
                &text) == 0);
  CHECK(text.find("D* = 5") != std::string::npos);
}

TEST_CASE("mm verify --claim all summarizes every claim") {
  std::string text;
  CHECK(run_cli({"mm", "verify", "--claim", "all", "--d", "1"}, &text) == 0);
  for (const char* name : {"theorem1", "prop4", "prop5", "lemma2", "lemma3",
                           "prop6", "heights", "identities"}) {
    CHECK(text.find(std::string("[PASS] ") + name) != std::string::npos);
  }
}

TEST_CASE("run subcommand executes session tasks") {
  TempFile session("tasks.mm", kSession);
  std::string text;
  CHECK(run_cli({"run", session.path}, &text) == 0);
  CHECK(text.find("[PASS] identities") != std::string::npos);
}
