#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "process.hpp"

namespace {

const std::string kCli = TRIGROVE_CLI;
const std::filesystem::path kData = TRIGROVE_TEST_DATA;

support::RunResult cli(const std::string& args) { return support::run(kCli + " " + args); }

std::string data(const char* name) { return (kData / name).string(); }

std::string line(const std::filesystem::path& p) {
  std::string s = support::slurp(p);
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

}  // namespace

TEST_CASE("figure goldens") {
  auto r = cli("to-ast -i " + data("figure2_grove.json"));
  CHECK(r.status == 0);
  CHECK(r.out == support::slurp(kData / "figure2_ast.json"));
  r = cli("diff -i " + data("figure2_grove.json"));
  CHECK(r.status == 0);
  CHECK(r.out == support::slurp(kData / "figure4_diff.json"));
}

TEST_CASE("verify") {
  auto r = cli("verify -n 2 --moves");
  CHECK(r.status == 0);
  CHECK(r.out == "connected, 3 nodes\n");
  r = cli("verify -n 3 --spins");
  CHECK(r.status == 0);
  CHECK(r.out == "connected, 9 groves, max distance 3\n");
  CHECK(cli("verify -n 5 --moves").status == 2);
  CHECK(cli("verify -n 2 --moves --spins").status == 2);
}

TEST_CASE("reduce then replay") {
  const auto dir = support::scratch_dir("trigrove_cli_reduce");
  for (const char* flag : {"", "--clockwise"}) {
    auto r = cli(std::string("reduce ") + flag + " -i " + data("figure2_grove.json"));
    REQUIRE(r.status == 0);
    support::spit(dir / "seq.json", r.out);
    r = cli("replay -i " + data("figure2_grove.json") + " -s " + (dir / "seq.json").string());
    CHECK(r.status == 0);
    CHECK(r.out == cli("target -n 4").out);
  }
}

TEST_CASE("documents written by one command feed the next") {
  const auto dir = support::scratch_dir("trigrove_cli_chain");
  support::spit(dir / "g.json", cli("apply-spin -i " + data("figure2_grove.json") + " --pivot 1,-1 --from W --to SW").out);
  CHECK(cli("validate -i " + (dir / "g.json").string()).status == 0);
  support::spit(dir / "a.json", cli("to-ast -i " + (dir / "g.json").string()).out);
  auto r = cli("move-path -a " + (dir / "a.json").string() + " -b " + data("figure2_ast.json"));
  CHECK(r.status == 0);
  CHECK(r.out.find("\"moves\":[") != std::string::npos);
}

TEST_CASE("enumerate and cube") {
  CHECK(cli("enumerate -n 3 --count-only").out == "9\n");
  CHECK(cli("enumerate -n 3 --asts --count-only").out == "6\n");
  const auto lines = cli("enumerate -n 2").out;
  CHECK(std::count(lines.begin(), lines.end(), '\n') == 3);
  CHECK(cli("cube --level 3 --count-only").out == "9\n");
  CHECK(cli("cube --level 2").out.find("\"all_coefficients_one\":true") != std::string::npos);
}

TEST_CASE("render") {
  const auto dir = support::scratch_dir("trigrove_cli_render");
  CHECK(cli("render -i " + data("figure2_grove.json") + " --diff -o " + (dir / "a.svg").string()).status == 0);
  CHECK(cli("render -i " + data("figure4_diff.json") + " -o " + (dir / "b.svg").string()).status == 0);
  CHECK(support::slurp(dir / "a.svg") == support::slurp(dir / "b.svg"));
  CHECK(support::slurp(dir / "a.svg").find("#FF0000") != std::string::npos);
}

TEST_CASE("exit statuses") {
  const auto dir = support::scratch_dir("trigrove_cli_status");
  support::spit(dir / "empty2.json", R"({"n":2,"edges":[]})");
  support::spit(dir / "broken.json", "{\"n\":2,");
  support::spit(dir / "offboard.json", R"({"n":2,"edges":[[[0,0],[8,0]]]})");
  support::spit(dir / "bad_seq.json", R"({"n":4,"spins":[{"pivot":[0,0],"from":"W","to":"NW"}]})");
  support::spit(dir / "not_ast.json", R"({"n":2,"rows":[[1,-1],[1]]})");
  const auto p = [&](const char* name) { return (dir / name).string(); };

  struct Case {
    std::string args;
    int status;
  };
  const std::vector<Case> cases{
      {"target -n 3", 0},
      {"target -n 0", 2},
      {"target -n x", 2},
      {"target", 2},
      {"", 2},
      {"frobnicate", 2},
      {"validate -i " + data("figure2_grove.json"), 0},
      {"validate -i " + p("empty2.json"), 1},
      {"validate -i " + p("offboard.json"), 1},
      {"validate -i " + p("broken.json"), 2},
      {"validate -i " + p("missing.json"), 2},
      {"to-ast -i " + p("empty2.json"), 1},
      {"apply-spin -i " + data("figure2_grove.json") + " --pivot 1,-1 --from W --to E", 1},
      {"apply-spin -i " + data("figure2_grove.json") + " --pivot 1,-1 --from W --to UP", 2},
      {"apply-spin -i " + data("figure2_grove.json") + " --pivot one --from W --to SW", 2},
      {"replay -i " + data("figure2_grove.json") + " -s " + p("bad_seq.json"), 1},
      {"replay -i " + data("figure2_grove.json") + " -s " + p("broken.json"), 2},
      {"move-path -a " + p("not_ast.json") + " -b " + p("not_ast.json"), 1},
      {"enumerate -n 6", 2},
      {"cube --level 9", 2},
      {"cube --level 0", 2},
  };
  for (const Case& c : cases) {
    INFO(c.args);
    CHECK(cli(c.args).status == c.status);
  }

  const auto err = dir / "err.txt";
  support::run(kCli + " validate -i " + p("broken.json"), err.string());
  CHECK(line(err).rfind("trigrove: parse-error: ", 0) == 0);
  support::run(kCli + " enumerate -n 6", err.string());
  CHECK(line(err).rfind("trigrove: budget-exceeded: ", 0) == 0);
  const std::string text = support::slurp(err);
  CHECK(std::count(text.begin(), text.end(), '\n') == 1);
}
