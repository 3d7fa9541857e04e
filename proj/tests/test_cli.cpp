// Contract tests for the installed command-line surface: every assertion
// here spawns the real binary and inspects bytes, JSON shape, and exit codes.

#include "monty/report.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(MONTY_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

nlohmann::json first_envelope(const RunResult& r) {
  const auto eol = r.out.find('\n');
  REQUIRE(eol != std::string::npos);
  const auto env = nlohmann::json::parse(r.out.substr(0, eol));
  CHECK(monty::report::validate_envelope(env).empty());
  return env;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto eol = text.find('\n', start);
    if (eol == std::string::npos) break;
    lines.push_back(text.substr(start, eol - start));
    start = eol + 1;
  }
  return lines;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("compute: the classic game") {
  const auto r = run("compute --variant mh1");
  REQUIRE(r.exit_code == 0);
  const auto env = first_envelope(r);
  CHECK(env.at("variant") == "mh1");
  CHECK(env.at("params") == nlohmann::json({{"doors", 3}, {"cars", 1}, {"open", 1}}));
  CHECK(env.at("results").at("routes").at("closedform").at("reduced") == "2/3");
  CHECK(env.at("results").at("routes").at("hypergeom").at("reduced") == "2/3");
  CHECK(env.at("results").at("report").at("direction") == "increase");
  CHECK(env.at("agreement") == true);
  CHECK(env.at("errata_notes").empty());
}

TEST_CASE("compute: large door counts come back instantly as decimals") {
  const auto r = run("compute --variant mh2 --doors 123456789 --cars 12345678 --open 1234567");
  REQUIRE(r.exit_code == 0);
  const auto env = first_envelope(r);
  CHECK(env.at("results").at("report").at("switch").at("decimal") == "0.101010");
  CHECK(env.at("results").at("report").at("improvement_factor").at("decimal") == "1.010101");
  CHECK(env.at("errata_notes").empty());

  const auto extreme =
      first_envelope(run("compute --variant mh2 --doors 123456789 --cars 12345678 "
                         "--open 111111110"));
  CHECK(extreme.at("results").at("report").at("improvement_factor").at("fraction") ==
        "123456788/12345678");
  REQUIRE(extreme.at("errata_notes").size() == 1);
  CHECK(extreme.at("errata_notes")[0].get<std::string>().rfind("max-opening-factor: ", 0) == 0);
}

TEST_CASE("compute: twelve-door family keeps the unreduced shape") {
  const auto r = run("compute --variant mh3 --doors 12 --cars 5 --pick 3 --open 2 "
                     "--switch-pick 2");
  REQUIRE(r.exit_code == 0);
  const auto env = first_envelope(r);
  CHECK(env.at("results").at("routes").at("closedform").at("fraction") == "45000/55440");
  CHECK(env.at("results").at("routes").at("closedform").at("reduced") == "125/154");
  CHECK(env.at("results").at("report").at("stay").at("reduced") == "37/44");
  CHECK(env.at("results").at("report").at("direction") == "decrease");
  REQUIRE(env.at("errata_notes").size() == 1);
  CHECK(env.at("errata_notes")[0].get<std::string>().rfind("anterior-stay-miscount: ", 0) == 0);
}

TEST_CASE("compute: repeated switching reports common-denominator posteriors") {
  const auto r = run("compute --variant mh4 --doors 6 --cars 1 --schedule 2,1");
  REQUIRE(r.exit_code == 0);
  const auto env = first_envelope(r);
  CHECK(env.at("results").at("routes").at("closedform").at("fraction") == "10/18");
  const auto& posts = env.at("results").at("report").at("door_posteriors");
  REQUIRE(posts.size() == 3);
  CHECK(posts[0].at("fraction") == "3/18");
  CHECK(posts[1].at("fraction") == "5/18");
  CHECK(posts[2].at("fraction") == "10/18");
  CHECK(env.at("results").at("report").at("improvement_factor_from_stay").at("reduced") ==
        "10/3");
  REQUIRE(env.at("errata_notes").size() == 1);
  CHECK(env.at("errata_notes")[0].get<std::string>().rfind("multi-switch-goat-term: ", 0) == 0);
}

TEST_CASE("compute: the six-door with-replacement family carries its erratum") {
  for (const auto& [open, expect] : std::vector<std::pair<std::string, std::string>>{
           {"1", "2/9"}, {"2", "1/3"}, {"3", "2/3"}}) {
    const auto env = first_envelope(run(
        "compute --variant mh3 --doors 6 --cars 1 --pick 2 --open " + open +
        " --switch-pick 1"));
    CHECK(env.at("results").at("routes").at("closedform").at("reduced") == expect);
    CHECK(env.at("results").at("report").at("stay").at("reduced") == "1/3");
    REQUIRE(env.at("errata_notes").size() == 1);
    CHECK(env.at("errata_notes")[0].get<std::string>().rfind("with-replacement-anterior: ", 0) ==
          0);
  }
}

TEST_CASE("verify: all routes agree, and corruption is caught") {
  const std::string game = "--variant mh3 --doors 12 --cars 5 --pick 3 --open 2 --switch-pick 2";
  const auto clean = run("verify " + game);
  REQUIRE(clean.exit_code == 0);
  const auto env = first_envelope(clean);
  const auto& routes = env.at("results").at("routes");
  CHECK(routes.size() == 3);
  CHECK(routes.contains("closedform"));
  CHECK(routes.contains("hypergeom"));
  CHECK(routes.contains("enumeration"));
  CHECK(env.at("agreement") == true);

  for (const char* route : {"closedform", "hypergeom", "enumeration"}) {
    const auto bad = run("verify " + game + " --corrupt-route " + route);
    CHECK(bad.exit_code == 1);
    CHECK(first_envelope(bad).at("agreement") == false);
  }
}

TEST_CASE("verify: custom games and batch files") {
  const auto custom = run(
      R"(verify --game '{"doors":9,"cars":4,"plan":[{"pick":2},{"open":3},{"pick":2}],)"
      R"("predicate":{"segment":"all","kind":"exactly","k":2}}')");
  REQUIRE(custom.exit_code == 0);
  const auto env = first_envelope(custom);
  CHECK(env.at("variant") == "custom");
  CHECK(env.at("results").at("routes").size() == 2);  // urn weights + enumeration
  CHECK(env.at("agreement") == true);

  const std::string path = "/tmp/monty_cli_batch.jsonl";
  {
    std::ofstream f(path);
    f << R"({"doors":3,"cars":1,"plan":[{"pick":1},{"open":1},{"pick":1}],)"
      << R"("predicate":{"segment":"posterior","kind":"at_least","k":1}})" << "\n";
    f << R"({"doors":6,"cars":2,"plan":[{"pick":2},{"open":1},{"pick":1}],)"
      << R"("predicate":{"segment":"posterior","kind":"all_cars"}})" << "\n";
  }
  const auto batch = run("verify --config " + path);
  REQUIRE(batch.exit_code == 0);
  const auto lines = lines_of(batch.out);
  REQUIRE(lines.size() == 2);
  for (const auto& line : lines) {
    const auto e = nlohmann::json::parse(line);
    CHECK(monty::report::validate_envelope(e).empty());
    CHECK(e.at("agreement") == true);
  }
  std::remove(path.c_str());
}

TEST_CASE("enumerate: one weighted row per pattern") {
  const auto r = run("enumerate --variant mh3 --doors 12 --cars 5 --pick 3 --open 2 "
                     "--switch-pick 2");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 32);
  const auto first = nlohmann::json::parse(lines.front());
  CHECK(first.at("sequence") == "ccc|cc");
  CHECK(first.at("denominator") == nlohmann::json({"12", "11", "10", "7", "6"}));
  const auto last = nlohmann::json::parse(lines.back());
  CHECK(last.at("sequence") == "ggg|gg");
  CHECK(last.at("probability") == "1/132");  // 7*6*5*2*1 / 55440 reduced
}

TEST_CASE("simulate: deterministic, worker-invariant, exact-checked") {
  const std::string args = "simulate --variant mh1 --trials 50000 --seed 9";
  const auto a = run(args + " --workers 1");
  const auto b = run(args + " --workers 4");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out != "");
  const auto ea = nlohmann::json::parse(lines_of(a.out).at(0));
  const auto eb = nlohmann::json::parse(lines_of(b.out).at(0));
  CHECK(ea.at("results").at("simulation").at("successes") ==
        eb.at("results").at("simulation").at("successes"));
  CHECK(ea.at("results").at("exact").at("reduced") == "2/3");
  CHECK(ea.at("results").contains("z_score"));
  CHECK(run(args + " --workers 1").out == a.out);  // byte-stable

  const auto cmp = first_envelope(run(
      "simulate --variant mh1 --trials 20000 --seed 3 --compare"));
  CHECK(cmp.at("results").at("stay").at("trials") == 20000);
  CHECK(cmp.at("results").at("exact_stay").at("reduced") == "1/3");
  CHECK(cmp.at("results").at("exact_switch").at("reduced") == "2/3");
}

TEST_CASE("sweep: grid output with infeasible cells skipped") {
  const auto csv = run("sweep --doors 3:4 --cars 1 --pick 1 --open 0:2 --switch-pick 1 --csv");
  REQUIRE(csv.exit_code == 0);
  const auto lines = lines_of(csv.out);
  REQUIRE(lines.size() >= 2);
  CHECK(lines[0] ==
        "doors,cars,pick,open,switch_pick,stay,stay_decimal,switch,switch_decimal,"
        "improvement_factor,improvement_decimal,direction");
  // d=3 admits o in {0,1}; o=2 would leave nothing to switch to. d=4 adds o=2.
  CHECK(lines.size() == 1 + 2 + 3);
  for (const auto& line : lines) CHECK(line.find("3,1,1,2,") == std::string::npos);
  CHECK(lines[2].rfind("3,1,1,1,1,1/3,0.333333,2/3,0.666667,2/1,2.000000,increase", 0) == 0);

  const auto rows = run("sweep --doors 3 --cars 1 --pick 1 --open 1 --switch-pick 1");
  const auto row = nlohmann::json::parse(lines_of(rows.out).at(0));
  CHECK(row.at("switch").at("reduced") == "2/3");

  const auto too_big = run("sweep --doors 1:100 --cars 1:100 --pick 1:10 --open 0:9 "
                           "--switch-pick 1:10");
  CHECK(too_big.exit_code == 2);
}

TEST_CASE("invalid input exits 2") {
  CHECK(run("compute --variant mh3 --doors 5 --cars 9 --pick 1 --open 1 --switch-pick 1")
            .exit_code == 2);
  CHECK(run("compute --variant nonsense --doors 3 --cars 1").exit_code == 2);
  CHECK(run("compute --variant mh2").exit_code == 2);  // missing required flags
  CHECK(run("compute --variant custom --game 'not json'").exit_code == 2);
  CHECK(run("compute --variant mh1 --bogus").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("").exit_code == 2);
  CHECK(run("enumerate --game "
            R"('{"doors":60,"cars":30,"plan":[{"pick":26}],)"
            R"("predicate":{"segment":"all","kind":"at_least","k":1}}')")
            .exit_code == 2);
}

TEST_CASE("version and help") {
  const auto v = run("--version");
  CHECK(v.exit_code == 0);
  CHECK(v.out == "monty 1.0.0\n");
  CHECK(run("--help").exit_code == 0);
  CHECK(run("compute --help").exit_code == 0);
}

}  // TEST_SUITE
