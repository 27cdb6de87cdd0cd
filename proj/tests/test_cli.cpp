#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "motivic/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "motzeta");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = motivic::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  const Result r = run(std::move(args));
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("kbar series over a point-count model") {
  const json j = run_json({"series", "kbar", "--nu", "2,2", "--X", "counts:q=2", "--trunc", "8"});
  CHECK(j.at("kind") == "series");
  CHECK(j.at("order") == 8);
  const auto& c = j.at("coefficients");
  REQUIRE(c.size() == 9);
  for (int i = 0; i <= 8; ++i) CHECK(c[i] == std::to_string(1 << (i + 2)));
  for (const char* key : {"X", "nu", "trunc", "spec", "grading"}) CHECK(j.at("params").contains(key));
}

TEST_CASE("hypersurface density under point counts") {
  const Result r = run({"hyper", "--s", "0", "--X", "P1", "--d", "1", "--cutoff", "8", "--spec", "count:q=2"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("0.375") != std::string::npos);
  CHECK(r.out.rfind("# ", 0) == 0);  // resolved parameters come first

  const json j = run_json({"hyper", "--s", "0", "--X", "P1", "--cutoff", "6"});
  CHECK(j.at("limit") == "1 - L^-1 - L^-2 + L^-3");
  CHECK(j.at("cross_checked") == true);
  CHECK(j.at("params").at("d") == 1);
}

TEST_CASE("stable limit") {
  const json j = run_json({"limit", "--Y", "kbar", "--X", "A^1", "--nu", "2", "--cutoff", "6"});
  CHECK(j.at("limit") == "L^-1");
  CHECK(j.at("params").at("normalize") == "sym");
  CHECK(j.contains("zeta_expression"));
}

TEST_CASE("oracle subcommand") {
  const json j = run_json({"oracle", "hyper", "--q", "2", "--j", "3", "--s", "0"});
  CHECK(j.at("kind") == "oracle");
  CHECK(j.dump().find("3/8") != std::string::npos);
  CHECK(j.contains("elapsed"));
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == motivic::cli::kExitUsage);
  CHECK(run({"series", "k", "--bogus", "1"}).code == motivic::cli::kExitUsage);
  CHECK(run({"series", "nonsense"}).code == motivic::cli::kExitUsage);
  CHECK(run({"series", "k", "--X", "not-a-model"}).code == motivic::cli::kExitUsage);
  CHECK(run({"series", "k", "--json", "--csv"}).code == motivic::cli::kExitUsage);
  CHECK(run({"series", "kbar", "--X", "A^1", "--nu", "1,1"}).code == motivic::cli::kExitUsage);
  CHECK(run({"oracle", "symsing", "--q", "2", "--j", "40"}).code == motivic::cli::kExitGuard);
  CHECK(run({"oracle", "symsing", "--q", "2", "--j", "3", "--guard", "200000000"}).code == motivic::cli::kExitGuard);
  CHECK(run({"oracle", "symsing", "--q", "2", "--j", "3", "--guard", "50000000"}).code == motivic::cli::kExitGuard);
  CHECK(run({"oracle", "symsing", "--q", "2", "--j", "3", "--guard", "50000000", "--force"}).code == 0);
  const Result v = run({"verify", "--suite", "identities"});
  CHECK(v.code == 0);
  CHECK(v.out.find("FAIL") == std::string::npos);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args = {"series", "zetainv", "--X", "P1", "--trunc", "6", "--json"};
  const Result a = run(args), b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const json j = json::parse(a.out);
  CHECK(j.at("coefficients").size() == 7);
}
