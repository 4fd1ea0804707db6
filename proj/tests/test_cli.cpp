#include <catch_amalgamated.hpp>

#include <sstream>

#include <json.hpp>

#include "theta/cli.hpp"

using namespace theta;
using json = nlohmann::json;

namespace {

  struct Outcome {
    int         code;
    std::string out;
    std::string err;
  };

  Outcome invoke(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int const          code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
  }

}  // namespace

TEST_CASE("mult e6", "[cli]") {
  auto const r
      = invoke({"mult", "e6", "--w", "1,0,1,0,1,0", "--method", "all"});
  REQUIRE(r.code == exit_ok);
  auto const doc = json::parse(r.out);
  CHECK(doc["closed"] == 3);
  CHECK(doc["averaging"] == 3);
  CHECK(doc["agree"] == true);
  CHECK(doc["dim"] == "27");
  CHECK_FALSE(doc.contains("direct"));
}

TEST_CASE("mult e8", "[cli]") {
  auto const r = invoke({"mult", "e8", "--w", "0,0,0,0,0,0,0,0"});
  REQUIRE(r.code == exit_ok);
  auto const doc = json::parse(r.out);
  CHECK(doc["closed"] == 1);
  CHECK(doc["averaging"] == 1);
  CHECK(doc["direct"] == 1);
  CHECK(doc["agree"] == true);

  auto const closed
      = invoke({"mult", "e8", "--w", "1,1,1,0,0,0,0,0", "--method", "closed"});
  REQUIRE(closed.code == exit_ok);
  CHECK(json::parse(closed.out)["closed"] == 6);
  CHECK_FALSE(json::parse(closed.out).contains("averaging"));
}

TEST_CASE("csv output", "[cli]") {
  auto const r = invoke(
      {"mult", "e6", "--w", "1,0,1,0,1,0", "--format", "csv"});
  REQUIRE(r.code == exit_ok);
  CHECK(r.out == "w1,w2,w3,w4,w5,w6,dim,closed,averaging,agree\n"
                 "1,0,1,0,1,0,27,3,3,true\n");
}

TEST_CASE("usage errors", "[cli]") {
  CHECK(invoke({}).code == exit_usage);
  CHECK(invoke({"mult", "e6"}).code == exit_usage);
  CHECK(invoke({"mult", "e7", "--w", "0"}).code == exit_usage);
  CHECK(invoke({"mult", "e6", "--w", "1,0,1,0,1,0", "--method", "direct"})
            .code
        == exit_usage);
  CHECK(invoke({"mult", "e6", "--w", "0,1,0,0,0,0"}).code == exit_usage);
  CHECK(invoke({"mult", "e6", "--w", "1,0,1"}).code == exit_usage);
  CHECK(invoke({"mult", "e8", "--w", "0,1,0,0,0,0,0,0"}).code == exit_usage);
  CHECK(invoke({"table", "e6", "--max", "-1"}).code == exit_usage);
  CHECK(invoke({"oracle", "e8", "--degree", "7"}).code == exit_usage);
  auto const r = invoke({"mult", "e6", "--w", "1,0,1,0,1,0", "--method", "x"});
  CHECK(r.code == exit_usage);
  CHECK_FALSE(r.err.empty());
  CHECK(r.out.empty());
}

TEST_CASE("help", "[cli]") {
  auto const r = invoke({"--help"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("mult") != std::string::npos);
}

TEST_CASE("table is deterministic", "[cli]") {
  auto const a = invoke({"table", "e6", "--max", "1"});
  auto const b = invoke({"table", "e6", "--max", "1", "--threads", "3"});
  REQUIRE(a.code == exit_ok);
  CHECK(a.out == b.out);
  auto const doc = json::parse(a.out);
  CHECK(doc["case"] == "e6");
  CHECK(doc["results"].size() == 27);
  CHECK(doc["results"][0]["weight"] == json::array({0, 0, 0, 0, 0, 0}));
}

TEST_CASE("verify cartan", "[cli]") {
  auto const r = invoke({"verify", "cartan"});
  REQUIRE(r.code == exit_ok);
  std::istringstream lines(r.out);
  std::string        line;
  int                count = 0;
  while (std::getline(lines, line)) {
    CHECK(line.rfind("PASS ", 0) == 0);
    ++count;
  }
  CHECK(count == 27);
}

TEST_CASE("verify group", "[cli]") {
  auto const r = invoke({"verify", "group", "e8"});
  REQUIRE(r.code == exit_ok);
  auto const doc = json::parse(r.out);
  CHECK(doc["e8"]["order"] == 81);
  CHECK(doc["e8"]["elements"].size() == 81);
  CHECK_FALSE(doc.contains("e6"));
}

TEST_CASE("oracle", "[cli]") {
  auto const r = invoke(
      {"oracle", "e6", "--degree", "6", "--label", "1,0,1,0,1,0"});
  REQUIRE(r.code == exit_ok);
  auto const doc = json::parse(r.out);
  CHECK(doc["invariant_series"] == json::array({1, 0, 0, 0, 0, 0, 1}));
  CHECK(doc["degrees"][2]["components"].size() == 4);
  CHECK(doc["harmonic"]["series"][1] == 1);
  CHECK(doc["harmonic"]["closed_form"] == 3);
  CHECK(doc["harmonic"]["bounded"] == true);
}
