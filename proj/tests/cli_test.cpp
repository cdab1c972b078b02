#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>

#include <json.hpp>

#include "lenfill/fillings.hpp"

using namespace lenfill;
using json = nlohmann::json;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
};

CliResult run(const std::string& args) {
  CliResult res;
  std::string cmd = std::string(LENFILL_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[512];
  while (fgets(buf, sizeof buf, pipe)) res.out += buf;
  res.code = WEXITSTATUS(pclose(pipe));
  return res;
}

}  // namespace

TEST_CASE("cf, dual and path text output") {
  auto cf = run("cf 84/19");
  CHECK(cf.code == 0);
  CHECK(cf.out == "[5,2,4,3]\n");

  auto dual = run("dual 84/19");
  CHECK(dual.code == 0);
  CHECK(dual.out == "[2,2,2,4,2,3,2]\n");

  auto dual_list = run("dual [5,2,4,3]");
  CHECK(dual_list.out == "[2,2,2,4,2,3,2]\n");

  auto path = run("path 12/7");
  CHECK(path.out == "0 -1 -3/2 -5/3 -12/7\n");
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("cf 1/1").code == 2);
  CHECK(run("cf 6/4").code == 2);
  CHECK(run("fillings 12/7 --rot 0,1,0").code == 2);
  CHECK(run("fillings 12/7 --rot 0,0").code == 2);
  CHECK(run("verify --tables bogus").code == 2);
  CHECK(run("verify").code == 2);  // empty table selection
  CHECK(run("nonsense").code == 2);
  CHECK(run("cf").code == 2);
}

TEST_CASE("fillings counts through the CLI") {
  auto ut = run("fillings 4/1 --ut --json");
  CHECK(ut.code == 0);
  json j = json::parse(ut.out);
  CHECK(j["count"] == 2);
  CHECK(j["structure"]["universally_tight"] == true);

  auto vot = run("fillings 12/7 --rot 0,0,0 --json");
  json jv = json::parse(vot.out);
  CHECK(jv["count"] == 1);
  CHECK(jv["structure"]["universally_tight"] == false);
  CHECK(jv["fillings"][0]["plumbing"] == true);

  auto three = run("fillings 29/11 --rot 1,1,-2 --json");
  CHECK(json::parse(three.out)["count"] == 3);
}

TEST_CASE("json output is byte-stable and round-trips") {
  auto a = run("fillings 57/22 --rot 1,1,0,-3 --json");
  auto b = run("fillings 57/22 --rot 1,1,0,-3 --json");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  json j = json::parse(a.out);
  LensSpace lens = lens_space(j["lens"]["p"].get<Int>(), j["lens"]["q"].get<Int>());
  REQUIRE(j["count"].get<std::size_t>() == j["fillings"].size());
  NullSequence prev;
  for (const auto& fj : j["fillings"]) {
    NullSequence s{fj["seq"].get<std::vector<Int>>()};
    CHECK(is_null(s));
    Filling f = invariants(s, lens);
    CHECK(f.b2 == fj["b2"].get<Int>());
    CHECK(f.euler == fj["euler"].get<Int>());
    CHECK(f.h1_order == fj["h1"].get<Int>());
    CHECK(f.is_plumbing == fj["plumbing"].get<bool>());
    CHECK(f.is_rational_ball == fj["rational_ball"].get<bool>());
    CHECK(prev < s);  // lexicographic output order
    prev = s;
  }
}

TEST_CASE("verify runs the golden tables") {
  auto res = run("verify --tables cor5 --json");
  CHECK(res.code == 0);
  json j = json::parse(res.out);
  CHECK(j["failed"] == 0);
  CHECK(j["passed"].get<int>() > 20);

  auto all = run("verify --tables all");
  CHECK(all.code == 0);

  auto capped = run("verify --tables 3component --max-p 30");
  CHECK(capped.code == 0);
}

TEST_CASE("cobordism queries") {
  auto open = run("cobordism 6/1 14/3 --json");
  CHECK(open.code == 0);
  json j = json::parse(open.out);
  CHECK(j["verdict"] == "OPEN");
  REQUIRE(j["path"].is_object());
  CHECK(j["path"]["moves"].size() == 1);
  CHECK(j["path"]["moves"][0]["kind"] == "ROLLED_UP_1");

  auto forbidden = run("cobordism 14/3 6/1 --json");
  CHECK(json::parse(forbidden.out)["verdict"] == "FORBIDDEN");

  auto torus = run("cobordism 6/1 3/2 --rot 0 --json");
  json jt = json::parse(torus.out);
  CHECK(jt["verdict"] == "OPEN");
  REQUIRE(jt["path"].is_object());
  CHECK(jt["path"]["moves"][0]["kind"] == "TORUS_PLUS_ONE");

  auto rigid = run("cobordism 8/3 8/3 --json");
  json jr = json::parse(rigid.out);
  CHECK(jr["verdict"] == "RIGID");
  CHECK(jr["equivalent"] == true);

  auto minus = run("cobordism 3/2 13/10 --json");
  json jm = json::parse(minus.out);
  CHECK(jm["verdict"] == "OPEN");
  REQUIRE(jm["path"].is_object());

  // With the rolled-up search disabled the torus surgery is the only route.
  auto minus0 = run("cobordism 3/2 13/10 --depth 0 --json");
  json jm0 = json::parse(minus0.out);
  REQUIRE(jm0["path"].is_object());
  CHECK(jm0["path"]["moves"][0]["kind"] == "TORUS_MINUS_ONE");
  CHECK(jm0["path"]["moves"][0]["slope"] == "-4/5");
}
