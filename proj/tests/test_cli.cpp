#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "albert/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json j;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = e6::run_cli(args, out, err);
  Run r{code, out.str(), err.str(), {}};
  if (!r.out.empty() && r.out.front() == '{') r.j = json::parse(r.out);
  return r;
}

}  // namespace

TEST_CASE("classify command") {
  Run r = run({"classify", "--q", "2", "(0,0,1|0;0;0)", "--no-timing"});
  REQUIRE(r.code == 0);
  CHECK(r.j["schema"] == "albert-e6/1");
  CHECK(r.j["color"] == "white");
  CHECK(r.j["delta"] == "0");
  Run g = run({"classify", "--q", "5", "(3,1,1|0;0;0)", "--no-timing"});
  CHECK(g.j["color"] == "black");
  CHECK(g.j["delta"] == "3");
}

TEST_CASE("count-white command") {
  Run r = run({"count-white", "--q", "2", "--method", "formula", "--no-timing"});
  REQUIRE(r.code == 0);
  CHECK(r.j["white_vectors"] == 139503);
  Run s = run({"count-white", "--q", "3", "--method", "stratified", "--no-timing"});
  CHECK(s.j["white_vectors"] == 130747526);
  Run e = run({"count-white", "--q", "2", "--method", "enumerate", "--no-timing"});
  CHECK(e.j["white_vectors"] == 139503);
  CHECK(e.j["in_j10"] == 527);
}

TEST_CASE("order command") {
  Run r = run({"order", "--q", "4", "--no-timing"});
  REQUIRE(r.code == 0);
  CHECK(r.j["gcd3"] == 3);
  Run r2 = run({"order", "--q", "2", "--no-timing"});
  CHECK(r2.j["se6"] == r2.j["e6"]);
}

TEST_CASE("orbit command with a single generator") {
  Run r = run({"orbit", "--q", "2", "--gens", "tau", "--no-timing"});
  REQUIRE(r.code == 0);
  CHECK(r.j["orbit_points"] == 3);
}

TEST_CASE("reduce command verifies its word") {
  Run r = run({"reduce", "--q", "5", "(2,3,4|[1,0,1,0,0,0,0,0];0;e1)", "--no-timing"});
  REQUIRE(r.code == 0);
  CHECK(r.j["color"] == "black");
  CHECK(r.j["lambda"] == "4");
  CHECK(r.j["word_verified"] == true);
}

TEST_CASE("verify suites") {
  Run r = run({"verify", "--q", "2", "--suite", "commutators", "--seed", "7", "--no-timing"});
  CHECK(r.code == 0);
  CHECK(r.j["pass"] == true);
  Run o = run({"verify", "--q", "3", "--suite", "orders", "--no-timing"});
  CHECK(o.code == 0);
}

TEST_CASE("matrix command") {
  Run r = run({"matrix", "--q", "3", "--word", "tau;tau;tau", "--no-timing"});
  REQUIRE(r.code == 0);
  for (unsigned i = 0; i < 27; ++i)
    for (unsigned j = 0; j < 27; ++j)
      CHECK(r.j["matrix"][i][j] == (i == j ? "1" : "0"));
}

TEST_CASE("identical runs give identical reports") {
  std::vector<std::string> cmd = {"verify", "--q",      "3",  "--suite", "moufang",
                                  "--seed", "11",       "--samples", "500", "--no-timing"};
  Run a = run(cmd), b = run(cmd);
  CHECK(a.out == b.out);
  // thread count never changes numbers
  Run one = run({"count-white", "--q", "2", "--method", "enumerate", "--threads", "1",
                 "--no-timing"});
  Run two = run({"count-white", "--q", "2", "--method", "enumerate", "--threads", "2",
                 "--no-timing"});
  CHECK(one.out == two.out);
}

TEST_CASE("usage and parse failures exit with 2") {
  CHECK(run({"classify", "--q", "2", "(0,0|0;0;0)"}).code == 2);
  CHECK(run({"classify", "--q", "2", "(0,0,1|0;0)"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"count-white", "--q", "12"}).code == 2);
  CHECK(run({"verify", "--suite", "bogus"}).code == 2);
  CHECK(run({"count-white", "--format", "yaml"}).code == 2);
  // enumeration past the budget is refused
  CHECK(run({"count-white", "--q", "4", "--method", "enumerate"}).code == 2);
}

TEST_CASE("alternate output formats") {
  Run csv = run({"count-white", "--q", "2", "--method", "formula", "--format", "csv",
                 "--no-timing"});
  CHECK(csv.code == 0);
  CHECK(csv.out.find("white_vectors") != std::string::npos);
  CHECK(csv.out.find("139503") != std::string::npos);
  Run txt = run({"order", "--q", "2", "--format", "text", "--no-timing"});
  CHECK(txt.code == 0);
  CHECK(txt.out.find("se6:") != std::string::npos);
}
