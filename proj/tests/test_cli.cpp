#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "kncross/cli.hpp"

using json = nlohmann::json;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = kncross::run(args, out, err);
  return {status, out.str(), err.str()};
}

json error_of(const Result& r) { return json::parse(r.err.substr(0, r.err.find('\n'))); }

}  // namespace

TEST_CASE("map") {
  const Result r = run({"map", "--in", "n=2; arcs=(1,2)"});
  CHECK(r.status == 0);
  CHECK(r.out == "n=1; arcs=(1,1)\n");
  const Result back = run({"map", "--in", "n=1; arcs=(1,1)", "--class", "braids", "--format", "json"});
  CHECK(back.status == 0);
  const json j = json::parse(back.out);
  CHECK(j["direction"] == "inverse");
  CHECK(j["image"] == "n=2; arcs=(1,2)");
  const Result tableau = run({"map", "--in", "n=4; arcs=(1,3)(2,4)", "--route", "tableau"});
  CHECK(tableau.out == "n=3; arcs=(1,2)(2,3)\n");
  const Result restricted = run({"map", "--in", "n=2; arcs=", "--class", "2regular"});
  CHECK(restricted.out == "n=1; arcs=(1,1)\n");
}

TEST_CASE("count") {
  const Result r = run({"count", "--class", "partitions", "--k", "3", "--n-max", "6"});
  REQUIRE(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j["command"] == "count --class partitions --k 3 --n-max 6");
  CHECK(j["version"] == kncross::kVersion);
  CHECK(j["counts"]["6"] == "202");
  CHECK(j.contains("elapsed_ms"));
  const Result csv = run({"count", "--class", "braids-noiso", "--n", "4", "--format", "csv"});
  CHECK(csv.out == "class,k,route,n,count\nbraids-noiso,3,brute,4,15\n");
  const Result closed = run({"count", "--class", "braids-noiso", "--n", "30", "--route", "closed", "--format", "csv"});
  CHECK(closed.status == 0);
  CHECK(closed.out.find(",30,") != std::string::npos);
}

TEST_CASE("output is deterministic apart from timing") {
  auto stripped = [](const std::string& text) {
    json j = json::parse(text);
    j.erase("elapsed_ms");
    return j.dump();
  };
  const std::vector<std::string> args{"count", "--class", "braids", "--k", "4", "--n-max", "7", "--jobs", "3"};
  CHECK(stripped(run(args).out) == stripped(run(args).out));
}

TEST_CASE("enum and render") {
  const Result r = run({"enum", "--class", "partitions", "--n", "3", "--format", "text"});
  CHECK(r.status == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 5);
  const json j = json::parse(run({"enum", "--class", "braids", "--n", "1"}).out);
  CHECK(j["count"] == 2);
  const Result svg = run({"render", "--in", "n=3; arcs=(1,3)(2,2)"});
  CHECK(svg.status == 0);
  CHECK(svg.out.rfind("<svg", 0) == 0);
}

TEST_CASE("rho3 and asympt") {
  const Result r = run({"rho3", "--n-max", "6", "--route", "all"});
  REQUIRE(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j["agreement"] == true);
  CHECK(j["routes"]["closed"]["6"] == "191");
  const Result csv = run({"rho3", "--n-max", "3", "--route", "recurrence", "--format", "csv"});
  CHECK(csv.out == "n,recurrence\n1,1\n2,2\n3,5\n");

  const Result a = run({"asympt", "--n", "100"});
  REQUIRE(a.status == 0);
  const json aj = json::parse(a.out);
  CHECK(aj["theta"] == "-7");
  CHECK(aj["c2"] == "4102/9");
  CHECK(aj["c2_decimal"] == "455.77778");
  CHECK(aj["c3_decimal"] == "-5651.160494");
  CHECK(aj.contains("fit_K"));
}

TEST_CASE("verify") {
  const Result ok = run({"verify", "--suite", "duality", "--n-max", "7", "--k", "3"});
  CHECK(ok.status == 0);
  CHECK(json::parse(ok.out)["passed"] == true);
  // The quoted constant does not survive the fit, so this suite reports failure.
  const Result asym = run({"verify", "--suite", "asymptotics"});
  CHECK(asym.status == 2);
  CHECK(error_of(asym)["error"] == "verification_failed");
}

TEST_CASE("errors") {
  const Result usage = run({"count", "--k", "3"});
  CHECK(usage.status == 1);
  CHECK(error_of(usage)["error"] == "usage");
  CHECK(run({"frobnicate"}).status == 1);
  CHECK(run({"count", "--class", "partitions", "--n", "3", "--n-max", "4"}).status == 1);

  const Result guard = run({"count", "--class", "partitions", "--n", "13"});
  CHECK(guard.status == 1);
  CHECK(error_of(guard)["error"] == "range_guard");

  const Result bad_diagram = run({"map", "--in", "n=2; arcs=(2,1)"});
  CHECK(bad_diagram.status == 1);
  CHECK(error_of(bad_diagram).contains("message"));

  CHECK(run({"--version"}).out == std::string(kncross::kVersion) + "\n");
  CHECK(run({"--help"}).status == 0);
}
