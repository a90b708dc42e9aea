#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "ktheta/cli.hpp"
#include "ktheta/real_sw.hpp"
#include "ktheta/table_io.hpp"

using namespace ktheta;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("types") {
  const Run r = run({"types", "--g-max", "1"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["count"] == 5);
  CHECK(j["types"][2] == json{{"g", 1}, {"n", 2}, {"a", 0}});
  const Run csv = run({"types", "--g-max", "0", "--format", "csv"});
  CHECK(csv.out == "g,n,a\n0,1,0\n0,0,1\n");
}

TEST_CASE("model") {
  const Run ok = run({"model", "--type", "1,1,1"});
  CHECK(ok.code == 0);
  const json j = json::parse(ok.out);
  CHECK(j["iotaStar"] == json{{1, 1}, {0, -1}});
  CHECK(j["hBlock"] == json{{1}});

  const Run bad = run({"model", "--type", "3,1,0"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("parity") != std::string::npos);
  CHECK(run({"model", "--type", "1,0,1"}).code == 2);
  CHECK(run({"model", "--type", "1,x,1"}).code == 2);
  CHECK(run({"model", "--type", "1,1"}).code == 2);
}

TEST_CASE("theta") {
  const json all = json::parse(run({"theta", "--g", "2"}).out);
  CHECK(all["count"] == 16);
  const Run real = run({"theta", "--g", "1", "--real", "--type", "1,1,1"});
  CHECK(real.code == 0);
  CHECK(json::parse(real.out)["count"] == 2);
  CHECK(run({"theta", "--g", "1", "--real"}).code == 2);
  CHECK(run({"theta", "--g", "1", "--type", "1,1,1"}).code == 2);
  CHECK(run({"theta", "--g", "2", "--real", "--type", "1,1,1"}).code == 2);
  CHECK(run({"theta", "--g", "-1"}).code == 2);
}

TEST_CASE("sw table output") {
  const Run r = run({"sw", "--type", "1,2,0", "--q", "0,0"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["components"].size() == 2);
  CHECK(j["components"][0]["row"] == json{0});
  CHECK(j["components"][1]["row"] == json{1});
  CHECK(j["components"][1]["mu"] == json{"1/2", "0"});
  CHECK(j["spinData"] == json{1, 1});
  CHECK(j["provenance"]["program"] == "ktheta");
  CHECK_FALSE(validate_table_json(j).has_value());
  CHECK(run({"sw", "--type", "1,2,0", "--q", "0,0"}).out == r.out);

  const Run csv = run({"sw", "--type", "1,2,0", "--q", "0,0", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.find("mu,w_b1,w_C1,w_C2") != std::string::npos);
}

TEST_CASE("sw errors") {
  const Run nonReal = run({"sw", "--type", "1,1,1", "--q", "0,0"});
  CHECK(nonReal.code == 2);
  CHECK(nonReal.err.find("q(T2 x) = q(x)") != std::string::npos);
  CHECK(run({"sw", "--type", "1,1,1", "--q", "1,0,0"}).code == 2);
  CHECK(run({"sw", "--type", "1,1,1", "--q", "1,2"}).code == 2);
  CHECK(run({"sw", "--type", "1,1,1"}).code == 2);
  CHECK(run({"sw", "--type", "1,1,1", "--q", "1,0", "--bogus"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("emitted tables re-validate, and tampering is caught") {
  for (const auto& t : enumerate_types(2)) {
    if (t.n == 0) continue;
    const auto model = standard_model(t);
    for (const auto& q : real_theta(model)) {
      const json j = json::parse(table_to_json(sw_table(model, q)).dump());
      CHECK_FALSE(validate_table_json(j).has_value());
    }
  }
  json j = table_to_json(sw_table(standard_model({1, 2, 0}), QuadraticFormZ2(1, 0)));
  j["components"][1]["row"][0] = 0;
  CHECK(validate_table_json(j).has_value());
  json k = table_to_json(sw_table(standard_model({1, 2, 0}), QuadraticFormZ2(1, 0)));
  k["spinData"][0] = 0;
  CHECK(validate_table_json(k).has_value());
}

TEST_CASE("verify") {
  const Run ok = run({"verify", "--suite", "theta", "--seed", "5"});
  CHECK(ok.code == 0);
  const json j = json::parse(ok.out);
  CHECK(j["passed"] == true);
  CHECK(j["criteria"].size() == 2);
  CHECK(run({"verify", "--suite", "theta", "--serial", "--format", "csv"}).code == 0);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"verify", "--suite", "ah", "--tol", "-1"}).code == 2);
  // An impossible tolerance turns numerical checks into verification failures.
  CHECK(run({"verify", "--suite", "ah", "--tol", "1e-300"}).code == 1);
}

}  // TEST_SUITE
