#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "msetforge/cli.hpp"

using msetforge::run_cli;
using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("witness subcommand") {
  const Run r = run({"witness", "--t", "1", "--c", "-1", "--g", "-1,-1,1", "--m", "7"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["p"] == "29");
  CHECK(j["a"] == "24");
  CHECK(j["m"] == 7);
  CHECK(j["route"] == "cond3");
  CHECK(j["g"] == Json::array({"-1", "-1", "1"}));
  for (const auto& c : j["checks"]) CHECK(c["ok"] == true);
}

TEST_CASE("identical inputs give byte-identical output") {
  const std::vector<std::string> args{"witness", "--t", "3", "--c", "1", "--g", "1,-3,1", "--m", "20"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> scan{"mset-scan", "--g", "-1,-1,1", "--max-modulus", "30", "--threads", "4"};
  const std::vector<std::string> scan1{"mset-scan", "--g", "-1,-1,1", "--max-modulus", "30", "--threads", "1"};
  CHECK(run(scan).out == run(scan1).out);
}

TEST_CASE("not covered exits with 2") {
  const Run r = run({"witness", "--t", "1", "--c", "-1", "--g", "-1,-1,1", "--m", "12"});
  CHECK(r.code == 2);
  CHECK(Json::parse(r.out)["status"] == "not-covered");
  const Run z = run({"zsigmondy", "--a", "2", "--m", "6"});
  CHECK(z.code == 2);
  CHECK(Json::parse(z.out)["prime"].is_null());
}

TEST_CASE("errors exit with 1") {
  CHECK(run({"witness", "--t", "1", "--c", "-1", "--g", "1,0,1", "--m", "7"}).code == 1);
  CHECK(run({"lehmer", "--R", "1", "--Q", "1", "--u", "3"}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({"lehmer", "--R", "5", "--u", "abc"}).code == 1);
  CHECK(run({"aurifeuille", "--n", "20", "--k", "5"}).code == 1);
  const Run r = run({"witness", "--m", "7"});
  CHECK(r.code == 1);
  CHECK_FALSE(r.err.empty());
  CHECK(r.out.empty());
}

TEST_CASE("lehmer subcommand") {
  CHECK(Json::parse(run({"lehmer", "--R", "5", "--Q", "1", "--u", "20"}).out)["u"] == "6765");
  CHECK(Json::parse(run({"lehmer", "--R", "5", "--v", "5"}).out)["v"] == "5");
  CHECK(Json::parse(run({"lehmer", "--R", "5", "--phi", "20"}).out)["phi"] == "41");
  CHECK(Json::parse(run({"lehmer", "--R", "5", "--rank", "41"}).out)["rank"] == "20");
  const Json p = Json::parse(run({"lehmer", "--R", "5", "--primitive", "20"}).out);
  CHECK(p["primes"] == Json::array({"41"}));
  const Json q = Json::parse(run({"lehmer", "--R", "5", "--primitive", "10", "--prime", "11"}).out);
  CHECK(q["primitive"] == false);
  CHECK(q["reason"] == "rank-mismatch");
  CHECK(run({"lehmer", "--R", "5", "--u", "3", "--v", "3"}).code == 1);
}

TEST_CASE("polynomial subcommands") {
  const Json c = Json::parse(run({"cyclotomic", "--n", "6"}).out);
  CHECK(c["coeffs"] == Json::array({"1", "-1", "1"}));
  CHECK(c["pretty"] == "X^2 - X + 1");
  CHECK(Json::parse(run({"cyclotomic", "--n", "5", "--x", "2", "--y", "1"}).out)["value"] == "31");
  CHECK(Json::parse(run({"resultant", "--f", "-1,-1,1", "--m", "7"}).out)["resultant"] == "29");
  CHECK(Json::parse(run({"resultant", "--f", "-2,1", "--g", "-2,1"}).out)["resultant"] == "0");
  const Json a = Json::parse(run({"aurifeuille", "--n", "5", "--k", "5"}).out);
  CHECK(a["F"] == Json::array({"1", "3", "1"}));
  CHECK(a["G"] == Json::array({"1", "1"}));
  CHECK(a["verified"] == true);
  const Json t = Json::parse(run({"two-squares", "--R", "5", "--ell", "20"}).out);
  CHECK(t["phi"] == "41");
  CHECK(t["A"] == "4");
  CHECK(t["B"] == "5");
}

TEST_CASE("scan output") {
  const Run r = run({"mset-scan", "--g", "-2,1", "--max-modulus", "5"});
  CHECK(r.code == 0);
  CHECK(r.out == "M,init,distinct_count,tail,period\n2,0,1,0,1\n2,1,2,1,1\n4,1,3,2,1\n5,1,4,0,4\n");
  const Run p = run({"mset-scan", "--g", "-1,-1,1", "--max-modulus", "100", "--max-states", "500", "--format", "json"});
  CHECK(p.code == 2);
  CHECK(Json::parse(p.out)["status"] == "partial");
}

TEST_CASE("witness files round-trip through verify") {
  const Run w = run({"witness", "--t", "1", "--c", "-1", "--g", "-1,-1,1", "--m", "40"});
  const std::string path = "cli_witness_roundtrip.json";
  {
    std::ofstream f(path);
    f << w.out;
  }
  const Run ok = run({"verify", "--witness", path});
  CHECK(ok.code == 0);
  CHECK(Json::parse(ok.out)["valid"] == true);
  Json bad = Json::parse(w.out);
  bad["a"] = "8";
  {
    std::ofstream f(path);
    f << bad.dump();
  }
  const Run rejected = run({"verify", "--witness", path});
  CHECK(rejected.code == 1);
  CHECK(Json::parse(rejected.out)["valid"] == false);
  std::remove(path.c_str());
}

TEST_CASE("verify suite subset") {
  const Run r = run({"verify", "--suite", "paper", "--only", "5"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  REQUIRE(j["criteria"].size() == 1);
  CHECK(j["criteria"][0]["pass"] == true);
  CHECK(run({"verify", "--suite", "nope"}).code == 1);
}

TEST_CASE("help") {
  const Run r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("witness") != std::string::npos);
}
