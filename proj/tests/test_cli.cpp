#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

using Json = nlohmann::json;

namespace {

const std::string kCli = HCLAB_CLI_PATH;
const std::string kTmp = HCLAB_TEST_TMP;

int run(const std::string& args, const std::string& out = "/dev/null") {
  const std::string cmd = kCli + " " + args + " > " + out + " 2>/dev/null";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("classify") {
  const auto out = kTmp + "/classify.json";
  REQUIRE(run("classify --n 3 --k 5", out) == 0);
  auto j = Json::parse(slurp(out));
  REQUIRE(j["classes"].size() == 2);
  CHECK(j["classes"][0]["xi"] == Json::array({3}));
  CHECK(j["classes"][0]["dim"] == 8);
  CHECK(j["classes"][1]["dim"] == 4);
  REQUIRE(run("classify --n 3 --k 8", out) == 0);
  j = Json::parse(slurp(out));
  REQUIRE(j["classes"].size() == 1);
  CHECK(j["classes"][0]["type"] == "Q");
  CHECK(j["classes"][0]["dim"] == 4);
  REQUIRE(run("classify --n 0 --k 5", out) == 0);
  CHECK(Json::parse(slurp(out))["classes"].empty());
  CHECK(run("classify --n 3 --k 6") == 2);
  CHECK(run("classify --n 8 --k 5") == 2);
  CHECK(run("classify --n 3 --k 5 --format csv", out) == 0);
  CHECK(slurp(out).rfind("xi,family", 0) == 0);
}

TEST_CASE("construct") {
  const auto path = kTmp + "/d21.json";
  REQUIRE(run("construct --xi 2,1 --k 5 --out " + path) == 0);
  CHECK(Json::parse(slurp(path))["dim"] == 4);
  const auto p2 = kTmp + "/w012.json";
  REQUIRE(run("construct --weight 0,1,2 --k 5 --out " + p2) == 0);
  CHECK(Json::parse(slurp(p2))["dim"] == 8);
  CHECK(run("construct --weight 0,0 --k 5") == 2);
  CHECK(run("construct --weight 0,x --k 5") == 2);
  CHECK(run("construct --k 5") == 2);
}

TEST_CASE("verify") {
  CHECK(run("verify --all --n 4 --k 5") == 0);
  CHECK(run("verify --xi 3,2 --k 12") == 0);
  CHECK(run("verify --pair 0,2 --k 5") == 0);
  const auto path = kTmp + "/mutant.json";
  REQUIRE(run("construct --xi 3 --k 5 --out " + path) == 0);
  auto j = Json::parse(slurp(path));
  bool done = false;
  for (auto& row : j["C"][1]) {
    for (auto& e : row)
      if (e[0] != 0) {
        e[0] = 23 - e[0].get<int>();
        done = true;
        break;
      }
    if (done) break;
  }
  REQUIRE(done);
  std::ofstream(path) << j.dump();
  const auto rep = kTmp + "/mutant_report.json";
  CHECK(run("verify --module " + path + " --k 5", rep) == 1);
  CHECK(Json::parse(slurp(rep))["report"]["passed"] == false);
}

TEST_CASE("semisimple") {
  const auto out = kTmp + "/ss.json";
  REQUIRE(run("semisimple --n 4 --k 5", out) == 0);
  CHECK(Json::parse(slurp(out))["semisimple"] == true);
  REQUIRE(run("semisimple --n 5 --k 3 --witness", out) == 0);
  auto j = Json::parse(slurp(out));
  CHECK(j["semisimple"] == false);
  CHECK(j["witness"]["kind"] == "exceptional");
  REQUIRE(run("semisimple --n 2 --k 8 --witness", out) == 0);
  j = Json::parse(slurp(out));
  CHECK(j["semisimple"] == false);
  CHECK(j["dimension_sum"]["verdict"] == "STRICTLY-LESS");
}

TEST_CASE("other commands") {
  const auto out = kTmp + "/other.json";
  REQUIRE(run("crystal --lambda 7,6,5 --i 6 --k 28", out) == 0);
  auto j = Json::parse(slurp(out));
  CHECK(j["residues"][0]["phi"] == 2);
  CHECK(j["residues"][0]["cogood_result"] == Json::array({7, 7, 5}));
  REQUIRE(run("sum-check --n 3 --k 5 --construct", out) == 0);
  CHECK(Json::parse(slurp(out))["report"]["verdict"] == "EQUAL");
  REQUIRE(run("weights --n 4 --k 8", out) == 0);
  CHECK(Json::parse(slurp(out))["cross_check"]["ok"] == true);
  REQUIRE(run("field-info --k 5 --mode float", out) == 0);
  CHECK(Json::parse(slurp(out))["field"]["mode"] == "float");
  CHECK(run("bogus") == 2);
  CHECK(run("crystal --lambda 3,3 --k 5") == 2);
}

TEST_CASE("output is deterministic") {
  const auto a = kTmp + "/det_a.json", b = kTmp + "/det_b.json";
  REQUIRE(run("construct --xi 3,1 --k 12", a) == 0);
  REQUIRE(run("construct --xi 3,1 --k 12", b) == 0);
  CHECK(slurp(a) == slurp(b));
  REQUIRE(run("verify --all --n 3 --k 7", a) == 0);
  REQUIRE(run("verify --all --n 3 --k 7", b) == 0);
  CHECK(slurp(a) == slurp(b));
}

TEST_CASE("seed prime from the environment") {
  const auto out = kTmp + "/seed.json";
  REQUIRE(std::system(("HCLAB_SEED_PRIME=31 " + kCli + " field-info --k 5 > " + out).c_str()) == 0);
  CHECK(Json::parse(slurp(out))["field"]["p"] == 31);
}
