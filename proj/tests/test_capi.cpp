#include <doctest.h>

#include <json.hpp>
#include <memory>
#include <string>

#include "hclab/hclab.h"

using Json = nlohmann::json;

namespace {

Json take(char* s) {
  REQUIRE(s != nullptr);
  Json j = Json::parse(s);
  hclab_string_free(s);
  return j;
}

struct Ctx {
  hclab_context* p = nullptr;
  explicit Ctx(int k, hclab_mode m = HCLAB_MODE_EXACT) { REQUIRE(hclab_context_create(k, m, 0, &p) == HCLAB_OK); }
  ~Ctx() { hclab_context_destroy(p); }
};

struct Mod {
  hclab_module* p = nullptr;
  ~Mod() { hclab_module_destroy(p); }
};

}  // namespace

TEST_CASE("context creation and errors") {
  hclab_context* ctx = nullptr;
  CHECK(hclab_context_create(6, HCLAB_MODE_EXACT, 0, &ctx) == HCLAB_ERR_DOMAIN);
  CHECK(ctx == nullptr);
  CHECK(std::string(hclab_last_error()).size() > 0);
  CHECK(hclab_context_create(5, HCLAB_MODE_EXACT, 9, &ctx) == HCLAB_ERR_INVALID_ARGUMENT);
  CHECK(hclab_context_create(5, static_cast<hclab_mode>(7), 0, &ctx) == HCLAB_ERR_INVALID_ARGUMENT);
  CHECK(hclab_context_create(5, HCLAB_MODE_EXACT, 0, nullptr) == HCLAB_ERR_INVALID_ARGUMENT);
  Ctx c(8);
  CHECK(hclab_context_h(c.p) == 4);
  char* s = nullptr;
  REQUIRE(hclab_field_info(c.p, &s) == HCLAB_OK);
  auto j = take(s);
  CHECK(j["schema"] == "hclab/1");
  CHECK(j["field"]["index_set"] == Json::array({0, 1}));
  CHECK(j["field"]["p"] == 23);
}

TEST_CASE("modules through the C API") {
  Ctx c(5);
  Mod m;
  const int w[] = {0, 1, 2};
  REQUIRE(hclab_module_from_weight(c.p, w, 3, &m.p) == HCLAB_OK);
  CHECK(hclab_module_dim(m.p) == 8);
  int passed = 0;
  char* s = nullptr;
  REQUIRE(hclab_module_verify(m.p, &passed, &s) == HCLAB_OK);
  auto report = take(s);
  CHECK(passed == 1);
  CHECK(report["report"]["certificate"]["supercommutant_dim"] == 2);

  const int bad[] = {0, 0};
  hclab_module* none = nullptr;
  CHECK(hclab_module_from_weight(c.p, bad, 2, &none) == HCLAB_ERR_INVALID_ARGUMENT);
  CHECK(none == nullptr);

  Mod d;
  const int xi[] = {2, 1};
  REQUIRE(hclab_module_from_partition(c.p, xi, 2, &d.p) == HCLAB_OK);
  CHECK(hclab_module_dim(d.p) == 4);
  REQUIRE(hclab_module_weight_spaces(d.p, &s) == HCLAB_OK);
  auto ws = take(s);
  REQUIRE(ws["weights"].size() == 1);
  CHECK(ws["weights"][0]["weight"] == Json::array({0, 1, 0}));
  CHECK(ws["weights"][0]["multiplicity"] == 4);

  Mod v;
  REQUIRE(hclab_module_rank2(c.p, 0, 0, &v.p) == HCLAB_OK);
  REQUIRE(hclab_module_verify(v.p, &passed, &s) == HCLAB_OK);
  auto vr = take(s);
  CHECK(passed == 1);
  CHECK(vr["report"]["certificate"]["completely_splittable"] == false);
}

TEST_CASE("module JSON round trip and mutation") {
  Ctx c(5);
  Mod m;
  const int xi[] = {3};
  REQUIRE(hclab_module_from_partition(c.p, xi, 1, &m.p) == HCLAB_OK);
  char* s = nullptr;
  REQUIRE(hclab_module_json(m.p, &s) == HCLAB_OK);
  const std::string text = s;
  hclab_string_free(s);

  Mod back;
  REQUIRE(hclab_module_load(c.p, text.c_str(), &back.p) == HCLAB_OK);
  REQUIRE(hclab_module_json(back.p, &s) == HCLAB_OK);
  CHECK(std::string(s) == text);
  hclab_string_free(s);

  Json j = Json::parse(text);
  auto& C2 = j["C"][1];
  bool done = false;
  for (auto& row : C2) {
    for (auto& entry : row) {
      if (entry[0] != 0) {
        entry[0] = 23 - entry[0].get<int>();
        done = true;
        break;
      }
    }
    if (done) break;
  }
  REQUIRE(done);
  Mod bad;
  REQUIRE(hclab_module_load(c.p, j.dump().c_str(), &bad.p) == HCLAB_OK);
  int passed = 1;
  REQUIRE(hclab_module_verify(bad.p, &passed, &s) == HCLAB_OK);
  auto rep = take(s);
  CHECK(passed == 0);
  bool clifford_failed = false;
  for (const auto& r : rep["report"]["relations"])
    if (r["relation"] == "Clifford") clifford_failed = r["passed"] == false;
  CHECK(clifford_failed);

  Mod junk;
  CHECK(hclab_module_load(c.p, "{not json", &junk.p) == HCLAB_ERR_INVALID_ARGUMENT);
  Ctx other(7);
  CHECK(hclab_module_load(other.p, text.c_str(), &junk.p) == HCLAB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("reports") {
  Ctx c(5);
  char* s = nullptr;
  REQUIRE(hclab_classify(c.p, 3, 0, &s) == HCLAB_OK);
  auto cl = take(s);
  REQUIRE(cl["classes"].size() == 2);
  CHECK(cl["classes"][0]["dim"] == 8);
  CHECK(cl["classes"][1]["dim"] == 4);
  CHECK(hclab_classify(c.p, 9, 0, &s) == HCLAB_ERR_GUARD);

  REQUIRE(hclab_weights(c.p, 3, 0, &s) == HCLAB_OK);
  auto w = take(s);
  CHECK(w["weights"].size() == 2);
  CHECK(w["cross_check"]["ok"] == true);

  int passed = 0;
  REQUIRE(hclab_verify_all(c.p, 4, 0, &passed, &s) == HCLAB_OK);
  take(s);
  CHECK(passed == 1);

  const int lam[] = {2, 1};
  REQUIRE(hclab_crystal(c.p, lam, 2, -1, &s) == HCLAB_OK);
  auto cr = take(s);
  CHECK(cr["residues"].size() == 3);

  REQUIRE(hclab_semisimple(c.p, 4, 1, &s) == HCLAB_OK);
  auto ss = take(s);
  CHECK(ss["semisimple"] == true);
  CHECK(ss["dimension_sum"]["verdict"] == "EQUAL");

  REQUIRE(hclab_sum_check(c.p, 3, 1, &s) == HCLAB_OK);
  auto sc = take(s);
  CHECK(sc["report"]["sum"] == 48);
  CHECK(sc["report"]["constructed"] == true);
}

TEST_CASE("semisimplicity reports") {
  char* s = nullptr;
  Ctx c3(3);
  REQUIRE(hclab_semisimple(c3.p, 5, 1, &s) == HCLAB_OK);
  auto a = take(s);
  CHECK(a["semisimple"] == false);
  CHECK(a["witness"]["kind"] == "exceptional");
  CHECK(a["witness"]["equations"][0]["solvable"] == false);
  REQUIRE(hclab_semisimple(c3.p, 6, 1, &s) == HCLAB_OK);
  auto b = take(s);
  CHECK(b["witness"]["kind"] == "crystal");
  CHECK(b["witness"]["lambda"] == Json::array({3, 2}));
  Ctx c8(8);
  REQUIRE(hclab_semisimple(c8.p, 2, 1, &s) == HCLAB_OK);
  auto d = take(s);
  CHECK(d["semisimple"] == false);
  CHECK(d["witness"]["kind"] == "dimension-sum");
  CHECK(d["dimension_sum"]["verdict"] == "STRICTLY-LESS");
}

TEST_CASE("float mode") {
  Ctx c(5, HCLAB_MODE_FLOAT);
  Mod m;
  const int xi[] = {2, 1};
  REQUIRE(hclab_module_from_partition(c.p, xi, 2, &m.p) == HCLAB_OK);
  int passed = 0;
  char* s = nullptr;
  REQUIRE(hclab_module_verify(m.p, &passed, &s) == HCLAB_OK);
  take(s);
  CHECK(passed == 1);
}
