#include <doctest.h>

#include <cstring>
#include <random>

#include "helpers.hpp"
#include "msym/commands.hpp"
#include "msym/io.hpp"
#include "msym/msym.h"

using namespace msym;
using namespace testing_util;

namespace {

std::string run(msym_context* ctx, const char* name, const std::string& req, int* code) {
  char* out = nullptr;
  *code = msym_command(ctx, name, req.c_str(), &out);
  std::string s = out ? out : "";
  msym_string_free(out);
  return s;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("multiform documents round trip") {
  std::mt19937_64 rng(9);
  for (auto d : {rational(3), box(3, 2), torus(3, 1)}) {
    const MultiForm t = random_multiform(Shape(3, {2, 1}), d, rng);
    const Json j = multiform_to_json(t);
    CHECK(multiform_from_json(j) == t);
    CHECK(multiform_from_json(parse_json(j.dump())) == t);
  }
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(parse_json("{"), ValidationError);
  Json j = parse_json(R"({"D":2,"signature":[1],"coefficient_domain":{"kind":"rational"},
                          "terms":[{"blocks":[[0]],"coeff":"1/0"}]})");
  CHECK_THROWS_AS(multiform_from_json(j), ValidationError);
  j["coefficient_domain"]["kind"] = "spline";
  CHECK_THROWS_AS(multiform_from_json(j), ValidationError);
  Json k = parse_json(R"({"D":2,"signature":[1],"coefficient_domain":{"kind":"poly_box","degree_cap":1},
                          "terms":[{"blocks":[[0]],"coeff":[{"exp":[2,0],"c":"1"}]}]})");
  CHECK_THROWS_AS(multiform_from_json(k), ValidationError);
  Json b = parse_json(R"({"D":2,"signature":[1],"coefficient_domain":{"kind":"rational"},
                          "terms":[{"blocks":[[2]],"coeff":"1"}]})");
  CHECK_THROWS_AS(multiform_from_json(b), DomainError);
}

TEST_CASE("reports carry provenance and sorted keys") {
  const Json r = run_command("flux", Json{{"n", 2}, {"k", 3}});
  CHECK(r.contains("provenance"));
  const std::string text = r.dump();
  CHECK(text.find("\"deviation\"") < text.find("\"provenance\""));
  CHECK_THROWS_AS(run_command("nonsense", Json::object()), ValidationError);
}

TEST_CASE("C API status codes") {
  msym_context* ctx = nullptr;
  REQUIRE(msym_context_create(&ctx) == MSYM_OK);
  int code = -1;
  run(ctx, "flux", R"({"n":3,"k":2})", &code);
  CHECK(code == MSYM_OK);
  const std::string err = run(ctx, "duality", R"({"D":5,"signature":[2,2]})", &code);
  CHECK(code == MSYM_ERR_PRECONDITION);
  CHECK(err.find("\"error\"") != std::string::npos);
  CHECK(std::strlen(msym_last_error(ctx)) > 0);
  run(ctx, "project", "{not json", &code);
  CHECK(code == MSYM_ERR_VALIDATION);
  run(ctx, "cohomology", R"({"D":6,"N":2,"augmentation":[0],"domain":"torus","freq_cap":3})", &code);
  CHECK(code == MSYM_ERR_RESOURCE);
  CHECK(msym_set_threads(ctx, 0) == MSYM_ERR_VALIDATION);
  msym_context_destroy(ctx);
}

TEST_CASE("C API form handles") {
  msym_context* ctx = nullptr;
  REQUIRE(msym_context_create(&ctx) == MSYM_OK);
  const char* doc = R"({"D":2,"signature":[1],"coefficient_domain":{"kind":"poly_box","degree_cap":3},
    "terms":[{"blocks":[[0]],"coeff":[{"exp":[0,1],"c":"1"}]},{"blocks":[[1]],"coeff":[{"exp":[1,0],"c":"1"}]}]})";
  msym_form* t = nullptr;
  REQUIRE(msym_form_parse(ctx, doc, &t) == MSYM_OK);
  msym_form* s = nullptr;
  REQUIRE(msym_form_homotopy(ctx, t, &s) == MSYM_OK);
  msym_form* ds = nullptr;
  int top = -1;
  REQUIRE(msym_form_delta_n(ctx, s, &ds, &top) == MSYM_OK);
  CHECK(top == 0);
  int eq = 0;
  CHECK(msym_form_equal(ctx, ds, t, &eq) == MSYM_OK);
  CHECK(eq == 1);
  msym_form* dt = nullptr;
  REQUIRE(msym_form_d(ctx, t, 1, &dt) == MSYM_OK);
  int zero = 0;
  CHECK(msym_form_is_zero(ctx, dt, &zero) == MSYM_OK);
  CHECK(zero == 1);
  msym_form* bad = nullptr;
  CHECK(msym_form_d(ctx, t, 2, &bad) == MSYM_ERR_VALIDATION);
  msym_form* h = nullptr;
  const int slots[] = {1};
  CHECK(msym_form_hodge(ctx, t, slots, 1, "minkowski", &h) == MSYM_OK);
  char* json = nullptr;
  CHECK(msym_form_to_json(ctx, h, &json) == MSYM_OK);
  CHECK(std::string(json).find("\"terms\"") != std::string::npos);
  msym_string_free(json);
  for (auto* f : {t, s, ds, dt, h}) msym_form_destroy(f);
  msym_context_destroy(ctx);
}

TEST_CASE("selftest is byte identical across runs and thread counts") {
  msym_context* ctx = nullptr;
  REQUIRE(msym_context_create(&ctx) == MSYM_OK);
  int c1 = -1, c2 = -1;
  const std::string a = run(ctx, "selftest", "{}", &c1);
  const std::string b = run(ctx, "selftest", "{}", &c2);
  CHECK(c1 == MSYM_OK);
  CHECK(a == b);
  msym_context_destroy(ctx);
}

}
