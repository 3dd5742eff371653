// Exercises the shared library through its C header only.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "ghrv/ghrv.h"

namespace {

const char* kRing = R"j({"field":"GF(5)","yvars":["x","y"],"xvars":["x1","x2"],"f":["x^2","y^2"]})j";

std::string take(char* s) {
  std::string out = s ? s : "";
  ghrv_string_free(s);
  return out;
}

std::string temp_path(const std::string& name) {
  const char* dir = std::getenv("TMPDIR");
  return std::string(dir ? dir : "/tmp") + "/ghrv_capi_" + name;
}

}  // namespace

TEST_CASE("rings and fixtures through the C API") {
  ghrv_ring* ring = nullptr;
  REQUIRE(ghrv_ring_from_json(kRing, &ring) == GHRV_OK);
  size_t c = 0;
  CHECK(ghrv_ring_c(ring, &c) == GHRV_OK);
  CHECK(c == 2);

  ghrv_complex* k = nullptr;
  REQUIRE(ghrv_complex_fixture(ring, "k5", &k) == GHRV_OK);
  ghrv_complex* cone = nullptr;
  REQUIRE(ghrv_complex_cone(k, "x1*x2", &cone) == GHRV_OK);
  size_t n = 0;
  CHECK(ghrv_complex_size(cone, &n) == GHRV_OK);
  CHECK(n == 4);
  size_t rank = 0;
  int certified = 0;
  CHECK(ghrv_complex_rank(cone, 'A', &rank, &certified) == GHRV_OK);
  CHECK(rank == 2);
  CHECK(certified == 1);

  ghrv_variety* v = nullptr;
  REQUIRE(ghrv_complex_variety(cone, &v) == GHRV_OK);
  int member = -1;
  CHECK(ghrv_variety_contains(v, "1,0", nullptr, &member) == GHRV_OK);
  CHECK(member == 1);
  CHECK(ghrv_variety_contains(v, "1,1", nullptr, &member) == GHRV_OK);
  CHECK(member == 0);
  CHECK(ghrv_variety_contains(v, "a,1", "GF(25)", &member) == GHRV_OK);
  CHECK(member == 0);
  char* json = nullptr;
  CHECK(ghrv_variety_to_json(v, "GF(5)", &json) == GHRV_OK);
  const auto parsed = nlohmann::json::parse(take(json));
  CHECK(parsed["points"]["members"] == nlohmann::json::parse("[[1,0],[0,1]]"));
  CHECK(parsed["components"].size() == 2);

  int contractible = -1;
  char* report = nullptr;
  CHECK(ghrv_contractible(cone, "1,1", nullptr, nullptr, &contractible, &report) == GHRV_OK);
  CHECK(contractible == 1);
  take(report);
  CHECK(ghrv_contractible(cone, "0,1", nullptr, "y, 1 + x", &contractible, &report) == GHRV_OK);
  CHECK(contractible == 0);
  take(report);

  int consistent = 0;
  CHECK(ghrv_preimage_check(cone, "1,0", nullptr, 5, 1, &consistent) == GHRV_OK);
  CHECK(consistent == 1);

  ghrv_variety_free(v);
  ghrv_complex_free(cone);
  ghrv_complex_free(k);
  ghrv_ring_free(ring);
}

TEST_CASE("errors map to status codes") {
  ghrv_ring* ring = nullptr;
  CHECK(ghrv_ring_from_json("{", &ring) == GHRV_ERR_FORMAT);
  CHECK(ghrv_ring_from_json(R"j({"field":"GF(5)","yvars":["x"],"xvars":["x1","x2"],"f":["x^2","x^3"]})j", &ring) ==
        GHRV_ERR_NOT_REGULAR_SEQUENCE);
  CHECK(std::string(ghrv_last_error()).find("NotRegularSequence") == 0);
  CHECK(std::string(ghrv_status_name(GHRV_ERR_NOT_REGULAR_SEQUENCE)) == "NotRegularSequence");
  REQUIRE(ghrv_ring_from_json(kRing, &ring) == GHRV_OK);
  ghrv_complex* k = nullptr;
  REQUIRE(ghrv_complex_fixture(ring, "k5", &k) == GHRV_OK);
  ghrv_complex* out = nullptr;
  CHECK(ghrv_complex_cone(k, "x1 + x2^2", &out) == GHRV_ERR_NOT_HOMOGENEOUS_SCALAR);
  CHECK(ghrv_complex_cone(k, "x1 +", &out) == GHRV_ERR_SYNTAX);
  CHECK(ghrv_complex_fixture(ring, "nope", &out) == GHRV_ERR_FORMAT);
  CHECK(ghrv_complex_cone(nullptr, "x1", &out) == GHRV_ERR_INVALID_ARGUMENT);
  CHECK(ghrv_complex_load("/nonexistent/file.json", nullptr, &out) == GHRV_ERR_IO);
  ghrv_complex_free(k);
  ghrv_ring_free(ring);
}

TEST_CASE("resolve, realize and files through the C API") {
  ghrv_ring* ring = nullptr;
  REQUIRE(ghrv_ring_from_json(kRing, &ring) == GHRV_OK);
  const char* ps[] = {"x1", "x2"};
  ghrv_trace* t = nullptr;
  REQUIRE(ghrv_realize(ring, ps, 2, 2, &t) == GHRV_OK);
  int ok = 0;
  CHECK(ghrv_trace_ok(t, &ok) == GHRV_OK);
  CHECK(ok == 1);
  ghrv_complex* result = nullptr;
  REQUIRE(ghrv_trace_result(t, &result) == GHRV_OK);
  ghrv_variety* v = nullptr;
  REQUIRE(ghrv_complex_variety(result, &v) == GHRV_OK);
  int empty = 0;
  char* witness = nullptr;
  CHECK(ghrv_variety_is_empty(v, 2, &empty, &witness) == GHRV_OK);
  CHECK(empty == 1);
  CHECK(witness == nullptr);

  char* json = nullptr;
  REQUIRE(ghrv_trace_to_json(t, 0, &json) == GHRV_OK);
  const std::string path = temp_path("trace.json");
  {
    std::ofstream out(path);
    out << take(json);
  }
  ghrv_complex* loaded = nullptr;
  REQUIRE(ghrv_complex_load(path.c_str(), nullptr, &loaded) == GHRV_OK);
  size_t n = 0;
  ghrv_complex_size(loaded, &n);
  CHECK(n == 8);
  int valid = 0;
  char* report = nullptr;
  CHECK(ghrv_complex_check(path.c_str(), &valid, &report) == GHRV_OK);
  CHECK(valid == 1);
  take(report);
  std::remove(path.c_str());

  ghrv_complex* k = nullptr;
  REQUIRE(ghrv_resolve_k(ring, &k) == GHRV_OK);
  ghrv_complex_size(k, &n);
  CHECK(n == 2);

  CHECK(ghrv_reproduce("GF(3)", 0, &ok, &report) == GHRV_OK);
  CHECK(ok == 1);
  CHECK(take(report).find("witness set: {(1:0), (0:1)}") != std::string::npos);

  ghrv_complex_free(k);
  ghrv_complex_free(loaded);
  ghrv_variety_free(v);
  ghrv_complex_free(result);
  ghrv_trace_free(t);
  ghrv_ring_free(ring);
}
