// Runs the ghrv executable and checks output and exit codes.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(GHRV_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(GHRV_TEST_DATA) + "/" + name; }

std::string temp(const std::string& name) {
  const char* dir = std::getenv("TMPDIR");
  return std::string(dir ? dir : "/tmp") + "/ghrv_cli_" + name;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("variety of the cone fixture") {
  const auto r = run("variety " + data("ring5.json") + " --fixture k5-example --points");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "V = union of 2 components"));
  CHECK(contains(r.out, "points over GF(5): {(1:0), (0:1)}"));
}

TEST_CASE("realize prints the trace and the point set") {
  const auto r = run("realize " + data("ring5.json") + " --p \"x1*x2\" --points");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "sizes: 2 -> 4"));
  CHECK(contains(r.out, "points over GF(5): {(1:0), (0:1)}"));
}

TEST_CASE("check reports findings with exit 1") {
  const auto bad = run("check " + data("badcomplex.json"));
  CHECK(bad.code == 1);
  CHECK(contains(bad.out, "NotAComplex"));
  const auto good = run("check " + data("k5.json"));
  CHECK(good.code == 0);
}

TEST_CASE("usage and parse errors exit 2") {
  CHECK(run("frobnicate").code == 2);
  CHECK(run("rank").code == 2);
  CHECK(run("rank " + data("k5.json") + " --which C").code == 2);
  const auto syntax = run("cone " + data("k5.json") + " --p \"x1 + * x2\"");
  CHECK(syntax.code == 2);
  CHECK(contains(syntax.out, "position 5"));
  CHECK(run("variety /nonexistent.json").code == 2);
  const auto math = run("cone " + data("k5.json") + " --p \"x1 + x2^2\"");
  CHECK(math.code == 1);
  CHECK(contains(math.out, "NotHomogeneousScalar"));
}

TEST_CASE("individual verbs") {
  CHECK(contains(run("rank " + data("k5.json")).out, "rank A = 1\nrank B = 1"));
  CHECK(contains(run("ideal " + data("ci.json") + " --which A").out, "(x1, x2)"));
  CHECK(contains(run("points --field \"GF(9)\" --c 2").out, "10 points of P^1(GF(9))"));
  const auto spec = run("specialize " + data("k5.json") + " --alpha 1,0");
  CHECK(spec.code == 0);
  CHECK(contains(spec.out, "residue field, rank 0"));
  CHECK(contains(run("contractible " + data("ci.json") + " --alpha 1,2").out, "contractible: yes"));
  CHECK(contains(run("contractible " + data("k5.json") + " --alpha 1,2 --preimages \"1+y,2+x\"").out,
                 "contractible: no"));
  CHECK(contains(run("module-variety " + data("ci.json") + " --points").out, "points over GF(3): {}"));
  const auto rep = run("reproduce --field \"GF(2)\"");
  CHECK(rep.code == 0);
  CHECK(contains(rep.out, "all claims reproduced"));
}

TEST_CASE("written files read back") {
  const std::string k = temp("k.json"), cone = temp("cone.json"), trace = temp("trace.json"), var = temp("v.json");
  CHECK(run("resolve-k " + data("ring5.json") + " --out " + k).code == 0);
  CHECK(run("check " + k).code == 0);
  CHECK(run("cone " + k + " --p x1 --out " + cone).code == 0);
  CHECK(run("check " + cone).code == 0);
  CHECK(run("realize " + data("ring5.json") + " --p x1 --p x2 --out " + trace).code == 0);
  CHECK(run("check " + trace).code == 0);
  const auto v = run("variety " + trace + " --ext-bound 2 --out " + var);
  CHECK(contains(v.out, "empty over GF(p^j) for j <= 2"));
  std::ifstream in(var);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["components"].size() == 2);
  for (const auto& f : {k, cone, trace, var}) std::remove(f.c_str());
}

TEST_CASE("output is deterministic") {
  for (const std::string& args : std::vector<std::string>{"reproduce --seed 9", "realize " + data("ring5.json") + " --p x1 --points",
                                 "variety " + data("ring5.json") + " --fixture k5 --points --ext-bound 2"}) {
    const auto a = run(args + " --jobs 1");
    const auto b = run(args + " --jobs 4");
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
  }
}
