#include "ctlhom/cli.hpp"

#include "doctest.h"
#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <sstream>

using namespace ctlhom;
using json = nlohmann::json;

namespace {

const std::filesystem::path kFixtures = CTLHOM_FIXTURES;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return (kFixtures / name).string(); }

}  // namespace

TEST_CASE("homology sphere(2)") {
  const auto r = run({"homology", "sphere(2)", "--json"});
  CHECK(r.code == cli::kOk);
  const auto doc = json::parse(r.out);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["theory"] == "H");
  const auto& g = doc["groups"];
  REQUIRE(g.size() == 3);
  CHECK(g[0]["free_rank"] == 1);
  CHECK(g[1]["free_rank"] == 0);
  CHECK(g[1]["torsion"].empty());
  CHECK(g[2]["free_rank"] == 1);

  const auto table = run({"homology", "sphere(2)"});
  CHECK(table.out.find("Z") != std::string::npos);
}

TEST_CASE("bm-homology ray") {
  const auto r = run({"bm-homology", "ray", "--json"});
  CHECK(r.code == cli::kOk);
  const auto doc = json::parse(r.out);
  CHECK(doc["stabilization"]["stable"] == true);
  for (const auto& g : doc["groups"]) {
    CHECK(g["free_rank"] == 0);
    CHECK(g["torsion"].empty());
  }
  CHECK(doc["caveats"].size() == 1);
}

TEST_CASE("non-stabilization exits 4") {
  const auto r = run({"bm-homology", fixture("loop_ray.json"), "--max-depth", "5", "--json"});
  CHECK(r.code == cli::kUnstable);
  const auto doc = json::parse(r.out);
  CHECK(doc["stabilization"]["stable"] == false);
  bool flagged = false;
  for (const auto& g : doc["groups"]) flagged |= g["stable"] == false;
  CHECK(flagged);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"homology"}).code == cli::kUsage);
  CHECK(run({"homology", "klein"}).code == cli::kUsage);
  CHECK(run({"homology", "torus", "--coeff", "z/1"}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"check", fixture("bad_identity.json")}).code == cli::kValidation);
  CHECK(run({"check", fixture("noninjective_gluing.json")}).code == cli::kValidation);
  CHECK(run({"check", fixture("malformed.json")}).code == cli::kValidation);
  CHECK(run({"check", fixture("broom.json")}).code == cli::kValidation);
  CHECK(run({"homology", fixture("broom.json")}).code == cli::kValidation);
  CHECK(run({"check", "plane"}).code == cli::kOk);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("check reports") {
  const auto r = run({"check", "line", "--json"});
  const auto doc = json::parse(r.out);
  CHECK(doc["local_finiteness"]["locally_finite"] == true);
  CHECK(doc["local_finiteness"]["max_star"] == 3);
  CHECK(doc["simplicial_identities"]["ok"] == true);

  const auto b = json::parse(run({"check", fixture("broom.json"), "--json"}).out);
  CHECK(b["local_finiteness"]["witness"] == "v0");
}

TEST_CASE("coefficients") {
  const auto doc = json::parse(run({"homology", "rp2", "--coeff", "z/2", "--json"}).out);
  for (const auto& g : doc["groups"]) CHECK(g["free_rank"] == 1);
  CHECK(doc["coefficients"] == "Z/2");
}

TEST_CASE("pairing command") {
  const auto doc = json::parse(run({"pairing", "line", "--degree", "1", "--json"}).out);
  REQUIRE(doc["matrix"].size() == 1);
  CHECK(std::abs(doc["matrix"][0][0].get<int>()) == 1);
}

TEST_CASE("laws command") {
  const auto r = run({"laws", "--max-carrier", "2", "--json"});
  CHECK(r.code == cli::kOk);
  const auto doc = json::parse(r.out);
  CHECK(doc["ok"] == true);
  CHECK(doc["sections"].size() == 6);
}

TEST_CASE("machine output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{{"cohomology-c", "plane", "--json"},
                                                                {"check", "cylinder", "--json"},
                                                                {"spaces", "--json"}})
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("CTLHOM_MAX_DEPTH") {
  ::setenv("CTLHOM_MAX_DEPTH", "7", 1);
  const auto doc = json::parse(run({"bm-homology", "line", "--json"}).out);
  ::unsetenv("CTLHOM_MAX_DEPTH");
  CHECK(doc["stabilization"]["max_depth"] == 7);
}
