#include "ctlhom/corpus.hpp"
#include "ctlhom/errors.hpp"

#include "doctest.h"

#include <filesystem>
#include <fstream>

using namespace ctlhom;
using namespace ctlhom::corpus;

namespace {

const std::filesystem::path kFixtures = CTLHOM_FIXTURES;

std::vector<std::size_t> counts_of(const std::string& d) { return build(d).complex().counts(); }

std::string error_of(const std::filesystem::path& p) {
  try {
    load(p);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("descriptors") {
  CHECK(SpaceDescriptor::parse("delta(3)").parameter == 3);
  CHECK(SpaceDescriptor::parse("torus").to_string() == "torus");
  CHECK_THROWS_AS(build("klein"), DescriptorError);
  CHECK_THROWS_AS(build("sphere(5)"), DescriptorError);
  CHECK_NOTHROW(build("sphere(5)", 5));
  CHECK_THROWS_AS(build("delta(-1)"), DescriptorError);
  CHECK_THROWS_AS(build("delta"), DescriptorError);
  CHECK_THROWS_AS(build("torus(2)"), DescriptorError);
  CHECK(descriptors().size() == 10);
}

TEST_CASE("builder counts") {
  CHECK(counts_of("point") == std::vector<std::size_t>{1});
  CHECK(counts_of("delta(2)") == std::vector<std::size_t>{3, 3, 1});
  CHECK(counts_of("sphere(2)") == std::vector<std::size_t>{4, 6, 4});
  CHECK(counts_of("sphere(1)") == std::vector<std::size_t>{3, 3});
  CHECK(counts_of("circle") == std::vector<std::size_t>{1, 1});
  CHECK(counts_of("torus") == std::vector<std::size_t>{7, 21, 14});
  CHECK(counts_of("rp2") == std::vector<std::size_t>{6, 15, 10});
  const auto line = build("line");
  for (int i = 0; i <= 5; ++i) {
    const auto c = line.exhaustion->truncate(i)->complex.counts();
    CHECK(c[0] == static_cast<std::size_t>(2 * i + 1));
    CHECK(c[1] == static_cast<std::size_t>(2 * i));
  }
}

TEST_CASE("every corpus space is valid and locally finite") {
  for (const auto& s : corpus_spaces()) {
    CHECK_MESSAGE(s.exhaustion->base().identity_violations().empty(), s.name);
    CHECK_MESSAGE(s.exhaustion->slab().identity_violations().empty(), s.name);
    CHECK_MESSAGE(sset::is_locally_finite(*s.exhaustion).locally_finite, s.name);
    for (int d = 0; d <= 3; ++d) CHECK(s.exhaustion->truncate(d)->complex.identity_violations().empty());
  }
}

TEST_CASE("round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "ctlhom_corpus_test";
  std::filesystem::create_directories(dir);
  auto spaces = corpus_spaces();
  spaces.push_back(Space{"broom", broom()});
  spaces.push_back(Space{"loop-ray", loop_ray()});
  for (const auto& s : spaces) {
    const auto path = dir / (s.name + ".json");
    save(s, path);
    const auto back = load(path);
    CHECK_MESSAGE(same_presentation(*back.exhaustion, *s.exhaustion), s.name);
    CHECK(to_json(back) == to_json(s));
    CHECK(same_presentation(from_json(to_json(s)).complex(), s.complex()));
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("file errors") {
  const auto bad = error_of(kFixtures / "bad_identity.json");
  CHECK(bad.find("0-1-2") != std::string::npos);
  CHECK_THROWS_AS(load(kFixtures / "bad_identity.json"), ValidationError);

  CHECK_THROWS_AS(load(kFixtures / "noninjective_gluing.json"), PresentationError);

  CHECK_THROWS_AS(load(kFixtures / "malformed.json"), ParseError);
  CHECK(error_of(kFixtures / "malformed.json").find("line 3") != std::string::npos);

  CHECK_THROWS_AS(from_json(R"({"kind": "finite", "simplices": [[{"name": "a"}]]})"), ParseError);
  const auto field = [] {
    try {
      from_json(R"({"kind": "finite", "simplices": [[{"name": "a"}]]})");
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string();
  }();
  CHECK(field.find("/simplices/0/0") != std::string::npos);
  CHECK_THROWS_AS(from_json(R"({"kind": "torus"})"), ParseError);
  CHECK_THROWS_AS(load(kFixtures / "does_not_exist.json"), Error);
}

TEST_CASE("resolve") {
  CHECK(resolve("torus").name == "torus");
  CHECK_FALSE(resolve((kFixtures / "loop_ray.json").string()).is_finite());
  CHECK(resolve((kFixtures / "triangle.json").string()).complex().counts() == std::vector<std::size_t>{3, 3, 1});
}
