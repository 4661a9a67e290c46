#include "doctest.h"

#include "twoclosed/descriptor.hpp"
#include "twoclosed/errors.hpp"

using namespace twoclosed;
using nlohmann::json;

namespace {

GroupDescriptor parse(const char* text) { return parse_descriptor(json::parse(text)); }

}  // namespace

TEST_CASE("descriptor parsing is strict") {
  CHECK_THROWS_AS(parse(R"([1,2])"), ValidationError);
  CHECK_THROWS_AS(parse(R"({"params":{}})"), ValidationError);
  CHECK_THROWS_AS(parse(R"({"kind":"nope","params":{}})"), ValidationError);
  CHECK_THROWS_AS(parse(R"({"kind":"family-G","params":{}})"), ValidationError);
  CHECK_THROWS_AS(parse(R"({"kind":"family-G","params":{"m":2,"q":3}})"), ValidationError);
  CHECK_THROWS_AS(parse(R"({"kind":"family-G","params":{"m":-2}})"), ValidationError);
  CHECK_THROWS_AS(parse(R"({"kind":"family-G","params":{"m":2},"extra":1})"), ValidationError);
  CHECK_THROWS_AS(parse(R"({"kind":"catalog","params":{"name":3}})"), ValidationError);
  CHECK_NOTHROW(parse(R"({"kind":"gammaL1","params":{"p":3,"d":4,"m":2,"e":-1,"s":1}})"));
  CHECK(descriptor_kinds().size() == 10);
}

TEST_CASE("descriptor hash") {
  auto a = parse(R"({"kind":"family-G","params":{"m":2}})");
  auto b = parse(R"({"params":{"m":2},"kind":"family-G"})");
  auto c = parse(R"({"kind":"family-G","params":{"m":3}})");
  CHECK(descriptor_hash(a) == descriptor_hash(b));
  CHECK(descriptor_hash(a) != descriptor_hash(c));
  CHECK(descriptor_hash(a).size() == 16);
  CHECK(parse_descriptor(to_json(a)).params == a.params);
}

TEST_CASE("build every kind") {
  struct Case {
    const char* text;
    std::size_t degree;
    long long order;
  };
  const Case cases[] = {
      {R"({"kind":"permutations","params":{"degree":4,"generators":[[1,2,3,0],[1,0,2,3]]}})", 4, 24},
      {R"({"kind":"affine-matrix","params":{"p":3,"d":2,"matrices":[[0,1,1,0]]}})", 9, 18},
      {R"({"kind":"agl","params":{"p":2,"d":3}})", 8, 8 * 168},
      {R"({"kind":"gammaL1","params":{"p":2,"d":6,"m":3,"e":0,"s":1}})", 64, 64 * 126},
      {R"({"kind":"rank4-gammaL1","params":{"p":5,"d":2,"m1":1,"e":1,"s":1}})", 25, 200},
      {R"({"kind":"family-G","params":{"m":2}})", 81, 15552},
      {R"({"kind":"family-H","params":{"m":2}})", 256, 552960},
      {R"({"kind":"tensor-gl","params":{"q":3,"m":2}})", 81, 81 * 48 * 48 / 2},
      {R"({"kind":"gl-wreath","params":{"p":3,"m":2}})", 81, 81 * 48 * 48 * 2},
      {R"({"kind":"catalog","params":{"name":"49-16"}})", 49, 49 * 24},
  };
  for (const auto& c : cases) {
    CAPTURE(c.text);
    auto d = parse(c.text);
    auto g = build(d);
    CHECK(g.group.degree() == c.degree);
    CHECK(g.group.order() == c.order);
    auto j = group_json(g, d);
    CHECK(j["descriptor_hash"] == descriptor_hash(d));
    CHECK(j["order"] == g.group.order().str());
  }
}

TEST_CASE("build rejects invalid parameters") {
  CHECK_THROWS_AS(build(parse(R"({"kind":"gammaL1","params":{"p":3,"d":4,"m":7,"e":0,"s":4}})")), ValidationError);
  CHECK_THROWS_AS(build(parse(R"({"kind":"agl","params":{"p":4,"d":2}})")), ValidationError);
  CHECK_THROWS_AS(build(parse(R"({"kind":"agl","params":{"p":2,"d":13}})")), ValidationError);
  CHECK_THROWS_AS(build(parse(R"({"kind":"permutations","params":{"degree":3,"generators":[[0,0,1]]}})")),
                  ValidationError);
  CHECK_THROWS_AS(build(parse(R"({"kind":"affine-matrix","params":{"p":3,"d":2,"matrices":[[1,1,1,1]]}})")),
                  ValidationError);
  CHECK_THROWS_AS(build(parse(R"({"kind":"family-G","params":{"m":4}})")), ValidationError);
  CHECK_THROWS_AS(build(parse(R"({"kind":"catalog","params":{"name":"1-1"}})")), ValidationError);
  CHECK_THROWS_AS(build(parse(R"({"kind":"rank4-gammaL1","params":{"p":5,"d":2,"m1":1,"e":0,"s":2}})")),
                  ValidationError);
}
