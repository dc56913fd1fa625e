#include <fstream>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"

#include "dehnfill/error.hpp"
#include "dehnfill/serialize.hpp"

using namespace dehnfill;

namespace {

std::string read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const char* kDatasets[] = {"pretzel.json",      "fig8-class1.json",  "fig8-class2.json", "fig8-class3.json",
                           "fig8-class4.json",  "trefoil-t1.json",   "trefoil-t2.json"};

}  // namespace

TEST_SUITE("serialize") {
  TEST_CASE("bundled files are already canonical") {
    for (const char* name : kDatasets) {
      CAPTURE(name);
      const std::string text = read(testing::data_path(name));
      const ManifoldData m = parse_manifold(text);
      CHECK(canonical_dump(to_json(m)) == text);
      CHECK(parse_manifold(canonical_dump(to_json(m))) == m);
    }
  }

  TEST_CASE("reports round-trip byte-identically") {
    const ManifoldData m = load_manifold(testing::data_path("pretzel.json"));
    const std::vector<Json> reports = {to_json(bounds_report(m, Slope(18, 1))),
                                       to_json(slope_norm(m, Slope(-14, 11))),
                                       to_json(layering_plan(m, Slope(-8, 3))),
                                       to_json(family_fan(m, {-2, 1}, {-1, 0}, 0, 5)),
                                       to_json(constantgap_params(2))};
    for (const auto& j : reports) {
      const std::string once = canonical_dump(j);
      CHECK(canonical_dump(Json::parse(once)) == once);
      CHECK(once.back() == '\n');
    }
    CHECK(to_json(bounds_report(m, Slope(18, 1))).dump() ==
          R"({"caveat":true,"gap":10,"labeled_size":29,"lower":18,"norm":9,"slope":"18/1","upper":28,"witness":4})");
  }

  TEST_CASE("values") {
    CHECK(to_json(Integer(-5)) == Json(-5));
    CHECK(to_json(Integer::parse("99999999999999999999")) == Json("99999999999999999999"));
    CHECK(integer_from_json(Json("-99999999999999999999")).str() == "-99999999999999999999");
    CHECK(to_json(Slope(-1, 0)) == Json("1/0"));
    CHECK(to_json(FareyTriangle(Slope(1, 0), Slope(-2, 1), Slope(-1, 1))) == Json({"-2/1", "-1/1", "1/0"}));
    CHECK(to_json(Rational(294, 3)) == Json(98));
    CHECK(to_json(Rational(1295, 3)) == Json("1295/3"));
    CHECK(slope_from_json(Json("\xE2\x88\x92" "2/1")) == Slope(-2, 1));
  }

  TEST_CASE("null slopes and patterns survive") {
    ManifoldData m = load_manifold(testing::data_path("fig8-class1.json"));
    m.surfaces.push_back({std::nullopt, -2, true, std::nullopt});
    const Json j = to_json(m);
    CHECK(j["surfaces"][3]["slope"].is_null());
    CHECK(j["surfaces"][3]["pattern"].is_null());
    CHECK(parse_manifold(j.dump()) == m);
    CHECK_FALSE(j.contains("isosig"));
  }

  TEST_CASE("malformed input") {
    CHECK_THROWS_AS(parse_manifold("{"), Error);
    CHECK_THROWS_AS(parse_manifold("[]"), Error);
    CHECK_THROWS_AS(parse_manifold(R"({"name":"x"})"), Error);
    CHECK_THROWS_AS(load_manifold("/nonexistent/file.json"), Error);
    CHECK_THROWS_AS(parse_path(R"([["0/1","1/0"]])"), Error);
    CHECK_THROWS_AS(slope_from_json(Json(3)), Error);
    CHECK(parse_path(R"([["0/1","1/0","1/1"]])").size() == 1);
  }
}
