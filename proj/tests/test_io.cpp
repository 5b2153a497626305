#include <gtest/gtest.h>

#include <json.hpp>

#include "support/gen.hpp"
#include "u2mp/census.hpp"
#include "u2mp/error.hpp"
#include "u2mp/io.hpp"

using namespace u2mp;
using testgen::pt;

TEST(PolytopeDocument, ParsesIntegersAndFractions) {
  const auto doc = parse_polytope_document(R"({"vertices": [[0, 0], ["1/2", "-1/2"], [1, "0"]]})");
  EXPECT_EQ(doc.vertices,
            (std::vector<RationalPoint>{pt(0, 0), RationalPoint(Rational(1, 2), Rational(-1, 2)), pt(1, 0)}));
}

TEST(PolytopeDocument, RejectsMalformedInput) {
  for (const char* bad : {"", "{", "[]", R"({"vertex": []})", R"({"vertices": []})", R"({"vertices": [[0]]})",
                          R"({"vertices": [[0, 0, 0]]})", R"({"vertices": [[0.5, 0]]})", R"({"vertices": [["x", 0]]})",
                          R"({"vertices": [["1/0", 0]]})", R"({"vertices": [[true, 0]]})", R"({"vertices": 3})"}) {
    EXPECT_THROW(parse_polytope_document(bad), InputError) << bad;
  }
}

TEST(PolytopeDocument, RoundTrip) {
  testgen::Gen g;
  for (std::size_t i = 0; i < 2000; ++i) {
    const PolytopeDocument doc{g.points(1, 6)};
    ASSERT_EQ(parse_polytope_document(print_polytope_document(doc)), doc);
  }
}

TEST(Report, InvalidInputIsStillAReport) {
  const auto rep = build_report(parse_polytope_document(R"({"vertices": [[0, 0], [2, 2]]})"));
  EXPECT_FALSE(rep.classification.valid);
  EXPECT_TRUE(std::holds_alternative<NotApplicable>(rep.kaehler));
  const auto j = nlohmann::json::parse(print_report(rep));
  EXPECT_EQ(j["valid"], false);
  EXPECT_EQ(j["dimension"], 1);
  EXPECT_EQ(j["failures"][0]["condition"], 1);
}

TEST(Report, ChamberViolationThrows) {
  EXPECT_THROW(build_report(parse_polytope_document(R"({"vertices": [[0, 1], [1, 0], [2, 0]]})")), ChamberError);
}

TEST(Report, TrapezoidKeys) {
  const auto rep = build_report(parse_polytope_document(R"({"vertices": [[0, 0], [1, 0], [0, -1], [3, -1]]})"));
  const auto j = nlohmann::ordered_json::parse(print_report(rep));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"input", "polygon", "dimension", "valid", "conditions", "failures",
                                            "vertices", "triangle", "kaehler", "fixpoint_images", "fixpoint_boundary",
                                            "diffeomorphism_type", "xray"}));
  EXPECT_EQ(j["valid"], true);
  EXPECT_EQ(j["kaehler"]["kaehlerizable"], false);
}

TEST(Report, RoundTripOverCensusPolygons) {
  const auto res = census_serial({2, 1, CensusShape::All});
  for (const auto& it : res.items) {
    const auto rep = build_report({it.polygon.vertices()});
    const std::string text = print_report(rep);
    const auto back = parse_report(text);
    ASSERT_EQ(back, rep) << text;
    ASSERT_EQ(print_report(back), text);
  }
}

TEST(Report, RoundTripOverRationalPolygons) {
  const auto res = census_serial({1, 2, CensusShape::All});
  std::size_t valid = 0;
  for (const auto& it : res.items) {
    const auto rep = build_report({it.polygon.vertices()});
    ASSERT_EQ(parse_report(print_report(rep)), rep);
    valid += rep.classification.valid ? 1 : 0;
  }
  EXPECT_GT(valid, 0u);
}

TEST(Report, ParseRejectsGarbage) {
  EXPECT_THROW(parse_report("{}"), InputError);
  EXPECT_THROW(parse_report("not json"), InputError);
}
