// Copyright 2026 The ZebraT Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zebrat/urdf.h"

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "test_util.h"
#include "zebrat/errors.h"

namespace zebrat {
namespace {

std::size_t CountOf(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

RobotModel Canonical(bool sensors = false) {
  ModelOptions opts;
  opts.include_sensors = sensors;
  return BuildCanonicalModel(Dimensions{}, DefaultLinkMasses(), opts);
}

TEST(EmitUrdf, CanonicalDocumentShape) {
  const std::string xml = EmitUrdf(Canonical());
  EXPECT_EQ(CountOf(xml, "<link "), 7u);
  EXPECT_EQ(CountOf(xml, "<joint "), 6u);
  EXPECT_EQ(CountOf(xml, "type=\"revolute\""), 2u);
  EXPECT_EQ(CountOf(xml, "type=\"continuous\""), 4u);
  EXPECT_EQ(CountOf(xml, "lower=\"-1.047198\" upper=\"1.047198\""), 2u);
  EXPECT_EQ(CountOf(xml, "<inertial>"), 7u);
  EXPECT_EQ(CountOf(xml, "<visual>"), 7u);
  EXPECT_EQ(CountOf(xml, "<collision>"), 7u);
}

TEST(EmitUrdf, MatchesGoldenFile) {
  EXPECT_EQ(EmitUrdf(Canonical()),
            testing::ReadFile(ZEBRAT_FIXTURES_DIR "/zebrat.urdf"));
}

TEST(EmitUrdf, IsDeterministic) {
  EXPECT_EQ(EmitUrdf(Canonical()), EmitUrdf(Canonical()));
  EXPECT_EQ(EmitUrdf(Canonical(true)), EmitUrdf(Canonical(true)));
}

TEST(EmitUrdf, SensorLinksFollowKinematicLinks) {
  const std::string xml = EmitUrdf(Canonical(true));
  EXPECT_EQ(CountOf(xml, "<link "), 10u);
  EXPECT_EQ(CountOf(xml, "type=\"fixed\""), 3u);
  EXPECT_LT(xml.find("name=\"rr_wheel\""), xml.find("name=\"lidar_link\""));
}

TEST(EmitUrdf, RefusesInvalidModels) {
  RobotModel m = Canonical();
  m.joints[0].limit.reset();
  EXPECT_THROW(EmitUrdf(m), ModelValidationError);
}

TEST(ParseUrdf, RoundTripsRandomModels) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 60; ++i) {
    ModelOptions opts;
    opts.include_sensors = i % 2 == 0;
    const RobotModel m = BuildCanonicalModel(testing::RandomDimensions(rng),
                                             testing::RandomMasses(rng), opts);
    const UrdfParseResult parsed = ParseUrdf(EmitUrdf(m));
    EXPECT_TRUE(parsed.warnings.empty());
    EXPECT_EQ(testing::CompareModels(m, parsed.model, 1e-6), "") << "model " << i;
    EXPECT_TRUE(ValidateModel(parsed.model).empty());
  }
}

TEST(ParseUrdf, MalformedXmlReportsPosition) {
  try {
    ParseUrdf("<robot name=\"r\">\n  <link name=\"a\">\n</robot>");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_GT(e.column(), 0u);
  }
  EXPECT_THROW(ParseUrdf(""), ParseError);
  EXPECT_THROW(ParseUrdf("<robot name=\"r\"><link name=\"a\"/>"), ParseError);
}

std::string WithReplaced(std::string text, const std::string& from,
                         const std::string& to) {
  const auto pos = text.find(from);
  EXPECT_NE(pos, std::string::npos) << from;
  if (pos != std::string::npos) text.replace(pos, from.size(), to);
  return text;
}

TEST(ParseUrdf, PrismaticIsUnsupported) {
  const std::string xml = WithReplaced(EmitUrdf(Canonical()),
                                       "type=\"continuous\"", "type=\"prismatic\"");
  try {
    ParseUrdf(xml);
    FAIL() << "expected SemanticError";
  } catch (const SemanticError& e) {
    EXPECT_NE(std::string(e.what()).find("unsupported joint type"),
              std::string::npos);
  }
}

TEST(ParseUrdf, RevoluteNeedsLimit) {
  std::string xml = EmitUrdf(Canonical());
  const auto start = xml.find("<limit ");
  const auto end = xml.find("/>", start) + 2;
  xml.erase(start, end - start);
  EXPECT_THROW(ParseUrdf(xml), SemanticError);
}

TEST(ParseUrdf, UndefinedLinkReference) {
  const std::string xml = WithReplaced(EmitUrdf(Canonical()),
                                       "<child link=\"fl_wheel\"/>",
                                       "<child link=\"nowhere\"/>");
  EXPECT_THROW(ParseUrdf(xml), SemanticError);
}

TEST(ParseUrdf, MeshGeometryIsUnsupported) {
  std::string xml = EmitUrdf(Canonical());
  const auto start = xml.find("<cylinder ");
  const auto end = xml.find("/>", start) + 2;
  xml.replace(start, end - start, "<mesh filename=\"wheel.dae\"/>");
  EXPECT_THROW(ParseUrdf(xml), SemanticError);
}

TEST(ParseUrdf, UnknownElementsWarn) {
  const std::string xml =
      WithReplaced(EmitUrdf(Canonical()), "</robot>",
                   "  <gazebo reference=\"base_link\"/>\n</robot>");
  const UrdfParseResult parsed = ParseUrdf(xml);
  ASSERT_EQ(parsed.warnings.size(), 1u);
  EXPECT_NE(parsed.warnings[0].find("gazebo"), std::string::npos);
  EXPECT_EQ(testing::CompareModels(Canonical(), parsed.model, 1e-6), "");
}

TEST(ParseUrdf, ModelValidationCatchesSemanticDrift) {
  // Parses fine but the steering limit is wrong for the robot.
  const std::string xml = WithReplaced(EmitUrdf(Canonical()),
                                       "lower=\"-1.047198\" upper=\"1.047198\"",
                                       "lower=\"-1.5\" upper=\"1.5\"");
  const UrdfParseResult parsed = ParseUrdf(xml);
  EXPECT_FALSE(ValidateModel(parsed.model).empty());
}

}  // namespace
}  // namespace zebrat
