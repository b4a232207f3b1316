// Copyright 2026 The inpd Authors.
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


#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include "inpd/impression_model.hpp"

namespace inpd {
namespace {

constexpr const char* kHeader = "component,const,fA_e,fA_p,fA_a,fB_e,fB_p,fB_a,fO_e,fO_p,fO_a";
constexpr const char* kRows[] = {"tA_e", "tA_p", "tA_a", "tB_e", "tB_p", "tB_a", "tO_e", "tO_p", "tO_a"};

std::string identity_text(int rows, const std::string& extra_header = "") {
  std::string text = std::string(kHeader) + extra_header + "\n";
  for (int i = 0; i < rows; ++i) {
    text += kRows[i];
    text += ",0";
    for (int j = 0; j < 9; ++j) text += j == i ? ",1" : ",0";
    if (!extra_header.empty()) text += ",0";
    text += "\n";
  }
  return text;
}

ModelError parse_error(const std::string& text) {
  std::istringstream in(text);
  try {
    parse_impression_model(in, "t");
  } catch (const ModelError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return ModelError("none");
}

TEST(ImpressionModel, ShippedIdentityHasTenTermsAndUnitBlock) {
  auto m = builtin_impression_model("identity");
  ASSERT_EQ(m.term_count(), 10u);
  EXPECT_EQ(m.terms()[0], FeatureTerm::constant());
  for (std::size_t i = 0; i < 9; ++i) {
    EXPECT_EQ(m.coefficient(i, 0), 0.0);
    for (std::size_t k = 1; k < 10; ++k) EXPECT_EQ(m.coefficient(i, k), i + 1 == k ? 1.0 : 0.0);
  }
}

TEST(ImpressionModel, ShippedIdentityFileMatchesBuiltin) {
  auto file = load_impression_model(std::string(INPD_SOURCE_DIR) + "/core/data/impression_identity.csv");
  auto builtin = builtin_impression_model("identity");
  ASSERT_EQ(file.term_count(), builtin.term_count());
  for (std::size_t i = 0; i < 9; ++i) {
    for (std::size_t k = 0; k < file.term_count(); ++k) {
      EXPECT_EQ(file.coefficient(i, k), builtin.coefficient(i, k));
    }
  }
}

TEST(ImpressionModel, ShippedDefaultLoadsAndIsQuadraticInBehavior) {
  auto m = load_impression_model(std::string(INPD_SOURCE_DIR) + "/core/data/impression_default.csv");
  EXPECT_FALSE(m.has_behavior_quadratic());
  EXPECT_GT(m.term_count(), 10u);
}

TEST(ImpressionModel, EightRowsIsRowCountError) {
  auto e = parse_error(identity_text(8));
  EXPECT_NE(std::string(e.what()).find("9 coefficient rows"), std::string::npos);
  EXPECT_GT(e.line(), 0u);
}

TEST(ImpressionModel, UnknownInteractionComponentReportsLine) {
  auto e = parse_error("# comment\n" + identity_text(9, ",fA_e*fX_q"));
  EXPECT_EQ(e.line(), 2u);
  EXPECT_NE(e.message().find("fX_q"), std::string::npos);
}

TEST(ImpressionModel, MalformedCoefficientReportsLine) {
  std::string text = identity_text(9);
  text.replace(text.find("tA_p,0"), 6, "tA_p,x");
  EXPECT_EQ(parse_error(text).line(), 3u);
}

TEST(ImpressionModel, MissingLinearTermIsRejected) {
  std::string text = "component,const,fA_e\n";
  for (const char* r : kRows) text += std::string(r) + ",0,1\n";
  parse_error(text);
}

TEST(ImpressionModel, DuplicateRowIsRejected) {
  std::string text = identity_text(9);
  text.replace(text.find("tO_a"), 4, "tO_p");
  parse_error(text);
}

TEST(ImpressionModel, DecimalParsingIsExact) {
  std::string text = identity_text(9);
  text.replace(text.find("tA_e,0"), 6, "tA_e,0.1");
  std::istringstream in(text);
  auto m = parse_impression_model(in, "t");
  EXPECT_EQ(m.coefficient(0, 0), 0.1);
}

TEST(ImpressionModel, BehaviorQuadraticDetected) {
  std::istringstream in(identity_text(9, ",fB_e*fB_p"));
  auto m = parse_impression_model(in, "t");
  EXPECT_TRUE(m.has_behavior_quadratic());
}

TEST(ImpressionModel, LinearizationReproducesApply) {
  auto m = builtin_impression_model("default");
  const Epa actor(1.1, -0.4, 2.0), object(-2.0, 0.6, 0.1);
  const std::array<double, 3> b{0.7, -1.3, 2.2};
  auto aff = m.linearize_in_behavior(actor, object);
  auto full = m.apply({actor.e(), actor.p(), actor.a(), b[0], b[1], b[2], object.e(), object.p(), object.a()});
  for (std::size_t i = 0; i < 9; ++i) {
    double v = aff.offset[i];
    for (std::size_t j = 0; j < 3; ++j) v += aff.slope[i][j] * b[j];
    EXPECT_NEAR(v, full[i], 1e-12);
  }
}

TEST(ImpressionModel, ComponentNames) {
  EXPECT_EQ(component_name(0), "fA_e");
  EXPECT_EQ(component_name(4), "fB_p");
  EXPECT_EQ(component_name(8), "fO_a");
  EXPECT_EQ(FeatureTerm::interaction(6, 3).label(), "fB_e*fO_e");
}

TEST(ImpressionModel, ResolveUnknownPathFails) {
  EXPECT_THROW(resolve_impression_model("/nonexistent/model.csv"), ModelError);
  EXPECT_THROW(builtin_impression_model("other"), ModelError);
}

}  // namespace
}  // namespace inpd
