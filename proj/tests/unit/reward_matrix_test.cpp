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

#include <stdexcept>

#include "inpd/reward_matrix.hpp"

namespace inpd {
namespace {

TEST(RewardMatrix, StandardMatrices) {
  auto m1 = RewardMatrix::m1();
  EXPECT_EQ(m1.t(), 30);
  EXPECT_EQ(m1.r(), 20);
  EXPECT_EQ(m1.p(), 10);
  EXPECT_EQ(m1.s(), 0);
  EXPECT_FALSE(m1.non_strict());
  EXPECT_FALSE(RewardMatrix::m3().non_strict());
  EXPECT_EQ(RewardMatrix::m3().t(), 110);
  EXPECT_TRUE(RewardMatrix::m2().non_strict());
  EXPECT_EQ(RewardMatrix::m2().t(), 14);
}

TEST(RewardMatrix, Cells) {
  auto m = RewardMatrix::m1();
  EXPECT_EQ(m.cell(Action::Cooperate, Action::Cooperate), m.r());
  EXPECT_EQ(m.cell(Action::Cooperate, Action::Defect), m.s());
  EXPECT_EQ(m.cell(Action::Defect, Action::Cooperate), m.t());
  EXPECT_EQ(m.cell(Action::Defect, Action::Defect), m.p());
}

TEST(RewardMatrix, AssuranceOrderIsNonStrict) {
  EXPECT_TRUE(RewardMatrix::from_decimal(2, 3, 1, 0, "stag").non_strict());
}

TEST(RewardMatrix, Range) {
  EXPECT_EQ(RewardMatrix::m3().range(), 110);
  EXPECT_EQ(RewardMatrix::from_decimal(1, 1, 1, 1, "flat").range(), 1);
}

TEST(Tenths, FormatAndParse) {
  EXPECT_EQ(format_tenths(14), "1.4");
  EXPECT_EQ(format_tenths(20), "2");
  EXPECT_EQ(format_tenths(-5), "-0.5");
  EXPECT_EQ(format_tenths(0), "0");
  EXPECT_EQ(parse_tenths("1.4"), 14);
  EXPECT_EQ(parse_tenths("-0.5"), -5);
  EXPECT_EQ(parse_tenths("11"), 110);
  EXPECT_THROW(parse_tenths("1.45"), std::invalid_argument);
  EXPECT_THROW(parse_tenths("abc"), std::invalid_argument);
  EXPECT_THROW(parse_tenths(""), std::invalid_argument);
}

TEST(Tenths, FromDouble) {
  EXPECT_EQ(to_tenths(1.4), 14);
  EXPECT_EQ(to_tenths(-2.3), -23);
  EXPECT_THROW(to_tenths(0.25), std::invalid_argument);
}

}  // namespace
}  // namespace inpd
