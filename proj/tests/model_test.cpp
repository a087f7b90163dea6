// Copyright 2026 The gaitdyn Authors
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

#include "gaitdyn/model.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "gaitdyn/error.hpp"
#include "oracles.hpp"

namespace gaitdyn {
namespace {

TEST(DeriveParams, PrintedCoefficients) {
  // Frozen from an independent 30-digit evaluation of the three products.
  const auto s = derive_params_from_coefficients({0.0804, 0.2553, 0.032, 4.57168}, 9.81);
  EXPECT_NEAR(s.m2, 2.70120524408251946, 1e-12);
  EXPECT_NEAR(s.a2, 0.172523886186259756, 1e-14);
  EXPECT_NEAR(s.l1, 0.547827713225772583, 1e-14);
  EXPECT_DOUBLE_EQ(s.I2, 0.032);
}

TEST(DeriveParams, IdentityProducts) {
  const auto s = derive_params_from_coefficients({1.0, 1.0, 0.0, 9.81}, 9.81);
  EXPECT_DOUBLE_EQ(s.m2, 1.0);
  EXPECT_DOUBLE_EQ(s.a2, 1.0);
  EXPECT_DOUBLE_EQ(s.l1, 1.0);
  EXPECT_DOUBLE_EQ(s.I2, 0.0);
}

TEST(DeriveParams, RejectsNegativeC4) {
  try {
    derive_params_from_coefficients({0.0804, 0.2553, 0.032, -1.0}, 9.81);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("c4"), std::string::npos);
    EXPECT_EQ(e.module(), "model-core");
  }
  EXPECT_THROW(derive_params_from_coefficients({0.1, 0.2, -0.1, 1.0}), DomainError);
  EXPECT_THROW(derive_params_from_coefficients({0.1, 0.2, 0.0, 1.0}, 0.0), DomainError);
}

TEST(DeriveParams, RoundTripProperty) {
  testing::StateSampler rng(7);
  for (int i = 0; i < 500; ++i) {
    const AnthroCoefficients c{rng.uniform(0.01, 2.0), rng.uniform(0.01, 2.0),
                               rng.uniform(0.0, 1.0), rng.uniform(0.1, 50.0)};
    const double g = rng.uniform(1.0, 20.0);
    const auto back = coefficients_from_params(derive_params_from_coefficients(c, g), g);
    EXPECT_NEAR(back.c1, c.c1, 1e-12 * c.c1);
    EXPECT_NEAR(back.c2, c.c2, 1e-12 * c.c2);
    EXPECT_EQ(back.c3, c.c3);
    EXPECT_NEAR(back.c4, c.c4, 1e-12 * c.c4);
  }
}

TEST(ValidateParams, Anthro1IsValid) {
  EXPECT_TRUE(validate_params(anthro1_params()).ok());
  EXPECT_TRUE(validate_damper(default_damper()).ok());
}

TEST(ValidateParams, ReportsNegativeMass) {
  auto p = anthro1_params();
  p.m2 = -1.0;
  const auto r = validate_params(p);
  ASSERT_FALSE(r.ok());
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].field, "m2");
}

TEST(ValidateParams, ReportsComBeyondSegment) {
  auto p = anthro1_params();
  p.a1 = 2.0 * p.l1;
  const auto r = validate_params(p);
  ASSERT_FALSE(r.ok());
  EXPECT_NE(r.violations[0].description.find("COM beyond segment"), std::string::npos);
}

TEST(ValidateParams, ListsEveryViolationAndIsPure) {
  SegmentParams p{};
  p.g = -1.0;
  const auto r1 = validate_params(p);
  const auto r2 = validate_params(p);
  EXPECT_EQ(r1, r2);
  EXPECT_EQ(r1.violations.size(), 9u);
  EXPECT_FALSE(r1.ok());
}

TEST(ParamFile, ParsesCommentsAndDefaults) {
  const auto ps = parse_param_file("# subject A\nm1 = 8.5\n\n  l2=0.5   # shank\nbeta = 0.1\n");
  EXPECT_DOUBLE_EQ(ps.segments.m1, 8.5);
  EXPECT_DOUBLE_EQ(ps.segments.l2, 0.5);
  EXPECT_DOUBLE_EQ(ps.damper.beta, 0.1);
  EXPECT_DOUBLE_EQ(ps.segments.m2, anthro1_params().m2);
}

TEST(ParamFile, RejectsUnknownDuplicateAndMalformed) {
  EXPECT_THROW(parse_param_file("m3 = 1\n"), DomainError);
  EXPECT_THROW(parse_param_file("m1 = 1\nm1 = 2\n"), DomainError);
  EXPECT_THROW(parse_param_file("m1 = abc\n"), DomainError);
  EXPECT_THROW(parse_param_file("m1 1\n"), DomainError);
  EXPECT_THROW(parse_param_file("m1 = nan\n"), DomainError);
  try {
    parse_param_file("m1 = 1\nbogus = 2\n");
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(ParamFile, FormatIsAFixedPointOfParse) {
  const std::string once = format_param_file(ParamSet{});
  EXPECT_EQ(format_param_file(parse_param_file(once)), once);
}

}  // namespace
}  // namespace gaitdyn
