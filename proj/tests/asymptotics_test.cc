// Copyright 2026 The Rootscope Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rootscope/asymptotics.h"

#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "rootscope/errors.h"
#include "rootscope/lambert_w.h"

namespace rootscope {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;

ComplexValue Rotation(int sign) {
  return std::polar(1.0, sign * 2.0 * kPi / 3.0);
}

TEST(ApproxPositiveRootTest, MatchesClosedForm) {
  for (int n = 2; n <= 2000; n += 37) {
    const double ln = std::log(static_cast<double>(n));
    EXPECT_NEAR(ApproxPositiveRoot(n), n / (ln - std::log(ln)), 1e-12 * n);
  }
}

TEST(ApproxPositiveRootTest, TableRowFive) {
  EXPECT_NEAR(ApproxPositiveRoot(5), 4.4107, 2e-3);
}

TEST(ApproxPositiveRootTest, RejectsSmallN) {
  EXPECT_THROW(ApproxPositiveRoot(1), DomainError);
  EXPECT_THROW(ApproxPositiveRoot(0), DomainError);
}

TEST(ApproxPositiveRootTest, FollowsTwoTermExpansion) {
  for (int n : {1000, 10000, 100000, 1000000}) {
    const double ln = std::log(static_cast<double>(n));
    const double lnln = std::log(ln);
    const double expansion = n / ln + n * lnln / (ln * ln);
    const double rel = std::abs(ApproxPositiveRoot(n) - expansion) / expansion;
    EXPECT_LE(rel, 10.0 * (lnln / ln) * (lnln / ln)) << "n=" << n;
  }
}

TEST(ApproxPositiveRootLambertTest, HalleyOracleValues) {
  EXPECT_NEAR(ApproxPositiveRootLambert(1), 1.7632, 1e-4);
  EXPECT_NEAR(ApproxPositiveRootLambert(3), 2.8574, 1e-4);
  EXPECT_NEAR(ApproxPositiveRootLambert(100), 29.537, 1e-3);
  EXPECT_DOUBLE_EQ(ApproxPositiveRootLambert(100), 100.0 / LambertW0(100).value);
}

TEST(ApproxNegativeRootTest, TableValues) {
  EXPECT_NEAR(ApproxNegativeRoot(5), -0.5347, 1e-4);
  EXPECT_NEAR(ApproxNegativeRoot(25), -0.5069, 1e-4);
  EXPECT_NEAR(ApproxNegativeRoot(55), -0.5031, 1e-4);
}

TEST(ApproxNegativeRootTest, IncreasingAndBelowMinusHalf) {
  double prev = -1.0;
  for (int n = 1; n <= 999; n += 2) {
    const double v = ApproxNegativeRoot(n);
    EXPECT_GT(v, prev);
    EXPECT_LT(v, -0.5);
    prev = v;
  }
}

TEST(ApproxNegativeRootTest, RejectsEvenN) {
  try {
    ApproxNegativeRoot(6);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("odd n only"), std::string::npos);
  }
  EXPECT_THROW(ApproxNegativeRoot(-1), DomainError);
}

TEST(ApproxComplexRootTest, HandArithmeticAtHundred) {
  const ComplexValue derivation = Rotation(1) * ComplexValue(1.018138, -0.010472);
  const ComplexValue statement = Rotation(1) * ComplexValue(1.054414, -0.010472);
  EXPECT_LT(std::abs(ApproxComplexRoot(100, 1, ComplexApproxVariant::kDerivation) -
                     derivation),
            1e-6);
  EXPECT_LT(std::abs(ApproxComplexRoot(100, 1, ComplexApproxVariant::kStatement) -
                     statement),
            1e-6);
}

TEST(ApproxComplexRootTest, ConvergesToCubeRootOfUnity) {
  for (ComplexApproxVariant v : kAllComplexVariants) {
    EXPECT_LT(std::abs(ApproxComplexRoot(100000000, 1, v) -
                       ComplexValue(-0.5, kSqrt3 / 2.0)),
              1e-7);
  }
}

TEST(ApproxComplexRootTest, LowerRootIsConjugate) {
  for (ComplexApproxVariant v : kAllComplexVariants) {
    for (int n = 2; n <= 300; ++n) {
      const ComplexValue up = ApproxComplexRoot(n, 1, v);
      const ComplexValue down = ApproxComplexRoot(n, -1, v);
      EXPECT_LE(std::abs(down - std::conj(up)), 4e-16) << "n=" << n;
    }
  }
}

TEST(ApproxComplexRootTest, RejectsBadArguments) {
  EXPECT_THROW(ApproxComplexRoot(1, 1, ComplexApproxVariant::kStatement),
               DomainError);
  EXPECT_THROW(ApproxComplexRoot(10, 0, ComplexApproxVariant::kStatement),
               DomainError);
}

TEST(VariantTest, IdsAreStable) {
  EXPECT_EQ(VariantId(ComplexApproxVariant::kStatement), "STATEMENT");
  EXPECT_EQ(VariantId(ComplexApproxVariant::kDerivation), "DERIVATION");
  EXPECT_FALSE(VariantDescription(ComplexApproxVariant::kStatement).empty());
}

}  // namespace
}  // namespace rootscope
