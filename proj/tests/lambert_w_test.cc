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

#include "rootscope/lambert_w.h"

#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "rootscope/errors.h"

namespace rootscope {
namespace {

// Bisection on w e^w - x over [lo, hi].
double BisectW(double x, double lo, double hi) {
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid * std::exp(mid) < x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> LogSpaced(double lo, double hi, int count) {
  std::vector<double> xs;
  for (int i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / (count - 1);
    xs.push_back(std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo))));
  }
  return xs;
}

TEST(LambertW0Test, ExactPoints) {
  EXPECT_EQ(LambertW0(0.0).value, 0.0);
  EXPECT_NEAR(LambertW0(std::numbers::e).value, 1.0, 1e-15);
}

TEST(LambertW0Test, OneMatchesBisectionOracle) {
  const double oracle = BisectW(1.0, 0.0, 1.0);
  EXPECT_NEAR(oracle, 0.5671432904, 1e-10);
  EXPECT_NEAR(LambertW0(1.0).value, oracle, 1e-9);
}

TEST(LambertW0Test, DefiningIdentityOnLogGrid) {
  for (double x : LogSpaced(1e-3, 1e9, 100)) {
    const WResult r = LambertW0(x);
    const double w = r.value;
    EXPECT_LE(std::abs(w * std::exp(w) - x), 1e-12 * std::max(1.0, x))
        << "x=" << x;
    EXPECT_LE(r.iterations, 50);
  }
}

TEST(LambertW0Test, NegativeArgumentsAndBranchPoint) {
  for (double x : {-0.3678794411, -0.36, -0.3, -0.2, -0.1, -1e-8}) {
    const WResult r = LambertW0(x);
    EXPECT_GE(r.value, -1.0);
    EXPECT_NEAR(r.value, BisectW(x, -1.0, 0.0), 1e-6) << "x=" << x;
  }
}

TEST(LambertW0Test, StrictlyIncreasing) {
  double prev = -1.0;
  for (double x : LogSpaced(1e-6, 1e12, 400)) {
    const double w = LambertW0(x).value;
    EXPECT_GT(w, prev);
    prev = w;
  }
}

TEST(LambertW0Test, RejectsBelowBranchPoint) {
  EXPECT_THROW(LambertW0(-0.5), DomainError);
  EXPECT_THROW(LambertW0(-1.0 / std::numbers::e), DomainError);
  EXPECT_THROW(LambertW0(std::nan("")), DomainError);
}

TEST(LambertW0AsymptoticTest, HandValues) {
  EXPECT_NEAR(LambertW0Asymptotic(std::exp(std::numbers::e)),
              std::numbers::e - 1.0 + 1.0 / std::numbers::e, 1e-12);
  // Each reference is a sum of three terms rounded to four decimals.
  EXPECT_NEAR(LambertW0Asymptotic(100.0), 3.4097, 1.5e-4);
  EXPECT_NEAR(LambertW0Asymptotic(1000.0), 5.2550, 1.5e-4);
  EXPECT_LT(std::abs(LambertW0Asymptotic(100.0) - LambertW0(100.0).value), 0.1);
}

TEST(LambertW0AsymptoticTest, RelativeErrorDecreases) {
  double prev = 1.0;
  for (double n : {1e2, 1e3, 1e4, 1e6}) {
    const double w = LambertW0(n).value;
    const double rel = std::abs(w - LambertW0Asymptotic(n)) / w;
    EXPECT_LT(rel, prev) << "n=" << n;
    prev = rel;
  }
}

TEST(LambertW0AsymptoticTest, RejectsSmallArguments) {
  EXPECT_THROW(LambertW0Asymptotic(std::numbers::e), DomainError);
  EXPECT_THROW(LambertW0Asymptotic(1.0), DomainError);
}

}  // namespace
}  // namespace rootscope
