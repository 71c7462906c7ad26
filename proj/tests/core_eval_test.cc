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

#include "rootscope/core_eval.h"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "rootscope/errors.h"
#include "rootscope/solvers.h"

namespace rootscope {
namespace {

using LongComplex = std::complex<long double>;

constexpr double kPi = std::numbers::pi;
constexpr double kPhi = std::numbers::phi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

LongComplex NaivePow(LongComplex z, int e) {
  LongComplex out = 1.0L;
  for (int i = 0; i < e; ++i) out *= z;
  return out;
}

// Extended-precision reference for f(z) by repeated multiplication.
LongComplex NaiveF(int n, ComplexValue z) {
  const LongComplex zz(z.real(), z.imag());
  return NaivePow(zz, n + 1) - NaivePow(1.0L + zz, n);
}

ComplexValue RandomPoint(std::mt19937_64& rng, double max_modulus) {
  std::uniform_real_distribution<double> coord(-max_modulus, max_modulus);
  while (true) {
    const ComplexValue z(coord(rng), coord(rng));
    if (std::abs(z) > 1e-3 && std::abs(1.0 + z) > 1e-3 &&
        std::abs(z) <= max_modulus) {
      return z;
    }
  }
}

TEST(EvalFTest, GoldenRatioIsRootForNOne) {
  EXPECT_LT(std::abs(EvalF(ProblemInstance(1), kPhi)), 1e-12);
}

TEST(EvalFTest, ZeroGivesMinusOne) {
  const ComplexValue v = EvalF(ProblemInstance(2), 0.0);
  EXPECT_DOUBLE_EQ(v.real(), -1.0);
  EXPECT_DOUBLE_EQ(v.imag(), 0.0);
}

TEST(EvalFTest, CubeRootOfUnityIsRootForNFour) {
  EXPECT_LT(std::abs(EvalF(ProblemInstance(4), UpperSpecialRoot())), 1e-12);
}

TEST(EvalFTest, MatchesExtendedPrecisionReference) {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 30; ++n) {
    const ProblemInstance inst(n);
    for (int i = 0; i < 200; ++i) {
      const ComplexValue z = RandomPoint(rng, 4.0);
      const LongComplex ref = NaiveF(n, z);
      const double scale = std::max(std::pow(std::abs(z), n + 1),
                                    std::pow(std::abs(1.0 + z), n));
      const ComplexValue got = EvalF(inst, z);
      const double err = std::abs(LongComplex(got.real(), got.imag()) - ref);
      EXPECT_LE(err, 1e3 * kEps * scale) << "n=" << n << " z=" << z;
    }
  }
}

TEST(EvalFTest, ConjugateSymmetry) {
  std::mt19937_64 rng(11);
  for (int n : {1, 2, 7, 30, 200}) {
    const ProblemInstance inst(n);
    for (int i = 0; i < 100; ++i) {
      const ComplexValue z = RandomPoint(rng, 2.0);
      const ComplexValue a = EvalF(inst, std::conj(z));
      const ComplexValue b = std::conj(EvalF(inst, z));
      EXPECT_LE(std::abs(a - b), 4 * kEps * std::max(1.0, std::abs(b)));
    }
  }
}

TEST(EvalFTest, LargeNStaysFiniteOnUnitCircleRoots) {
  const ProblemInstance inst(5000);
  for (const RootEstimate& r : SolveAllRoots(inst).roots) {
    if (std::abs(r.value) > 1.1) continue;
    const ComplexValue v = EvalF(inst, r.value);
    EXPECT_TRUE(std::isfinite(v.real()) && std::isfinite(v.imag()));
    const double scale = std::max(std::pow(std::abs(r.value), 5001),
                                  std::pow(std::abs(1.0 + r.value), 5000));
    EXPECT_LE(std::abs(v), 1e-9 * scale);
  }
}

TEST(EvalFTest, ScaledResidualSurvivesWhereEvalFOverflows) {
  const ProblemInstance inst(5000);
  const RootEstimate r = SolvePositiveRoot(inst);
  EXPECT_THROW(EvalF(inst, r.value), OverflowError);
  EXPECT_LT(ScaledResidual(inst, r.value), 1e-10);
}

TEST(EvalFTest, RejectsNonFiniteInput) {
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_THROW(EvalF(ProblemInstance(3), ComplexValue(inf, 0.0)), DomainError);
  EXPECT_THROW(EvalF(ProblemInstance(3), ComplexValue(0.0, std::nan(""))),
               DomainError);
}

TEST(EvalFTest, ThrowsOverflowWhenDifferenceIsUnrepresentable) {
  EXPECT_THROW(EvalF(ProblemInstance(2000), ComplexValue(1e6, 0.0)),
               OverflowError);
}

TEST(EvalFPrimeTest, HandValues) {
  EXPECT_DOUBLE_EQ(EvalFPrime(ProblemInstance(1), 0.0).real(), -1.0);
  EXPECT_DOUBLE_EQ(EvalFPrime(ProblemInstance(2), 1.0).real(), -1.0);
  EXPECT_GT(std::abs(EvalFPrime(ProblemInstance(4), UpperSpecialRoot())), 0.1);
}

TEST(EvalFPrimeTest, AgreesWithCentralDifferences) {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 30; ++n) {
    const ProblemInstance inst(n);
    for (int i = 0; i < 50; ++i) {
      const ComplexValue z = RandomPoint(rng, 2.0);
      const double h = 1e-7 * std::max(1.0, std::abs(z));
      const ComplexValue fd =
          (EvalF(inst, z + h) - EvalF(inst, z - h)) / (2.0 * h);
      const ComplexValue exact = EvalFPrime(inst, z);
      // Roundoff in the difference quotient scales with |f| / h.
      const double scale =
          std::max(std::abs(exact), std::pow(std::abs(z) + 1.0, n) * 1e-6);
      EXPECT_LE(std::abs(fd - exact), 1e-6 * scale) << "n=" << n << " z=" << z;
    }
  }
}

TEST(EvalHTest, GoldenRatioOnBranchZero) {
  const ProblemInstance inst(1);
  EXPECT_LT(std::abs(EvalH(inst, 0, kPhi)), 1e-14);
  EXPECT_LT(std::abs(std::exp(EvalH(inst, 0, kPhi)) - 1.0), 1e-14);
}

TEST(EvalHTest, SpecialRootLiesOnBranchOne) {
  const ProblemInstance inst(4);
  int best_k = 0;
  double best = std::numeric_limits<double>::infinity();
  for (int k = -(inst.n() + 1); k <= inst.n() + 1; ++k) {
    const double v = std::abs(EvalH(inst, k, UpperSpecialRoot()));
    if (v < best) {
      best = v;
      best_k = k;
    }
  }
  EXPECT_EQ(best_k, 1);
  EXPECT_LT(best, 1e-13);
  EXPECT_EQ(BranchIndexOf(inst, UpperSpecialRoot()), 1);
}

TEST(EvalHTest, PositiveRootOfNTwo) {
  EXPECT_LT(std::abs(EvalH(ProblemInstance(2), 0, 2.1479)), 1e-3);
}

TEST(EvalHTest, ExponentialMatchesPowerRatio) {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 50; ++n) {
    const ProblemInstance inst(n);
    for (int i = 0; i < 40; ++i) {
      const ComplexValue z = RandomPoint(rng, 3.0);
      const LongComplex zz(z.real(), z.imag());
      const LongComplex ratio = NaivePow(zz, n + 1) / NaivePow(1.0L + zz, n);
      for (int k : {-1, 0, 2}) {
        const ComplexValue e = std::exp(EvalH(inst, k, z));
        const LongComplex diff = LongComplex(e.real(), e.imag()) - ratio;
        EXPECT_LE(std::abs(diff), 1e-10 * std::abs(ratio));
      }
    }
  }
}

TEST(EvalHTest, SmallAtRootsLargeAwayFromThem) {
  std::mt19937_64 rng(9);
  for (int n = 1; n <= 50; ++n) {
    const ProblemInstance inst(n);
    for (const RootEstimate& r : SolveAllRoots(inst).roots) {
      double best = std::numeric_limits<double>::infinity();
      for (int k = -(n + 1); k <= n + 1; ++k) {
        best = std::min(best, std::abs(EvalH(inst, k, r.value)));
      }
      EXPECT_LT(best, 1e-9);
    }
    for (int i = 0; i < 20; ++i) {
      const ComplexValue z = RandomPoint(rng, 10.0);
      double best = std::numeric_limits<double>::infinity();
      for (int k = -(n + 1); k <= n + 1; ++k) {
        best = std::min(best, std::abs(EvalH(inst, k, z)));
      }
      // |e^h - 1| <= tol and |h| <= tol' coincide for small values.
      const double scaled = ScaledResidual(inst, z);
      EXPECT_EQ(best <= 1e-6, scaled <= 1e-6) << "n=" << n << " z=" << z;
    }
  }
}

TEST(EvalHTest, NegativeAxisUsesUpperSide) {
  const ProblemInstance inst(1);
  const ComplexValue h = EvalH(inst, 0, -0.25);
  EXPECT_NEAR(h.imag(), 2 * kPi, 1e-15);
}

TEST(EvalHTest, RejectsPoles) {
  const ProblemInstance inst(3);
  EXPECT_THROW(EvalH(inst, 0, 0.0), DomainError);
  EXPECT_THROW(EvalH(inst, 0, -1.0), DomainError);
  EXPECT_THROW(EvalHPrime(inst, 0.0), DomainError);
  EXPECT_THROW(EvalHPrime(inst, -1.0), DomainError);
}

TEST(EvalHPrimeTest, HandValues) {
  EXPECT_DOUBLE_EQ(EvalHPrime(ProblemInstance(1), 1.0).real(), 1.5);

  const ComplexValue z = UpperSpecialRoot();
  const ComplexValue expected = 5.0 * std::conj(z) - 4.0 * std::conj(1.0 + z);
  EXPECT_LT(std::abs(EvalHPrime(ProblemInstance(4), z) - expected), 1e-15);

  const ComplexValue hp = EvalHPrime(ProblemInstance(10), 5.4263);
  EXPECT_NEAR(hp.real(), 11.0 / 5.4263 - 10.0 / 6.4263, 1e-15);
  EXPECT_NEAR(hp.real(), 0.4712, 1e-3);
}

TEST(BranchRangeTest, EveryBranchCarriesExactlyOneRoot) {
  for (int n = 1; n <= 25; ++n) {
    const ProblemInstance inst(n);
    std::vector<int> hits(MaxBranch(inst) - MinBranch(inst) + 1, 0);
    for (const RootEstimate& r : SmallNOracle(inst).roots) {
      const int k = BranchIndexOf(inst, r.value);
      ASSERT_GE(k, MinBranch(inst)) << "n=" << n;
      ASSERT_LE(k, MaxBranch(inst)) << "n=" << n;
      ++hits[k - MinBranch(inst)];
    }
    for (int h : hits) EXPECT_EQ(h, 1) << "n=" << n;
  }
}

TEST(ScaledResidualTest, ZeroAtRootsOneAtPoles) {
  const ProblemInstance inst(4);
  EXPECT_LT(ScaledResidual(inst, UpperSpecialRoot()), 1e-14);
  EXPECT_DOUBLE_EQ(ScaledResidual(inst, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(ScaledResidual(inst, -1.0), 1.0);
}

TEST(ScaledResidualTest, MatchesDirectDefinition) {
  std::mt19937_64 rng(13);
  for (int n : {1, 3, 8, 20}) {
    const ProblemInstance inst(n);
    for (int i = 0; i < 100; ++i) {
      const ComplexValue z = RandomPoint(rng, 3.0);
      const double direct =
          std::abs(NaiveF(n, z)) /
          std::max(std::pow(std::abs(z), n + 1), std::pow(std::abs(1.0 + z), n));
      EXPECT_NEAR(ScaledResidual(inst, z), direct, 1e-12 * (1.0 + direct));
    }
  }
}

}  // namespace
}  // namespace rootscope
