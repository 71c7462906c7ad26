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

#include "rootscope/decompositions.h"

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "rootscope/errors.h"
#include "scaled_complex.h"

namespace rootscope {
namespace {

void RequireExpandable(const ProblemInstance& inst, const char* op) {
  if (inst.n() > kMaxExpansionDegree) {
    throw DomainError(std::string(op) + ": n > " +
                      std::to_string(kMaxExpansionDegree) +
                      " is outside the exact-binomial range; use EvalF");
  }
}

// Row m of Pascal's triangle, exact in double for m <= 31.
std::vector<double> BinomialRow(int m) {
  std::vector<double> row(m + 1, 1.0);
  for (int j = 1; j < m; ++j) {
    row[j] = row[j - 1] * (m - j + 1) / j;
  }
  return row;
}

double Sign(int k) { return k % 2 == 0 ? 1.0 : -1.0; }

}  // namespace

ResidualPair CartesianResidual(const ProblemInstance& inst, double x,
                               double y) {
  RequireExpandable(inst, "CartesianResidual");
  const int n = inst.n();
  const std::vector<double> c_lhs = BinomialRow(n + 1);
  const std::vector<double> c_rhs = BinomialRow(n);
  const double xp = 1.0 + x;

  double lhs_re = 0.0;
  for (int k = 0; k <= (n + 1) / 2; ++k) {
    lhs_re += Sign(k) * c_lhs[2 * k] * std::pow(x, n + 1 - 2 * k) *
              std::pow(y, 2 * k);
  }
  double rhs_re = 0.0;
  for (int k = 0; k <= n / 2; ++k) {
    rhs_re += Sign(k) * c_rhs[2 * k] * std::pow(xp, n - 2 * k) *
              std::pow(y, 2 * k);
  }
  double lhs_im = 0.0;
  for (int k = 0; k <= n / 2; ++k) {
    lhs_im += Sign(k) * c_lhs[2 * k + 1] * std::pow(x, n - 2 * k) *
              std::pow(y, 2 * k + 1);
  }
  double rhs_im = 0.0;
  for (int k = 0; k <= (n - 1) / 2; ++k) {
    rhs_im += Sign(k) * c_rhs[2 * k + 1] * std::pow(xp, n - 2 * k - 1) *
              std::pow(y, 2 * k + 1);
  }
  return {lhs_re - rhs_re, lhs_im - rhs_im};
}

ResidualPair PolarResidual(const ProblemInstance& inst, double r,
                           double theta) {
  RequireExpandable(inst, "PolarResidual");
  if (!(r > 0.0)) throw DomainError("PolarResidual: requires r > 0");
  const int n = inst.n();
  const std::vector<double> c = BinomialRow(n);
  const double lead = std::pow(r, n + 1);
  double cos_sum = 0.0;
  double sin_sum = 0.0;
  for (int m = 0; m <= n; ++m) {
    const double rm = c[m] * std::pow(r, m);
    cos_sum += rm * std::cos(m * theta);
    if (m >= 1) sin_sum += rm * std::sin(m * theta);
  }
  return {lead * std::cos((n + 1) * theta) - cos_sum,
          lead * std::sin((n + 1) * theta) - sin_sum};
}

int CountPolarSignChanges(const ProblemInstance& inst, double theta,
                          double r_lo, double r_hi, int samples) {
  if (samples < 2 || !(r_hi > r_lo)) {
    throw DomainError("CountPolarSignChanges: need samples >= 2, r_hi > r_lo");
  }
  int changes = 0;
  double previous = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double r = r_lo + (r_hi - r_lo) * i / (samples - 1);
    const double v = PolarResidual(inst, r, theta).real_eq;
    if (v == 0.0) continue;
    if (previous != 0.0 && (v > 0.0) != (previous > 0.0)) ++changes;
    previous = v;
  }
  return changes;
}

ComplexValue ToW(ComplexValue z) {
  if (z == ComplexValue(0.0, 0.0)) throw DomainError("ToW: z = 0");
  return 1.0 + 1.0 / z;
}

ComplexValue FromW(ComplexValue w) {
  if (w == ComplexValue(1.0, 0.0)) throw DomainError("FromW: w = 1");
  return 1.0 / (w - 1.0);
}

ComplexValue WResidual(const ProblemInstance& inst, ComplexValue w) {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
    throw DomainError("WResidual: non-finite argument");
  }
  using internal::ScaledComplex;
  ScaledComplex lead = ScaledComplex::Pow(w, inst.n());
  lead *= ScaledComplex(w - 1.0);
  return internal::Difference(lead, ScaledComplex(ComplexValue(1.0, 0.0)));
}

bool VerifyRegionMapping(int samples, std::uint64_t seed) {
  if (samples < 1) throw DomainError("VerifyRegionMapping: samples >= 1");
  constexpr double kBand = 1e-9;
  constexpr double kEqualTol = 1e-8;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> log_radius(-2.0, 2.0);
  std::uniform_real_distribution<double> angle(-std::numbers::pi,
                                               std::numbers::pi);

  auto fail = [](const std::string& row, ComplexValue z) {
    throw MappingViolation("region mapping row '" + row + "' fails", z);
  };

  for (int i = 0; i < samples; ++i) {
    ComplexValue z;
    do {
      switch (i % 4) {
        case 0:
          z = std::polar(1.0, angle(rng));
          break;
        case 1:
          z = -1.0 + std::polar(1.0, angle(rng));
          break;
        default:
          z = std::polar(std::pow(10.0, log_radius(rng)), angle(rng));
      }
    } while (std::abs(z) < 1e-2 || std::abs(z) > 1e2);

    const ComplexValue w = ToW(z);

    // Classify on the z side with a dead band; the w side must then agree
    // strictly (or be equal to within kEqualTol on the boundary).
    const double dz = std::abs(z) - 1.0;
    const double dw = std::abs(w - 1.0) - 1.0;
    if (std::abs(dz) <= kBand) {
      if (std::abs(dw) > kEqualTol) fail("|z|=1 -> |w-1|=1", z);
    } else if (dz > 0.0) {
      if (!(dw < 0.0)) fail("|z|>1 -> |w-1|<1", z);
    } else if (!(dw > 0.0)) {
      fail("|z|<1 -> |w-1|>1", z);
    }

    const double dz1 = std::abs(z + 1.0) - 1.0;
    const double dre = w.real() - 0.5;
    if (std::abs(dz1) <= kBand) {
      if (std::abs(dre) > kEqualTol) fail("|z+1|=1 -> Re(w)=1/2", z);
    } else if (dz1 > 0.0) {
      if (!(dre > 0.0)) fail("|z+1|>1 -> Re(w)>1/2", z);
    } else if (!(dre < 0.0)) {
      fail("|z+1|<1 -> Re(w)<1/2", z);
    }
  }
  return true;
}

}  // namespace rootscope
