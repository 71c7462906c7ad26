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
#include <limits>
#include <numbers>

#include "scaled_complex.h"

namespace rootscope {
namespace {

using internal::ScaledComplex;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool IsFinite(ComplexValue z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

void RequireFinite(ComplexValue z, const char* op) {
  if (!IsFinite(z)) {
    throw DomainError(std::string(op) + ": non-finite argument");
  }
}

void RequireOffPoles(ComplexValue z, const char* op) {
  RequireFinite(z, op);
  if (z == ComplexValue(0.0, 0.0) || z == ComplexValue(-1.0, 0.0)) {
    throw DomainError(std::string(op) + ": argument at a pole (0 or -1)");
  }
}

// e^w - 1, accurate when |w| is small.
ComplexValue Expm1(ComplexValue w) {
  const double a = w.real();
  const double b = std::remainder(w.imag(), kTwoPi);
  const double half_sin = std::sin(0.5 * b);
  return {std::expm1(a) * std::cos(b) - 2.0 * half_sin * half_sin,
          std::exp(a) * std::sin(b)};
}

}  // namespace

ComplexValue PrincipalLog(ComplexValue z) {
  if (z.imag() == 0.0) z = {z.real(), 0.0};
  return std::log(z);
}

ComplexValue Log1p(ComplexValue u) {
  const double a = u.real();
  const double b = u.imag() == 0.0 ? 0.0 : u.imag();
  double re;
  if (std::abs(u) < 0.5) {
    re = 0.5 * std::log1p(a * (2.0 + a) + b * b);
  } else {
    re = std::log(std::hypot(1.0 + a, b));
  }
  return {re, std::atan2(b, 1.0 + a)};
}

ComplexValue EvalF(const ProblemInstance& inst, ComplexValue z) {
  RequireFinite(z, "EvalF");
  const int n = inst.n();
  return internal::Difference(ScaledComplex::Pow(z, n + 1),
                              ScaledComplex::Pow(1.0 + z, n));
}

ComplexValue EvalFPrime(const ProblemInstance& inst, ComplexValue z) {
  RequireFinite(z, "EvalFPrime");
  const int n = inst.n();
  ScaledComplex lead = ScaledComplex::Pow(z, n);
  lead *= static_cast<double>(n + 1);
  ScaledComplex tail = ScaledComplex::Pow(1.0 + z, n - 1);
  tail *= static_cast<double>(n);
  return internal::Difference(lead, tail);
}

ComplexValue EvalH(const ProblemInstance& inst, int k, ComplexValue z) {
  RequireOffPoles(z, "EvalH");
  const double n = inst.n();
  return (n + 1.0) * PrincipalLog(z) - n * Log1p(z) -
         ComplexValue(0.0, kTwoPi * k);
}

ComplexValue EvalHPrime(const ProblemInstance& inst, ComplexValue z) {
  RequireOffPoles(z, "EvalHPrime");
  const double n = inst.n();
  return (n + 1.0) / z - n / (1.0 + z);
}

int BranchIndexOf(const ProblemInstance& inst, ComplexValue z) {
  return static_cast<int>(std::lround(EvalH(inst, 0, z).imag() / kTwoPi));
}

int MinBranch(const ProblemInstance& inst) { return -(inst.n() / 2); }
int MaxBranch(const ProblemInstance& inst) { return (inst.n() + 1) / 2; }

double ScaledResidual(const ProblemInstance& inst, ComplexValue z) {
  if (!IsFinite(z)) return std::numeric_limits<double>::infinity();
  // At either pole one term vanishes and the other has modulus 1.
  if (z == ComplexValue(0.0, 0.0) || z == ComplexValue(-1.0, 0.0)) return 1.0;
  // log of (1+z)^n / z^(n+1), up to a multiple of 2 pi i.
  const ComplexValue log_ratio =
      static_cast<double>(inst.n()) * Log1p(1.0 / z) - PrincipalLog(z);
  // Divide by the larger of the two terms.
  if (log_ratio.real() <= 0.0) return std::abs(Expm1(log_ratio));
  return std::abs(Expm1(-log_ratio));
}

double RelativeDerivative(const ProblemInstance& inst, ComplexValue z) {
  RequireFinite(z, "RelativeDerivative");
  const int n = inst.n();
  ScaledComplex lead = ScaledComplex::Pow(z, n);
  lead *= static_cast<double>(n + 1);
  ScaledComplex tail = ScaledComplex::Pow(1.0 + z, n - 1);
  tail *= static_cast<double>(n);
  if (lead.is_zero() && tail.is_zero()) return 0.0;
  const std::int64_t top = std::max(lead.exponent(), tail.exponent());
  const ComplexValue a = lead.Rescaled(top);
  const ComplexValue b = tail.Rescaled(top);
  return std::abs(a - b) / (std::abs(a) + std::abs(b));
}

}  // namespace rootscope
