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
#include <string>

#include "rootscope/errors.h"

namespace rootscope {
namespace {

constexpr double kInvE = 1.0 / std::numbers::e;
constexpr double kBranchGuard = 1e-12;
constexpr int kMaxIterations = 50;

double InitialGuess(double x) {
  if (x >= 0.0) return std::log1p(x);
  if (x < -0.25) {
    // Series about the branch point in p = sqrt(2 (e x + 1)).
    const double p = std::sqrt(2.0 * (std::numbers::e * x + 1.0));
    return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * 11.0 / 72.0));
  }
  return x * (1.0 - x);
}

}  // namespace

WResult LambertW0(double x) {
  if (!std::isfinite(x)) throw DomainError("LambertW0: non-finite argument");
  if (x < -kInvE + kBranchGuard) {
    throw DomainError("LambertW0: argument below -1/e");
  }
  WResult result;
  if (x == 0.0) return result;

  double w = InitialGuess(x);
  for (int i = 1; i <= kMaxIterations; ++i) {
    result.iterations = i;
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    // Halley: w -= f / (e^w (w+1) - (w+2) f / (2 (w+1))).
    const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= step;
    if (std::abs(step) <= 4.0 * 2.2e-16 * (1.0 + std::abs(w))) break;
  }
  result.value = w;
  result.residual = std::abs(w * std::exp(w) - x);
  if (result.residual > 1e-12 * std::max(1.0, std::abs(x))) {
    throw ConvergenceError("LambertW0: residual " +
                           std::to_string(result.residual) + " at x=" +
                           std::to_string(x));
  }
  return result;
}

double LambertW0Asymptotic(double x) {
  if (!(x > std::numbers::e)) {
    throw DomainError("LambertW0Asymptotic: requires x > e");
  }
  const double l1 = std::log(x);
  const double l2 = std::log(l1);
  return l1 - l2 + l2 / l1;
}

}  // namespace rootscope
