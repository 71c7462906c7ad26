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
#include <numbers>
#include <string>

#include "rootscope/lambert_w.h"

namespace rootscope {

std::string_view VariantId(ComplexApproxVariant v) {
  switch (v) {
    case ComplexApproxVariant::kStatement:
      return "STATEMENT";
    case ComplexApproxVariant::kDerivation:
      return "DERIVATION";
  }
  return "UNKNOWN";
}

std::string_view VariantDescription(ComplexApproxVariant v) {
  switch (v) {
    case ComplexApproxVariant::kStatement:
      return "e^{2 pi i/3} (1 + pi sqrt(3)/n - pi i/(3n))";
    case ComplexApproxVariant::kDerivation:
      return "e^{2 pi i/3} (1 + pi sqrt(3)/(3n) - pi i/(3n))";
  }
  return "";
}

double ApproxPositiveRoot(int n) {
  if (n < 2) {
    throw DomainError("ApproxPositiveRoot: requires n >= 2, got " +
                      std::to_string(n));
  }
  const double ln = std::log(static_cast<double>(n));
  return n / (ln - std::log(ln));
}

double ApproxPositiveRootLambert(int n) {
  if (n < 1) {
    throw DomainError("ApproxPositiveRootLambert: requires n >= 1");
  }
  return n / LambertW0(static_cast<double>(n)).value;
}

double ApproxNegativeRoot(int n) {
  if (n < 1 || n % 2 == 0) {
    throw DomainError("ApproxNegativeRoot: no negative root for n=" +
                      std::to_string(n) + " (negative roots exist for odd n only)");
  }
  return -0.5 - std::numbers::ln2 / (4.0 * n);
}

ComplexValue ApproxComplexRoot(int n, int sign, ComplexApproxVariant variant) {
  if (n < 2) throw DomainError("ApproxComplexRoot: requires n >= 2");
  if (sign != 1 && sign != -1) {
    throw DomainError("ApproxComplexRoot: sign must be +1 or -1");
  }
  constexpr double kPi = std::numbers::pi;
  const double a = variant == ComplexApproxVariant::kStatement
                       ? kPi * std::numbers::sqrt3
                       : kPi * std::numbers::sqrt3 / 3.0;
  const ComplexValue correction(1.0 + a / n, -sign * kPi / (3.0 * n));
  const ComplexValue base(-0.5, sign * std::numbers::sqrt3 / 2.0);
  return base * correction;
}

}  // namespace rootscope
