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

#include "scaled_complex.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rootscope/errors.h"

namespace rootscope::internal {

ScaledComplex::ScaledComplex(std::complex<double> value) : mantissa_(value) {
  Normalize();
}

void ScaledComplex::Normalize() {
  const double m = std::max(std::abs(mantissa_.real()),
                            std::abs(mantissa_.imag()));
  if (m == 0.0) {
    mantissa_ = {0.0, 0.0};
    exponent_ = 0;
    return;
  }
  int e = 0;
  std::frexp(m, &e);
  mantissa_ = {std::ldexp(mantissa_.real(), -e),
               std::ldexp(mantissa_.imag(), -e)};
  exponent_ += e;
}

ScaledComplex& ScaledComplex::operator*=(const ScaledComplex& other) {
  mantissa_ *= other.mantissa_;
  exponent_ += other.exponent_;
  Normalize();
  return *this;
}

ScaledComplex& ScaledComplex::operator*=(double factor) {
  return *this *= ScaledComplex(std::complex<double>(factor, 0.0));
}

ScaledComplex ScaledComplex::Pow(std::complex<double> base,
                                 std::int64_t exponent) {
  ScaledComplex result(std::complex<double>(1.0, 0.0));
  ScaledComplex square(base);
  while (exponent > 0) {
    if (exponent & 1) result *= square;
    exponent >>= 1;
    if (exponent > 0) square *= square;
  }
  return result;
}

double ScaledComplex::Log2Abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  return std::log2(std::abs(mantissa_)) + static_cast<double>(exponent_);
}

std::complex<double> ScaledComplex::Rescaled(std::int64_t shift) const {
  if (is_zero()) return {0.0, 0.0};
  const std::int64_t e = exponent_ - shift;
  // ldexp saturates correctly for any int; clamp to keep the cast safe.
  const int ec = static_cast<int>(std::clamp<std::int64_t>(e, -100000, 100000));
  return {std::ldexp(mantissa_.real(), ec), std::ldexp(mantissa_.imag(), ec)};
}

std::complex<double> Difference(const ScaledComplex& a,
                                const ScaledComplex& b) {
  if (a.is_zero()) return -b.Rescaled(0);
  if (b.is_zero()) return a.Rescaled(0);
  const std::int64_t top = std::max(a.exponent(), b.exponent());
  const ScaledComplex diff(a.Rescaled(top) - b.Rescaled(top));
  const std::complex<double> value = diff.Rescaled(-top);
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw OverflowError(
        "difference of powers exceeds double range; use the logarithmic form");
  }
  return value;
}

}  // namespace rootscope::internal
