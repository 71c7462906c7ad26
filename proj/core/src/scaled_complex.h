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

#ifndef ROOTSCOPE_SCALED_COMPLEX_H_
#define ROOTSCOPE_SCALED_COMPLEX_H_

#include <complex>
#include <cstdint>

namespace rootscope::internal {

// A complex number mantissa * 2^exponent with max(|re|, |im|) of the
// mantissa in [0.5, 1) (or an exact zero). Lets z^n be formed for any n
// without intermediate overflow or underflow.
class ScaledComplex {
 public:
  ScaledComplex() = default;
  explicit ScaledComplex(std::complex<double> value);

  static ScaledComplex Pow(std::complex<double> base, std::int64_t exponent);

  ScaledComplex& operator*=(const ScaledComplex& other);
  ScaledComplex& operator*=(double factor);

  std::complex<double> mantissa() const { return mantissa_; }
  std::int64_t exponent() const { return exponent_; }
  bool is_zero() const { return mantissa_ == std::complex<double>(0.0, 0.0); }

  // log2 of the modulus; -inf for zero.
  double Log2Abs() const;

  // mantissa * 2^(exponent - shift) as a plain double complex; may overflow
  // to inf or underflow to zero.
  std::complex<double> Rescaled(std::int64_t shift) const;

 private:
  void Normalize();

  std::complex<double> mantissa_{0.0, 0.0};
  std::int64_t exponent_ = 0;
};

// a - b as a plain complex. Throws OverflowError when the result is not
// representable.
std::complex<double> Difference(const ScaledComplex& a, const ScaledComplex& b);

}  // namespace rootscope::internal

#endif  // ROOTSCOPE_SCALED_COMPLEX_H_
