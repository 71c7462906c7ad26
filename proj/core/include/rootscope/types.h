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

#ifndef ROOTSCOPE_TYPES_H_
#define ROOTSCOPE_TYPES_H_

#include <complex>
#include <numbers>
#include <string>

#include "rootscope/errors.h"

namespace rootscope {

using ComplexValue = std::complex<double>;

// One member z^(n+1) = (1+z)^n of the family, identified by its degree
// parameter n >= 1.
class ProblemInstance {
 public:
  explicit ProblemInstance(int n) : n_(n) {
    if (n < 1) {
      throw DomainError("degree parameter n must be >= 1, got " +
                        std::to_string(n));
    }
  }

  int n() const { return n_; }
  int degree() const { return n_ + 1; }
  bool is_odd() const { return n_ % 2 != 0; }

  friend bool operator==(const ProblemInstance&,
                         const ProblemInstance&) = default;

 private:
  int n_;
};

// The cube roots of unity e^{+-2 pi i/3}; the only points that are roots
// for more than one n.
inline ComplexValue UpperSpecialRoot() {
  return {-0.5, std::numbers::sqrt3 / 2.0};
}
inline ComplexValue LowerSpecialRoot() {
  return {-0.5, -std::numbers::sqrt3 / 2.0};
}

}  // namespace rootscope

#endif  // ROOTSCOPE_TYPES_H_
