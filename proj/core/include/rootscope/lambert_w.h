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

#ifndef ROOTSCOPE_LAMBERT_W_H_
#define ROOTSCOPE_LAMBERT_W_H_

namespace rootscope {

struct WResult {
  double value = 0.0;
  int iterations = 0;
  // |w e^w - x|
  double residual = 0.0;
};

// Principal real branch W0 of the inverse of w -> w e^w, by Halley
// iteration. Requires x >= -1/e + 1e-12 (DomainError otherwise). Throws
// ConvergenceError if |w e^w - x| > 1e-12 max(1, |x|) after 50 iterations.
WResult LambertW0(double x);

// ln x - ln ln x + ln ln x / ln x, the three-term large-argument expansion
// of W0. Requires x > e.
double LambertW0Asymptotic(double x);

}  // namespace rootscope

#endif  // ROOTSCOPE_LAMBERT_W_H_
