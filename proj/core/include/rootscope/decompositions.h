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

// Real-variable forms of the equation and the conjugacy w = 1 + 1/z that
// carries it onto w^(n+1) - w^n - 1 = 0.

#ifndef ROOTSCOPE_DECOMPOSITIONS_H_
#define ROOTSCOPE_DECOMPOSITIONS_H_

#include <cstdint>

#include "rootscope/types.h"

namespace rootscope {

// Largest n for which the binomial expansions are evaluated.
inline constexpr int kMaxExpansionDegree = 30;

struct ResidualPair {
  double real_eq = 0.0;
  double imag_eq = 0.0;
};

// LHS - RHS of the Cartesian system obtained from z = x + iy:
//   sum_{k<=(n+1)/2} (-1)^k C(n+1,2k) x^(n+1-2k) y^2k
//       = sum_{k<=n/2} (-1)^k C(n,2k) (1+x)^(n-2k) y^2k
//   sum_{k<=n/2} (-1)^k C(n+1,2k+1) x^(n-2k) y^(2k+1)
//       = sum_{k<=(n-1)/2} (-1)^k C(n,2k+1) (1+x)^(n-2k-1) y^(2k+1)
// DomainError for n > kMaxExpansionDegree.
ResidualPair CartesianResidual(const ProblemInstance& inst, double x, double y);

// LHS - RHS of the polar system for z = r e^{i theta}:
//   r^(n+1) cos((n+1) theta) = sum_{m=0..n} C(n,m) r^m cos(m theta)
//   r^(n+1) sin((n+1) theta) = sum_{m=1..n} C(n,m) r^m sin(m theta)
// DomainError for r <= 0 or n > kMaxExpansionDegree.
ResidualPair PolarResidual(const ProblemInstance& inst, double r,
                           double theta);

// Number of sign changes of the first polar equation's residual on a uniform
// grid of `samples` points over [r_lo, r_hi]. Grid points where the residual
// is exactly zero are skipped.
int CountPolarSignChanges(const ProblemInstance& inst, double theta,
                          double r_lo, double r_hi, int samples);

// w = 1 + 1/z; DomainError at z = 0.
ComplexValue ToW(ComplexValue z);
// z = 1/(w - 1); DomainError at w = 1.
ComplexValue FromW(ComplexValue w);

// w^(n+1) - w^n - 1, with the same overflow-safe powering as EvalF.
ComplexValue WResidual(const ProblemInstance& inst, ComplexValue w);

// Draws `samples` deterministic points z (log-uniform modulus in
// [1e-2, 1e2]; a quarter of them on |z| = 1 and a quarter on |z+1| = 1) and
// checks, with w = ToW(z):
//   |z| = 1   <=> |w-1| = 1        |z+1| = 1 <=> Re w = 1/2
//   |z| > 1   <=> |w-1| < 1        |z+1| > 1 <=> Re w > 1/2
//   |z| < 1   <=> |w-1| > 1        |z+1| < 1 <=> Re w < 1/2
// Returns true when all hold; throws MappingViolation carrying the first
// counterexample otherwise. DomainError for samples < 1.
bool VerifyRegionMapping(int samples, std::uint64_t seed);

}  // namespace rootscope

#endif  // ROOTSCOPE_DECOMPOSITIONS_H_
