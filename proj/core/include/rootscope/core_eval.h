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

// Evaluation of f(z) = z^(n+1) - (1+z)^n, its derivative, and the
// branch-indexed logarithmic form
//
//   h_k(z) = (n+1) Log z - n Log(1+z) - 2 pi i k,
//
// whose zeros over the admissible k enumerate the roots one per branch.
// Log is the principal logarithm; a point on the negative real axis is
// evaluated on its Im z = +0 side regardless of the sign of its zero.

#ifndef ROOTSCOPE_CORE_EVAL_H_
#define ROOTSCOPE_CORE_EVAL_H_

#include "rootscope/types.h"

namespace rootscope {

// f(z). Powers are formed by binary powering with a separately tracked
// binary exponent, so the terms never overflow individually; relative error
// stays within a few hundred ulps of the larger term for n up to ~10^3.
// Throws DomainError on non-finite z and OverflowError when the difference
// itself is not representable.
ComplexValue EvalF(const ProblemInstance& inst, ComplexValue z);

// f'(z) = (n+1) z^n - n (1+z)^(n-1), same contract as EvalF.
ComplexValue EvalFPrime(const ProblemInstance& inst, ComplexValue z);

// h_k(z). Throws DomainError for z in {0, -1} or non-finite z.
ComplexValue EvalH(const ProblemInstance& inst, int k, ComplexValue z);

// h'(z) = (n+1)/z - n/(1+z); independent of k.
ComplexValue EvalHPrime(const ProblemInstance& inst, ComplexValue z);

// Principal logarithm with the +0 side taken on the negative real axis.
ComplexValue PrincipalLog(ComplexValue z);

// log(1 + u) without cancellation for small |u|.
ComplexValue Log1p(ComplexValue u);

// The k for which h_k(z) has the smallest modulus, i.e. the branch that z
// sits on: round(Im h_0(z) / 2 pi).
int BranchIndexOf(const ProblemInstance& inst, ComplexValue z);

// Branch indices that carry a root: k in [-floor(n/2), ceil(n/2)], exactly
// one root each. k = 0 is the positive root, k = (n+1)/2 the negative root
// for odd n, and k < 0 the conjugates of k > 0.
int MinBranch(const ProblemInstance& inst);
int MaxBranch(const ProblemInstance& inst);

// |f(z)| / max(|z|^(n+1), |1+z|^n): the scale-free certificate used for
// every root. Computed from the ratio (1+z)^n / z^(n+1) = exp(n Log1p(1/z)
// - Log z), so it stays accurate for large |z| and large n.
double ScaledResidual(const ProblemInstance& inst, ComplexValue z);

// |f'(z)| / ((n+1)|z|^n + n|1+z|^(n-1)). Bounded away from zero at every
// root because all roots are simple.
double RelativeDerivative(const ProblemInstance& inst, ComplexValue z);

}  // namespace rootscope

#endif  // ROOTSCOPE_CORE_EVAL_H_
