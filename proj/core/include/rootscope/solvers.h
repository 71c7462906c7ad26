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

#ifndef ROOTSCOPE_SOLVERS_H_
#define ROOTSCOPE_SOLVERS_H_

#include <optional>
#include <vector>

#include "rootscope/asymptotics.h"
#include "rootscope/types.h"

namespace rootscope {

// Roots closer than this are the same root; also the |Im z| threshold below
// which a root counts as real.
inline constexpr double kMatchTolerance = 1e-8;
inline constexpr double kDefaultTolerance = 1e-10;

struct RootEstimate {
  ComplexValue value;
  // ScaledResidual(value).
  double residual = 0.0;
  int iterations = 0;
  // Set only when residual <= the tolerance the producer was given.
  bool converged = false;
  // Branch index k of h_k; absent when the producer does not track it.
  std::optional<int> branch_k;
};

enum class RootKind { kPositive, kNegative, kNonReal };

RootKind KindOf(ComplexValue z);

struct RootSet {
  int n = 0;
  std::vector<RootEstimate> roots;

  std::vector<ComplexValue> values() const;
};

struct Classification {
  int positive_count = 0;
  int negative_count = 0;
  int nonreal_count = 0;
  int conjugate_pairs = 0;

  friend bool operator==(const Classification&,
                         const Classification&) = default;
};

// Newton's method from z0. For n <= 30 and |z0| <= 4 it steps on f/f';
// otherwise on h_k/h' with k = BranchIndexOf(z0) frozen for the whole run.
// Stops when |step| <= tol max(1, |z|) or the scaled residual is <= tol.
// Running out of iterations is not an error: converged is false. Throws
// DomainError if z0 is non-finite or an iterate lands on 0 or -1.
RootEstimate NewtonRefine(const ProblemInstance& inst, ComplexValue z0,
                          double tol = kDefaultTolerance, int max_iter = 100);

// The unique positive root, found on the real line by safeguarded Newton
// inside [1, 2n]. Im(value) is exactly zero.
RootEstimate SolvePositiveRoot(const ProblemInstance& inst,
                               double tol = kDefaultTolerance);

// The unique negative root of odd n, inside [-0.99, -0.5]. DomainError for
// even n (no negative root exists).
RootEstimate SolveNegativeRoot(const ProblemInstance& inst,
                               double tol = kDefaultTolerance);

// All n+1 roots. The real roots come from the two real solvers. The upper
// half-plane roots are found by numerical continuation of h_0(z) = 2 pi i t
// from the positive root (t = 0) through t = 1, 2, ..., each integer t
// being the root of branch k = t; the lower half-plane roots are their
// exact conjugates. Throws IncompleteRootSetError when fewer than n+1
// distinct roots with residual <= tol are produced.
RootSet SolveAllRoots(const ProblemInstance& inst,
                      double tol = kDefaultTolerance);

// Throws ClassificationMismatchError unless the counts are (1, n mod 2,
// n - n mod 2, (n - n mod 2)/2).
Classification ClassifyRoots(const RootSet& rs);

// Independent cross-check for n <= 25: expands the polynomial with exact
// integer binomials, runs Aberth-Ehrlich simultaneous iteration from
// uniformly rotated starting points, then polishes every root with
// NewtonRefine. DomainError for n > 25.
RootSet SmallNOracle(const ProblemInstance& inst);

// Largest distance between matched pairs under the assignment minimising the
// total distance (Hungarian algorithm). Sizes must agree.
double MaxMatchedDistance(const std::vector<ComplexValue>& a,
                          const std::vector<ComplexValue>& b);

struct VariantFitRow {
  int n = 0;
  // The computed root nearest e^{2 pi i/3}.
  ComplexValue nearest_root;
  double statement_error = 0.0;
  double derivation_error = 0.0;
};

struct VariantFitReport {
  ComplexApproxVariant winner = ComplexApproxVariant::kDerivation;
  double mean_statement_error = 0.0;
  double mean_derivation_error = 0.0;
  std::vector<VariantFitRow> rows;
};

// Decides empirically which complex approximant tracks the root nearest
// e^{2 pi i/3} better over n in [n_min, n_max]. Requires
// 10 <= n_min < n_max <= 300.
VariantFitReport FitComplexVariant(int n_min, int n_max,
                                   double tol = kDefaultTolerance);

// |root - approx| for the root of SolveAllRoots(n) nearest e^{2 pi i/3}.
double NearestRootDeviation(int n, ComplexApproxVariant variant,
                            double tol = kDefaultTolerance);

}  // namespace rootscope

#endif  // ROOTSCOPE_SOLVERS_H_
