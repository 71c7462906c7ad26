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

#include "rootscope/solvers.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "rootscope/core_eval.h"

namespace rootscope {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

bool IsPole(ComplexValue z) {
  return z == ComplexValue(0.0, 0.0) || z == ComplexValue(-1.0, 0.0);
}

RootEstimate MakeEstimate(const ProblemInstance& inst, ComplexValue z,
                          int iterations, double tol,
                          std::optional<int> branch) {
  RootEstimate est;
  est.value = z;
  est.residual = ScaledResidual(inst, z);
  est.iterations = iterations;
  est.converged = est.residual <= tol;
  est.branch_k = branch;
  return est;
}

// Safeguarded Newton for a decreasing function on [lo, hi] with
// phi(lo) > 0 > phi(hi). Returns the root and the iteration count.
template <typename Phi, typename DPhi>
std::pair<double, int> BracketedNewton(Phi phi, DPhi dphi, double lo,
                                       double hi, double x) {
  if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
  int it = 0;
  for (; it < 200; ++it) {
    const double v = phi(x);
    if (v == 0.0) break;
    if (v > 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    double next = x - v / dphi(x);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const bool done = std::abs(next - x) <= 2.0 * kEps * std::abs(x) ||
                      hi - lo <= 2.0 * kEps * std::abs(x);
    x = next;
    if (done) break;
  }
  return {x, it + 1};
}

// Newton on G(z) = h_0(z) - 2 pi i t, staying in the open upper half-plane.
// Returns false when the iteration leaves it or fails to settle.
bool CorrectOnBranch(const ProblemInstance& inst, double t, ComplexValue& z,
                     int& iterations) {
  const ComplexValue target(0.0, kTwoPi * t);
  ComplexValue w = z;
  double prev_step = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 40; ++i) {
    if (IsPole(w)) return false;
    const ComplexValue step = (EvalH(inst, 0, w) - target) / EvalHPrime(inst, w);
    if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
      return false;
    }
    w -= step;
    ++iterations;
    if (!(w.imag() > 0.0)) return false;
    const double s = std::abs(step);
    const double scale = std::max(1.0, std::abs(w));
    if (s <= 1e-14 * scale) {
      z = w;
      return true;
    }
    // Roundoff floor: the step has stopped shrinking.
    if (i >= 3 && s <= 1e-9 * scale && s >= 0.5 * prev_step) {
      z = w;
      return true;
    }
    prev_step = s;
  }
  return false;
}

// Upper half-plane roots for k = 1 .. floor(n/2), tracing h_0(z) = 2 pi i t
// upward from the positive root. Entries are absent where tracing failed.
std::vector<std::optional<RootEstimate>> TraceUpperRoots(
    const ProblemInstance& inst, double positive_root, double tol) {
  const int upper = inst.n() / 2;
  std::vector<std::optional<RootEstimate>> roots(upper);
  ComplexValue z(positive_root, 0.0);
  double t = 0.0;
  double dt = 0.25;
  for (int k = 1; k <= upper; ++k) {
    int iterations = 0;
    while (t < k) {
      const double target = std::min(t + dt, static_cast<double>(k));
      ComplexValue trial = z;
      if (CorrectOnBranch(inst, target, trial, iterations)) {
        z = trial;
        t = target;
        dt = std::min(2.0 * dt, 0.5);
      } else {
        dt *= 0.5;
        if (dt < 1e-6) return roots;
      }
    }
    roots[k - 1] = MakeEstimate(inst, z, iterations, tol, k);
  }
  return roots;
}

// Last-resort seeds for a branch the continuation missed: points on the
// chord Re z = -1/2 and on the unit arc between e^{2 pi i/3} and -1, plus
// the neighbouring roots, each refined by Newton on h_k.
std::optional<RootEstimate> BackfillBranch(
    const ProblemInstance& inst, int k, double tol,
    const std::vector<ComplexValue>& neighbours) {
  std::vector<ComplexValue> seeds = neighbours;
  constexpr int kSeeds = 64;
  for (int j = 1; j < kSeeds; ++j) {
    const double s = static_cast<double>(j) / kSeeds;
    seeds.emplace_back(-0.5, s * std::numbers::sqrt3 / 2.0);
    seeds.push_back(std::polar(1.0, (2.0 + s) * std::numbers::pi / 3.0));
  }
  for (const ComplexValue seed : seeds) {
    ComplexValue z = seed;
    int iterations = 0;
    bool settled = false;
    for (int i = 0; i < 60 && !settled; ++i) {
      if (IsPole(z) || !(z.imag() > 0.0)) break;
      const ComplexValue step = EvalH(inst, k, z) / EvalHPrime(inst, z);
      z -= step;
      ++iterations;
      settled = std::abs(step) <= 1e-14 * std::max(1.0, std::abs(z));
    }
    if (!settled || !(z.imag() > 0.0) || IsPole(z)) continue;
    if (BranchIndexOf(inst, z) != k) continue;
    RootEstimate est = MakeEstimate(inst, z, iterations, tol, k);
    if (est.converged) return est;
  }
  return std::nullopt;
}

// Drops estimates within kMatchTolerance of an earlier one.
std::vector<RootEstimate> Deduplicate(std::vector<RootEstimate> roots) {
  std::vector<std::size_t> order(roots.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return roots[a].value.real() < roots[b].value.real();
  });
  std::vector<bool> drop(roots.size(), false);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (drop[order[i]]) continue;
    const ComplexValue zi = roots[order[i]].value;
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const ComplexValue zj = roots[order[j]].value;
      if (zj.real() - zi.real() > kMatchTolerance) break;
      if (std::abs(zj - zi) <= kMatchTolerance) drop[order[j]] = true;
    }
  }
  std::vector<RootEstimate> kept;
  kept.reserve(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (!drop[i]) kept.push_back(roots[i]);
  }
  return kept;
}

void RequirePositiveTolerance(double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
}

ComplexValue NearestToUpperSpecial(const RootSet& rs) {
  const ComplexValue target = UpperSpecialRoot();
  ComplexValue nearest = rs.roots.front().value;
  for (const RootEstimate& r : rs.roots) {
    if (std::abs(r.value - target) < std::abs(nearest - target)) {
      nearest = r.value;
    }
  }
  return nearest;
}

}  // namespace

RootKind KindOf(ComplexValue z) {
  if (std::abs(z.imag()) > kMatchTolerance) return RootKind::kNonReal;
  return z.real() > 0.0 ? RootKind::kPositive : RootKind::kNegative;
}

std::vector<ComplexValue> RootSet::values() const {
  std::vector<ComplexValue> out;
  out.reserve(roots.size());
  for (const RootEstimate& r : roots) out.push_back(r.value);
  return out;
}

RootEstimate NewtonRefine(const ProblemInstance& inst, ComplexValue z0,
                          double tol, int max_iter) {
  RequirePositiveTolerance(tol);
  if (!std::isfinite(z0.real()) || !std::isfinite(z0.imag())) {
    throw DomainError("NewtonRefine: non-finite starting point");
  }
  if (IsPole(z0)) throw DomainError("NewtonRefine: starting point at a pole");

  const bool direct = inst.n() <= 30 && std::abs(z0) <= 4.0;
  const int k = direct ? 0 : BranchIndexOf(inst, z0);
  ComplexValue z = z0;
  int iterations = 0;
  for (int i = 0; i < max_iter; ++i) {
    ComplexValue step;
    try {
      step = direct ? EvalF(inst, z) / EvalFPrime(inst, z)
                    : EvalH(inst, k, z) / EvalHPrime(inst, z);
    } catch (const OverflowError&) {
      break;
    }
    if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
    z -= step;
    iterations = i + 1;
    if (IsPole(z)) throw DomainError("NewtonRefine: iterate landed on a pole");
    if (std::abs(step) <= tol * std::max(1.0, std::abs(z))) break;
    if (ScaledResidual(inst, z) <= tol) break;
  }
  std::optional<int> branch;
  if (!IsPole(z)) branch = BranchIndexOf(inst, z);
  return MakeEstimate(inst, z, iterations, tol, branch);
}

RootEstimate SolvePositiveRoot(const ProblemInstance& inst, double tol) {
  RequirePositiveTolerance(tol);
  const double n = inst.n();
  // log((1+x)^n / x^(n+1)): positive at x = 1, negative at x = 2n.
  auto phi = [n](double x) { return n * std::log1p(1.0 / x) - std::log(x); };
  auto dphi = [n](double x) { return -n / (x * (x + 1.0)) - 1.0 / x; };
  const double seed = inst.n() >= 3 ? ApproxPositiveRoot(inst.n()) : 1.5;
  const auto [x, iterations] = BracketedNewton(phi, dphi, 1.0, 2.0 * n, seed);
  RootEstimate est = MakeEstimate(inst, {x, 0.0}, iterations, tol, 0);
  if (!est.converged) {
    throw ConvergenceError("SolvePositiveRoot: residual " +
                           std::to_string(est.residual) + " for n=" +
                           std::to_string(inst.n()));
  }
  return est;
}

RootEstimate SolveNegativeRoot(const ProblemInstance& inst, double tol) {
  RequirePositiveTolerance(tol);
  if (!inst.is_odd()) {
    throw DomainError("SolveNegativeRoot: no negative real root for even n=" +
                      std::to_string(inst.n()));
  }
  const double n = inst.n();
  // With x = -y: log((1-y)^n / y^(n+1)) = n log((1-y)/y) - log y, decreasing
  // on [0.5, 0.99] from ln 2 to a negative value.
  auto psi = [n](double y) {
    return n * std::log1p((1.0 - 2.0 * y) / y) - std::log(y);
  };
  auto dpsi = [n](double y) {
    return -n / (y * (1.0 - y)) - 1.0 / y;
  };
  const double seed = -ApproxNegativeRoot(inst.n());
  const auto [y, iterations] = BracketedNewton(psi, dpsi, 0.5, 0.99, seed);
  RootEstimate est =
      MakeEstimate(inst, {-y, 0.0}, iterations, tol, MaxBranch(inst));
  if (!est.converged) {
    throw ConvergenceError("SolveNegativeRoot: residual " +
                           std::to_string(est.residual) + " for n=" +
                           std::to_string(inst.n()));
  }
  return est;
}

RootSet SolveAllRoots(const ProblemInstance& inst, double tol) {
  RequirePositiveTolerance(tol);
  RootSet rs;
  rs.n = inst.n();
  rs.roots.reserve(inst.n() + 1);

  const RootEstimate positive = SolvePositiveRoot(inst, tol);
  rs.roots.push_back(positive);
  if (inst.is_odd()) rs.roots.push_back(SolveNegativeRoot(inst, tol));

  auto upper = TraceUpperRoots(inst, positive.value.real(), tol);
  for (std::size_t i = 0; i < upper.size(); ++i) {
    if (upper[i] && upper[i]->converged) continue;
    std::vector<ComplexValue> neighbours;
    if (i > 0 && upper[i - 1]) neighbours.push_back(upper[i - 1]->value);
    if (i + 1 < upper.size() && upper[i + 1]) {
      neighbours.push_back(upper[i + 1]->value);
    }
    upper[i] = BackfillBranch(inst, static_cast<int>(i) + 1, tol, neighbours);
  }
  for (const auto& root : upper) {
    if (!root) continue;
    rs.roots.push_back(*root);
    RootEstimate mirror = *root;
    mirror.value = std::conj(root->value);
    mirror.branch_k = -*root->branch_k;
    rs.roots.push_back(mirror);
  }

  std::erase_if(rs.roots, [](const RootEstimate& r) { return !r.converged; });
  rs.roots = Deduplicate(std::move(rs.roots));
  if (static_cast<int>(rs.roots.size()) != inst.n() + 1) {
    throw IncompleteRootSetError(inst.n(), static_cast<int>(rs.roots.size()));
  }
  return rs;
}

Classification ClassifyRoots(const RootSet& rs) {
  Classification c;
  std::vector<ComplexValue> upper;
  std::vector<ComplexValue> lower;
  for (const RootEstimate& r : rs.roots) {
    switch (KindOf(r.value)) {
      case RootKind::kPositive:
        ++c.positive_count;
        break;
      case RootKind::kNegative:
        ++c.negative_count;
        break;
      case RootKind::kNonReal:
        ++c.nonreal_count;
        (r.value.imag() > 0.0 ? upper : lower).push_back(r.value);
        break;
    }
  }
  for (const ComplexValue z : upper) {
    const bool paired = std::any_of(lower.begin(), lower.end(), [&](auto w) {
      return std::abs(w - std::conj(z)) <= kMatchTolerance;
    });
    if (paired) ++c.conjugate_pairs;
  }

  const int n = rs.n;
  const Classification expected{1, n % 2, n - n % 2, (n - n % 2) / 2};
  if (c != expected) {
    throw ClassificationMismatchError(
        "root classification for n=" + std::to_string(n) + " is (" +
        std::to_string(c.positive_count) + ", " +
        std::to_string(c.negative_count) + ", " +
        std::to_string(c.nonreal_count) + ", " +
        std::to_string(c.conjugate_pairs) + "), expected (" +
        std::to_string(expected.positive_count) + ", " +
        std::to_string(expected.negative_count) + ", " +
        std::to_string(expected.nonreal_count) + ", " +
        std::to_string(expected.conjugate_pairs) + ")");
  }
  return c;
}

RootSet SmallNOracle(const ProblemInstance& inst) {
  const int n = inst.n();
  if (n > 25) {
    throw DomainError("SmallNOracle: supports n <= 25, got " +
                      std::to_string(n));
  }
  const int degree = n + 1;

  // coeffs[s] multiplies z^s: z^(n+1) - sum_s C(n,s) z^s.
  std::vector<double> coeffs(degree + 1, 0.0);
  std::uint64_t binom = 1;
  for (int s = 0; s <= n; ++s) {
    coeffs[s] = -static_cast<double>(binom);
    binom = binom * static_cast<std::uint64_t>(n - s) /
            static_cast<std::uint64_t>(s + 1);
  }
  coeffs[degree] = 1.0;

  auto horner = [&](ComplexValue z) {
    ComplexValue p = coeffs[degree];
    ComplexValue dp = 0.0;
    for (int s = degree - 1; s >= 0; --s) {
      dp = dp * z + p;
      p = p * z + coeffs[s];
    }
    return std::pair{p, dp};
  };

  // Fujiwara bound on the root moduli.
  double bound = 0.0;
  for (int i = 1; i <= degree; ++i) {
    double a = std::abs(coeffs[degree - i]);
    if (i == degree) a *= 0.5;
    bound = std::max(bound, std::pow(a, 1.0 / i));
  }
  const double radius = std::max(1.0, bound);

  std::vector<ComplexValue> z(degree);
  for (int j = 0; j < degree; ++j) {
    const double angle = kTwoPi * j / degree + 0.4;
    z[j] = std::polar(radius, angle);
  }

  // Aberth-Ehrlich, updating in place.
  for (int sweep = 0; sweep < 2000; ++sweep) {
    double worst = 0.0;
    for (int j = 0; j < degree; ++j) {
      const auto [p, dp] = horner(z[j]);
      if (p == ComplexValue(0.0, 0.0)) continue;
      const ComplexValue ratio = p / dp;
      ComplexValue repulsion = 0.0;
      for (int i = 0; i < degree; ++i) {
        if (i != j) repulsion += 1.0 / (z[j] - z[i]);
      }
      const ComplexValue w = ratio / (1.0 - ratio * repulsion);
      z[j] -= w;
      worst = std::max(worst, std::abs(w) / std::max(1.0, std::abs(z[j])));
    }
    if (worst <= 1e-15) break;
  }

  RootSet rs;
  rs.n = n;
  for (const ComplexValue seed : z) {
    ComplexValue start = seed;
    if (std::abs(start.imag()) <= 1e-14 * std::max(1.0, std::abs(start))) {
      start = {start.real(), 0.0};
    }
    rs.roots.push_back(NewtonRefine(inst, start, 1e-13, 50));
  }
  return rs;
}

VariantFitReport FitComplexVariant(int n_min, int n_max, double tol) {
  if (n_min < 10 || n_max > 300 || n_min >= n_max) {
    throw DomainError("FitComplexVariant: requires 10 <= n_min < n_max <= 300");
  }
  VariantFitReport report;
  for (int n = n_min; n <= n_max; ++n) {
    const ComplexValue nearest =
        NearestToUpperSpecial(SolveAllRoots(ProblemInstance(n), tol));
    VariantFitRow row;
    row.n = n;
    row.nearest_root = nearest;
    row.statement_error = std::abs(
        nearest - ApproxComplexRoot(n, 1, ComplexApproxVariant::kStatement));
    row.derivation_error = std::abs(
        nearest - ApproxComplexRoot(n, 1, ComplexApproxVariant::kDerivation));
    report.mean_statement_error += row.statement_error;
    report.mean_derivation_error += row.derivation_error;
    report.rows.push_back(row);
  }
  const double count = static_cast<double>(report.rows.size());
  report.mean_statement_error /= count;
  report.mean_derivation_error /= count;
  report.winner = report.mean_statement_error < report.mean_derivation_error
                      ? ComplexApproxVariant::kStatement
                      : ComplexApproxVariant::kDerivation;
  return report;
}

double NearestRootDeviation(int n, ComplexApproxVariant variant, double tol) {
  const ComplexValue nearest =
      NearestToUpperSpecial(SolveAllRoots(ProblemInstance(n), tol));
  return std::abs(nearest - ApproxComplexRoot(n, 1, variant));
}

}  // namespace rootscope
