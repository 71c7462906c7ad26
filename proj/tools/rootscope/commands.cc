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

#include "commands.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <numbers>
#include <string>
#include <thread>

#include <json.hpp>

#include "rootscope/asymptotics.h"
#include "rootscope/core_eval.h"
#include "rootscope/decompositions.h"
#include "rootscope/regions.h"

namespace rootscope::tools {
namespace {

constexpr int kVerifyMaxN = 300;
constexpr double kConjugacyTolerance = 1e-7;
constexpr double kSimplicityFloor = 1e-6;

std::string FormatPoint(ComplexValue z) {
  return "(" + FormatReal(z.real()) + ", " + FormatReal(z.imag()) + ")";
}

OutputRecord RecordFor(int n, const RootEstimate& root) {
  OutputRecord r;
  r.n = n;
  r.kind = KindOf(root.value);
  r.root_re = root.value.real();
  r.root_im = r.kind == RootKind::kNonReal ? root.value.imag() : 0.0;
  r.residual = root.residual;
  std::optional<double> approx;
  if (r.kind == RootKind::kPositive && n >= 2) approx = ApproxPositiveRoot(n);
  if (r.kind == RootKind::kNegative) approx = ApproxNegativeRoot(n);
  if (approx) {
    r.approx_re = *approx;
    r.approx_im = 0.0;
    r.abs_deviation = std::abs(r.root_re - *approx);
  }
  return r;
}

// One failed theorem check.
struct Violation {
  std::string check;
  int n = 0;
  std::optional<ComplexValue> root;
  std::string detail;
};

struct InstanceResult {
  int n = 0;
  std::optional<int> incomplete_found;
  std::optional<double> positive_root;
  std::optional<double> negative_root;
  std::vector<ComplexValue> boundary_roots;
  std::vector<Violation> violations;
};

// Checks in reporting order.
const std::vector<std::string>& CheckNames() {
  static const std::vector<std::string> names = {
      "counting",          "classification",     "positive_monotone",
      "negative_interval", "R1_exclusion",       "R2_exclusion",
      "R3_exclusion",      "R4_nonreal_exclusion", "R5_accumulation",
      "simplicity",        "special_roots",      "unit_circle_special",
      "re_half_special",   "conjugacy"};
  return names;
}

std::string RegionCheckName(RegionId id) {
  switch (id) {
    case RegionId::kR1:
      return "R1_exclusion";
    case RegionId::kR2:
      return "R2_exclusion";
    case RegionId::kR3:
      return "R3_exclusion";
    case RegionId::kR4:
      return "R4_nonreal_exclusion";
    case RegionId::kR5:
      return "R5_accumulation";
  }
  return "regions";
}

bool IsSpecialPoint(ComplexValue z, double margin) {
  return std::abs(z - UpperSpecialRoot()) <= margin ||
         std::abs(z - LowerSpecialRoot()) <= margin;
}

InstanceResult CheckInstance(int n, double tol) {
  InstanceResult result;
  result.n = n;
  const ProblemInstance inst(n);
  RootSet rs;
  try {
    rs = SolveAllRoots(inst, tol);
  } catch (const IncompleteRootSetError& e) {
    result.incomplete_found = e.found();
    result.violations.push_back({"counting", n, std::nullopt, e.what()});
    return result;
  }

  try {
    ClassifyRoots(rs);
  } catch (const ClassificationMismatchError& e) {
    result.violations.push_back({"classification", n, std::nullopt, e.what()});
  }

  for (const RootEstimate& r : rs.roots) {
    const RootKind kind = KindOf(r.value);
    if (kind == RootKind::kPositive) result.positive_root = r.value.real();
    if (kind == RootKind::kNegative) result.negative_root = r.value.real();
  }

  const RegionReport report = VerifyExclusions(rs, kDefaultRegionMargin);
  for (const RegionViolation& v : report.violations) {
    result.violations.push_back(
        {RegionCheckName(v.region), n, v.root, "root inside excluded region"});
  }
  result.boundary_roots = report.boundary_roots;
  if (report.boundary_roots.empty() == IsSpecialN(n)) {
    result.violations.push_back(
        {"special_roots", n, std::nullopt,
         IsSpecialN(n) ? "e^{2 pi i/3} missing for n = 4 mod 6"
                       : "e^{2 pi i/3} is a root although n != 4 mod 6"});
  }

  for (const RootEstimate& r : rs.roots) {
    const ComplexValue z = r.value;
    const double rel = RelativeDerivative(inst, z);
    if (!(rel > kSimplicityFloor)) {
      result.violations.push_back(
          {"simplicity", n, z, "relative |f'| = " + FormatReal(rel)});
    }
    if (std::abs(std::abs(z) - 1.0) <= kDefaultRegionMargin &&
        !IsSpecialPoint(z, kDefaultRegionMargin)) {
      result.violations.push_back(
          {"unit_circle_special", n, z, "|z| = 1 at a non-special root"});
    }
    if (KindOf(z) == RootKind::kNonReal &&
        std::abs(z.real() + 0.5) <= kDefaultRegionMargin &&
        !IsSpecialPoint(z, kDefaultRegionMargin)) {
      result.violations.push_back(
          {"re_half_special", n, z, "Re z = -1/2 at a non-special root"});
    }
    const double w_res = std::abs(WResidual(inst, ToW(z)));
    if (!(w_res <= kConjugacyTolerance)) {
      result.violations.push_back(
          {"conjugacy", n, z, "|w^(n+1) - w^n - 1| = " + FormatReal(w_res)});
    }
  }
  return result;
}

void AddSequenceChecks(std::vector<InstanceResult>& results) {
  constexpr double kInvPhi = std::numbers::phi - 1.0;
  std::optional<double> prev_positive;
  std::optional<double> prev_negative;
  for (InstanceResult& r : results) {
    if (r.positive_root) {
      if (prev_positive && !(*r.positive_root > *prev_positive)) {
        r.violations.push_back({"positive_monotone", r.n,
                                ComplexValue(*r.positive_root, 0.0),
                                "positive roots not strictly increasing"});
      }
      prev_positive = r.positive_root;
    }
    if (r.negative_root) {
      const double x = *r.negative_root;
      const bool in_interval = x >= -kInvPhi - 1e-12 && x < -0.5;
      const bool increasing = !prev_negative || x > *prev_negative;
      if (!in_interval || !increasing) {
        r.violations.push_back({"negative_interval", r.n, ComplexValue(x, 0.0),
                                "negative root outside [-1/phi, -1/2) or not "
                                "increasing"});
      }
      prev_negative = r.negative_root;
    }
  }
}

void WriteFitCsv(const VariantFitReport& report, std::ostream& out) {
  out << "n,nearest_re,nearest_im,statement_error,derivation_error\n";
  for (const VariantFitRow& row : report.rows) {
    out << row.n << ',' << FormatReal(row.nearest_root.real()) << ','
        << FormatReal(row.nearest_root.imag()) << ','
        << FormatReal(row.statement_error) << ','
        << FormatReal(row.derivation_error) << '\n';
  }
  out << "# mean_abs_error STATEMENT=" << FormatReal(report.mean_statement_error)
      << " DERIVATION=" << FormatReal(report.mean_derivation_error) << '\n';
  out << "# winner " << VariantId(report.winner) << '\n';
}

void WriteFitJson(const VariantFitReport& report, std::ostream& out) {
  nlohmann::json rows = nlohmann::json::array();
  for (const VariantFitRow& row : report.rows) {
    rows.push_back({{"n", row.n},
                    {"nearest_re", RoundToPrinted(row.nearest_root.real())},
                    {"nearest_im", RoundToPrinted(row.nearest_root.imag())},
                    {"statement_error", RoundToPrinted(row.statement_error)},
                    {"derivation_error", RoundToPrinted(row.derivation_error)}});
  }
  nlohmann::json doc = {
      {"rows", rows},
      {"mean_statement_error", RoundToPrinted(report.mean_statement_error)},
      {"mean_derivation_error", RoundToPrinted(report.mean_derivation_error)},
      {"winner", VariantId(report.winner)}};
  out << doc.dump(2) << '\n';
}

}  // namespace

int WorkerThreads() {
  if (const char* env = std::getenv("ROOTSCOPE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

std::vector<OutputRecord> SolveRecords(int n, double tol) {
  const RootSet rs = SolveAllRoots(ProblemInstance(n), tol);
  std::vector<OutputRecord> records;
  records.reserve(rs.roots.size());
  for (const RootEstimate& root : rs.roots) {
    records.push_back(RecordFor(n, root));
  }
  SortRecords(records);
  return records;
}

int RunSolve(const SolveOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.n < 1 || !(opts.tol > 0.0)) {
    err << "usage: rootscope solve --n <n >= 1> [--tol <tol > 0>] "
           "[--format csv|json]\n";
    return kExitUsage;
  }
  std::vector<OutputRecord> records;
  try {
    records = SolveRecords(opts.n, opts.tol);
  } catch (const IncompleteRootSetError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIncomplete;
  }
  WriteRecords(records, opts.format, out);
  return kExitOk;
}

int RunTable(const TableOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.ns.empty()) {
    err << "usage: rootscope table --which positive|negative --ns n1,n2,...\n";
    return kExitUsage;
  }
  const bool positive = opts.which == TableKind::kPositive;
  const double tol = opts.tol.value_or(positive ? 1e-10 : 1e-6);
  if (!(tol > 0.0)) {
    err << "error: --tol must be positive\n";
    return kExitUsage;
  }
  for (const int n : opts.ns) {
    if (positive && n < 2) {
      err << "error: the positive table needs n >= 2 (got " << n << ")\n";
      return kExitUsage;
    }
    if (!positive && (n < 1 || n % 2 == 0)) {
      err << "error: n=" << n
          << " rejected: Negative roots exist for odd n only\n";
      return kExitUsage;
    }
  }

  std::vector<OutputRecord> records;
  for (const int n : opts.ns) {
    const ProblemInstance inst(n);
    const RootEstimate root =
        positive ? SolvePositiveRoot(inst, tol) : SolveNegativeRoot(inst, tol);
    records.push_back(RecordFor(n, root));
  }
  WriteRecords(records, opts.format, out);
  return kExitOk;
}

int RunVerify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.n_max < 1 || opts.n_max > kVerifyMaxN || !(opts.tol > 0.0)) {
    err << "usage: rootscope verify --n-max <1..300> [--tol <tol > 0>]\n";
    return kExitUsage;
  }

  std::vector<InstanceResult> results(opts.n_max);
  const int threads =
      std::clamp(opts.threads > 0 ? opts.threads : WorkerThreads(), 1,
                 opts.n_max);
  std::atomic<int> next{1};
  auto worker = [&] {
    for (int n = next++; n <= opts.n_max; n = next++) {
      results[n - 1] = CheckInstance(n, opts.tol);
    }
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  AddSequenceChecks(results);

  std::map<std::string, int> failed_instances;
  const Violation* first = nullptr;
  bool incomplete = false;
  int total = 0;
  for (const InstanceResult& r : results) {
    incomplete = incomplete || r.incomplete_found.has_value();
    std::map<std::string, bool> seen;
    for (const Violation& v : r.violations) {
      ++total;
      if (!first) first = &v;
      if (!seen[v.check]) ++failed_instances[v.check];
      seen[v.check] = true;
    }
  }

  out << std::left << std::setw(24) << "check" << std::setw(10) << "passed"
      << "failed\n";
  for (const std::string& name : CheckNames()) {
    const int failed = failed_instances[name];
    out << std::setw(24) << name << std::setw(10) << (opts.n_max - failed)
        << failed << '\n';
  }
  for (const InstanceResult& r : results) {
    for (const ComplexValue z : r.boundary_roots) {
      out << "boundary root n=" << r.n << ' ' << FormatPoint(z) << '\n';
    }
  }
  out << total << " violations\n";

  if (first) {
    err << "first counterexample: check=" << first->check << " n=" << first->n;
    if (first->root) err << " root=" << FormatPoint(*first->root);
    err << " (" << first->detail << ")\n";
  }
  if (incomplete) return kExitIncomplete;
  return total == 0 ? kExitOk : kExitViolation;
}

int RunFit(const FitOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.n_min < 10 || opts.n_max > 300 || opts.n_min >= opts.n_max) {
    err << "usage: rootscope fit --n-min <n> --n-max <n> with "
           "10 <= n-min < n-max <= 300\n";
    return kExitUsage;
  }
  VariantFitReport report;
  try {
    report = FitComplexVariant(opts.n_min, opts.n_max);
  } catch (const IncompleteRootSetError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIncomplete;
  }
  if (opts.format == OutputFormat::kJson) {
    WriteFitJson(report, out);
  } else {
    WriteFitCsv(report, out);
  }
  return kExitOk;
}

}  // namespace rootscope::tools
