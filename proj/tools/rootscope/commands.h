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

#ifndef ROOTSCOPE_TOOLS_COMMANDS_H_
#define ROOTSCOPE_TOOLS_COMMANDS_H_

#include <optional>
#include <ostream>
#include <vector>

#include "output.h"

namespace rootscope::tools {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIncomplete = 2;
inline constexpr int kExitViolation = 3;

enum class TableKind { kPositive, kNegative };

struct SolveOptions {
  int n = 0;
  double tol = kDefaultTolerance;
  OutputFormat format = OutputFormat::kCsv;
};

struct TableOptions {
  TableKind which = TableKind::kPositive;
  std::vector<int> ns;
  // Defaults to 1e-10 for the positive table and 1e-6 for the negative one.
  std::optional<double> tol;
  OutputFormat format = OutputFormat::kCsv;
};

struct VerifyOptions {
  int n_max = 0;
  double tol = kDefaultTolerance;
  // Worker threads; 0 means ROOTSCOPE_THREADS or the hardware count.
  int threads = 0;
};

struct FitOptions {
  int n_min = 0;
  int n_max = 0;
  OutputFormat format = OutputFormat::kCsv;
};

int RunSolve(const SolveOptions& opts, std::ostream& out, std::ostream& err);
int RunTable(const TableOptions& opts, std::ostream& out, std::ostream& err);
int RunVerify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
int RunFit(const FitOptions& opts, std::ostream& out, std::ostream& err);

// Records for every root of one instance, sorted for output.
std::vector<OutputRecord> SolveRecords(int n, double tol);

// ROOTSCOPE_THREADS if set to a positive integer, else the hardware count.
int WorkerThreads();

}  // namespace rootscope::tools

#endif  // ROOTSCOPE_TOOLS_COMMANDS_H_
