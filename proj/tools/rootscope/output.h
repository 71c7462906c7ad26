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

// Machine-readable records emitted by the rootscope tool. CSV columns are
// fixed as
//
//   n,kind,root_re,root_im,residual,approx_re,approx_im,abs_deviation
//
// with every real printed to 10 significant digits and absent values left
// empty (CSV) or null (JSON).

#ifndef ROOTSCOPE_TOOLS_OUTPUT_H_
#define ROOTSCOPE_TOOLS_OUTPUT_H_

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "rootscope/solvers.h"

namespace rootscope::tools {

enum class OutputFormat { kCsv, kJson };

struct OutputRecord {
  int n = 0;
  RootKind kind = RootKind::kPositive;
  double root_re = 0.0;
  double root_im = 0.0;
  double residual = 0.0;
  std::optional<double> approx_re;
  std::optional<double> approx_im;
  std::optional<double> abs_deviation;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

inline constexpr std::string_view kCsvHeader =
    "n,kind,root_re,root_im,residual,approx_re,approx_im,abs_deviation";

std::string_view KindName(RootKind kind);
std::optional<RootKind> ParseKind(std::string_view name);

// "%.10g", with negative zero printed as 0.
std::string FormatReal(double value);

// Value as it reads back from FormatReal.
double RoundToPrinted(double value);

// Positive first, then negative, then non-real by increasing Im, then Re.
void SortRecords(std::vector<OutputRecord>& records);

void WriteRecords(const std::vector<OutputRecord>& records,
                  OutputFormat format, std::ostream& out);

// Inverse of the CSV writer. Throws std::invalid_argument on malformed input.
std::vector<OutputRecord> ParseCsvRecords(std::string_view text);

}  // namespace rootscope::tools

#endif  // ROOTSCOPE_TOOLS_OUTPUT_H_
