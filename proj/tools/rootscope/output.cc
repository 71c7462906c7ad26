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

#include "output.h"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

namespace rootscope::tools {
namespace {

int KindRank(RootKind kind) {
  switch (kind) {
    case RootKind::kPositive:
      return 0;
    case RootKind::kNegative:
      return 1;
    case RootKind::kNonReal:
      return 2;
  }
  return 3;
}

std::string OptionalField(const std::optional<double>& v) {
  return v ? FormatReal(*v) : std::string();
}

nlohmann::json OptionalJson(const std::optional<double>& v) {
  return v ? nlohmann::json(RoundToPrinted(*v)) : nlohmann::json(nullptr);
}

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double ParseReal(const std::string& s) {
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument("bad number: " + s);
  return v;
}

std::optional<double> ParseOptional(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return ParseReal(s);
}

}  // namespace

std::string_view KindName(RootKind kind) {
  switch (kind) {
    case RootKind::kPositive:
      return "positive";
    case RootKind::kNegative:
      return "negative";
    case RootKind::kNonReal:
      return "nonreal";
  }
  return "unknown";
}

std::optional<RootKind> ParseKind(std::string_view name) {
  if (name == "positive") return RootKind::kPositive;
  if (name == "negative") return RootKind::kNegative;
  if (name == "nonreal") return RootKind::kNonReal;
  return std::nullopt;
}

std::string FormatReal(double value) {
  if (value == 0.0) value = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", value);
  return buf;
}

double RoundToPrinted(double value) { return std::stod(FormatReal(value)); }

void SortRecords(std::vector<OutputRecord>& records) {
  std::stable_sort(records.begin(), records.end(),
                   [](const OutputRecord& a, const OutputRecord& b) {
                     return std::tuple(KindRank(a.kind), a.root_im, a.root_re) <
                            std::tuple(KindRank(b.kind), b.root_im, b.root_re);
                   });
}

void WriteRecords(const std::vector<OutputRecord>& records,
                  OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::kCsv) {
    out << kCsvHeader << '\n';
    for (const OutputRecord& r : records) {
      out << r.n << ',' << KindName(r.kind) << ',' << FormatReal(r.root_re)
          << ',' << FormatReal(r.root_im) << ',' << FormatReal(r.residual)
          << ',' << OptionalField(r.approx_re) << ','
          << OptionalField(r.approx_im) << ','
          << OptionalField(r.abs_deviation) << '\n';
    }
    return;
  }
  nlohmann::json array = nlohmann::json::array();
  for (const OutputRecord& r : records) {
    nlohmann::json obj;
    obj["n"] = r.n;
    obj["kind"] = KindName(r.kind);
    obj["root_re"] = RoundToPrinted(r.root_re);
    obj["root_im"] = RoundToPrinted(r.root_im);
    obj["residual"] = RoundToPrinted(r.residual);
    obj["approx_value_re"] = OptionalJson(r.approx_re);
    obj["approx_value_im"] = OptionalJson(r.approx_im);
    obj["abs_deviation"] = OptionalJson(r.abs_deviation);
    array.push_back(std::move(obj));
  }
  out << array.dump(2) << '\n';
}

std::vector<OutputRecord> ParseCsvRecords(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw std::invalid_argument("missing or unexpected CSV header");
  }
  std::vector<OutputRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = SplitCsvLine(line);
    if (f.size() != 8) {
      throw std::invalid_argument("expected 8 CSV fields in: " + line);
    }
    const std::optional<RootKind> kind = ParseKind(f[1]);
    if (!kind) throw std::invalid_argument("unknown kind: " + f[1]);
    OutputRecord r;
    r.n = std::stoi(f[0]);
    r.kind = *kind;
    r.root_re = ParseReal(f[2]);
    r.root_im = ParseReal(f[3]);
    r.residual = ParseReal(f[4]);
    r.approx_re = ParseOptional(f[5]);
    r.approx_im = ParseOptional(f[6]);
    r.abs_deviation = ParseOptional(f[7]);
    records.push_back(r);
  }
  return records;
}

}  // namespace rootscope::tools
