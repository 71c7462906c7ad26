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

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "commands.h"

namespace {

using rootscope::tools::OutputFormat;
using rootscope::tools::TableKind;

const std::map<std::string, OutputFormat> kFormats = {
    {"csv", OutputFormat::kCsv}, {"json", OutputFormat::kJson}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Roots of z^(n+1) = (1+z)^n: solve, tabulate, verify, fit"};
  app.require_subcommand(1);

  rootscope::tools::SolveOptions solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "All n+1 roots of one n");
  solve_cmd->add_option("--n", solve.n, "Degree parameter n >= 1")->required();
  solve_cmd->add_option("--tol", solve.tol, "Scaled residual tolerance");
  solve_cmd->add_option("--format", solve.format, "csv or json")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  rootscope::tools::TableOptions table;
  const std::map<std::string, TableKind> kinds = {
      {"positive", TableKind::kPositive}, {"negative", TableKind::kNegative}};
  CLI::App* table_cmd =
      app.add_subcommand("table", "Real roots against their approximants");
  table_cmd->add_option("--which", table.which, "positive or negative")
      ->required()
      ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case));
  table_cmd->add_option("--ns", table.ns, "Comma-separated n values")
      ->required()
      ->delimiter(',');
  table_cmd->add_option("--tol", table.tol, "Scaled residual tolerance");
  table_cmd->add_option("--format", table.format, "csv or json")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  rootscope::tools::VerifyOptions verify;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Check every root-location property for n = 1..n-max");
  verify_cmd->add_option("--n-max", verify.n_max, "Largest n (<= 300)")
      ->required();
  verify_cmd->add_option("--tol", verify.tol, "Scaled residual tolerance");

  rootscope::tools::FitOptions fit;
  CLI::App* fit_cmd = app.add_subcommand(
      "fit", "Compare the two non-real root approximants over a range of n");
  fit_cmd->add_option("--n-min", fit.n_min)->required();
  fit_cmd->add_option("--n-max", fit.n_max)->required();
  fit_cmd->add_option("--format", fit.format, "csv or json")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return rootscope::tools::kExitUsage;
  }

  if (*solve_cmd) return rootscope::tools::RunSolve(solve, std::cout, std::cerr);
  if (*table_cmd) return rootscope::tools::RunTable(table, std::cout, std::cerr);
  if (*verify_cmd) {
    return rootscope::tools::RunVerify(verify, std::cout, std::cerr);
  }
  return rootscope::tools::RunFit(fit, std::cout, std::cerr);
}
