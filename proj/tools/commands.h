// Copyright 2026 The IRLS Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The `irls` command-line harness: `solve` runs one instance, `bench` runs
// the ε and m benchmark grids, and `gen` writes instance files.

#ifndef IRLS_TOOLS_COMMANDS_H_
#define IRLS_TOOLS_COMMANDS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "irls/trace.h"

namespace irls::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitSolver = 3;

struct RunRecord {
  std::string solver;   // linf | l1
  std::string mode;     // decide | optimize
  std::string step;     // short | long
  long n = 0;
  long m = 0;
  double eps = 0.0;
  std::optional<double> target;
  long iterations = 0;
  double wall_ms = 0.0;
  std::string outcome;  // feasible | infeasible | optimal
  std::optional<double> objective;
  std::optional<double> certificate;
  std::optional<std::uint64_t> seed;
};

const std::string& CsvHeader();
std::string FormatRecord(const RunRecord& record);

void WriteTraceCsv(std::ostream& out, const IterationTrace& trace);

// Runs the harness on `args` (without the program name) and returns the
// process exit code. Diagnostics go to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace irls::cli

#endif  // IRLS_TOOLS_COMMANDS_H_
