// Copyright 2026 The Authors.
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

#ifndef SUBMAX_CLI_H_
#define SUBMAX_CLI_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "submax/config.h"
#include "submax/instance.h"
#include "submax/knapsack_solver.h"
#include "submax/matroid_solver.h"
#include "submax/verify.h"

namespace submax {

// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitBudget = 3,
  kExitContract = 4,
  kExitVerification = 5,
  kExitDigest = 6,
  kExitIo = 7,
};

struct SolveOptions {
  double epsilon = 0.5;
  double t_s = kDefaultSwitchTime;
  int enum_cap = kDefaultEnumCap;
  int frac_cap = kDefaultFracCap;
  // Brute-force OPT is computed when n <= this.
  int brute_force_limit = kMaxBruteForce;
};

struct SolveOutcome {
  nlohmann::json report;
  std::optional<MatroidRun> matroid;
  std::optional<KnapsackRun> knapsack;
  std::optional<BruteForceResult> opt;
  double ratio = 0.0;
  std::int64_t value_queries = 0;
  std::int64_t independence_queries = 0;
};

// Dispatches on the constraint kind and builds the canonical run report.
SolveOutcome Solve(const Instance& instance, const SolveOptions& options);

// Every checker that applies to the outcome. The exhaustive Split corollary
// scan is included when `split_corollary` is set; it needs OPT.
CheckReport RunChecks(const Instance& instance, const SolveOutcome& outcome,
                      bool split_corollary = true);

struct SuiteRow {
  std::string family;
  int n = 0;
  double epsilon = 0.0;
  double ratio = 0.0;
  std::int64_t queries_value = 0;
  std::int64_t queries_indep = 0;
  int violations = 0;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  int count = 1;
  std::string out_dir;
  double epsilon = 0.5;
  double t_s = kDefaultSwitchTime;
  // Families to run; empty means every function x constraint pair.
  std::vector<std::string> families;
  // 0 reads SUBMAX_THREADS, falling back to the number of cores.
  int threads = 0;
};

// Generates `count` instances per family, solves and checks each, writes one
// report per run plus suite.csv, and returns the rows in family order.
std::vector<SuiteRow> RunSuite(const SuiteOptions& options);
std::string SuiteCsv(const std::vector<SuiteRow>& rows);

// Worker count from SUBMAX_THREADS, else hardware concurrency (at least 1).
int ThreadsFromEnvironment();

// Entry point for the submax tool; returns the process exit code.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace submax

#endif  // SUBMAX_CLI_H_
