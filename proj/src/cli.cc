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

#include "submax/cli.h"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <memory>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "submax/errors.h"
#include "submax/report.h"

namespace submax {
namespace {

using nlohmann::json;

void WriteText(const std::string& path, const std::string& text,
               std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot write " + path);
  file << text;
  if (!file) throw IoError("failed writing " + path);
}

json ReadJson(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

json OptionsToJson(const SolveOptions& options) {
  return {{"epsilon", options.epsilon},
          {"ts", options.t_s},
          {"enum_cap", options.enum_cap},
          {"frac_cap", options.frac_cap},
          {"brute_force_limit", options.brute_force_limit}};
}

SolveOptions OptionsFromJson(const json& doc) {
  SolveOptions options;
  options.epsilon = doc.at("epsilon").get<double>();
  options.t_s = doc.at("ts").get<double>();
  options.enum_cap = doc.at("enum_cap").get<int>();
  options.frac_cap = doc.at("frac_cap").get<int>();
  options.brute_force_limit = doc.at("brute_force_limit").get<int>();
  return options;
}

std::string Shortest(double v) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, result.ptr);
}

json ChecksSummary(const CheckReport& checks) {
  json failures = json::array();
  for (const CheckEntry& e : checks.entries()) {
    if (!e.pass) failures.push_back(e.check);
  }
  return {{"count", checks.entries().size()},
          {"violations", checks.violations()},
          {"failing", failures}};
}

int Guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const FracBudgetError& e) {
    err << "budget error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ContractViolation& e) {
    err << "contract violation: " << e.what() << "\n";
    return kExitContract;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "malformed json: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace

SolveOutcome Solve(const Instance& instance, const SolveOptions& options) {
  SolveOutcome outcome;
  json run;
  const std::int64_t value_start = instance.f->queries();
  if (instance.is_matroid()) {
    const AlgoConfig config =
        MakeMatroidConfig(options.epsilon, options.t_s, options.frac_cap);
    outcome.matroid = SolveMatroid(instance.matroid, instance.f, config);
    outcome.independence_queries = outcome.matroid->total_queries.independence;
    run = MatroidRunToJson(*outcome.matroid);
  } else {
    const AlgoConfig config =
        MakeKnapsackConfig(options.epsilon, options.frac_cap);
    outcome.knapsack =
        SolveKnapsack(instance.f, *instance.knapsack, config, options.enum_cap);
    run = KnapsackRunToJson(*outcome.knapsack);
  }
  outcome.value_queries = instance.f->queries() - value_start;

  const double value =
      outcome.matroid ? outcome.matroid->value : outcome.knapsack->value;
  json report = {{"instance_digest", InstanceDigest(instance)},
                 {"family", instance.family()},
                 {"n", instance.n},
                 {"options", OptionsToJson(options)},
                 {"run", run}};
  if (instance.n <= options.brute_force_limit) {
    outcome.opt = instance.is_matroid()
                      ? BruteForceOpt(*instance.f, *instance.matroid)
                      : BruteForceOpt(*instance.f, *instance.knapsack);
    outcome.ratio =
        outcome.opt->opt_value > 0.0 ? value / outcome.opt->opt_value : 1.0;
    report["opt"] = BruteForceToJson(*outcome.opt);
    report["ratio"] = outcome.ratio;
  }
  outcome.report = std::move(report);
  return outcome;
}

CheckReport RunChecks(const Instance& instance, const SolveOutcome& outcome,
                      bool split_corollary) {
  CheckReport checks;
  if (outcome.matroid) {
    const MatroidRun& run = *outcome.matroid;
    checks.Append(CheckMatroidRun(run, *instance.f, *instance.matroid));
    if (!outcome.opt) return checks;
    const auto augmented = Augment(instance.matroid, run.dummies);
    const auto f_bar = AugmentWithDummies(instance.f, run.dummies);
    checks.Append(CheckStationarity(run.local_search.z, *augmented, *f_bar,
                                    run.config.epsilon * outcome.opt->opt_value,
                                    outcome.opt->opt_set));
    checks.Append(CheckStationarity(
        run.local_search.z, *augmented, *f_bar,
        0.5 * run.rank * run.local_search.threshold, outcome.opt->opt_set,
        kInequalityTolerance, "stationarity_exit"));
    checks.Append(CheckLocalSearch(run.local_search, run.rank,
                                   run.config.epsilon,
                                   outcome.opt->opt_value));
    checks.Append(CheckTrace(run.greedy, f_bar, *augmented,
                             run.local_search.z, outcome.opt->opt_set,
                             run.config));
    if (split_corollary) {
      checks.Append(CheckSplitCorollary(run.greedy, f_bar, *augmented,
                                        run.local_search.z, run.config));
    }
  } else {
    const KnapsackRun& run = *outcome.knapsack;
    checks.Append(CheckKnapsackRun(run, *instance.f, *instance.knapsack));
    if (outcome.opt && split_corollary) {
      checks.Append(
          CheckKnapsackSplitLemma(run, instance.f, *instance.knapsack));
    }
  }
  return checks;
}

int ThreadsFromEnvironment() {
  if (const char* env = std::getenv("SUBMAX_THREADS")) {
    const int value = std::atoi(env);
    if (value >= 1) return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<SuiteRow> RunSuite(const SuiteOptions& options) {
  std::vector<std::string> families = options.families;
  if (families.empty()) {
    for (const std::string& c : ConstraintKinds()) {
      for (const std::string& f : FunctionKinds()) families.push_back(f + "-" + c);
    }
  }
  struct Job {
    std::string family;
    int index;
  };
  std::vector<Job> jobs;
  for (const std::string& family : families) {
    for (int i = 0; i < options.count; ++i) jobs.push_back({family, i});
  }
  if (!options.out_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(options.out_dir, ec);
    if (ec) throw IoError("cannot create " + options.out_dir);
  }

  std::vector<SuiteRow> rows(jobs.size());
  std::vector<std::string> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      const Job& job = jobs[k];
      try {
        const std::uint64_t seed =
            options.seed * 1000003ULL + std::hash<std::string>{}(job.family) % 7919 +
            static_cast<std::uint64_t>(job.index);
        const int n = 6 + job.index % 5;
        const Instance instance = GenerateInstance(job.family, n, seed);
        SolveOptions solve;
        solve.epsilon = options.epsilon;
        solve.t_s = options.t_s;
        solve.enum_cap = job.index % 3;
        const SolveOutcome outcome = Solve(instance, solve);
        const CheckReport checks = RunChecks(instance, outcome);
        SuiteRow& row = rows[k];
        row.family = job.family;
        row.n = n;
        row.epsilon = outcome.matroid ? outcome.matroid->config.epsilon
                                      : outcome.knapsack->config.epsilon;
        row.ratio = outcome.ratio;
        row.queries_value = outcome.value_queries;
        row.queries_indep = outcome.independence_queries;
        row.violations = checks.violations();
        if (!options.out_dir.empty()) {
          json doc = outcome.report;
          doc["checks"] = ChecksSummary(checks);
          doc["instance"] = InstanceToJson(instance);
          const std::string name =
              job.family + "-" + std::to_string(job.index) + ".json";
          std::ofstream file(std::filesystem::path(options.out_dir) / name,
                             std::ios::binary);
          file << CanonicalDump(doc);
        }
      } catch (const std::exception& e) {
        errors[k] = job.family + " #" + std::to_string(job.index) + ": " + e.what();
      }
    }
  };
  const int threads = options.threads > 0 ? options.threads : ThreadsFromEnvironment();
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  for (const std::string& e : errors) {
    if (!e.empty()) throw ContractViolation("suite run failed: " + e);
  }
  if (!options.out_dir.empty()) {
    std::ofstream file(std::filesystem::path(options.out_dir) / "suite.csv",
                       std::ios::binary);
    file << SuiteCsv(rows);
    if (!file) throw IoError("cannot write suite.csv");
  }
  return rows;
}

std::string SuiteCsv(const std::vector<SuiteRow>& rows) {
  std::string out =
      "family,n,epsilon,ratio,queries_value,queries_indep,violations\n";
  for (const SuiteRow& row : rows) {
    out += row.family + "," + std::to_string(row.n) + "," +
           Shortest(row.epsilon) + "," + Shortest(row.ratio) + "," +
           std::to_string(row.queries_value) + "," +
           std::to_string(row.queries_indep) + "," +
           std::to_string(row.violations) + "\n";
  }
  return out;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Deterministic submodular maximization under matroid and "
               "knapsack constraints",
               "submax"};
  app.require_subcommand(1);

  std::string kind, out_path;
  int n = 8;
  std::uint64_t seed = 1;
  auto* gen = app.add_subcommand("gen", "Generate a seeded instance");
  gen->add_option("--kind", kind, "<coverage|cut|table>-<uniform|partition|graphic|knapsack>")
      ->required();
  gen->add_option("--n", n, "Ground set size (1..20)");
  gen->add_option("--seed", seed, "Generator seed");
  gen->add_option("--out", out_path, "Output path, - for stdout");

  std::string instance_path, report_path;
  SolveOptions options;
  bool timing = false;
  auto* solve = app.add_subcommand("solve", "Solve an instance");
  solve->add_option("--instance", instance_path)->required();
  solve->add_option("--epsilon", options.epsilon);
  solve->add_option("--ts", options.t_s);
  solve->add_option("--enum-cap", options.enum_cap);
  solve->add_option("--frac-cap", options.frac_cap);
  solve->add_option("--out", out_path, "Report path, - for stdout");
  solve->add_flag("--timing", timing, "Add wall time to the report");

  auto* verify = app.add_subcommand("verify", "Re-solve and check a report");
  verify->add_option("--instance", instance_path)->required();
  verify->add_option("--report", report_path)->required();
  verify->add_option("--out", out_path, "Checker output path");

  SuiteOptions suite_options;
  auto* suite = app.add_subcommand("suite", "Run the seeded suite");
  suite->add_option("--seed", suite_options.seed);
  suite->add_option("--count", suite_options.count, "Instances per family");
  suite->add_option("--out-dir", suite_options.out_dir)->required();
  suite->add_option("--epsilon", suite_options.epsilon);
  suite->add_option("--family", suite_options.families, "Restrict families");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  if (*gen) {
    return Guarded(err, [&] {
      const Instance instance = GenerateInstance(kind, n, seed);
      WriteText(out_path, CanonicalDump(InstanceToJson(instance)), out);
      return kExitOk;
    });
  }
  if (*solve) {
    return Guarded(err, [&] {
      const Instance instance = LoadInstance(instance_path);
      const auto start = std::chrono::steady_clock::now();
      SolveOutcome outcome = Solve(instance, options);
      if (timing) {
        outcome.report["wall_time_ms"] =
            std::chrono::duration<double, std::milli>(
                std::chrono::steady_clock::now() - start)
                .count();
      }
      WriteText(out_path, CanonicalDump(outcome.report), out);
      return kExitOk;
    });
  }
  if (*verify) {
    return Guarded(err, [&] {
      const Instance instance = LoadInstance(instance_path);
      json stored = ReadJson(report_path);
      if (stored.value("instance_digest", "") != InstanceDigest(instance)) {
        err << "report digest does not match the instance\n";
        return static_cast<int>(kExitDigest);
      }
      stored.erase("wall_time_ms");
      const SolveOutcome outcome =
          Solve(instance, OptionsFromJson(stored.at("options")));
      const bool reproduced =
          CanonicalDump(outcome.report) == CanonicalDump(stored);
      const CheckReport checks = RunChecks(instance, outcome);
      json summary = {{"reproduced", reproduced},
                      {"violations", checks.violations()},
                      {"checks", ChecksToJson(checks)}};
      WriteText(out_path, CanonicalDump(summary), out);
      if (!reproduced) err << "re-solving did not reproduce the report\n";
      if (checks.violations() > 0) {
        err << checks.violations() << " check(s) failed\n";
      }
      return static_cast<int>(reproduced && checks.ok() ? kExitOk
                                                      : kExitVerification);
    });
  }
  return Guarded(err, [&] {
    const std::vector<SuiteRow> rows = RunSuite(suite_options);
    int violations = 0;
    for (const SuiteRow& row : rows) violations += row.violations;
    out << "wrote " << rows.size() << " runs to " << suite_options.out_dir
        << " (" << violations << " violations)\n";
    return violations == 0 ? kExitOk : kExitVerification;
  });
}

}  // namespace submax
