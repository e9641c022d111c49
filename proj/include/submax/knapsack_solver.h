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

#ifndef SUBMAX_KNAPSACK_SOLVER_H_
#define SUBMAX_KNAPSACK_SOLVER_H_

#include <cstdint>
#include <memory>
#include <vector>

#include "submax/config.h"
#include "submax/eme.h"
#include "submax/element_set.h"
#include "submax/matroid_solver.h"
#include "submax/set_function.h"

namespace submax {

struct KnapsackInstance {
  std::vector<double> weights;
  double budget = 0.0;

  int size() const { return static_cast<int>(weights.size()); }
  double Weight(ElementSet s) const;
  bool IsFeasible(ElementSet s) const { return Weight(s) <= budget; }
};

// Throws InvalidArgument unless every weight is positive and the budget is
// non-negative.
void ValidateKnapsack(const KnapsackInstance& instance);

// Greedy split by density g(u | T_j) / w(u) over `candidates`, keeping
// w(T) <= budget. Stops when nothing fits or the best density is not
// positive. Ties go to the smallest j, then the smallest u.
SplitResult KnapsackSplit(const SetFunction& g,
                          const std::vector<double>& weights, double budget,
                          int ell, ElementSet candidates);

struct DmcgIteration {
  int iteration = 0;
  std::vector<ElementSet> parts;
  std::vector<SplitStep> steps;
  EmeVector y{0};
  double value = 0.0;
  int frac = 0;
  // sum_u Mar_u(y) w(u).
  double weighted_mass = 0.0;
  double split_gain = 0.0;
  double g_empty = 0.0;
};

struct DmcgResult {
  EmeVector y{0};
  std::vector<DmcgIteration> trace;
  std::int64_t value_queries = 0;
};

// Deterministic measured continuous greedy for one knapsack, restricted to
// `candidates` (the caller removes heavy elements).
DmcgResult KnapsackDmcg(std::shared_ptr<const SetFunction> g,
                        const std::vector<double>& weights, double budget,
                        ElementSet candidates, const AlgoConfig& config);

struct ExchangeRecord {
  int u = 0;
  int v = 0;
  double t_min = 0.0;
  double t_max = 0.0;
  double t_star = 0.0;
  double value_min = 0.0;
  double value_max = 0.0;
  double value_mid = 0.0;
  double mass_before = 0.0;
  double mass_after = 0.0;
  int frac_after = 0;
};

struct RoundingResult {
  ElementSet set;
  double value = 0.0;
  double start_value = 0.0;
  std::vector<ExchangeRecord> exchanges;
  int start_frac = 0;
  int max_frac = 0;
  // Elements rounded to one, and the fractional element left at the end
  // (-1 when none).
  ElementSet ones;
  int leftover = -1;
};

// Relax-and-exchange rounding. Preconditions: y is supported on candidates,
// sum_u Mar_u(y) w(u) <= budget and w(u) <= max_weight on candidates;
// violations throw ContractViolation. The result weighs at most
// budget + max_weight.
RoundingResult KnapsackRound(const SetFunction& g,
                             const std::vector<double>& weights,
                             const EmeVector& y, ElementSet candidates,
                             double budget, double max_weight,
                             double tolerance = 1e-9);

struct KnapsackBranch {
  ElementSet guess;
  double guess_weight = 0.0;
  // (1 - epsilon)(B - w(E)).
  double residual_budget = 0.0;
  // epsilon * (B - w(E)); heavier elements are dropped.
  double weight_limit = 0.0;
  ElementSet candidates;
  int filtered = 0;
  DmcgResult dmcg;
  RoundingResult rounding;
  ElementSet set;
  double value = 0.0;
  // B - w(E) - w(S) for the rounded S.
  double margin = 0.0;
};

struct KnapsackRun {
  AlgoConfig config;
  int n = 0;
  int enum_cap = 0;
  std::vector<KnapsackBranch> branches;
  int chosen = -1;
  ElementSet set;
  double value = 0.0;
  QueryCounts total_queries;
};

inline constexpr int kDefaultEnumCap = 2;

// Enumerates guesses E with |E| <= enum_cap and w(E) <= B in (size, bitmask)
// order, runs DMCG and rounding on f(. ∪ E) for each, and returns the best
// S ∪ E (value rounded to 1e-12, ties to the smaller E bitmask).
KnapsackRun SolveKnapsack(std::shared_ptr<const SetFunction> f,
                          const KnapsackInstance& instance,
                          const AlgoConfig& config,
                          int enum_cap = kDefaultEnumCap);

}  // namespace submax

#endif  // SUBMAX_KNAPSACK_SOLVER_H_
