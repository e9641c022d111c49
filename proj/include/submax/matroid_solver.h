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

#ifndef SUBMAX_MATROID_SOLVER_H_
#define SUBMAX_MATROID_SOLVER_H_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "submax/config.h"
#include "submax/eme.h"
#include "submax/element_set.h"
#include "submax/matroid.h"
#include "submax/set_function.h"

namespace submax {

struct LocalSearchResult {
  // A basis of the matroid passed in (dummies included).
  ElementSet z;
  // The initializer's set before completion to a basis.
  ElementSet initial;
  double initial_value = 0.0;
  double value = 0.0;
  int swaps = 0;
  // Swaps are taken while their gain is at least this.
  double threshold = 0.0;
  // "greedy" or "singleton".
  std::string initializer;
};

// Swap local search from the better of a greedy set and the best singleton.
// The swap threshold is (epsilon / r) * f(S0), floored at 1e-9 so the loop
// makes strict progress when f(S0) = 0.
LocalSearchResult LocalSearch(const Matroid& m, const SetFunction& f,
                              double epsilon);

struct SplitStep {
  int element = 0;
  int part = 0;
  double gain = 0.0;
  double density = 0.0;
};

struct SplitResult {
  std::vector<ElementSet> parts;
  // g(T_j) per part and g(∅), as seen by the selection loop.
  std::vector<double> part_values;
  double empty_value = 0.0;
  std::vector<SplitStep> steps;

  ElementSet Union() const;
  // Sum over parts of g(T_j) - g(∅).
  double TotalGain() const;
};

// Greedy split into `ell` parts: repeatedly adds the (u, j) maximizing
// g(u | T_j) over u with T + u independent, until T is a basis. Ties go to
// the smallest j, then the smallest u.
SplitResult Split(const Matroid& m, const SetFunction& g, int ell);

struct IterationRecord {
  int iteration = 0;
  bool uses_z = false;
  std::vector<ElementSet> parts;
  // y^i and statistics of it.
  EmeVector y{0};
  double value = 0.0;
  int frac = 0;
  double mar_inf = 0.0;
  double mar_inf_z = 0.0;
  // Split's view of the step: sum_j g(T_j | ∅) and g(∅), with g built from
  // y^(i-1) and the shifted objective.
  double split_gain = 0.0;
  double g_empty = 0.0;
};

struct ContinuousGreedyResult {
  EmeVector y{0};
  std::vector<IterationRecord> trace;
  // Queries made by the algorithm itself; the trace statistics above are
  // computed outside this count.
  std::int64_t value_queries = 0;
  std::int64_t independence_queries = 0;
};

// Aided continuous greedy on the EME. `m` and `f` live on the augmented
// ground set; z is the reference basis. Steps i <= config.ts_steps run Split
// on the objective with z shifted out.
ContinuousGreedyResult ContinuousGreedy(const Matroid& m,
                                        std::shared_ptr<const SetFunction> f,
                                        ElementSet z, const AlgoConfig& config);

struct PipageResult {
  // Real elements only.
  ElementSet set;
  double value = 0.0;
  // F(y) of the input.
  double start_value = 0.0;
  int moves = 0;
};

// Rounds y to an independent set with f(S) >= F(y). If m is augmented the
// dummies are projected out first (f ignores them), then every real element
// is relaxed to a singleton coordinate and pipage runs over the base
// matroid's polytope with tight sets read off a rank table. Throws
// ContractViolation when Mar(y) is outside P(m).
PipageResult PipageRound(const Matroid& m, const SetFunction& f,
                         const EmeVector& y, double tolerance = 1e-9);

struct QueryCounts {
  std::int64_t value = 0;
  std::int64_t independence = 0;
};

struct MatroidRun {
  AlgoConfig config;
  int n = 0;
  int rank = 0;
  int dummies = 0;
  LocalSearchResult local_search;
  // Z with dummies removed, and f of it.
  ElementSet z_real;
  double z_value = 0.0;
  ContinuousGreedyResult greedy;
  double fractional_value = 0.0;
  PipageResult pipage;
  ElementSet set;
  double value = 0.0;
  // "pipage" or "local_search".
  std::string chosen;
  QueryCounts local_search_queries;
  QueryCounts greedy_queries;
  QueryCounts pipage_queries;
  QueryCounts total_queries;
};

// Local search, aided continuous greedy and pipage rounding; returns the
// better of the rounded set and Z (ties favor the rounded set).
MatroidRun SolveMatroid(std::shared_ptr<const Matroid> m,
                        std::shared_ptr<const SetFunction> f,
                        const AlgoConfig& config);

}  // namespace submax

#endif  // SUBMAX_MATROID_SOLVER_H_
