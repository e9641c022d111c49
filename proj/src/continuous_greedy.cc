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

#include <algorithm>
#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "submax/eme.h"
#include "submax/matroid.h"
#include "submax/matroid_solver.h"
#include "submax/set_function.h"

namespace submax {

ContinuousGreedyResult ContinuousGreedy(const Matroid& m,
                                        std::shared_ptr<const SetFunction> f,
                                        ElementSet z, const AlgoConfig& config) {
  const int n = m.size();
  const std::int64_t value_start = f->queries();
  const std::int64_t indep_start = m.queries();
  std::int64_t instrumentation = 0;

  ContinuousGreedyResult result;
  EmeVector y(n, config.frac_cap);
  std::shared_ptr<const SetFunction> shifted;
  if (config.ts_steps > 0 && !z.empty()) shifted = ShiftOut(f, z);

  for (int i = 1; i <= config.iterations; ++i) {
    const bool uses_z = i <= config.ts_steps && shifted != nullptr;
    auto realizations = std::make_shared<const Realizations>(Realize(y));
    const PointExtension g(uses_z ? shifted : f, realizations);
    SplitResult split = Split(m, g, config.ell);

    std::vector<std::pair<ElementSet, double>> step;
    for (ElementSet part : split.parts) {
      if (!part.empty()) step.emplace_back(part, config.delta);
    }
    y = ProbSum(y, EmeVector::FromCoordinates(n, ElementSet(), step,
                                              config.frac_cap));

    const std::int64_t before = f->queries();
    IterationRecord record;
    record.iteration = i;
    record.uses_z = uses_z;
    record.parts = split.parts;
    record.y = y;
    record.value = EvaluateF(*f, y);
    record.frac = y.frac();
    const MarginalVector mar = Marginals(y);
    record.mar_inf = InfNorm(mar);
    for (int u : z) record.mar_inf_z = std::max(record.mar_inf_z, mar[u]);
    record.split_gain = split.TotalGain();
    record.g_empty = split.empty_value;
    instrumentation += f->queries() - before;
    result.trace.push_back(std::move(record));
  }
  result.y = y;
  result.value_queries = f->queries() - value_start - instrumentation;
  result.independence_queries = m.queries() - indep_start;
  return result;
}

}  // namespace submax
