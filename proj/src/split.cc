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

#include <map>
#include <vector>

#include "submax/matroid.h"
#include "submax/matroid_solver.h"
#include "submax/set_function.h"

namespace submax {

ElementSet SplitResult::Union() const {
  ElementSet all;
  for (ElementSet part : parts) all |= part;
  return all;
}

double SplitResult::TotalGain() const {
  double total = 0.0;
  for (double value : part_values) total += value - empty_value;
  return total;
}

SplitResult Split(const Matroid& m, const SetFunction& g, int ell) {
  SplitResult result;
  result.parts.assign(ell, ElementSet());
  // g(T_j + u) for parts that did not change is reused from earlier rounds,
  // and coinciding parts (several empty ones) share evaluations.
  std::map<ElementSet, double> memo;
  auto value = [&](ElementSet s) {
    auto [it, inserted] = memo.try_emplace(s, 0.0);
    if (inserted) it->second = g.Value(s);
    return it->second;
  };
  result.empty_value = value(ElementSet());
  result.part_values.assign(ell, result.empty_value);

  const ElementSet ground = m.ground().all();
  ElementSet t;
  while (t.size() < m.rank()) {
    std::vector<int> candidates;
    for (int u : ground - t) {
      if (m.IsIndependent(t.With(u))) candidates.push_back(u);
    }
    if (candidates.empty()) break;
    int best_u = -1, best_j = -1;
    double best_gain = 0.0, best_value = 0.0;
    for (int j = 0; j < ell; ++j) {
      for (int u : candidates) {
        const double v = value(result.parts[j].With(u));
        const double gain = v - result.part_values[j];
        if (best_u < 0 || gain > best_gain) {
          best_u = u;
          best_j = j;
          best_gain = gain;
          best_value = v;
        }
      }
    }
    result.parts[best_j].insert(best_u);
    result.part_values[best_j] = best_value;
    result.steps.push_back({best_u, best_j, best_gain, best_gain});
    t.insert(best_u);
  }
  return result;
}

}  // namespace submax
