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
#include <vector>

#include "submax/matroid.h"
#include "submax/matroid_solver.h"
#include "submax/set_function.h"

namespace submax {
namespace {

constexpr double kMinSwapThreshold = 1e-9;

ElementSet GreedyInitializer(const Matroid& m, const SetFunction& f) {
  ElementSet s;
  double value = f.Value(s);
  const ElementSet real = m.ground().real();
  while (true) {
    int best = -1;
    double best_value = value;
    for (int u : real - s) {
      if (!m.IsIndependent(s.With(u))) continue;
      const double candidate = f.Value(s.With(u));
      if (candidate > best_value) {
        best = u;
        best_value = candidate;
      }
    }
    if (best < 0) return s;
    s.insert(best);
    value = best_value;
  }
}

}  // namespace

LocalSearchResult LocalSearch(const Matroid& m, const SetFunction& f,
                              double epsilon) {
  LocalSearchResult result;
  const ElementSet greedy = GreedyInitializer(m, f);
  const double greedy_value = f.Value(greedy);
  ElementSet start = greedy;
  double start_value = greedy_value;
  result.initializer = "greedy";
  for (int u : m.ground().real()) {
    if (!m.IsIndependent(ElementSet{u})) continue;
    const double value = f.Value(ElementSet{u});
    if (value > start_value) {
      start = ElementSet{u};
      start_value = value;
      result.initializer = "singleton";
    }
  }
  result.initial = start;
  result.initial_value = start_value;

  const int r = m.rank();
  ElementSet s = CompleteToBasis(m, start, &f);
  result.threshold =
      r == 0 ? kMinSwapThreshold
             : std::max(epsilon / r * start_value, kMinSwapThreshold);
  const ElementSet ground = m.ground().all();
  while (r > 0) {
    const double value = f.Value(s);
    std::vector<double> drop(ground.size());
    for (int u : s) drop[u] = value - f.Value(s.Without(u));
    std::vector<double> gain(ground.size());
    for (int v : ground - s) gain[v] = f.Value(s.With(v)) - value;
    int best_u = -1, best_v = -1;
    double best = 0.0;
    for (int u : s) {
      const ElementSet rest = s.Without(u);
      for (int v : ground - s) {
        if (!m.IsIndependent(rest.With(v))) continue;
        const double swap_gain = gain[v] - drop[u];
        if (best_u < 0 || swap_gain > best) {
          best_u = u;
          best_v = v;
          best = swap_gain;
        }
      }
    }
    if (best_u < 0 || best < result.threshold) break;
    s = s.Without(best_u).With(best_v);
    ++result.swaps;
  }
  result.z = s;
  result.value = f.Value(s);
  return result;
}

}  // namespace submax
