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

#include "submax/knapsack_solver.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "submax/eme.h"
#include "submax/errors.h"
#include "submax/set_function.h"

namespace submax {
namespace {

constexpr double kSnap = 1e-12;

bool IsFractional(double p) { return p > 0.0 && p < 1.0; }

double WeightedMass(const EmeVector& y, const std::vector<double>& weights) {
  const MarginalVector mar = Marginals(y);
  double total = 0.0;
  for (std::size_t u = 0; u < weights.size(); ++u) total += mar[u] * weights[u];
  return total;
}

double Snap(double p) {
  if (p < kSnap) return 0.0;
  if (p > 1.0 - kSnap) return 1.0;
  return p;
}

}  // namespace

double KnapsackInstance::Weight(ElementSet s) const {
  double total = 0.0;
  for (int u : s) total += weights[u];
  return total;
}

void ValidateKnapsack(const KnapsackInstance& instance) {
  if (instance.size() > kMaxGroundSize) {
    throw InvalidArgument("knapsack ground set larger than 64");
  }
  for (double w : instance.weights) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw InvalidArgument("knapsack weights must be positive");
    }
  }
  if (!(instance.budget >= 0.0) || !std::isfinite(instance.budget)) {
    throw InvalidArgument("knapsack budget must be non-negative");
  }
}

SplitResult KnapsackSplit(const SetFunction& g,
                          const std::vector<double>& weights, double budget,
                          int ell, ElementSet candidates) {
  SplitResult result;
  result.parts.assign(ell, ElementSet());
  std::map<ElementSet, double> memo;
  auto value = [&](ElementSet s) {
    auto [it, inserted] = memo.try_emplace(s, 0.0);
    if (inserted) it->second = g.Value(s);
    return it->second;
  };
  result.empty_value = value(ElementSet());
  result.part_values.assign(ell, result.empty_value);

  ElementSet t;
  double used = 0.0;
  while (true) {
    int best_u = -1, best_j = -1;
    double best_density = 0.0, best_gain = 0.0, best_value = 0.0;
    for (int j = 0; j < ell; ++j) {
      for (int u : candidates - t) {
        if (used + weights[u] > budget) continue;
        const double v = value(result.parts[j].With(u));
        const double gain = v - result.part_values[j];
        const double density = gain / weights[u];
        if (best_u < 0 || density > best_density) {
          best_u = u;
          best_j = j;
          best_density = density;
          best_gain = gain;
          best_value = v;
        }
      }
    }
    if (best_u < 0 || best_density <= 0.0) break;
    result.parts[best_j].insert(best_u);
    result.part_values[best_j] = best_value;
    result.steps.push_back({best_u, best_j, best_gain, best_density});
    t.insert(best_u);
    used += weights[best_u];
  }
  return result;
}

DmcgResult KnapsackDmcg(std::shared_ptr<const SetFunction> g,
                        const std::vector<double>& weights, double budget,
                        ElementSet candidates, const AlgoConfig& config) {
  const int n = g->size();
  const std::int64_t start = g->queries();
  std::int64_t instrumentation = 0;
  DmcgResult result;
  EmeVector y(n, config.frac_cap);
  for (int i = 1; i <= config.iterations; ++i) {
    auto realizations = std::make_shared<const Realizations>(Realize(y));
    const PointExtension extension(g, realizations);
    SplitResult split =
        KnapsackSplit(extension, weights, budget, config.ell, candidates);
    std::vector<std::pair<ElementSet, double>> step;
    for (ElementSet part : split.parts) {
      if (!part.empty()) step.emplace_back(part, config.delta);
    }
    y = ProbSum(y, EmeVector::FromCoordinates(n, ElementSet(), step,
                                              config.frac_cap));

    const std::int64_t before = g->queries();
    DmcgIteration record;
    record.iteration = i;
    record.parts = split.parts;
    record.steps = split.steps;
    record.y = y;
    record.value = EvaluateF(*g, y);
    record.frac = y.frac();
    record.weighted_mass = WeightedMass(y, weights);
    record.split_gain = split.TotalGain();
    record.g_empty = split.empty_value;
    instrumentation += g->queries() - before;
    result.trace.push_back(std::move(record));
  }
  result.y = y;
  result.value_queries = g->queries() - start - instrumentation;
  return result;
}

RoundingResult KnapsackRound(const SetFunction& g,
                             const std::vector<double>& weights,
                             const EmeVector& y, ElementSet candidates,
                             double budget, double max_weight,
                             double tolerance) {
  const MarginalVector mar = Marginals(y);
  for (int u = 0; u < y.size(); ++u) {
    if (!candidates.contains(u) && mar[u] > 0.0) {
      throw ContractViolation("rounding input has mass on a non-candidate");
    }
  }
  for (int u : candidates) {
    if (weights[u] > max_weight + tolerance) {
      throw ContractViolation("element " + std::to_string(u) +
                              " is heavier than the rounding weight limit");
    }
  }
  if (WeightedMass(y, weights) > budget + tolerance) {
    throw ContractViolation("weighted marginal mass exceeds the budget");
  }

  RoundingResult result;
  result.start_value = EvaluateF(g, y);
  result.start_frac = y.frac();
  result.max_frac = y.frac();
  // Relaxing and exchanging can add two fractional coordinates.
  EmeVector x = y.WithFracCap(y.frac_cap() + 2);
  ElementSet relaxed;
  ElementSet pending = candidates;
  ElementSet fractional;

  while (true) {
    while (fractional.size() < 2 && !pending.empty()) {
      const int u = pending.front();
      pending.erase(u);
      x = Relax(x, u);
      relaxed.insert(u);
      if (IsFractional(x.coordinate(ElementSet{u}))) fractional.insert(u);
      result.max_frac = std::max(result.max_frac, x.frac());
    }
    if (fractional.size() < 2) break;

    const int u = fractional.front();
    const int v = fractional.Without(u).front();
    const double yu = x.coordinate(ElementSet{u});
    const double yv = x.coordinate(ElementSet{v});
    const double wu = weights[u], wv = weights[v];
    // Moves along e_u / w(u) - e_v / w(v) keep sum_u y_u w(u) fixed.
    auto at = [&](double t) {
      return x.WithCoordinate(ElementSet{u}, Snap(yu + t / wu))
          .WithCoordinate(ElementSet{v}, Snap(yv - t / wv));
    };
    ExchangeRecord record;
    record.u = u;
    record.v = v;
    record.t_max = std::min((1.0 - yu) * wu, yv * wv);
    record.t_min = std::max(-yu * wu, (yv - 1.0) * wv);
    // Pin the binding coordinate exactly so that the move always lands on
    // a face.
    auto endpoint = [&](double t, bool upper) {
      EmeVector z = at(t);
      const bool u_binds =
          upper ? (1.0 - yu) * wu <= yv * wv : -yu * wu >= (yv - 1.0) * wv;
      if (u_binds) return z.WithCoordinate(ElementSet{u}, upper ? 1.0 : 0.0);
      return z.WithCoordinate(ElementSet{v}, upper ? 0.0 : 1.0);
    };
    const EmeVector high = endpoint(record.t_max, true);
    const EmeVector low = endpoint(record.t_min, false);
    record.value_max = EvaluateF(g, high);
    record.value_min = EvaluateF(g, low);
    record.value_mid = EvaluateF(g, at(0.5 * (record.t_min + record.t_max)));
    record.mass_before = WeightedMass(x, weights);
    const bool take_max = record.value_max >= record.value_min;
    record.t_star = take_max ? record.t_max : record.t_min;
    x = take_max ? high : low;
    record.mass_after = WeightedMass(x, weights);
    record.frac_after = x.frac();
    result.max_frac = std::max(result.max_frac, x.frac());
    result.exchanges.push_back(record);

    fractional = ElementSet();
    for (int w : relaxed) {
      if (IsFractional(x.coordinate(ElementSet{w}))) fractional.insert(w);
    }
  }

  for (int u : relaxed) {
    if (x.coordinate(ElementSet{u}) == 1.0) result.ones.insert(u);
  }
  result.leftover = fractional.front();
  result.set = result.ones;
  result.value = g.Value(result.ones);
  if (result.leftover >= 0) {
    const ElementSet with = result.ones.With(result.leftover);
    const double value = g.Value(with);
    if (value > result.value) {
      result.set = with;
      result.value = value;
    }
  }
  return result;
}

KnapsackRun SolveKnapsack(std::shared_ptr<const SetFunction> f,
                          const KnapsackInstance& instance,
                          const AlgoConfig& config, int enum_cap) {
  ValidateKnapsack(instance);
  if (f->size() != instance.size()) {
    throw InvalidArgument("objective and weights have different sizes");
  }
  if (enum_cap < 0) throw InvalidArgument("enum cap must be >= 0");
  const int n = instance.size();
  const std::int64_t start = f->queries();
  KnapsackRun run;
  run.config = config;
  run.n = n;
  run.enum_cap = enum_cap;

  std::vector<ElementSet> guesses;
  ForEachSubset(ElementSet::Prefix(n), [&](ElementSet e) {
    if (e.size() <= enum_cap && instance.Weight(e) <= instance.budget) {
      guesses.push_back(e);
    }
  });
  std::stable_sort(guesses.begin(), guesses.end(),
                   [](ElementSet a, ElementSet b) { return a.size() < b.size(); });

  const double eps = config.epsilon;
  for (ElementSet e : guesses) {
    KnapsackBranch branch;
    branch.guess = e;
    branch.guess_weight = instance.Weight(e);
    const double remaining = instance.budget - branch.guess_weight;
    branch.residual_budget = (1.0 - eps) * remaining;
    branch.weight_limit = eps * remaining;
    for (int u : ElementSet::Prefix(n) - e) {
      if (instance.weights[u] <= branch.weight_limit) {
        branch.candidates.insert(u);
      } else {
        ++branch.filtered;
      }
    }
    auto g = RestrictTranslate(f, e);
    branch.dmcg = KnapsackDmcg(g, instance.weights, branch.residual_budget,
                               branch.candidates, config);
    branch.rounding =
        KnapsackRound(*g, instance.weights, branch.dmcg.y, branch.candidates,
                      branch.residual_budget, branch.weight_limit,
                      config.tolerance);
    branch.set = branch.rounding.set | e;
    branch.value = f->Value(branch.set);
    branch.margin = remaining - instance.Weight(branch.rounding.set);
    run.branches.push_back(std::move(branch));
  }

  auto key = [](double v) { return std::round(v * 1e12); };
  for (int b = 0; b < static_cast<int>(run.branches.size()); ++b) {
    const KnapsackBranch& branch = run.branches[b];
    if (!instance.IsFeasible(branch.set)) {
      throw ContractViolation("knapsack branch " + branch.guess.ToString() +
                              " returned an infeasible set");
    }
    if (run.chosen < 0) {
      run.chosen = b;
      continue;
    }
    const KnapsackBranch& best = run.branches[run.chosen];
    const double kb = key(branch.value), kc = key(best.value);
    if (kb > kc || (kb == kc && branch.guess < best.guess)) run.chosen = b;
  }
  if (run.chosen >= 0) {
    run.set = run.branches[run.chosen].set;
    run.value = run.branches[run.chosen].value;
  } else {
    run.value = f->Value(ElementSet());
  }
  run.total_queries = QueryCounts{f->queries() - start, 0};
  return run;
}

}  // namespace submax
