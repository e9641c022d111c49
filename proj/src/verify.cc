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

#include "submax/verify.h"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "submax/errors.h"

namespace submax {
namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

EmeVector PreviousPoint(const ContinuousGreedyResult& trace, std::size_t k,
                        int n, int frac_cap) {
  return k == 0 ? EmeVector(n, frac_cap) : trace.trace[k - 1].y;
}

}  // namespace

BruteForceResult BruteForceOpt(
    const SetFunction& f, ElementSet ground,
    const std::function<bool(ElementSet)>& feasible) {
  if (ground.size() > kMaxBruteForce) {
    throw InvalidArgument("brute force limited to 20 elements");
  }
  BruteForceResult result;
  bool found = false;
  ForEachSubset(ground, [&](ElementSet s) {
    if (!feasible(s)) return;
    ++result.feasible_count;
    const double value = f.Value(s);
    if (!found || value > result.opt_value) {
      result.opt_value = value;
      result.opt_set = s;
      found = true;
    }
  });
  return result;
}

BruteForceResult BruteForceOpt(const SetFunction& f, const Matroid& m) {
  const int r = m.rank();
  return BruteForceOpt(f, m.ground().all(), [&](ElementSet s) {
    return s.size() <= r && m.IsIndependent(s);
  });
}

BruteForceResult BruteForceOpt(const SetFunction& f,
                               const KnapsackInstance& instance) {
  return BruteForceOpt(f, instance, ElementSet::Prefix(instance.size()),
                       instance.budget);
}

BruteForceResult BruteForceOpt(const SetFunction& f,
                               const KnapsackInstance& instance,
                               ElementSet ground, double budget) {
  return BruteForceOpt(f, ground, [&](ElementSet s) {
    return instance.Weight(s) <= budget;
  });
}

double CounterUniform(std::uint64_t seed, std::uint64_t stream,
                      std::uint64_t index) {
  const std::uint64_t h =
      SplitMix64(seed ^ SplitMix64(stream ^ SplitMix64(index)));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

MonteCarloEstimate EstimateF(const SetFunction& f, const EmeVector& y,
                             int samples, std::uint64_t seed) {
  if (samples < 1) throw InvalidArgument("need at least one sample");
  std::vector<std::pair<ElementSet, double>> coords(y.coords().begin(),
                                                    y.coords().end());
  double mean = 0.0, m2 = 0.0;
  for (int s = 0; s < samples; ++s) {
    ElementSet r = y.sure();
    for (std::size_t k = 0; k < coords.size(); ++k) {
      if (CounterUniform(seed, s, k) < coords[k].second) r |= coords[k].first;
    }
    const double value = f.Value(r);
    const double d = value - mean;
    mean += d / (s + 1);
    m2 += d * (value - mean);
  }
  MonteCarloEstimate out;
  out.mean = mean;
  out.samples = samples;
  out.std_error = samples > 1 ? std::sqrt(m2 / (samples - 1) / samples) : 0.0;
  return out;
}

double Lovasz(const SetFunction& f, const std::vector<double>& x) {
  const int n = static_cast<int>(x.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return x[a] > x[b]; });
  // f̂(x) = (1 - x_1) f(∅) + sum_k (x_k - x_{k+1}) f({1..k}), x sorted down.
  double total = 0.0;
  ElementSet prefix;
  double previous = 1.0;
  for (int k = 0; k <= n; ++k) {
    const double next = k < n ? x[order[k]] : 0.0;
    total += (previous - next) * f.Value(prefix);
    if (k < n) prefix.insert(order[k]);
    previous = next;
  }
  return total;
}

double PolytopeExcess(const Matroid& m, const std::vector<double>& x) {
  double excess = -std::numeric_limits<double>::infinity();
  for (double v : x) excess = std::max({excess, -v, v - 1.0});
  const std::vector<int> rank = RankTable(m);
  for (std::size_t a = 1; a < rank.size(); ++a) {
    double total = 0.0;
    for (int u : ElementSet(a)) total += x[u];
    excess = std::max(excess, total - rank[a]);
  }
  return excess;
}

void CheckReport::AtLeast(const std::string& check, int iteration, double lhs,
                          double rhs, double tolerance) {
  entries_.push_back(
      {check, iteration, lhs, rhs, lhs - rhs, lhs >= rhs - tolerance});
}

void CheckReport::AtMost(const std::string& check, int iteration, double lhs,
                         double rhs, double tolerance) {
  entries_.push_back(
      {check, iteration, lhs, rhs, rhs - lhs, lhs <= rhs + tolerance});
}

void CheckReport::Append(const CheckReport& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

int CheckReport::violations() const {
  return static_cast<int>(std::count_if(
      entries_.begin(), entries_.end(), [](const auto& e) { return !e.pass; }));
}

int CheckReport::Count(const std::string& check) const {
  return static_cast<int>(
      std::count_if(entries_.begin(), entries_.end(),
                    [&](const auto& e) { return e.check == check; }));
}

int CheckReport::Violations(const std::string& check) const {
  return static_cast<int>(
      std::count_if(entries_.begin(), entries_.end(), [&](const auto& e) {
        return e.check == check && !e.pass;
      }));
}

CheckReport CheckStationarity(ElementSet z, const Matroid& m,
                              const SetFunction& f, double additive,
                              ElementSet opt, double tolerance,
                              const std::string& label) {
  if (m.size() > kMaxBruteForce) {
    throw InvalidArgument("stationarity scan limited to 20 elements");
  }
  CheckReport report;
  const double fz = f.Value(z);
  auto rhs = [&](ElementSet t) {
    return 0.5 * (f.Value(z & t) + f.Value(z | t)) - additive;
  };
  const int r = m.rank();
  bool have_worst = false;
  double worst_rhs = 0.0;
  ForEachSubset(m.ground().all(), [&](ElementSet t) {
    if (t.size() > r || !m.IsIndependent(t)) return;
    const double bound = rhs(t);
    if (fz < bound - tolerance) report.AtLeast(label, 0, fz, bound, tolerance);
    if (!have_worst || bound > worst_rhs) {
      worst_rhs = bound;
      have_worst = true;
    }
  });
  if (have_worst) {
    report.AtLeast(label + "_tightest", 0, fz, worst_rhs, tolerance);
  }
  report.AtLeast(label + "_opt", 0, fz, rhs(opt), tolerance);
  report.AtLeast(label + "_opt_and_z", 0, fz, rhs(opt & z), tolerance);
  return report;
}

CheckReport CheckLocalSearch(const LocalSearchResult& result, int rank,
                             double epsilon, double opt_value) {
  CheckReport report;
  if (result.initial_value <= 0.0 || opt_value <= 0.0) return report;
  const double c0 = result.initial_value / opt_value;
  report.AtMost("local_search_swaps", 0, result.swaps,
                std::ceil(4.0 * rank / (epsilon * c0)), 0.0);
  return report;
}

CheckReport CheckTrace(const ContinuousGreedyResult& trace,
                       std::shared_ptr<const SetFunction> f, const Matroid& m,
                       ElementSet z, ElementSet opt, const AlgoConfig& config,
                       double tolerance) {
  CheckReport report;
  const int n = m.size();
  const double eps = config.epsilon;
  const double delta = config.delta;
  std::shared_ptr<const SetFunction> shifted =
      z.empty() ? f : std::shared_ptr<const SetFunction>(ShiftOut(f, z));
  const double f_empty = f->Value(ElementSet());
  for (std::size_t k = 0; k < trace.trace.size(); ++k) {
    const IterationRecord& rec = trace.trace[k];
    const int i = rec.iteration;
    const EmeVector previous = PreviousPoint(trace, k, n, config.frac_cap);
    const double f_prev = k == 0 ? f_empty : trace.trace[k - 1].value;
    const ElementSet zi = rec.uses_z ? z : ElementSet();
    const ElementSet opt_i = opt - zi;

    const double joined = EvaluateF(*f, Join(previous, opt_i));
    report.AtLeast("gain", i, (rec.value - f_prev) / delta,
                   (1.0 - 3.0 * eps) * (joined - f_prev), tolerance);

    const PointExtension g(rec.uses_z ? shifted : f, previous);
    report.AtLeast("split_corollary_opt", i, rec.split_gain,
                   (1.0 - 2.0 * eps) * g.Value(opt_i) -
                       (1.0 - eps) * g.Value(ElementSet()),
                   tolerance);

    report.AtMost("frac_bound", i, rec.frac, config.ell * i, 0.0);
    const double growth = 1.0 - std::pow(1.0 - delta, i);
    report.AtMost("mar_growth", i, rec.mar_inf, growth, tolerance);
    const int outside = std::max(0, i - config.ts_steps);
    report.AtMost("mar_growth_z", i, rec.mar_inf_z,
                  1.0 - std::pow(1.0 - delta, outside), tolerance);
    report.AtMost("exp_bound", i, growth,
                  1.0 - std::exp(-i * delta) + i * delta * delta, tolerance);
  }
  const int last = static_cast<int>(trace.trace.size());
  report.AtMost("polytope", last, PolytopeExcess(m, Marginals(trace.y)), 0.0,
                1e-9);
  const double ts = config.t_s;
  const double final_bound =
      std::exp(ts - 1.0) *
      ((2.0 - ts - std::exp(-ts) - 4.0 * eps) * f->Value(opt) -
       (1.0 - std::exp(-ts)) * f->Value(z & opt) -
       (2.0 - ts - 2.0 * std::exp(-ts)) * f->Value(z | opt));
  report.AtLeast("final_value_bound", last, EvaluateF(*f, trace.y),
                 final_bound, tolerance);
  return report;
}

CheckReport CheckSplitCorollary(const ContinuousGreedyResult& trace,
                                std::shared_ptr<const SetFunction> f,
                                const Matroid& m, ElementSet z,
                                const AlgoConfig& config, double tolerance) {
  CheckReport report;
  const int n = m.size();
  const double eps = config.epsilon;
  std::shared_ptr<const SetFunction> shifted =
      z.empty() ? f : std::shared_ptr<const SetFunction>(ShiftOut(f, z));
  const int r = m.rank();
  std::vector<ElementSet> independent;
  ForEachSubset(m.ground().all(), [&](ElementSet s) {
    if (s.size() <= r && m.IsIndependent(s)) independent.push_back(s);
  });
  for (std::size_t k = 0; k < trace.trace.size(); ++k) {
    const IterationRecord& rec = trace.trace[k];
    const int i = rec.iteration;
    ElementSet all;
    bool disjoint = true;
    for (ElementSet part : rec.parts) {
      if (all.Intersects(part)) disjoint = false;
      all |= part;
    }
    report.AtLeast("split_disjoint", i, disjoint ? 1.0 : 0.0, 1.0, 0.0);
    const bool basis = m.IsIndependent(all) && all.size() == r;
    report.AtLeast("split_basis", i, basis ? 1.0 : 0.0, 1.0, 0.0);
    if (rec.uses_z) {
      report.AtMost("split_avoids_z", i, (all & z).size(), 0.0, 0.0);
    }

    const PointExtension g(rec.uses_z ? shifted : f,
                           PreviousPoint(trace, k, n, config.frac_cap));
    double best = -std::numeric_limits<double>::infinity();
    double worst = std::numeric_limits<double>::infinity();
    for (ElementSet o : independent) {
      const double value = g.Value(o);
      best = std::max(best, value);
      worst = std::min(worst, value);
    }
    const double scale = 1.0 - 2.0 * eps;
    report.AtLeast("split_corollary", i, rec.split_gain,
                   std::max(scale * best, scale * worst) -
                       (1.0 - eps) * g.Value(ElementSet()),
                   tolerance);
  }
  return report;
}

CheckReport CheckMatroidRun(const MatroidRun& run, const SetFunction& f,
                            const Matroid& m, double tolerance) {
  CheckReport report;
  report.AtLeast("pipage_contract", 0, run.pipage.value,
                 run.pipage.start_value, 1e-9);
  report.AtLeast("pipage_independent", 0,
                 m.IsIndependent(run.pipage.set) ? 1.0 : 0.0, 1.0, 0.0);
  report.AtLeast("final_independent", 0, m.IsIndependent(run.set) ? 1.0 : 0.0,
                 1.0, 0.0);
  report.AtLeast("final_value", 0, f.Value(run.set), run.value, tolerance);
  report.AtMost("final_value_consistent", 0, f.Value(run.set), run.value,
                tolerance);
  report.AtLeast("final_best_of_two", 0, run.value,
                 std::max(run.pipage.value, run.z_value), tolerance);
  return report;
}

CheckReport CheckKnapsackRun(const KnapsackRun& run, const SetFunction& f,
                             const KnapsackInstance& instance,
                             double tolerance) {
  CheckReport report;
  const double eps = run.config.epsilon;
  for (const KnapsackBranch& branch : run.branches) {
    const int b = static_cast<int>(branch.guess.bits());
    for (const DmcgIteration& rec : branch.dmcg.trace) {
      report.AtMost("mass_budget", rec.iteration, rec.weighted_mass,
                    branch.residual_budget, 1e-9);
      report.AtMost("knapsack_frac_bound", rec.iteration, rec.frac,
                    run.config.ell * rec.iteration, 0.0);
      double used = 0.0;
      std::vector<double> last(run.config.ell,
                               std::numeric_limits<double>::infinity());
      for (const SplitStep& step : rec.steps) {
        report.AtMost("split_density_monotone", rec.iteration, step.density,
                      last[step.part], tolerance);
        last[step.part] = step.density;
        used += instance.weights[step.element];
      }
      report.AtMost("split_budget", rec.iteration, used,
                    branch.residual_budget, 1e-9);
    }
    const RoundingResult& rounding = branch.rounding;
    for (const ExchangeRecord& ex : rounding.exchanges) {
      report.AtMost("exchange_mass", b,
                    std::abs(ex.mass_after - ex.mass_before), 0.0, 1e-9);
      report.AtMost("convexity_midpoint", b, ex.value_mid,
                    std::max(ex.value_min, ex.value_max), 1e-9);
    }
    report.AtMost("rounding_frac", b, rounding.max_frac,
                  rounding.start_frac + 2, 0.0);
    report.AtLeast("rounding_value", b, rounding.value, rounding.start_value,
                   1e-9);
    report.AtMost("rounding_overshoot", b, instance.Weight(rounding.set),
                  branch.residual_budget + branch.weight_limit, 1e-9);
    report.AtLeast("margin_ledger", b, branch.margin, 0.0, 1e-9);
    report.AtMost("budget_ledger", b,
                  branch.residual_budget + branch.weight_limit +
                      branch.guess_weight,
                  instance.budget, 1e-9);
    report.AtMost("scaling_ledger", b, (1.0 + eps) * branch.residual_budget,
                  instance.budget - branch.guess_weight, 1e-9);
    report.AtMost("branch_feasible", b, instance.Weight(branch.set),
                  instance.budget, 0.0);
  }
  report.AtMost("final_feasible", 0, instance.Weight(run.set), instance.budget,
                0.0);
  report.AtLeast("final_value", 0, f.Value(run.set), run.value, tolerance);
  return report;
}

CheckReport CheckKnapsackSplitLemma(const KnapsackRun& run,
                                    std::shared_ptr<const SetFunction> f,
                                    const KnapsackInstance& instance,
                                    double tolerance) {
  CheckReport report;
  const double eps = run.config.epsilon;
  const int ell = run.config.ell;
  for (const KnapsackBranch& branch : run.branches) {
    auto h = RestrictTranslate(f, branch.guess);
    const BruteForceResult q = BruteForceOpt(*h, instance, branch.candidates,
                                             branch.residual_budget);
    for (std::size_t k = 0; k < branch.dmcg.trace.size(); ++k) {
      const DmcgIteration& rec = branch.dmcg.trace[k];
      const EmeVector previous =
          k == 0 ? EmeVector(run.n, run.config.frac_cap)
                 : branch.dmcg.trace[k - 1].y;
      const PointExtension g(h, previous);
      double average = 0.0;
      for (ElementSet part : rec.parts) {
        average += g.Value(q.opt_set | part) - g.Value(part);
      }
      average /= ell;
      const double g_empty = g.Value(ElementSet());
      const double g_q = g.Value(q.opt_set);
      bool small_marginals = true;
      double unpaired = 0.0;
      for (int u : branch.candidates) {
        const double m = g.Value(ElementSet{u}) - g_empty;
        if (m > eps * eps * g_q) small_marginals = false;
        if (q.opt_set.contains(u)) unpaired = std::max(unpaired, m);
      }
      if (small_marginals) {
        report.AtLeast("knapsack_split_lemma", rec.iteration, rec.split_gain,
                       std::max(average - eps * eps * g_q, 0.0), tolerance);
      } else {
        // The lemma's hypothesis fails; check the bound its pairing argument
        // gives, charging the one unpaired element of Q in full.
        report.AtLeast("knapsack_split_unpaired", rec.iteration,
                       rec.split_gain, std::max(average - unpaired, 0.0),
                       tolerance);
      }
    }
  }
  return report;
}

}  // namespace submax
