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

#ifndef SUBMAX_VERIFY_H_
#define SUBMAX_VERIFY_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "submax/config.h"
#include "submax/eme.h"
#include "submax/element_set.h"
#include "submax/knapsack_solver.h"
#include "submax/matroid.h"
#include "submax/matroid_solver.h"
#include "submax/set_function.h"

namespace submax {

inline constexpr int kMaxBruteForce = 20;
// Tolerance for the proved inequalities, looser than arithmetic tolerance.
inline constexpr double kInequalityTolerance = 1e-7;

struct BruteForceResult {
  double opt_value = 0.0;
  ElementSet opt_set;
  std::int64_t feasible_count = 0;
};

// Exhaustive argmax of f over feasible subsets of `ground`, ascending bitmask
// order, ties to the smallest bitmask. Refuses more than 20 elements.
BruteForceResult BruteForceOpt(const SetFunction& f, ElementSet ground,
                               const std::function<bool(ElementSet)>& feasible);
BruteForceResult BruteForceOpt(const SetFunction& f, const Matroid& m);
BruteForceResult BruteForceOpt(const SetFunction& f,
                               const KnapsackInstance& instance);
BruteForceResult BruteForceOpt(const SetFunction& f,
                               const KnapsackInstance& instance,
                               ElementSet ground, double budget);

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  int samples = 0;
};

// Sample mean of f(R(y)). Coordinate k of sample s is kept when a counter-
// based hash of (seed, s, k) falls below y_S, so estimates do not depend on
// evaluation order.
MonteCarloEstimate EstimateF(const SetFunction& f, const EmeVector& y,
                             int samples, std::uint64_t seed);

// Uniform double in [0, 1) from a SplitMix64 hash of (seed, stream, index).
double CounterUniform(std::uint64_t seed, std::uint64_t stream,
                      std::uint64_t index);

// Lovász extension by sorting x in decreasing order (ties by id).
double Lovasz(const SetFunction& f, const std::vector<double>& x);

// max over A of x(A) - rank(A), and the box violation; <= 0 iff x in P(m).
double PolytopeExcess(const Matroid& m, const std::vector<double>& x);

struct CheckEntry {
  std::string check;
  int iteration = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  // Positive when the inequality holds with room to spare.
  double slack = 0.0;
  bool pass = true;
};

class CheckReport {
 public:
  // lhs >= rhs - tolerance.
  void AtLeast(const std::string& check, int iteration, double lhs, double rhs,
               double tolerance = kInequalityTolerance);
  // lhs <= rhs + tolerance.
  void AtMost(const std::string& check, int iteration, double lhs, double rhs,
              double tolerance = kInequalityTolerance);
  void Append(const CheckReport& other);

  const std::vector<CheckEntry>& entries() const { return entries_; }
  int violations() const;
  int Count(const std::string& check) const;
  int Violations(const std::string& check) const;
  bool ok() const { return violations() == 0; }

 private:
  std::vector<CheckEntry> entries_;
};

// Local-search stationarity f(Z) >= (f(Z∩T) + f(Z∪T)) / 2 - additive over
// every T independent in m. Emits the tightest T, T = opt, T = opt ∩ Z, and
// every failing T, under check names prefixed by `label`.
CheckReport CheckStationarity(ElementSet z, const Matroid& m,
                              const SetFunction& f, double additive,
                              ElementSet opt,
                              double tolerance = kInequalityTolerance,
                              const std::string& label = "stationarity");

// Swap count of a local search against ceil(4r / (eps * c0)), where
// c0 = f(S0) / f(OPT) is the ratio the initializer achieved. Skipped when
// f(S0) or f(OPT) is not positive.
CheckReport CheckLocalSearch(const LocalSearchResult& result, int rank,
                             double epsilon, double opt_value);

// Per-iteration checks on a continuous-greedy trace run on (m, f) with
// reference basis z: the gain inequality against OPT minus Z_i, the Split
// corollary at OPT minus Z_i, frac <= ell * i, both Mar growth bounds, the
// exponential comparison, Mar of the final point in P(m), and the final
// value bound e^{t_s - 1}[(2 - t_s - e^{-t_s} - 4 eps) f(OPT)
// - (1 - e^{-t_s}) f(Z ∩ OPT) - (2 - t_s - 2 e^{-t_s}) f(Z ∪ OPT)].
CheckReport CheckTrace(const ContinuousGreedyResult& trace,
                       std::shared_ptr<const SetFunction> f, const Matroid& m,
                       ElementSet z, ElementSet opt, const AlgoConfig& config,
                       double tolerance = kInequalityTolerance);

// Split structure (disjoint parts whose union is a basis) and the corollary
// sum_j g(T_j | ∅) >= (1 - 2 eps) g(O) - (1 - eps) g(∅) for every O
// independent in m, at every iteration. Exhaustive over O.
CheckReport CheckSplitCorollary(const ContinuousGreedyResult& trace,
                                std::shared_ptr<const SetFunction> f,
                                const Matroid& m, ElementSet z,
                                const AlgoConfig& config,
                                double tolerance = kInequalityTolerance);

// Rounding contract, final feasibility and objective consistency of a
// matroid run.
CheckReport CheckMatroidRun(const MatroidRun& run, const SetFunction& f,
                            const Matroid& m,
                            double tolerance = kInequalityTolerance);

// Budget, exchange, convexity, frac, density and feasibility checks over
// every branch of a knapsack run.
CheckReport CheckKnapsackRun(const KnapsackRun& run, const SetFunction& f,
                             const KnapsackInstance& instance,
                             double tolerance = kInequalityTolerance);

// The KnapsackSplit bound at every DMCG iteration of every branch, with Q
// the brute-force optimum of f(. ∪ E) over the branch's candidates and
// residual budget. Iterations where some candidate has g(u | ∅) > eps^2 g(Q)
// fall outside the lemma and are checked as "knapsack_split_unpaired"
// against avg_j g(Q | T_j) - max_{q in Q} g(q | ∅) instead.
CheckReport CheckKnapsackSplitLemma(const KnapsackRun& run,
                                    std::shared_ptr<const SetFunction> f,
                                    const KnapsackInstance& instance,
                                    double tolerance = kInequalityTolerance);

}  // namespace submax

#endif  // SUBMAX_VERIFY_H_
