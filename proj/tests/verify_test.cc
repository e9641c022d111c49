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

#include <cmath>
#include <memory>
#include <vector>

#include "gtest/gtest.h"
#include "submax/config.h"
#include "submax/errors.h"
#include "submax/knapsack_solver.h"
#include "submax/matroid.h"
#include "submax/matroid_solver.h"
#include "submax/set_function.h"
#include "test_util.h"

namespace submax {
namespace {

using testing::RandomCoverage;
using testing::RandomCut;
using testing::RandomEme;
using testing::RandomMixed;

// Keeps tables nonnegative.
constexpr double kOffset = 4.0;

std::shared_ptr<TableFunction> Modular(const std::vector<double>& value) {
  const int n = static_cast<int>(value.size());
  std::vector<double> table(std::size_t{1} << n);
  for (std::uint64_t s = 0; s < table.size(); ++s) {
    table[s] = kOffset;
    for (int u : ElementSet(s)) table[s] += value[u];
  }
  return MakeTable(table, true);
}

TEST(BruteForceTest, UnconstrainedModular) {
  auto f = Modular({2.0, -1.0, 3.0, -0.5});
  const BruteForceResult r = BruteForceOpt(
      *f, ElementSet::Prefix(4), [](ElementSet) { return true; });
  EXPECT_EQ(r.opt_set, (ElementSet{0, 2}));
  EXPECT_EQ(r.opt_value, kOffset + 5.0);
  EXPECT_EQ(r.feasible_count, 16);
}

TEST(BruteForceTest, UniformRankOne) {
  auto f = Modular({2.0, 5.0, 5.0, 1.0});
  const BruteForceResult r = BruteForceOpt(*f, *MakeUniform(4, 1));
  // Ties go to the smaller bitmask.
  EXPECT_EQ(r.opt_set, (ElementSet{1}));
  EXPECT_EQ(r.feasible_count, 5);
}

TEST(BruteForceTest, FourCycleCut) {
  auto f = MakeCut(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {3, 0, 1.0}});
  const BruteForceResult r = BruteForceOpt(
      *f, ElementSet::Prefix(4), [](ElementSet) { return true; });
  EXPECT_EQ(r.opt_value, 4.0);
  EXPECT_EQ(r.opt_set, (ElementSet{0, 2}));
}

TEST(BruteForceTest, Knapsack) {
  auto f = Modular({3.0, 4.0, 5.0});
  const BruteForceResult r = BruteForceOpt(*f, KnapsackInstance{{1, 2, 3}, 3});
  EXPECT_EQ(r.opt_value, kOffset + 7.0);
  EXPECT_EQ(r.opt_set, (ElementSet{0, 1}));
}

TEST(BruteForceTest, RefusesLargeGround) {
  auto f = MakeCoverage({1.0}, std::vector<std::vector<int>>(21, {0}));
  EXPECT_THROW(BruteForceOpt(*f, ElementSet::Prefix(21),
                             [](ElementSet) { return true; }),
               InvalidArgument);
}

TEST(MonteCarloTest, IntegralPointHasNoVariance) {
  auto f = RandomCoverage(5, 2);
  const EmeVector y = EmeVector::Indicator(5, ElementSet{1, 3});
  const MonteCarloEstimate est = EstimateF(*f, y, 1000, 9);
  EXPECT_EQ(est.mean, f->Value(ElementSet{1, 3}));
  EXPECT_EQ(est.std_error, 0.0);
}

TEST(MonteCarloTest, WithinFourStandardErrors) {
  for (int trial = 0; trial < 10; ++trial) {
    auto f = RandomMixed(6, trial);
    const EmeVector y = RandomEme(6, 4, 50 + trial);
    const MonteCarloEstimate est = EstimateF(*f, y, 20000, trial);
    EXPECT_EQ(est.samples, 20000);
    EXPECT_LE(std::abs(est.mean - EvaluateF(*f, y)),
              4.0 * est.std_error + 1e-12)
        << trial;
  }
}

TEST(MonteCarloTest, SameSeedSameEstimate) {
  auto f = RandomCut(6, 1);
  const EmeVector y = RandomEme(6, 3, 2);
  EXPECT_EQ(EstimateF(*f, y, 500, 3).mean, EstimateF(*f, y, 500, 3).mean);
  EXPECT_NE(EstimateF(*f, y, 500, 3).mean, EstimateF(*f, y, 500, 4).mean);
  EXPECT_EQ(CounterUniform(1, 2, 3), CounterUniform(1, 2, 3));
  EXPECT_GE(CounterUniform(1, 2, 3), 0.0);
  EXPECT_LT(CounterUniform(1, 2, 3), 1.0);
}

TEST(LovaszTest, IntegralAndModular) {
  auto f = RandomCoverage(5, 6);
  EXPECT_DOUBLE_EQ(Lovasz(*f, {1, 0, 1, 1, 0}), f->Value(ElementSet{0, 2, 3}));
  auto m = Modular({1.0, 2.0, -3.0});
  EXPECT_NEAR(Lovasz(*m, {0.5, 0.25, 0.1}), kOffset + 0.5 + 0.5 - 0.3, 1e-12);
}

TEST(LovaszTest, DisjointSingletonsBoundF) {
  // With singleton coordinates F is the multilinear extension, which
  // dominates the Lovász extension of a submodular function.
  for (int trial = 0; trial < 30; ++trial) {
    auto f = RandomMixed(6, 200 + trial);
    std::vector<std::pair<ElementSet, double>> coords;
    std::vector<double> x(6);
    for (int u = 0; u < 6; ++u) {
      x[u] = ((trial * 7 + u * 13) % 10) / 10.0;
      if (x[u] > 0) coords.push_back({ElementSet{u}, x[u]});
    }
    const EmeVector y = EmeVector::FromCoordinates(6, ElementSet(), coords);
    EXPECT_GE(EvaluateF(*f, y), Lovasz(*f, x) - 1e-9);
  }
}

TEST(PolytopeExcessTest, Uniform) {
  auto m = MakeUniform(3, 2);
  EXPECT_LE(PolytopeExcess(*m, {0.5, 0.5, 0.5}), 0.0);
  EXPECT_NEAR(PolytopeExcess(*m, {0.9, 0.9, 0.5}), 0.3, 1e-12);
  EXPECT_GT(PolytopeExcess(*m, {1.2, 0.0, 0.0}), 0.0);
}

TEST(CheckReportTest, Counting) {
  CheckReport r;
  r.AtLeast("a", 1, 1.0, 1.0 + 1e-8);
  r.AtLeast("a", 2, 1.0, 1.1);
  r.AtMost("b", 0, 2.0, 1.0);
  EXPECT_EQ(r.Count("a"), 2);
  EXPECT_EQ(r.Violations("a"), 1);
  EXPECT_EQ(r.violations(), 2);
  EXPECT_NEAR(r.entries()[1].slack, -0.1, 1e-12);
}

struct MatroidFixture {
  std::shared_ptr<const Matroid> m;
  std::shared_ptr<const SetFunction> f;
  MatroidRun run;
  BruteForceResult opt;
  std::shared_ptr<const Matroid> augmented;
  std::shared_ptr<const SetFunction> f_bar;
};

MatroidFixture SolvedMatroid(int seed, double epsilon = 0.5) {
  MatroidFixture x;
  x.m = MakeUniform(7, 3);
  x.f = RandomMixed(7, seed);
  x.run = SolveMatroid(x.m, x.f, MakeMatroidConfig(epsilon));
  x.opt = BruteForceOpt(*x.f, *x.m);
  x.augmented = Augment(x.m, x.run.dummies);
  x.f_bar = AugmentWithDummies(x.f, x.run.dummies);
  return x;
}

TEST(CheckTraceTest, CleanOnSeededRuns) {
  for (int seed = 0; seed < 5; ++seed) {
    const MatroidFixture x = SolvedMatroid(seed);
    const CheckReport r =
        CheckTrace(x.run.greedy, x.f_bar, *x.augmented, x.run.local_search.z,
                   x.opt.opt_set, x.run.config);
    EXPECT_TRUE(r.ok()) << seed;
    EXPECT_GT(r.Count("gain"), 0);
    EXPECT_EQ(r.Count("final_value_bound"), 1);
    EXPECT_TRUE(CheckMatroidRun(x.run, *x.f, *x.m).ok());
    EXPECT_TRUE(CheckSplitCorollary(x.run.greedy, x.f_bar, *x.augmented,
                                    x.run.local_search.z, x.run.config)
                    .ok());
  }
}

TEST(NegativeControlTest, CorruptedTraceFrac) {
  MatroidFixture x = SolvedMatroid(1);
  x.run.greedy.trace[0].frac = 1000;
  const CheckReport r =
      CheckTrace(x.run.greedy, x.f_bar, *x.augmented, x.run.local_search.z,
                 x.opt.opt_set, x.run.config);
  EXPECT_GT(r.Violations("frac_bound"), 0);
}

TEST(NegativeControlTest, CorruptedTraceValue) {
  // At eps = 0.5 the gain coefficient 1 - 3 eps is negative; 0.25 keeps it
  // active.
  MatroidFixture x = SolvedMatroid(2, 0.25);
  ASSERT_TRUE(CheckTrace(x.run.greedy, x.f_bar, *x.augmented,
                         x.run.local_search.z, x.opt.opt_set, x.run.config)
                  .ok());
  for (IterationRecord& rec : x.run.greedy.trace) {
    rec.y = EmeVector(rec.y.size(), rec.y.frac_cap());
    rec.value = x.f_bar->Value(ElementSet());
  }
  x.run.greedy.y = x.run.greedy.trace.back().y;
  const CheckReport r =
      CheckTrace(x.run.greedy, x.f_bar, *x.augmented, x.run.local_search.z,
                 x.opt.opt_set, x.run.config);
  EXPECT_GT(r.Violations("gain"), 0);
}

TEST(NegativeControlTest, StationarityOfABadSet) {
  auto f = Modular({1.0, 5.0, 2.0});
  auto m = MakeUniform(3, 1);
  const CheckReport bad =
      CheckStationarity(ElementSet{0}, *m, *f, 0.0, ElementSet{1});
  EXPECT_GT(bad.Violations("stationarity"), 0);
  EXPECT_GT(bad.Violations("stationarity_opt"), 0);
  const CheckReport good =
      CheckStationarity(ElementSet{1}, *m, *f, 0.0, ElementSet{1});
  EXPECT_TRUE(good.ok());
}

TEST(NegativeControlTest, SplitWithEmptyParts) {
  MatroidFixture x = SolvedMatroid(3);
  for (IterationRecord& rec : x.run.greedy.trace) {
    for (ElementSet& p : rec.parts) p = ElementSet();
  }
  const CheckReport r = CheckSplitCorollary(
      x.run.greedy, x.f_bar, *x.augmented, x.run.local_search.z, x.run.config);
  EXPECT_GT(r.Violations("split_basis"), 0);
}

TEST(NegativeControlTest, MatroidRunDependentSet) {
  MatroidFixture x = SolvedMatroid(4);
  x.run.set = ElementSet::Prefix(5);
  x.run.value = x.f->Value(x.run.set);
  EXPECT_GT(CheckMatroidRun(x.run, *x.f, *x.m).Violations("final_independent"),
            0);
}

TEST(NegativeControlTest, MatroidRunWrongValue) {
  MatroidFixture x = SolvedMatroid(5);
  x.run.value += 1.0;
  EXPECT_FALSE(CheckMatroidRun(x.run, *x.f, *x.m).ok());
}

TEST(NegativeControlTest, LocalSearchTooManySwaps) {
  MatroidFixture x = SolvedMatroid(6);
  EXPECT_TRUE(CheckLocalSearch(x.run.local_search, x.run.rank, 0.5,
                               x.opt.opt_value)
                  .ok());
  x.run.local_search.swaps = 1000;
  EXPECT_GT(CheckLocalSearch(x.run.local_search, x.run.rank, 0.5,
                             x.opt.opt_value)
                .Violations("local_search_swaps"),
            0);
}

struct KnapsackFixture {
  std::shared_ptr<const SetFunction> f;
  KnapsackInstance k;
  KnapsackRun run;
};

KnapsackFixture SolvedKnapsack(int seed) {
  KnapsackFixture x;
  x.f = RandomCoverage(7, seed);
  x.k = {{2, 3, 1, 4, 2, 5, 3}, 8};
  x.run = SolveKnapsack(x.f, x.k, MakeKnapsackConfig(0.5), 1);
  return x;
}

TEST(CheckKnapsackTest, CleanOnSeededRuns) {
  for (int seed = 0; seed < 5; ++seed) {
    const KnapsackFixture x = SolvedKnapsack(seed);
    EXPECT_TRUE(CheckKnapsackRun(x.run, *x.f, x.k).ok()) << seed;
    const CheckReport lemma = CheckKnapsackSplitLemma(x.run, x.f, x.k);
    EXPECT_TRUE(lemma.ok()) << seed;
    EXPECT_GT(lemma.Count("knapsack_split_lemma") +
                  lemma.Count("knapsack_split_unpaired"),
              0);
  }
}

TEST(NegativeControlTest, KnapsackOverBudget) {
  KnapsackFixture x = SolvedKnapsack(1);
  x.run.branches[0].set = ElementSet::Prefix(7);
  x.run.branches[0].value = x.f->Value(x.run.branches[0].set);
  EXPECT_GT(CheckKnapsackRun(x.run, *x.f, x.k).Violations("branch_feasible"),
            0);
}

TEST(NegativeControlTest, KnapsackMassOverBudget) {
  KnapsackFixture x = SolvedKnapsack(2);
  x.run.branches[0].dmcg.trace.back().weighted_mass = 100.0;
  EXPECT_FALSE(CheckKnapsackRun(x.run, *x.f, x.k).ok());
}

TEST(NegativeControlTest, KnapsackSplitGain) {
  KnapsackFixture x = SolvedKnapsack(3);
  for (DmcgIteration& rec : x.run.branches[0].dmcg.trace) {
    rec.split_gain = -1.0;
  }
  EXPECT_FALSE(CheckKnapsackSplitLemma(x.run, x.f, x.k).ok());
}

}  // namespace
}  // namespace submax
