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

#include "submax/matroid.h"

#include <memory>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "submax/errors.h"
#include "test_util.h"

namespace submax {
namespace {

// Independent sets {∅, {0}, {1}, {2}, {0, 1}}: downward closed but {2}
// cannot be extended from {0, 1}.
class BrokenExchange final : public Matroid {
 public:
  BrokenExchange() : Matroid(std::make_shared<QueryCounter>()) {
    ground_.n_real = 3;
    InitRank();
  }
  bool IsIndependent(ElementSet s) const override {
    return s.size() <= 1 || s == ElementSet{0, 1};
  }
  const GroundSet& ground() const override { return ground_; }
  std::string kind() const override { return "broken"; }

 private:
  GroundSet ground_;
};

std::shared_ptr<GraphicMatroid> Triangle() {
  return MakeGraphic(3, {{0, 1}, {1, 2}, {0, 2}});
}

TEST(UniformTest, Extremes) {
  auto zero = MakeUniform(4, 0);
  EXPECT_TRUE(zero->IsIndependent(ElementSet()));
  EXPECT_FALSE(zero->IsIndependent(ElementSet{2}));
  auto full = MakeUniform(4, 4);
  EXPECT_TRUE(full->IsIndependent(ElementSet::Prefix(4)));
  EXPECT_EQ(full->rank(), 4);
}

TEST(UniformTest, Axioms) {
  EXPECT_FALSE(FindMatroidAxiomViolation(*MakeUniform(8, 3)).has_value());
}

TEST(UniformTest, RejectsBadK) {
  EXPECT_THROW(MakeUniform(3, 4), InvalidArgument);
  EXPECT_THROW(MakeUniform(3, -1), InvalidArgument);
}

TEST(PartitionTest, Capacities) {
  auto m = MakePartition(5, {{{0, 1, 2}, 1}, {{3, 4}, 2}});
  EXPECT_TRUE(m->IsIndependent(ElementSet{0, 3, 4}));
  EXPECT_FALSE(m->IsIndependent(ElementSet{0, 1}));
  EXPECT_EQ(m->rank(), 3);
}

TEST(PartitionTest, ZeroCapacityBlocksEverything) {
  auto m = MakePartition(3, {{{0, 1, 2}, 0}});
  EXPECT_EQ(m->rank(), 0);
  EXPECT_FALSE(m->IsIndependent(ElementSet{1}));
}

TEST(PartitionTest, Axioms) {
  auto m = MakePartition(8, {{{0, 1, 2}, 1}, {{3, 4, 5}, 2}, {{6, 7}, 1}});
  EXPECT_FALSE(FindMatroidAxiomViolation(*m).has_value());
}

TEST(PartitionTest, RejectsOverlap) {
  EXPECT_THROW(MakePartition(3, {{{0, 1}, 1}, {{1, 2}, 1}}), InvalidArgument);
}

TEST(GraphicTest, SingleEdgeAndTriangle) {
  auto m = Triangle();
  EXPECT_TRUE(m->IsIndependent(ElementSet{0}));
  EXPECT_TRUE(m->IsIndependent(ElementSet{0, 1}));
  EXPECT_FALSE(m->IsIndependent(ElementSet{0, 1, 2}));
}

TEST(GraphicTest, ParallelEdgesAreDependent) {
  auto m = MakeGraphic(2, {{0, 1}, {0, 1}});
  EXPECT_FALSE(m->IsIndependent(ElementSet{0, 1}));
  EXPECT_EQ(m->rank(), 1);
}

TEST(GraphicTest, ConnectedRankIsVerticesMinusOne) {
  // K4 plus a pendant vertex.
  auto m = MakeGraphic(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                           {3, 4}});
  EXPECT_EQ(m->rank(), 4);
  EXPECT_FALSE(FindMatroidAxiomViolation(*m).has_value());
}

TEST(RankTest, Basics) {
  auto m = Triangle();
  EXPECT_EQ(m->Rank(ElementSet()), 0);
  EXPECT_EQ(m->Rank(ElementSet{0, 2}), 2);
  EXPECT_EQ(m->Rank(ElementSet{0, 1, 2}), 2);
  EXPECT_EQ(m->rank(), 2);
}

TEST(RankTest, TableMatchesRank) {
  auto m = MakeGraphic(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}, {1, 3}});
  const std::vector<int> table = RankTable(*m);
  for (std::uint64_t s = 0; s < table.size(); ++s) {
    EXPECT_EQ(table[s], m->Rank(ElementSet(s))) << s;
  }
}

TEST(CompleteTest, BasisUnchanged) {
  auto m = MakeUniform(5, 2);
  EXPECT_EQ(CompleteToBasis(*m, ElementSet{1, 4}), (ElementSet{1, 4}));
}

TEST(CompleteTest, UniformGrowsToRank) {
  auto m = MakeUniform(5, 3);
  const ElementSet b = CompleteToBasis(*m, ElementSet{0});
  EXPECT_EQ(b.size(), 3);
  EXPECT_TRUE(b.contains(0));
}

TEST(CompleteTest, AugmentedStopsAtRankAndUsesDummiesLast) {
  auto base = MakePartition(4, {{{0, 1}, 1}, {{2, 3}, 1}});
  auto m = Augment(base, 2);
  // The cut marginal of element 3 given {0} is negative, so a dummy fills in.
  auto f = MakeCut(4, {{0, 3, 1.0}});
  const ElementSet b = CompleteToBasis(*m, ElementSet{0}, f.get());
  EXPECT_EQ(b.size(), base->rank());
  EXPECT_TRUE(m->IsBasis(b));
  EXPECT_EQ(f->Value(b & m->ground().real()), f->Value(ElementSet{0}) + 0.0);
}

TEST(CompleteTest, DependentInputIsRejected) {
  EXPECT_THROW(CompleteToBasis(*MakeUniform(3, 1), ElementSet{0, 1}),
               ContractViolation);
}

TEST(AugmentedTest, IndependenceRule) {
  auto base = Triangle();
  auto m = Augment(base, 3);
  EXPECT_EQ(m->size(), 6);
  EXPECT_EQ(m->rank(), 2);
  EXPECT_TRUE(m->IsIndependent(ElementSet{0, 3}));
  EXPECT_TRUE(m->IsIndependent(ElementSet{3, 4}));
  EXPECT_FALSE(m->IsIndependent(ElementSet{0, 3, 4}));
  EXPECT_FALSE(m->IsIndependent(ElementSet{0, 1, 2}));
}

TEST(AugmentedTest, IsMatroid) {
  auto m = Augment(MakePartition(5, {{{0, 1, 2}, 1}, {{3, 4}, 1}}), 4);
  EXPECT_FALSE(FindMatroidAxiomViolation(*m).has_value());
}

TEST(AugmentedTest, DefaultDummyCountIsRank) {
  auto m = Augment(MakeUniform(6, 2));
  EXPECT_EQ(m->ground().n_dummy, 2);
}

TEST(AugmentedTest, SharesIndependenceCounter) {
  auto base = MakeUniform(4, 2);
  auto m = Augment(base, 2);
  const auto before = base->queries();
  m->IsIndependent(ElementSet{0, 4});
  EXPECT_GT(base->queries(), before);
  EXPECT_EQ(m->queries(), base->queries());
}

TEST(AxiomTest, FlagsBrokenExchange) {
  BrokenExchange broken;
  EXPECT_TRUE(FindMatroidAxiomViolation(broken).has_value());
}

TEST(PolytopeTest, IndicatorsAreInside) {
  auto m = Triangle();
  EXPECT_TRUE(InMatroidPolytope(*m, {1.0, 1.0, 0.0}));
  EXPECT_FALSE(InMatroidPolytope(*m, {1.0, 1.0, 1.0}));
}

TEST(PolytopeTest, UniformK1Overflow) {
  auto m = MakeUniform(2, 1);
  EXPECT_FALSE(m->InPolytope({0.6, 0.6}));
  EXPECT_FALSE(InMatroidPolytope(*m, {0.6, 0.6}));
  EXPECT_TRUE(m->InPolytope({0.5, 0.5}));
}

TEST(PolytopeTest, ClosedFormsAgreeWithRankScan) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::shared_ptr<const Matroid>> matroids = {
      MakeUniform(6, 2), MakeUniform(6, 3),
      MakePartition(6, {{{0, 1, 2}, 1}, {{3, 4}, 1}})};
  for (const auto& m : matroids) {
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<double> x(6);
      const double scale = 0.2 + 0.6 * unit(rng);
      for (double& v : x) v = scale * unit(rng);
      EXPECT_EQ(m->InPolytope(x), InMatroidPolytope(*m, x)) << m->kind();
    }
  }
}

}  // namespace
}  // namespace submax
