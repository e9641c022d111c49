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

#include "submax/set_function.h"

#include <memory>
#include <vector>

#include "gtest/gtest.h"
#include "submax/errors.h"
#include "test_util.h"

namespace submax {
namespace {

using testing::RandomCoverage;
using testing::RandomCut;

TEST(CoverageTest, OverlapCountsOnce) {
  auto f = MakeCoverage({1.0, 1.0}, {{1}, {1}});
  EXPECT_EQ(f->Value(ElementSet{0, 1}), 1.0);
  EXPECT_EQ(f->Value(ElementSet()), 0.0);
}

TEST(CoverageTest, RandomInstanceIsSubmodular) {
  EXPECT_TRUE(IsSubmodular(*RandomCoverage(6, 11)));
}

TEST(CoverageTest, RejectsNegativeWeight) {
  EXPECT_THROW(MakeCoverage({1.0, -1.0}, {{0}, {1}}), InvalidArgument);
}

TEST(CutTest, SingleEdge) {
  auto f = MakeCut(2, {{0, 1, 1.0}});
  EXPECT_EQ(f->Value(ElementSet{0}), 1.0);
}

TEST(CutTest, EmptyAndFullAreZero) {
  auto f = RandomCut(7, 3);
  EXPECT_EQ(f->Value(ElementSet()), 0.0);
  EXPECT_EQ(f->Value(ElementSet::Prefix(7)), 0.0);
}

TEST(CutTest, TriangleSingletons) {
  auto f = MakeCut(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
  for (int u = 0; u < 3; ++u) EXPECT_EQ(f->Value(ElementSet{u}), 2.0);
}

TEST(CutTest, RejectsSelfLoopAndNegativeWeight) {
  EXPECT_THROW(MakeCut(2, {{1, 1, 1.0}}), InvalidArgument);
  EXPECT_THROW(MakeCut(2, {{0, 1, -1.0}}), InvalidArgument);
}

TEST(TableTest, Lookup) {
  EXPECT_EQ(MakeTable({0.0, 5.0})->Value(ElementSet{0}), 5.0);
  EXPECT_EQ(MakeTable({0.0, 1.0, 1.0, 1.0})->Value(ElementSet{0, 1}), 1.0);
}

TEST(TableTest, RejectsBadLength) {
  EXPECT_THROW(MakeTable({0.0, 1.0, 2.0}), InvalidArgument);
}

TEST(TableTest, RejectsNegativeWhenDeclared) {
  EXPECT_THROW(MakeTable({0.0, -1.0}, true), InvalidArgument);
  EXPECT_NO_THROW(MakeTable({0.0, -1.0}, false));
}

TEST(TableTest, ValidatorFlagsSupermodularTable) {
  auto f = MakeTable({0.0, 0.0, 0.0, 1.0});
  auto violation = FindSubmodularityViolation(*f);
  ASSERT_TRUE(violation.has_value());
  EXPECT_FALSE(IsSubmodular(*f));
}

TEST(QueryCounterTest, OnePerValueCall) {
  auto f = RandomCut(5, 1);
  const auto before = f->queries();
  f->Value(ElementSet{1});
  f->Value(ElementSet{1});
  EXPECT_EQ(f->queries(), before + 2);
}

TEST(DummyTest, DummiesAreInert) {
  auto base = RandomCut(5, 2);
  auto f = AugmentWithDummies(base, 5);
  EXPECT_EQ(f->size(), 10);
  const ElementSet dummies = f->ground().dummies();
  EXPECT_EQ(f->Value(dummies), base->Value(ElementSet()));
  ForEachSubset(ElementSet::Prefix(5), [&](ElementSet s) {
    for (int d : dummies) EXPECT_EQ(f->Value(s.With(d)), f->Value(s));
  });
}

TEST(DummyTest, SharesCounter) {
  auto base = RandomCut(4, 2);
  auto f = AugmentWithDummies(base, 2);
  const auto before = base->queries();
  f->Value(ElementSet{0, 5});
  EXPECT_EQ(base->queries(), before + 1);
  EXPECT_EQ(f->queries(), base->queries());
}

TEST(DummyTest, AugmentedCutIsSubmodular) {
  EXPECT_TRUE(IsSubmodular(*AugmentWithDummies(RandomCut(5, 9), 5)));
}

TEST(ShiftTest, EmptyZIsIdentity) {
  auto f = RandomCoverage(6, 4);
  auto g = ShiftOut(f, ElementSet());
  ForEachSubset(ElementSet::Prefix(6),
                [&](ElementSet s) { EXPECT_EQ(g->Value(s), f->Value(s)); });
}

TEST(ShiftTest, SingletonFormula) {
  auto f = RandomCut(6, 5);
  const ElementSet z{1, 4};
  auto g = ShiftOut(f, z);
  for (int u : z) {
    EXPECT_DOUBLE_EQ(g->Value(ElementSet{u}), f->Value(ElementSet()) - 1.0);
  }
}

TEST(ShiftTest, AddingZDropsByAtLeastOne) {
  auto f = RandomCut(6, 6);
  const ElementSet z{0, 2, 5};
  auto g = ShiftOut(f, z);
  for (int u : z) {
    ForEachSubset(ElementSet::Prefix(6).Without(u), [&](ElementSet s) {
      EXPECT_LE(g->Value(s.With(u)), g->Value(s) - 1.0 + 1e-9);
    });
  }
}

TEST(ShiftTest, MarginalsOutsideZBitwiseEqual) {
  auto f = RandomCoverage(6, 8);
  const ElementSet z{1, 3};
  auto g = ShiftOut(f, z);
  for (int v : ElementSet::Prefix(6) - z) {
    ForEachSubset(ElementSet::Prefix(6).Without(v), [&](ElementSet s) {
      EXPECT_EQ(g->Marginal(v, s), f->Marginal(v, s));
    });
  }
}

TEST(ShiftTest, StaysSubmodular) {
  auto f = RandomCut(6, 7);
  EXPECT_TRUE(IsSubmodular(*ShiftOut(f, ElementSet{0, 3})));
}

TEST(TranslateTest, EmptyIsIdentityAndBaseIsFE) {
  auto f = RandomCut(6, 10);
  auto same = RestrictTranslate(f, ElementSet());
  ForEachSubset(ElementSet::Prefix(6),
                [&](ElementSet s) { EXPECT_EQ(same->Value(s), f->Value(s)); });
  const ElementSet e{2, 3};
  auto g = RestrictTranslate(f, e);
  EXPECT_EQ(g->Value(ElementSet()), f->Value(e));
  EXPECT_EQ(g->ground(), ElementSet::Prefix(6) - e);
}

TEST(TranslateTest, StaysSubmodular) {
  auto g = RestrictTranslate(RandomCut(7, 12), ElementSet{0, 6});
  EXPECT_TRUE(IsSubmodular(*g));
}

TEST(TabulateTest, MatchesValues) {
  auto f = RandomCoverage(4, 1);
  const std::vector<double> table = Tabulate(*f);
  ASSERT_EQ(table.size(), 16u);
  for (std::uint64_t s = 0; s < 16; ++s) {
    EXPECT_EQ(table[s], f->Value(ElementSet(s)));
  }
}

}  // namespace
}  // namespace submax
