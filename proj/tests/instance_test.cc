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

#include "submax/instance.h"

#include <cstdio>
#include <fstream>
#include <string>

#include "gtest/gtest.h"
#include "json.hpp"
#include "submax/errors.h"
#include "submax/matroid.h"
#include "submax/report.h"
#include "submax/set_function.h"

namespace submax {
namespace {

using nlohmann::json;

json SmallDoc() {
  return json::parse(R"({
    "n": 3,
    "function": {"kind": "coverage", "universe_weights": [1.0, 2.0],
                 "covers": [[0], [1], [0, 1]]},
    "constraint": {"kind": "matroid",
                   "matroid": {"kind": "uniform", "k": 2}}
  })");
}

TEST(ParseInstanceTest, Coverage) {
  const Instance inst = ParseInstance(SmallDoc());
  EXPECT_EQ(inst.n, 3);
  EXPECT_TRUE(inst.is_matroid());
  EXPECT_EQ(inst.family(), "coverage-uniform");
  EXPECT_EQ(inst.f->Value(ElementSet{2}), 3.0);
  EXPECT_EQ(inst.matroid->rank(), 2);
}

TEST(ParseInstanceTest, KnapsackAndCut) {
  const Instance inst = ParseInstance(json::parse(R"({
    "n": 2,
    "function": {"kind": "cut", "edges": [[0, 1, 2.5]]},
    "constraint": {"kind": "knapsack", "weights": [1, 2], "budget": 2}
  })"));
  EXPECT_FALSE(inst.is_matroid());
  EXPECT_EQ(inst.family(), "cut-knapsack");
  EXPECT_EQ(inst.f->Value(ElementSet{0}), 2.5);
  EXPECT_EQ(inst.knapsack->budget, 2.0);
}

TEST(ParseInstanceTest, Rejections) {
  json doc = SmallDoc();
  doc["function"]["kind"] = "quadratic";
  EXPECT_THROW(ParseInstance(doc), InvalidArgument);
  doc = SmallDoc();
  doc["function"]["covers"].erase(0);
  EXPECT_THROW(ParseInstance(doc), InvalidArgument);
  doc = SmallDoc();
  doc["constraint"]["matroid"]["kind"] = "transversal";
  EXPECT_THROW(ParseInstance(doc), InvalidArgument);
  doc = SmallDoc();
  doc.erase("n");
  EXPECT_THROW(ParseInstance(doc), InvalidArgument);
  doc = SmallDoc();
  doc["n"] = "three";
  EXPECT_THROW(ParseInstance(doc), InvalidArgument);
}

TEST(ParseInstanceTest, RoundTrip) {
  for (const std::string& family :
       {"coverage-partition", "cut-graphic", "table-knapsack"}) {
    const Instance a = GenerateInstance(family, 7, 3);
    const Instance b = ParseInstance(InstanceToJson(a));
    EXPECT_EQ(CanonicalDump(InstanceToJson(a)),
              CanonicalDump(InstanceToJson(b)));
    EXPECT_EQ(InstanceDigest(a), InstanceDigest(b));
    ForEachSubset(ElementSet::Prefix(7), [&](ElementSet s) {
      EXPECT_EQ(a.f->Value(s), b.f->Value(s));
    });
  }
}

TEST(InstanceDigestTest, Format) {
  const Instance a = GenerateInstance("cut-uniform", 6, 1);
  const std::string d = InstanceDigest(a);
  EXPECT_EQ(d.size(), 16u);
  EXPECT_EQ(d.find_first_not_of("0123456789abcdef"), std::string::npos);
  EXPECT_NE(d, InstanceDigest(GenerateInstance("cut-uniform", 6, 2)));
}

TEST(LoadInstanceTest, FileErrors) {
  EXPECT_THROW(LoadInstance("/nonexistent/x.json"), IoError);
  const std::string path = ::testing::TempDir() + "/broken.json";
  std::ofstream(path) << "{ not json";
  EXPECT_THROW(LoadInstance(path), InvalidArgument);
  std::remove(path.c_str());
}

TEST(GenerateInstanceTest, Deterministic) {
  for (const std::string& c : ConstraintKinds()) {
    for (const std::string& f : FunctionKinds()) {
      const std::string family = f + "-" + c;
      const Instance a = GenerateInstance(family, 8, 42);
      const Instance b = GenerateInstance(family, 8, 42);
      EXPECT_EQ(CanonicalDump(InstanceToJson(a)),
                CanonicalDump(InstanceToJson(b)));
      EXPECT_EQ(a.family(), family);
    }
  }
}

TEST(GenerateInstanceTest, ValidObjectivesAndConstraints) {
  for (int seed = 0; seed < 5; ++seed) {
    for (const std::string& c : ConstraintKinds()) {
      for (const std::string& f : FunctionKinds()) {
        const Instance inst = GenerateInstance(f + "-" + c, 8, seed);
        EXPECT_TRUE(IsSubmodular(*inst.f)) << inst.family();
        EXPECT_GE(inst.f->Value(ElementSet()), 0.0);
        if (inst.is_matroid()) {
          EXPECT_FALSE(FindMatroidAxiomViolation(*inst.matroid).has_value());
          EXPECT_GE(inst.matroid->rank(), 1);
          EXPECT_LE(inst.matroid->rank(), 3);
        } else {
          EXPECT_NO_THROW(ValidateKnapsack(*inst.knapsack));
        }
      }
    }
  }
}

TEST(GenerateInstanceTest, Rejections) {
  EXPECT_THROW(GenerateInstance("cut", 6, 1), InvalidArgument);
  EXPECT_THROW(GenerateInstance("cut-spanning", 6, 1), InvalidArgument);
  EXPECT_THROW(GenerateInstance("wave-uniform", 6, 1), InvalidArgument);
  EXPECT_THROW(GenerateInstance("cut-uniform", 21, 1), InvalidArgument);
  EXPECT_THROW(GenerateInstance("cut-uniform", 0, 1), InvalidArgument);
  EXPECT_THROW(GenerateInstance("table-uniform", 17, 1), InvalidArgument);
  EXPECT_NO_THROW(GenerateInstance("cut-uniform", 20, 1));
}

TEST(CanonicalDumpTest, Format) {
  const json doc = {{"b", 1}, {"a", 0.1}, {"c", {1.5, 2}}};
  EXPECT_EQ(CanonicalDump(doc),
            "{\n  \"a\": 0.10000000000000001,\n  \"b\": 1,\n"
            "  \"c\": [1.5, 2]\n}\n");
}

}  // namespace
}  // namespace submax
