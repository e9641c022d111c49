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

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "submax/errors.h"
#include "submax/report.h"

namespace submax {
namespace {

using nlohmann::json;

const json& Field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw InvalidArgument(std::string("missing field \"") + key + "\"");
  }
  return doc.at(key);
}

std::string Kind(const json& doc) {
  const json& kind = Field(doc, "kind");
  if (!kind.is_string()) throw InvalidArgument("\"kind\" must be a string");
  return kind.get<std::string>();
}

std::shared_ptr<const SetFunction> ParseFunction(const json& doc, int n) {
  const std::string kind = Kind(doc);
  if (kind == "coverage") {
    auto weights = Field(doc, "universe_weights").get<std::vector<double>>();
    auto covers = Field(doc, "covers").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(covers.size()) != n) {
      throw InvalidArgument("coverage needs one cover list per element");
    }
    return MakeCoverage(std::move(weights), std::move(covers));
  }
  if (kind == "cut") {
    std::vector<WeightedEdge> edges;
    for (const json& e : Field(doc, "edges")) {
      if (!e.is_array() || e.size() != 3) {
        throw InvalidArgument("cut edges are [u, v, weight]");
      }
      edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<double>()});
    }
    return MakeCut(n, std::move(edges));
  }
  if (kind == "table") {
    auto values = Field(doc, "values").get<std::vector<double>>();
    if (values.size() != (std::size_t{1} << n)) {
      throw InvalidArgument("table needs 2^n values");
    }
    return MakeTable(std::move(values), /*require_nonnegative=*/true);
  }
  throw InvalidArgument("unknown function kind \"" + kind + "\"");
}

std::shared_ptr<const Matroid> ParseMatroid(const json& doc, int n) {
  const std::string kind = Kind(doc);
  if (kind == "uniform") return MakeUniform(n, Field(doc, "k").get<int>());
  if (kind == "partition") {
    std::vector<PartitionBlock> parts;
    for (const json& part : Field(doc, "parts")) {
      parts.push_back({Field(part, "members").get<std::vector<int>>(),
                       Field(part, "capacity").get<int>()});
    }
    return MakePartition(n, std::move(parts));
  }
  if (kind == "graphic") {
    std::vector<GraphEdge> edges;
    int vertices = 0;
    for (const json& e : Field(doc, "edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw InvalidArgument("graphic edges are [a, b]");
      }
      edges.push_back({e[0].get<int>(), e[1].get<int>()});
      vertices = std::max({vertices, edges.back().u + 1, edges.back().v + 1});
    }
    if (doc.contains("vertices")) vertices = doc.at("vertices").get<int>();
    if (static_cast<int>(edges.size()) != n) {
      throw InvalidArgument("graphic matroid needs one edge per element");
    }
    return MakeGraphic(vertices, std::move(edges));
  }
  throw InvalidArgument("unknown matroid kind \"" + kind + "\"");
}

std::uint64_t Below(std::mt19937_64& rng, std::uint64_t k) { return rng() % k; }

double Unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

json CoverageDoc(int n, std::mt19937_64& rng) {
  const int universe = std::min(64, std::max(4, 2 * n));
  std::vector<int> weights(universe);
  for (int& w : weights) w = 1 + static_cast<int>(Below(rng, 5));
  std::vector<std::vector<int>> covers(n);
  for (auto& cover : covers) {
    const int size = 1 + static_cast<int>(Below(rng, 3));
    while (static_cast<int>(cover.size()) < size) {
      const int item = static_cast<int>(Below(rng, universe));
      if (std::find(cover.begin(), cover.end(), item) == cover.end()) {
        cover.push_back(item);
      }
    }
    std::sort(cover.begin(), cover.end());
  }
  return {{"kind", "coverage"}, {"universe_weights", weights}, {"covers", covers}};
}

json CutDoc(int n, std::mt19937_64& rng) {
  json edges = json::array();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (Below(rng, 2) == 0) {
        edges.push_back({u, v, 1 + static_cast<int>(Below(rng, 5))});
      }
    }
  }
  if (edges.empty() && n >= 2) edges.push_back({0, 1, 1});
  return {{"kind", "cut"}, {"edges", edges}};
}

json TableDoc(int n, std::mt19937_64& rng) {
  const json coverage = CoverageDoc(n, rng);
  const json cut = CutDoc(n, rng);
  const auto a = ParseFunction(coverage, n);
  const auto b = ParseFunction(cut, n);
  std::vector<double> values(std::size_t{1} << n);
  for (std::size_t s = 0; s < values.size(); ++s) {
    values[s] = a->Value(ElementSet(s)) + b->Value(ElementSet(s));
  }
  return {{"kind", "table"}, {"values", values}};
}

json ConstraintDoc(const std::string& kind, int n, std::mt19937_64& rng) {
  if (kind == "uniform") {
    const int k = 1 + static_cast<int>(Below(rng, std::min(3, n)));
    return {{"kind", "matroid"}, {"matroid", {{"kind", "uniform"}, {"k", k}}}};
  }
  if (kind == "partition") {
    const int count = std::min(n, 2 + static_cast<int>(Below(rng, 2)));
    std::vector<std::vector<int>> members(count);
    for (int u = 0; u < n; ++u) {
      members[u < count ? u : Below(rng, count)].push_back(u);
    }
    json parts = json::array();
    for (const auto& m : members) {
      parts.push_back({{"members", m}, {"capacity", 1}});
    }
    return {{"kind", "matroid"},
            {"matroid", {{"kind", "partition"}, {"parts", parts}}}};
  }
  if (kind == "graphic") {
    constexpr int kVertices = 4;
    json edges = json::array();
    for (int e = 0; e < n; ++e) {
      const int a = static_cast<int>(Below(rng, kVertices));
      int b = static_cast<int>(Below(rng, kVertices - 1));
      if (b >= a) ++b;
      edges.push_back({std::min(a, b), std::max(a, b)});
    }
    return {{"kind", "matroid"},
            {"matroid",
             {{"kind", "graphic"}, {"vertices", kVertices}, {"edges", edges}}}};
  }
  if (kind == "knapsack") {
    std::vector<int> weights(n);
    int total = 0;
    for (int& w : weights) {
      w = 1 + static_cast<int>(Below(rng, 10));
      total += w;
    }
    const int budget =
        std::max(1, static_cast<int>(total * (0.4 + 0.1 * Unit(rng))));
    return {{"kind", "knapsack"}, {"weights", weights}, {"budget", budget}};
  }
  throw InvalidArgument("unknown constraint kind \"" + kind + "\"");
}

}  // namespace

std::string Instance::family() const {
  std::string out = function.at("kind").get<std::string>() + "-";
  if (is_matroid()) return out + constraint.at("matroid").at("kind").get<std::string>();
  return out + "knapsack";
}

Instance ParseInstance(const json& doc) {
  try {
    Instance instance;
    instance.n = Field(doc, "n").get<int>();
    if (instance.n < 0 || instance.n > kMaxGroundSize) {
      throw InvalidArgument("n outside [0, 64]");
    }
    instance.function = Field(doc, "function");
    instance.constraint = Field(doc, "constraint");
    instance.f = ParseFunction(instance.function, instance.n);
    const std::string kind = Kind(instance.constraint);
    if (kind == "matroid") {
      instance.matroid =
          ParseMatroid(Field(instance.constraint, "matroid"), instance.n);
    } else if (kind == "knapsack") {
      KnapsackInstance knapsack;
      knapsack.weights =
          Field(instance.constraint, "weights").get<std::vector<double>>();
      knapsack.budget = Field(instance.constraint, "budget").get<double>();
      if (knapsack.size() != instance.n) {
        throw InvalidArgument("knapsack needs one weight per element");
      }
      ValidateKnapsack(knapsack);
      instance.knapsack = std::move(knapsack);
    } else {
      throw InvalidArgument("unknown constraint kind \"" + kind + "\"");
    }
    return instance;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed instance: ") + e.what());
  }
}

json InstanceToJson(const Instance& instance) {
  return {{"n", instance.n},
          {"function", instance.function},
          {"constraint", instance.constraint}};
}

Instance LoadInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
  return ParseInstance(doc);
}

std::string InstanceDigest(const Instance& instance) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : CanonicalDump(InstanceToJson(instance))) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Instance GenerateInstance(const std::string& family, int n,
                          std::uint64_t seed) {
  const auto dash = family.find('-');
  if (dash == std::string::npos) {
    throw InvalidArgument("family must look like <function>-<constraint>");
  }
  const std::string function = family.substr(0, dash);
  const std::string constraint = family.substr(dash + 1);
  if (n < 1 || n > kMaxGeneratedSize) {
    throw InvalidArgument("generated instances need 1 <= n <= 20");
  }
  if (function == "table" && n > kMaxGeneratedTableSize) {
    throw InvalidArgument("generated table instances need n <= 16");
  }
  std::mt19937_64 rng(seed);
  json function_doc;
  if (function == "coverage") {
    function_doc = CoverageDoc(n, rng);
  } else if (function == "cut") {
    function_doc = CutDoc(n, rng);
  } else if (function == "table") {
    function_doc = TableDoc(n, rng);
  } else {
    throw InvalidArgument("unknown function kind \"" + function + "\"");
  }
  const json doc = {{"n", n},
                    {"function", function_doc},
                    {"constraint", ConstraintDoc(constraint, n, rng)}};
  // Round-trip through the canonical text so generated and loaded instances
  // are identical.
  return ParseInstance(json::parse(CanonicalDump(doc)));
}

std::vector<std::string> FunctionKinds() { return {"coverage", "cut", "table"}; }

std::vector<std::string> ConstraintKinds() {
  return {"uniform", "partition", "graphic", "knapsack"};
}

}  // namespace submax
