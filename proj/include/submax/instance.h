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

#ifndef SUBMAX_INSTANCE_H_
#define SUBMAX_INSTANCE_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "submax/knapsack_solver.h"
#include "submax/matroid.h"
#include "submax/set_function.h"

namespace submax {

inline constexpr int kMaxGeneratedSize = 20;
inline constexpr int kMaxGeneratedTableSize = 16;

// A parsed problem: objective plus exactly one of a matroid or a knapsack.
struct Instance {
  int n = 0;
  nlohmann::json function;
  nlohmann::json constraint;
  std::shared_ptr<const SetFunction> f;
  std::shared_ptr<const Matroid> matroid;
  std::optional<KnapsackInstance> knapsack;

  bool is_matroid() const { return matroid != nullptr; }
  // "<function kind>-<matroid kind or knapsack>", e.g. "cut-graphic".
  std::string family() const;
};

// Schema:
//   {"n": int,
//    "function": {"kind": "coverage", "universe_weights": [w...],
//                                     "covers": [[item...] per element]}
//              | {"kind": "cut", "edges": [[u, v, w]...]}
//              | {"kind": "table", "values": [2^n reals]},
//    "constraint": {"kind": "matroid", "matroid":
//                      {"kind": "uniform", "k": int}
//                    | {"kind": "partition",
//                       "parts": [{"members": [ids], "capacity": int}...]}
//                    | {"kind": "graphic", "vertices": int,
//                       "edges": [[a, b]...]}}
//                | {"kind": "knapsack", "weights": [w...], "budget": B}}
// Unknown kinds and size mismatches throw InvalidArgument.
Instance ParseInstance(const nlohmann::json& doc);
nlohmann::json InstanceToJson(const Instance& instance);
Instance LoadInstance(const std::string& path);

// FNV-1a 64 of the canonical instance text, as 16 hex digits.
std::string InstanceDigest(const Instance& instance);

// family = "<coverage|cut|table>-<uniform|partition|graphic|knapsack>".
// Matroids have rank at most 3. Same (family, n, seed) gives the same
// instance on every platform.
Instance GenerateInstance(const std::string& family, int n, std::uint64_t seed);

std::vector<std::string> FunctionKinds();
std::vector<std::string> ConstraintKinds();

}  // namespace submax

#endif  // SUBMAX_INSTANCE_H_
