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

#ifndef SUBMAX_REPORT_H_
#define SUBMAX_REPORT_H_

#include <string>

#include "json.hpp"
#include "submax/eme.h"
#include "submax/element_set.h"
#include "submax/knapsack_solver.h"
#include "submax/matroid_solver.h"
#include "submax/verify.h"

namespace submax {

// Sorted keys, two-space indent, integers as integers and every other number
// with 17 significant digits. Equal documents give equal bytes.
std::string CanonicalDump(const nlohmann::json& doc);

nlohmann::json SetToJson(ElementSet s);
ElementSet SetFromJson(const nlohmann::json& doc);

// {"sure": [ids], "coords": [{"set": [ids], "p": real}...]}
nlohmann::json EmeToJson(const EmeVector& y);
EmeVector EmeFromJson(int n, const nlohmann::json& doc,
                      int frac_cap = kDefaultFracCap);

nlohmann::json ConfigToJson(const AlgoConfig& config);
nlohmann::json MatroidRunToJson(const MatroidRun& run);
nlohmann::json KnapsackRunToJson(const KnapsackRun& run);
// [{check, iteration, lhs, rhs, slack, pass}...]
nlohmann::json ChecksToJson(const CheckReport& report);
nlohmann::json BruteForceToJson(const BruteForceResult& opt);

}  // namespace submax

#endif  // SUBMAX_REPORT_H_
