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

#ifndef SUBMAX_CONFIG_H_
#define SUBMAX_CONFIG_H_

#include <optional>

#include "submax/eme.h"

namespace submax {

inline constexpr double kDefaultSwitchTime = 0.372;
inline constexpr double kDefaultTolerance = 1e-9;
// Below this epsilon the frac cap must be raised explicitly.
inline constexpr double kMinDefaultEpsilon = 0.25;

// Solver parameters after grid snapping.
struct AlgoConfig {
  double epsilon = 0.5;
  // Number of continuous-greedy steps, 1/delta.
  int iterations = 8;
  double delta = 0.125;
  double t_s = kDefaultSwitchTime;
  double t_s_requested = kDefaultSwitchTime;
  // Steps i <= ts_steps use the reference set Z.
  int ts_steps = 2;
  int ell = 2;
  double tolerance = kDefaultTolerance;
  int frac_cap = kDefaultFracCap;
  // Dummy elements added for matroid runs; unset means 2 * rank(M).
  std::optional<int> dummy_count;
};

// delta is the largest value <= epsilon^3 with 1/delta integral; t_s is
// snapped down to the delta grid; ell = round(1/epsilon).
AlgoConfig MakeMatroidConfig(double epsilon, double t_s = kDefaultSwitchTime,
                             int frac_cap = kDefaultFracCap);

// As above with t_s = 0, after snapping epsilon to 1/round(1/epsilon) so that
// ell * epsilon = 1.
AlgoConfig MakeKnapsackConfig(double epsilon, int frac_cap = kDefaultFracCap);

}  // namespace submax

#endif  // SUBMAX_CONFIG_H_
