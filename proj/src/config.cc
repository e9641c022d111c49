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

#include "submax/config.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "submax/errors.h"

namespace submax {
namespace {

AlgoConfig Build(double epsilon, double t_s, int frac_cap) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw InvalidArgument("epsilon must lie in (0, 1)");
  }
  if (!(t_s >= 0.0 && t_s <= 1.0)) {
    throw InvalidArgument("t_s must lie in [0, 1]");
  }
  if (frac_cap < 1) throw InvalidArgument("frac cap must be positive");
  AlgoConfig config;
  config.epsilon = epsilon;
  config.iterations =
      static_cast<int>(std::ceil(1.0 / (epsilon * epsilon * epsilon) - 1e-9));
  config.delta = 1.0 / config.iterations;
  config.t_s_requested = t_s;
  config.ts_steps = static_cast<int>(std::floor(t_s * config.iterations + 1e-9));
  config.t_s = static_cast<double>(config.ts_steps) / config.iterations;
  config.ell = std::max(1, static_cast<int>(std::lround(1.0 / epsilon)));
  config.frac_cap = frac_cap;
  if (epsilon < kMinDefaultEpsilon - 1e-12 && frac_cap <= kDefaultFracCap) {
    throw FracBudgetError(
        "epsilon=" + std::to_string(epsilon) + " can need up to " +
            std::to_string(config.ell * config.iterations) +
            " fractional coordinates; epsilon below 0.25 requires raising "
            "the frac cap above " +
            std::to_string(kDefaultFracCap),
        config.ell * config.iterations, frac_cap);
  }
  return config;
}

}  // namespace

AlgoConfig MakeMatroidConfig(double epsilon, double t_s, int frac_cap) {
  return Build(epsilon, t_s, frac_cap);
}

AlgoConfig MakeKnapsackConfig(double epsilon, int frac_cap) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw InvalidArgument("epsilon must lie in (0, 1)");
  }
  const long k = std::max(2L, std::lround(1.0 / epsilon));
  return Build(1.0 / static_cast<double>(k), 0.0, frac_cap);
}

}  // namespace submax
