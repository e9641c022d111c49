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

#include "submax/errors.h"

#include <string>

#include "submax/element_set.h"

namespace submax {

FracBudgetError::FracBudgetError(int frac, int cap)
    : std::runtime_error("EME vector has frac=" + std::to_string(frac) +
                         " fractional coordinates, above the frac cap of " +
                         std::to_string(cap) +
                         "; use a larger epsilon or raise the frac cap"),
      frac_(frac),
      cap_(cap) {}

std::string ElementSet::ToString() const {
  std::string out = "{";
  bool first = true;
  for (int e : *this) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace submax
