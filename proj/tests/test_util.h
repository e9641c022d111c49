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

#ifndef SUBMAX_TESTS_TEST_UTIL_H_
#define SUBMAX_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <memory>
#include <random>
#include <utility>
#include <vector>

#include "submax/eme.h"
#include "submax/element_set.h"
#include "submax/set_function.h"

namespace submax::testing {

inline std::shared_ptr<CutFunction> RandomCut(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<WeightedEdge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng() % 2) edges.push_back({u, v, 1.0 + rng() % 5});
    }
  }
  return MakeCut(n, edges);
}

inline std::shared_ptr<CoverageFunction> RandomCoverage(int n,
                                                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int universe = 2 * n;
  std::vector<double> weights(universe);
  for (double& w : weights) w = 1.0 + rng() % 5;
  std::vector<std::vector<int>> covers(n);
  for (auto& c : covers) {
    for (int k = 0; k < 3; ++k) {
      c.push_back(static_cast<int>(rng() % universe));
    }
  }
  return MakeCoverage(weights, covers);
}

// Coverage plus cut, tabulated: non-monotone, non-negative, submodular.
inline std::shared_ptr<TableFunction> RandomMixed(int n, std::uint64_t seed) {
  auto cover = RandomCoverage(n, seed);
  auto cut = RandomCut(n, seed + 1);
  std::vector<double> values(std::size_t{1} << n);
  for (std::uint64_t s = 0; s < values.size(); ++s) {
    values[s] = cover->Value(ElementSet(s)) + cut->Value(ElementSet(s));
  }
  return MakeTable(values, true);
}

// `frac` fractional coordinates on random nonempty subsets, plus an optional
// sure set.
inline EmeVector RandomEme(int n, int frac, std::uint64_t seed,
                           bool with_sure = false) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.05, 0.95);
  std::vector<std::pair<ElementSet, double>> coords;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> used;
  while (static_cast<int>(coords.size()) < frac) {
    std::uint64_t bits = 1 + rng() % full;
    if (rng() % 2) bits = std::uint64_t{1} << (rng() % n);
    bool seen = false;
    for (std::uint64_t b : used) seen = seen || b == bits;
    if (seen) continue;
    used.push_back(bits);
    coords.push_back({ElementSet(bits), unit(rng)});
  }
  ElementSet sure;
  if (with_sure) sure.insert(static_cast<int>(rng() % n));
  // Coordinates inside the sure set would be pruned; keep them outside.
  std::vector<std::pair<ElementSet, double>> kept;
  for (const auto& c : coords) {
    if (!c.first.IsSubsetOf(sure)) kept.push_back(c);
  }
  return EmeVector::FromCoordinates(n, sure, kept);
}

// F(y) by explicit enumeration of which coordinates fire, independent of the
// library's realization code.
inline double ExplicitF(const SetFunction& f, const EmeVector& y) {
  std::vector<std::pair<ElementSet, double>> coords(y.coords().begin(),
                                                    y.coords().end());
  const std::size_t k = coords.size();
  double total = 0.0;
  for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << k);
       ++pattern) {
    double p = 1.0;
    ElementSet s = y.sure();
    for (std::size_t i = 0; i < k; ++i) {
      if ((pattern >> i) & 1) {
        p *= coords[i].second;
        s |= coords[i].first;
      } else {
        p *= 1.0 - coords[i].second;
      }
    }
    total += p * f.Value(s);
  }
  return total;
}

// Mar_u(y) straight from the product formula.
inline double ExplicitMar(const EmeVector& y, int u) {
  if (y.sure().contains(u)) return 1.0;
  double miss = 1.0;
  for (const auto& [s, p] : y.coords()) {
    if (s.contains(u)) miss *= 1.0 - p;
  }
  return 1.0 - miss;
}

}  // namespace submax::testing

#endif  // SUBMAX_TESTS_TEST_UTIL_H_
