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

#include <algorithm>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "submax/eme.h"
#include "submax/errors.h"
#include "submax/matroid.h"
#include "submax/matroid_solver.h"
#include "submax/set_function.h"

namespace submax {
namespace {

constexpr double kSnap = 1e-12;

double Snap(double p) {
  if (p < kSnap) return 0.0;
  if (p > 1.0 - kSnap) return 1.0;
  return p;
}

bool IsFractional(double p) { return p > 0.0 && p < 1.0; }

// Singleton-coordinate EME vector with y_{u} = p[u].
EmeVector FromSingletons(const std::vector<double>& p, int frac_cap) {
  const int n = static_cast<int>(p.size());
  ElementSet ones;
  std::vector<std::pair<ElementSet, double>> coords;
  for (int u = 0; u < n; ++u) {
    if (p[u] == 1.0) {
      ones.insert(u);
    } else if (p[u] > 0.0) {
      coords.emplace_back(ElementSet{u}, p[u]);
    }
  }
  return EmeVector::FromCoordinates(n, ones, coords, frac_cap);
}

}  // namespace

PipageResult PipageRound(const Matroid& m, const SetFunction& f,
                         const EmeVector& y, double tolerance) {
  if (y.size() != m.size()) {
    throw InvalidArgument("EME vector and matroid sizes differ");
  }
  if (!m.InPolytope(Marginals(y), tolerance)) {
    throw ContractViolation("Mar(y) lies outside the matroid polytope");
  }
  const Matroid* base = &m;
  if (const auto* augmented = dynamic_cast<const AugmentedMatroid*>(&m)) {
    base = &augmented->base();
  }
  const int n = base->size();
  const ElementSet real = ElementSet::Prefix(n);

  PipageResult result;
  result.start_value = EvaluateF(f, y);

  // R(y) ∩ N has the same law as R of the projected vector, and f ignores
  // dummies, so F is unchanged. Relaxing raises frac by at most one per
  // element; nothing is evaluated until every coordinate is a singleton.
  std::vector<std::pair<ElementSet, double>> projected;
  for (const auto& [s, p] : y.coords()) {
    if ((s & real).empty()) continue;
    projected.emplace_back(s & real, p);
  }
  EmeVector x = EmeVector::FromCoordinates(n, y.sure() & real, projected,
                                           y.frac_cap() + n);
  for (int u = 0; u < n; ++u) x = Relax(x, u);
  std::vector<double> p(n);
  for (int u = 0; u < n; ++u) p[u] = Snap(x.coordinate(ElementSet{u}));
  const int cap = y.frac_cap();
  auto value_at = [&](const std::vector<double>& q) {
    return EvaluateF(f, FromSingletons(q, std::max(cap, n)));
  };

  const std::vector<int> rank = RankTable(*base);
  const std::size_t count = rank.size();
  std::vector<double> slack(count);
  const int max_moves = 4 * n * n + 16;

  while (true) {
    ElementSet fractional;
    for (int u = 0; u < n; ++u) {
      if (IsFractional(p[u])) fractional.insert(u);
    }
    if (fractional.empty()) break;
    if (result.moves >= max_moves) {
      throw ContractViolation("pipage rounding did not converge");
    }
    for (std::size_t a = 0; a < count; ++a) {
      double total = 0.0;
      for (int u : ElementSet(a)) total += p[u];
      slack[a] = std::max(0.0, rank[a] - total);
    }
    auto min_slack = [&](ElementSet inside, ElementSet outside) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t a = 1; a < count; ++a) {
        const ElementSet set(a);
        if (inside.IsSubsetOf(set) && !set.Intersects(outside)) {
          best = std::min(best, slack[a]);
        }
      }
      return best;
    };

    // A fractional element in no tight set moves on its own; F is affine in
    // its coordinate, so one endpoint is at least as good.
    int loose = -1;
    double room = 0.0;
    for (int u : fractional) {
      const double s = min_slack(ElementSet{u}, ElementSet());
      if (s > tolerance) {
        loose = u;
        room = s;
        break;
      }
    }
    if (loose >= 0) {
      std::vector<double> down = p, up = p;
      down[loose] = 0.0;
      up[loose] = Snap(std::min(1.0, p[loose] + room));
      p = value_at(up) >= value_at(down) ? up : down;
      ++result.moves;
      continue;
    }

    // Every fractional element is in a tight set. The smallest tight set with
    // two fractional members gives an exchange pair that no other tight set
    // separates.
    std::size_t tight = 0;
    for (std::size_t a = 1; a < count; ++a) {
      const ElementSet set(a);
      if (slack[a] > tolerance || (set & fractional).size() < 2) continue;
      if (tight == 0 || set.size() < ElementSet(tight).size()) tight = a;
    }
    if (tight == 0) throw ContractViolation("pipage found no exchange pair");
    const ElementSet pair = ElementSet(tight) & fractional;
    const int i = pair.front();
    const int j = pair.Without(i).front();
    const double t_plus = std::min({1.0 - p[i], p[j],
                                    min_slack(ElementSet{i}, ElementSet{j})});
    const double t_minus = std::min({p[i], 1.0 - p[j],
                                     min_slack(ElementSet{j}, ElementSet{i})});
    std::vector<double> plus = p, minus = p;
    plus[i] = Snap(p[i] + t_plus);
    plus[j] = Snap(p[j] - t_plus);
    minus[i] = Snap(p[i] - t_minus);
    minus[j] = Snap(p[j] + t_minus);
    p = value_at(plus) >= value_at(minus) ? plus : minus;
    ++result.moves;
  }

  for (int u = 0; u < n; ++u) {
    if (p[u] == 1.0) result.set.insert(u);
  }
  if (!base->IsIndependent(result.set)) {
    throw ContractViolation("pipage rounding produced a dependent set " +
                            result.set.ToString());
  }
  result.value = f.Value(result.set);
  return result;
}

}  // namespace submax
