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

#include "submax/eme.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "submax/errors.h"

namespace submax {

EmeVector::EmeVector(int n, int frac_cap) : n_(n), frac_cap_(frac_cap) {
  if (n < 0 || n > kMaxGroundSize) {
    throw InvalidArgument("EME ground size outside [0, 64]");
  }
  if (frac_cap < 0) throw InvalidArgument("frac cap must be >= 0");
}

EmeVector EmeVector::Indicator(int n, ElementSet s, int frac_cap) {
  EmeVector y(n, frac_cap);
  y.Put(s, 1.0);
  return y;
}

EmeVector EmeVector::FromCoordinates(
    int n, ElementSet sure,
    const std::vector<std::pair<ElementSet, double>>& coords, int frac_cap) {
  EmeVector y(n, frac_cap);
  y.AddToSure(sure);
  for (const auto& [s, p] : coords) {
    const double current = y.coordinate(s);
    y.Put(s, 1.0 - (1.0 - current) * (1.0 - p));
  }
  y.CheckBudget();
  return y;
}

double EmeVector::coordinate(ElementSet s) const {
  if (!s.empty() && s.IsSubsetOf(sure_)) return 1.0;
  auto it = coords_.find(s);
  return it == coords_.end() ? 0.0 : it->second;
}

EmeVector EmeVector::WithCoordinate(ElementSet s, double p) const {
  EmeVector y = *this;
  y.Put(s, p);
  y.CheckBudget();
  return y;
}

EmeVector EmeVector::WithFracCap(int frac_cap) const {
  EmeVector y = *this;
  y.frac_cap_ = frac_cap;
  y.CheckBudget();
  return y;
}

void EmeVector::Put(ElementSet s, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidArgument("EME coordinate must lie in [0, 1]");
  }
  if (!s.IsSubsetOf(ElementSet::Prefix(n_))) {
    throw InvalidArgument("EME coordinate outside the ground set");
  }
  if (s.empty() || s.IsSubsetOf(sure_)) return;
  if (p >= 1.0) {
    AddToSure(s);
  } else if (p <= kDropThreshold) {
    coords_.erase(s);
  } else {
    coords_[s] = p;
  }
}

void EmeVector::AddToSure(ElementSet s) {
  if (s.IsSubsetOf(sure_)) return;
  sure_ |= s;
  std::erase_if(coords_,
                [&](const auto& entry) { return entry.first.IsSubsetOf(sure_); });
}

void EmeVector::CheckBudget() const {
  if (frac() > frac_cap_) throw FracBudgetError(frac(), frac_cap_);
}

double Realizations::Expect(const SetFunction& f, ElementSet extra) const {
  double total = 0.0;
  for (const Outcome& o : outcomes_) {
    total += o.probability * f.Value(o.set | extra);
  }
  return total;
}

Realizations Realize(const EmeVector& y) {
  if (y.frac() > y.frac_cap()) throw FracBudgetError(y.frac(), y.frac_cap());
  std::vector<ElementSet> sets;
  std::vector<double> probs;
  for (const auto& [s, p] : y.coords()) {
    sets.push_back(s);
    probs.push_back(p);
  }
  const int k = static_cast<int>(sets.size());
  std::unordered_map<std::uint64_t, double> mass;

  // Depth-first over coordinates from the highest index down, "excluded"
  // before "included": leaves arrive in ascending pattern index, so every
  // merged probability is accumulated in a fixed order.
  auto visit = [&](auto&& self, int level, ElementSet acc, double p) -> void {
    if (level < 0) {
      mass[acc.bits()] += p;
      return;
    }
    self(self, level - 1, acc, p * (1.0 - probs[level]));
    self(self, level - 1, acc | sets[level], p * probs[level]);
  };
  visit(visit, k - 1, y.sure(), 1.0);

  std::vector<Outcome> outcomes;
  outcomes.reserve(mass.size());
  for (const auto& [bits, p] : mass) outcomes.push_back({ElementSet(bits), p});
  std::sort(outcomes.begin(), outcomes.end(),
            [](const Outcome& a, const Outcome& b) { return a.set < b.set; });
  return Realizations(std::move(outcomes));
}

double EvaluateF(const SetFunction& f, const EmeVector& y) {
  return Realize(y).Expect(f);
}

MarginalVector Marginals(const EmeVector& y) {
  std::vector<double> keep(y.size(), 1.0);
  for (const auto& [s, p] : y.coords()) {
    for (int u : s) keep[u] *= 1.0 - p;
  }
  MarginalVector mar(y.size(), 0.0);
  for (int u = 0; u < y.size(); ++u) {
    mar[u] = y.sure().contains(u) ? 1.0 : 1.0 - keep[u];
  }
  return mar;
}

double InfNorm(const MarginalVector& x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

EmeVector ProbSum(const EmeVector& a, const EmeVector& b) {
  if (a.size() != b.size()) {
    throw InvalidArgument("probabilistic sum of vectors over different grounds");
  }
  EmeVector out(a.size(), a.frac_cap());
  out.AddToSure(a.sure() | b.sure());
  auto ia = a.coords().begin();
  auto ib = b.coords().begin();
  while (ia != a.coords().end() || ib != b.coords().end()) {
    if (ib == b.coords().end() ||
        (ia != a.coords().end() && ia->first < ib->first)) {
      out.Put(ia->first, ia->second);
      ++ia;
    } else if (ia == a.coords().end() || ib->first < ia->first) {
      out.Put(ib->first, ib->second);
      ++ib;
    } else {
      out.Put(ia->first, 1.0 - (1.0 - ia->second) * (1.0 - ib->second));
      ++ia;
      ++ib;
    }
  }
  out.CheckBudget();
  return out;
}

EmeVector Join(const EmeVector& y, ElementSet a) {
  EmeVector out = y;
  out.AddToSure(a);
  return out;
}

EmeVector Relax(const EmeVector& y, int u) {
  if (u < 0 || u >= y.size()) throw InvalidArgument("relax element outside ground");
  const double mar_u = Marginals(y)[u];
  EmeVector out(y.size(), y.frac_cap());
  out.AddToSure(y.sure());
  std::vector<std::pair<ElementSet, double>> containing;
  for (const auto& [s, p] : y.coords()) {
    if (s.contains(u)) {
      containing.emplace_back(s, p);
    } else {
      out.coords_[s] = p;
    }
  }
  for (const auto& [s, p] : containing) {
    const ElementSet rest = s.Without(u);
    if (rest.empty()) continue;
    out.Put(rest, 1.0 - (1.0 - p) * (1.0 - out.coordinate(rest)));
  }
  out.Put(ElementSet{u}, mar_u);
  out.CheckBudget();
  return out;
}

double PartialDerivative(const SetFunction& f, const EmeVector& y,
                         ElementSet s) {
  const double ys = y.coordinate(s);
  if (ys >= 1.0) {
    throw ContractViolation("partial derivative undefined at y_S = 1 for S = " +
                            s.ToString());
  }
  return (EvaluateF(f, Join(y, s)) - EvaluateF(f, y)) / (1.0 - ys);
}

PointExtension::PointExtension(std::shared_ptr<const SetFunction> h,
                               const EmeVector& y)
    : PointExtension(std::move(h), std::make_shared<Realizations>(Realize(y))) {}

PointExtension::PointExtension(std::shared_ptr<const SetFunction> h,
                               std::shared_ptr<const Realizations> realizations)
    : SetFunction(h->counter()),
      h_(std::move(h)),
      realizations_(std::move(realizations)) {}

double PointExtension::Value(ElementSet a) const {
  return realizations_->Expect(*h_, a);
}

}  // namespace submax
