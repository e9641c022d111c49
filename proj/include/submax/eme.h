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

#ifndef SUBMAX_EME_H_
#define SUBMAX_EME_H_

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "submax/element_set.h"
#include "submax/set_function.h"

namespace submax {

inline constexpr int kDefaultFracCap = 24;

// Coordinates at or below this value are dropped as zero. This is the only
// value-altering tolerance in the EME algebra.
inline constexpr double kDropThreshold = 1e-15;

// A point y in [0,1]^(2^N) with finitely many nonzero coordinates.
//
// Coordinates equal to 1 are folded into a single sure set (the union of
// their subsets), so only strictly fractional coordinates are stored and
// evaluation costs 2^frac(y). A coordinate whose subset lies inside the sure
// set is value-neutral and is pruned. Instances are immutable values.
class EmeVector {
 public:
  explicit EmeVector(int n, int frac_cap = kDefaultFracCap);

  // e_S: the coordinate of S set to 1, all others 0.
  static EmeVector Indicator(int n, ElementSet s,
                             int frac_cap = kDefaultFracCap);
  // Builds a vector from explicit coordinates; repeated subsets are combined
  // with the probabilistic sum.
  static EmeVector FromCoordinates(
      int n, ElementSet sure,
      const std::vector<std::pair<ElementSet, double>>& coords,
      int frac_cap = kDefaultFracCap);

  int size() const { return n_; }
  int frac_cap() const { return frac_cap_; }
  ElementSet sure() const { return sure_; }
  // Fractional coordinates, in ascending subset-bitmask order.
  const std::map<ElementSet, double>& coords() const { return coords_; }

  int frac() const { return static_cast<int>(coords_.size()); }
  int supp() const { return frac() + (sure_.empty() ? 0 : 1); }
  bool IsIntegral() const { return coords_.empty(); }

  // y_S. Nonempty subsets of the sure set read as 1 because they are folded.
  double coordinate(ElementSet s) const;

  EmeVector WithCoordinate(ElementSet s, double p) const;
  EmeVector WithFracCap(int frac_cap) const;

  bool operator==(const EmeVector& other) const = default;

 private:
  friend EmeVector ProbSum(const EmeVector& a, const EmeVector& b);
  friend EmeVector Join(const EmeVector& y, ElementSet a);
  friend EmeVector Relax(const EmeVector& y, int u);

  void Put(ElementSet s, double p);
  void AddToSure(ElementSet s);
  void CheckBudget() const;

  int n_;
  int frac_cap_;
  ElementSet sure_;
  std::map<ElementSet, double> coords_;
};

// Per-element inclusion probabilities Mar_u(y) = Pr[u in R(y)].
using MarginalVector = std::vector<double>;

struct Outcome {
  ElementSet set;
  double probability = 0.0;
};

// The distribution of the random set R(y), with realizations that produce the
// same union merged. Outcomes are sorted by set bitmask.
class Realizations {
 public:
  explicit Realizations(std::vector<Outcome> outcomes)
      : outcomes_(std::move(outcomes)) {}
  const std::vector<Outcome>& outcomes() const { return outcomes_; }

  // E[f(R(y) ∪ extra)], one query per outcome, ascending outcome order.
  double Expect(const SetFunction& f, ElementSet extra = ElementSet()) const;

 private:
  std::vector<Outcome> outcomes_;
};

// Enumerates all 2^frac(y) inclusion patterns. Throws FracBudgetError when
// frac(y) exceeds the vector's cap.
Realizations Realize(const EmeVector& y);

// F(y) = E[f(R(y))], computed exactly.
double EvaluateF(const SetFunction& f, const EmeVector& y);

MarginalVector Marginals(const EmeVector& y);
double InfNorm(const MarginalVector& x);

// Coordinate-wise 1 - (1 - a_S)(1 - b_S). The result keeps a's frac cap.
EmeVector ProbSum(const EmeVector& a, const EmeVector& b);

// e_A ∨ y.
EmeVector Join(const EmeVector& y, ElementSet a);

// Folds every coordinate containing u into the singleton {u}: y_{u} becomes
// Mar_u(y) and each S+u is merged into S. Preserves Mar, does not decrease F,
// and raises frac by at most one.
EmeVector Relax(const EmeVector& y, int u);

// dF/dy_S = (F(e_S ∨ y) - F(y)) / (1 - y_S). Throws ContractViolation when
// y_S = 1.
double PartialDerivative(const SetFunction& f, const EmeVector& y,
                         ElementSet s);

// g_y(A) = E[h(R(y) ∪ A)] as a set function; with h = f this is F(e_A ∨ y).
// Shares h's query counter.
class PointExtension final : public SetFunction {
 public:
  PointExtension(std::shared_ptr<const SetFunction> h, const EmeVector& y);
  PointExtension(std::shared_ptr<const SetFunction> h,
                 std::shared_ptr<const Realizations> realizations);
  double Value(ElementSet a) const override;
  int size() const override { return h_->size(); }
  const Realizations& realizations() const { return *realizations_; }

 private:
  std::shared_ptr<const SetFunction> h_;
  std::shared_ptr<const Realizations> realizations_;
};

}  // namespace submax

#endif  // SUBMAX_EME_H_
