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

#ifndef SUBMAX_SET_FUNCTION_H_
#define SUBMAX_SET_FUNCTION_H_

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "submax/element_set.h"

namespace submax {

// Shared, thread-safe tally of value-oracle calls.
class QueryCounter {
 public:
  void Add(std::int64_t k = 1) { count_.fetch_add(k, std::memory_order_relaxed); }
  std::int64_t count() const { return count_.load(std::memory_order_relaxed); }

 private:
  std::atomic<std::int64_t> count_{0};
};

// Real elements occupy [0, n_real); dummies occupy [n_real, n_real + n_dummy).
struct GroundSet {
  int n_real = 0;
  int n_dummy = 0;

  int total() const { return n_real + n_dummy; }
  bool IsDummy(int e) const { return e >= n_real; }
  ElementSet real() const { return ElementSet::Prefix(n_real); }
  ElementSet dummies() const { return ElementSet::Range(n_real, total()); }
  ElementSet all() const { return ElementSet::Prefix(total()); }
};

// Value oracle over subsets of {0, ..., size()-1}. Implementations are
// immutable after construction; every oracle that wraps another shares the
// wrapped oracle's counter, so queries() always reports calls that reached a
// concrete objective.
class SetFunction {
 public:
  virtual ~SetFunction() = default;

  virtual double Value(ElementSet s) const = 0;
  virtual int size() const = 0;

  // f(u | S) = f(S + u) - f(S).
  double Marginal(int u, ElementSet s) const {
    return Value(s.With(u)) - Value(s);
  }

  const std::shared_ptr<QueryCounter>& counter() const { return counter_; }
  std::int64_t queries() const { return counter_->count(); }

 protected:
  explicit SetFunction(std::shared_ptr<QueryCounter> counter)
      : counter_(std::move(counter)) {}

 private:
  std::shared_ptr<QueryCounter> counter_;
};

// Base for concrete objectives: every Value() call is one counted query.
class CountedFunction : public SetFunction {
 public:
  double Value(ElementSet s) const final {
    counter()->Add();
    return Evaluate(s);
  }

 protected:
  CountedFunction() : SetFunction(std::make_shared<QueryCounter>()) {}
  virtual double Evaluate(ElementSet s) const = 0;
};

// Weighted coverage: element e covers a subset of a weighted universe.
class CoverageFunction final : public CountedFunction {
 public:
  CoverageFunction(std::vector<double> universe_weights,
                   std::vector<std::vector<int>> covers);
  int size() const override { return static_cast<int>(covers_.size()); }

  const std::vector<double>& universe_weights() const { return weights_; }
  const std::vector<std::vector<int>>& covers() const { return covers_; }

 protected:
  double Evaluate(ElementSet s) const override;

 private:
  std::vector<double> weights_;
  std::vector<std::vector<int>> covers_;
  std::vector<std::vector<std::uint64_t>> cover_words_;
};

struct WeightedEdge {
  int u = 0;
  int v = 0;
  double weight = 1.0;
};

// Undirected cut function: total weight of edges with exactly one endpoint in S.
class CutFunction final : public CountedFunction {
 public:
  CutFunction(int n, std::vector<WeightedEdge> edges);
  int size() const override { return n_; }
  const std::vector<WeightedEdge>& edges() const { return edges_; }

 protected:
  double Evaluate(ElementSet s) const override;

 private:
  int n_;
  std::vector<WeightedEdge> edges_;
};

inline constexpr int kDefaultTableCap = 20;

// Explicit lookup table indexed by subset bitmask.
class TableFunction final : public CountedFunction {
 public:
  TableFunction(int n, std::vector<double> values);
  int size() const override { return n_; }
  const std::vector<double>& values() const { return values_; }

 protected:
  double Evaluate(ElementSet s) const override {
    return values_[static_cast<std::size_t>(s.bits())];
  }

 private:
  int n_;
  std::vector<double> values_;
};

// f̄(S) = f(S minus dummies) over a ground set extended by `count` dummies.
class DummyAugmentedFunction final : public SetFunction {
 public:
  DummyAugmentedFunction(std::shared_ptr<const SetFunction> base, int count);
  double Value(ElementSet s) const override {
    return base_->Value(s & ground_.real());
  }
  int size() const override { return ground_.total(); }
  const GroundSet& ground() const { return ground_; }
  const SetFunction& base() const { return *base_; }

 private:
  std::shared_ptr<const SetFunction> base_;
  GroundSet ground_;
};

// f_{-Z}(S) = f(S) - sum over u in Z∩S of (f({u}) - f(∅) + 1). Adding any
// u in Z lowers the value by at least 1; marginals outside Z are unchanged.
class ShiftedFunction final : public SetFunction {
 public:
  ShiftedFunction(std::shared_ptr<const SetFunction> base, ElementSet shifted);
  double Value(ElementSet s) const override;
  int size() const override { return base_->size(); }
  ElementSet shifted() const { return shifted_; }
  double penalty(int u) const { return penalties_[u]; }

 private:
  std::shared_ptr<const SetFunction> base_;
  ElementSet shifted_;
  std::vector<double> penalties_;
};

// g(S) = f(S ∪ E). Members of E are inert in g.
class TranslatedFunction final : public SetFunction {
 public:
  TranslatedFunction(std::shared_ptr<const SetFunction> base, ElementSet fixed);
  double Value(ElementSet s) const override { return base_->Value(s | fixed_); }
  int size() const override { return base_->size(); }
  ElementSet fixed() const { return fixed_; }
  // The ground set of g: everything outside E.
  ElementSet ground() const { return ElementSet::Prefix(size()) - fixed_; }

 private:
  std::shared_ptr<const SetFunction> base_;
  ElementSet fixed_;
};

std::shared_ptr<CoverageFunction> MakeCoverage(
    std::vector<double> universe_weights, std::vector<std::vector<int>> covers);
std::shared_ptr<CutFunction> MakeCut(int n, std::vector<WeightedEdge> edges);
std::shared_ptr<TableFunction> MakeTable(std::vector<double> values,
                                         bool require_nonnegative = false,
                                         int cap = kDefaultTableCap);
std::shared_ptr<DummyAugmentedFunction> AugmentWithDummies(
    std::shared_ptr<const SetFunction> f, int count);
std::shared_ptr<ShiftedFunction> ShiftOut(std::shared_ptr<const SetFunction> f,
                                          ElementSet z);
std::shared_ptr<TranslatedFunction> RestrictTranslate(
    std::shared_ptr<const SetFunction> f, ElementSet e);

inline constexpr int kMaxExhaustiveValidation = 12;

// Exhaustive scan of f(A) + f(B) >= f(A ∪ B) + f(A ∩ B) over all pairs.
// Returns the first violating (A, B) in ascending order, if any.
std::optional<std::pair<ElementSet, ElementSet>> FindSubmodularityViolation(
    const SetFunction& f, double tolerance = 1e-9);
bool IsSubmodular(const SetFunction& f, double tolerance = 1e-9);

// Every subset value, indexed by bitmask (2^n queries).
std::vector<double> Tabulate(const SetFunction& f);

}  // namespace submax

#endif  // SUBMAX_SET_FUNCTION_H_
