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

#include "submax/set_function.h"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "submax/errors.h"

namespace submax {
namespace {

void CheckGroundSize(int n) {
  if (n < 0 || n > kMaxGroundSize) {
    throw InvalidArgument("ground set size " + std::to_string(n) +
                          " outside [0, 64]");
  }
}

}  // namespace

CoverageFunction::CoverageFunction(std::vector<double> universe_weights,
                                   std::vector<std::vector<int>> covers)
    : weights_(std::move(universe_weights)), covers_(std::move(covers)) {
  CheckGroundSize(static_cast<int>(covers_.size()));
  for (double w : weights_) {
    if (!(w >= 0.0)) throw InvalidArgument("coverage weight must be >= 0");
  }
  const std::size_t words = (weights_.size() + 63) / 64;
  cover_words_.assign(covers_.size(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t e = 0; e < covers_.size(); ++e) {
    for (int item : covers_[e]) {
      if (item < 0 || static_cast<std::size_t>(item) >= weights_.size()) {
        throw InvalidArgument("coverage item " + std::to_string(item) +
                              " outside the universe");
      }
      cover_words_[e][item / 64] |= std::uint64_t{1} << (item % 64);
    }
  }
}

double CoverageFunction::Evaluate(ElementSet s) const {
  const std::size_t words = (weights_.size() + 63) / 64;
  if (words == 1) {
    std::uint64_t covered = 0;
    for (int e : s) covered |= cover_words_[e][0];
    double total = 0.0;
    for (int bit : ElementSet(covered)) total += weights_[bit];
    return total;
  }
  std::vector<std::uint64_t> covered(words, 0);
  for (int e : s) {
    for (std::size_t w = 0; w < words; ++w) covered[w] |= cover_words_[e][w];
  }
  double total = 0.0;
  for (std::size_t w = 0; w < words; ++w) {
    for (int bit : ElementSet(covered[w])) total += weights_[w * 64 + bit];
  }
  return total;
}

CutFunction::CutFunction(int n, std::vector<WeightedEdge> edges)
    : n_(n), edges_(std::move(edges)) {
  CheckGroundSize(n);
  for (const WeightedEdge& e : edges_) {
    if (e.u == e.v) throw InvalidArgument("cut graph has a self-loop");
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw InvalidArgument("cut edge endpoint outside the ground set");
    }
    if (!(e.weight >= 0.0)) throw InvalidArgument("cut weight must be >= 0");
  }
}

double CutFunction::Evaluate(ElementSet s) const {
  double total = 0.0;
  for (const WeightedEdge& e : edges_) {
    if (s.contains(e.u) != s.contains(e.v)) total += e.weight;
  }
  return total;
}

TableFunction::TableFunction(int n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {}

DummyAugmentedFunction::DummyAugmentedFunction(
    std::shared_ptr<const SetFunction> base, int count)
    : SetFunction(base->counter()),
      base_(std::move(base)),
      ground_{base_->size(), count} {
  if (count < 0) throw InvalidArgument("dummy count must be >= 0");
  CheckGroundSize(ground_.total());
}

ShiftedFunction::ShiftedFunction(std::shared_ptr<const SetFunction> base,
                                 ElementSet shifted)
    : SetFunction(base->counter()),
      base_(std::move(base)),
      shifted_(shifted),
      penalties_(base_->size(), 0.0) {
  if (!shifted_.IsSubsetOf(ElementSet::Prefix(base_->size()))) {
    throw InvalidArgument("shifted set outside the ground set");
  }
  if (shifted_.empty()) return;
  const double empty_value = base_->Value(ElementSet());
  for (int u : shifted_) {
    penalties_[u] = base_->Value(ElementSet{u}) - empty_value + 1.0;
  }
}

double ShiftedFunction::Value(ElementSet s) const {
  double value = base_->Value(s);
  for (int u : s & shifted_) value -= penalties_[u];
  return value;
}

TranslatedFunction::TranslatedFunction(std::shared_ptr<const SetFunction> base,
                                       ElementSet fixed)
    : SetFunction(base->counter()), base_(std::move(base)), fixed_(fixed) {
  if (!fixed_.IsSubsetOf(ElementSet::Prefix(base_->size()))) {
    throw InvalidArgument("translation set outside the ground set");
  }
}

std::shared_ptr<CoverageFunction> MakeCoverage(
    std::vector<double> universe_weights,
    std::vector<std::vector<int>> covers) {
  return std::make_shared<CoverageFunction>(std::move(universe_weights),
                                            std::move(covers));
}

std::shared_ptr<CutFunction> MakeCut(int n, std::vector<WeightedEdge> edges) {
  return std::make_shared<CutFunction>(n, std::move(edges));
}

std::shared_ptr<TableFunction> MakeTable(std::vector<double> values,
                                         bool require_nonnegative, int cap) {
  int n = 0;
  while (n <= cap && (std::size_t{1} << n) < values.size()) ++n;
  if (n > cap || (std::size_t{1} << n) != values.size()) {
    throw InvalidArgument("table length " + std::to_string(values.size()) +
                          " is not 2^n for n <= " + std::to_string(cap));
  }
  if (require_nonnegative) {
    for (double v : values) {
      if (!(v >= 0.0)) throw InvalidArgument("table value must be >= 0");
    }
  }
  return std::make_shared<TableFunction>(n, std::move(values));
}

std::shared_ptr<DummyAugmentedFunction> AugmentWithDummies(
    std::shared_ptr<const SetFunction> f, int count) {
  return std::make_shared<DummyAugmentedFunction>(std::move(f), count);
}

std::shared_ptr<ShiftedFunction> ShiftOut(std::shared_ptr<const SetFunction> f,
                                          ElementSet z) {
  return std::make_shared<ShiftedFunction>(std::move(f), z);
}

std::shared_ptr<TranslatedFunction> RestrictTranslate(
    std::shared_ptr<const SetFunction> f, ElementSet e) {
  return std::make_shared<TranslatedFunction>(std::move(f), e);
}

std::vector<double> Tabulate(const SetFunction& f) {
  if (f.size() > 24) throw InvalidArgument("ground set too large to tabulate");
  std::vector<double> values(std::size_t{1} << f.size());
  for (std::size_t s = 0; s < values.size(); ++s) {
    values[s] = f.Value(ElementSet(s));
  }
  return values;
}

std::optional<std::pair<ElementSet, ElementSet>> FindSubmodularityViolation(
    const SetFunction& f, double tolerance) {
  if (f.size() > kMaxExhaustiveValidation) {
    throw InvalidArgument("exhaustive submodularity scan limited to n <= " +
                          std::to_string(kMaxExhaustiveValidation));
  }
  const std::vector<double> v = Tabulate(f);
  const std::uint64_t count = v.size();
  for (std::uint64_t a = 0; a < count; ++a) {
    for (std::uint64_t b = a + 1; b < count; ++b) {
      if (v[a] + v[b] < v[a | b] + v[a & b] - tolerance) {
        return std::make_pair(ElementSet(a), ElementSet(b));
      }
    }
  }
  return std::nullopt;
}

bool IsSubmodular(const SetFunction& f, double tolerance) {
  return !FindSubmodularityViolation(f, tolerance).has_value();
}

}  // namespace submax
