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

#include "submax/matroid.h"

#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "submax/errors.h"

namespace submax {
namespace {

constexpr int kMaxPolytopeScan = 20;

bool InUnitBox(const MarginalVector& x, double tolerance) {
  for (double v : x) {
    if (v < -tolerance || v > 1.0 + tolerance) return false;
  }
  return true;
}

void CheckSize(int n) {
  if (n < 0 || n > kMaxGroundSize) {
    throw InvalidArgument("matroid ground size outside [0, 64]");
  }
}

}  // namespace

int Matroid::Rank(ElementSet s) const { return GreedyBasis(s).size(); }

ElementSet Matroid::GreedyBasis(ElementSet s) const {
  ElementSet basis;
  for (int u : s) {
    if (IsIndependent(basis.With(u))) basis.insert(u);
  }
  return basis;
}

bool Matroid::InPolytope(const MarginalVector& x, double tolerance) const {
  return InMatroidPolytope(*this, x, tolerance);
}

UniformMatroid::UniformMatroid(int n, int k)
    : Matroid(std::make_shared<QueryCounter>()), ground_{n, 0}, k_(k) {
  CheckSize(n);
  if (k < 0 || k > n) throw InvalidArgument("uniform matroid needs 0 <= k <= n");
  InitRank();
}

bool UniformMatroid::InPolytope(const MarginalVector& x,
                                double tolerance) const {
  if (static_cast<int>(x.size()) != size() || !InUnitBox(x, tolerance)) {
    return false;
  }
  return std::accumulate(x.begin(), x.end(), 0.0) <= k_ + tolerance;
}

PartitionMatroid::PartitionMatroid(int n, std::vector<PartitionBlock> parts)
    : Matroid(std::make_shared<QueryCounter>()),
      ground_{n, 0},
      parts_(std::move(parts)) {
  CheckSize(n);
  ElementSet seen;
  for (const PartitionBlock& block : parts_) {
    if (block.capacity < 0) throw InvalidArgument("partition capacity < 0");
    ElementSet mask;
    for (int e : block.members) {
      if (e < 0 || e >= n) throw InvalidArgument("partition member outside ground");
      if (seen.contains(e) || mask.contains(e)) {
        throw InvalidArgument("partition blocks overlap at element " +
                              std::to_string(e));
      }
      mask.insert(e);
    }
    seen |= mask;
    masks_.push_back(mask);
  }
  InitRank();
}

bool PartitionMatroid::IsIndependent(ElementSet s) const {
  counter()->Add();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if ((s & masks_[i]).size() > parts_[i].capacity) return false;
  }
  return true;
}

bool PartitionMatroid::InPolytope(const MarginalVector& x,
                                  double tolerance) const {
  if (static_cast<int>(x.size()) != size() || !InUnitBox(x, tolerance)) {
    return false;
  }
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    double total = 0.0;
    for (int e : masks_[i]) total += x[e];
    if (total > parts_[i].capacity + tolerance) return false;
  }
  return true;
}

GraphicMatroid::GraphicMatroid(int num_vertices, std::vector<GraphEdge> edges)
    : Matroid(std::make_shared<QueryCounter>()),
      ground_{static_cast<int>(edges.size()), 0},
      num_vertices_(num_vertices),
      edges_(std::move(edges)) {
  CheckSize(ground_.n_real);
  for (const GraphEdge& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= num_vertices || e.v >= num_vertices) {
      throw InvalidArgument("graphic edge endpoint outside the vertex range");
    }
  }
  InitRank();
}

bool GraphicMatroid::IsIndependent(ElementSet s) const {
  counter()->Add();
  std::vector<int> parent(num_vertices_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (int e : s) {
    const int a = find(edges_[e].u);
    const int b = find(edges_[e].v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

AugmentedMatroid::AugmentedMatroid(std::shared_ptr<const Matroid> base,
                                   int dummy_count)
    : Matroid(base->counter()),
      base_(std::move(base)),
      ground_{base_->size(), dummy_count} {
  if (dummy_count < 0) throw InvalidArgument("dummy count must be >= 0");
  CheckSize(ground_.total());
  InitRank();
}

bool AugmentedMatroid::IsIndependent(ElementSet s) const {
  if (s.size() > base_->rank()) {
    counter()->Add();
    return false;
  }
  return base_->IsIndependent(s & ground_.real());
}

std::shared_ptr<UniformMatroid> MakeUniform(int n, int k) {
  return std::make_shared<UniformMatroid>(n, k);
}

std::shared_ptr<PartitionMatroid> MakePartition(
    int n, std::vector<PartitionBlock> parts) {
  return std::make_shared<PartitionMatroid>(n, std::move(parts));
}

std::shared_ptr<GraphicMatroid> MakeGraphic(int num_vertices,
                                            std::vector<GraphEdge> edges) {
  return std::make_shared<GraphicMatroid>(num_vertices, std::move(edges));
}

std::shared_ptr<AugmentedMatroid> Augment(std::shared_ptr<const Matroid> base,
                                          std::optional<int> dummy_count) {
  const int count = dummy_count.value_or(base->rank());
  return std::make_shared<AugmentedMatroid>(std::move(base), count);
}

ElementSet CompleteToBasis(const Matroid& m, ElementSet s,
                           const SetFunction* f) {
  if (!m.IsIndependent(s)) {
    throw ContractViolation("cannot complete a dependent set " + s.ToString() +
                            " to a basis");
  }
  const GroundSet& ground = m.ground();
  ElementSet out = s;
  if (f != nullptr) {
    for (int u : ground.real() - out) {
      if (out.size() == m.rank()) return out;
      if (m.IsIndependent(out.With(u)) && f->Marginal(u, out) >= 0.0) {
        out.insert(u);
      }
    }
    for (int u : ground.dummies() - out) {
      if (out.size() == m.rank()) return out;
      if (m.IsIndependent(out.With(u))) out.insert(u);
    }
  }
  for (int u : ground.all() - out) {
    if (out.size() == m.rank()) return out;
    if (m.IsIndependent(out.With(u))) out.insert(u);
  }
  return out;
}

std::vector<int> RankTable(const Matroid& m) {
  if (m.size() > kMaxPolytopeScan) {
    throw InvalidArgument("rank table limited to n <= 20");
  }
  // rank(A) = rank(A - v) + [v extends a greedy basis of A - v], where v is
  // the highest member of A; greedy bases of prefixes nest, so the basis of
  // A - v in ascending order is reused.
  const std::size_t count = std::size_t{1} << m.size();
  std::vector<int> rank(count, 0);
  std::vector<std::uint64_t> basis(count, 0);
  for (std::size_t a = 1; a < count; ++a) {
    const int v = 63 - std::countl_zero(static_cast<std::uint64_t>(a));
    const std::size_t rest = a & ~(std::size_t{1} << v);
    const ElementSet candidate = ElementSet(basis[rest]).With(v);
    if (m.IsIndependent(candidate)) {
      basis[a] = candidate.bits();
      rank[a] = rank[rest] + 1;
    } else {
      basis[a] = basis[rest];
      rank[a] = rank[rest];
    }
  }
  return rank;
}

bool InMatroidPolytope(const Matroid& m, const MarginalVector& x,
                       double tolerance) {
  if (static_cast<int>(x.size()) != m.size() || !InUnitBox(x, tolerance)) {
    return false;
  }
  const std::vector<int> rank = RankTable(m);
  for (std::size_t a = 1; a < rank.size(); ++a) {
    double total = 0.0;
    for (int u : ElementSet(a)) total += x[u];
    if (total > rank[a] + tolerance) return false;
  }
  return true;
}

std::optional<std::string> FindMatroidAxiomViolation(const Matroid& m) {
  if (m.size() > 12) throw InvalidArgument("axiom scan limited to n <= 12");
  const std::size_t count = std::size_t{1} << m.size();
  std::vector<bool> indep(count);
  for (std::size_t s = 0; s < count; ++s) indep[s] = m.IsIndependent(ElementSet(s));
  if (!indep[0]) return "empty set is dependent";
  std::vector<std::uint64_t> family;
  for (std::size_t s = 0; s < count; ++s) {
    if (!indep[s]) continue;
    family.push_back(s);
    for (int u : ElementSet(s)) {
      if (!indep[ElementSet(s).Without(u).bits()]) {
        return "not downward closed at " + ElementSet(s).ToString();
      }
    }
  }
  for (std::uint64_t a : family) {
    for (std::uint64_t b : family) {
      const ElementSet sa(a), sb(b);
      if (sa.size() >= sb.size()) continue;
      bool extends = false;
      for (int u : sb - sa) {
        if (indep[sa.With(u).bits()]) {
          extends = true;
          break;
        }
      }
      if (!extends) {
        return "exchange fails for A=" + sa.ToString() + " B=" + sb.ToString();
      }
    }
  }
  return std::nullopt;
}

}  // namespace submax
