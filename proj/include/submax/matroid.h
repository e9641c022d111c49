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

#ifndef SUBMAX_MATROID_H_
#define SUBMAX_MATROID_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "submax/eme.h"
#include "submax/element_set.h"
#include "submax/set_function.h"

namespace submax {

// Independence oracle over {0, ..., size()-1}. Independence queries are
// tallied separately from value queries.
class Matroid {
 public:
  virtual ~Matroid() = default;

  virtual bool IsIndependent(ElementSet s) const = 0;
  virtual const GroundSet& ground() const = 0;
  int size() const { return ground().total(); }

  // Rank of the whole ground set, computed once at construction.
  int rank() const { return rank_; }

  // Size of a maximal independent subset of s, found greedily in ascending
  // element order.
  int Rank(ElementSet s) const;
  ElementSet GreedyBasis(ElementSet s) const;
  bool IsBasis(ElementSet s) const {
    return IsIndependent(s) && s.size() == rank_;
  }

  // Membership of x in conv{1_S : S independent}: x in [0,1]^N and
  // x(A) <= rank(A) for all A, up to `tolerance`. The default scans every
  // subset (n <= 20); families with a closed form override it.
  virtual bool InPolytope(const MarginalVector& x,
                          double tolerance = 1e-9) const;

  virtual std::string kind() const = 0;

  const std::shared_ptr<QueryCounter>& counter() const { return counter_; }
  std::int64_t queries() const { return counter_->count(); }

 protected:
  explicit Matroid(std::shared_ptr<QueryCounter> counter)
      : counter_(std::move(counter)) {}
  // Call at the end of a derived constructor.
  void InitRank() { rank_ = Rank(ground().all()); }

 private:
  std::shared_ptr<QueryCounter> counter_;
  int rank_ = 0;
};

class UniformMatroid final : public Matroid {
 public:
  UniformMatroid(int n, int k);
  bool IsIndependent(ElementSet s) const override {
    counter()->Add();
    return s.size() <= k_;
  }
  const GroundSet& ground() const override { return ground_; }
  bool InPolytope(const MarginalVector& x,
                  double tolerance = 1e-9) const override;
  std::string kind() const override { return "uniform"; }
  int k() const { return k_; }

 private:
  GroundSet ground_;
  int k_;
};

struct PartitionBlock {
  std::vector<int> members;
  int capacity = 0;
};

// Elements outside every block are unconstrained.
class PartitionMatroid final : public Matroid {
 public:
  PartitionMatroid(int n, std::vector<PartitionBlock> parts);
  bool IsIndependent(ElementSet s) const override;
  const GroundSet& ground() const override { return ground_; }
  bool InPolytope(const MarginalVector& x,
                  double tolerance = 1e-9) const override;
  std::string kind() const override { return "partition"; }
  const std::vector<PartitionBlock>& parts() const { return parts_; }

 private:
  GroundSet ground_;
  std::vector<PartitionBlock> parts_;
  std::vector<ElementSet> masks_;
};

struct GraphEdge {
  int u = 0;
  int v = 0;
};

// Elements are edges of a multigraph; a set is independent iff acyclic.
class GraphicMatroid final : public Matroid {
 public:
  GraphicMatroid(int num_vertices, std::vector<GraphEdge> edges);
  bool IsIndependent(ElementSet s) const override;
  const GroundSet& ground() const override { return ground_; }
  std::string kind() const override { return "graphic"; }
  int num_vertices() const { return num_vertices_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }

 private:
  GroundSet ground_;
  int num_vertices_;
  std::vector<GraphEdge> edges_;
};

// M̄: the base matroid plus `dummy_count` dummies; S is independent iff
// S ∩ N is independent in the base and |S| <= rank(base).
class AugmentedMatroid final : public Matroid {
 public:
  AugmentedMatroid(std::shared_ptr<const Matroid> base, int dummy_count);
  bool IsIndependent(ElementSet s) const override;
  const GroundSet& ground() const override { return ground_; }
  std::string kind() const override { return "augmented-" + base_->kind(); }
  const Matroid& base() const { return *base_; }

 private:
  std::shared_ptr<const Matroid> base_;
  GroundSet ground_;
};

std::shared_ptr<UniformMatroid> MakeUniform(int n, int k);
std::shared_ptr<PartitionMatroid> MakePartition(int n,
                                                std::vector<PartitionBlock> parts);
std::shared_ptr<GraphicMatroid> MakeGraphic(int num_vertices,
                                            std::vector<GraphEdge> edges);
// Defaults to rank(base) dummies, enough to complete any independent set.
std::shared_ptr<AugmentedMatroid> Augment(std::shared_ptr<const Matroid> base,
                                          std::optional<int> dummy_count = {});

// Extends an independent s to a basis. Scans elements in ascending id; when f
// is given, real elements are taken only if their marginal is non-negative,
// then dummies fill the rest, then any remaining element that fits.
ElementSet CompleteToBasis(const Matroid& m, ElementSet s,
                           const SetFunction* f = nullptr);

bool InMatroidPolytope(const Matroid& m, const MarginalVector& x,
                       double tolerance = 1e-9);

// rank(A) for every A, indexed by bitmask (n <= 20).
std::vector<int> RankTable(const Matroid& m);

// Exhaustive check of the matroid axioms (n <= 12). Returns a description of
// the first failure.
std::optional<std::string> FindMatroidAxiomViolation(const Matroid& m);

}  // namespace submax

#endif  // SUBMAX_MATROID_H_
