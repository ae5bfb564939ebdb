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

#ifndef EXTDOM_DOMINATION_H_
#define EXTDOM_DOMINATION_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/rational.hpp>

#include "extdom/graph.h"

namespace extdom {

using Rational = boost::rational<std::int64_t>;

// dom(A) = |union of N_k[v] over v in A|. Duplicate or out-of-range ids throw.
int DomCount(const UndirectedGraph& g, std::span<const Vertex> dominators,
             int k);
// ext(A) = dom(A) - |A|: vertices dominated by A that are not in A.
int ExtCount(const UndirectedGraph& g, std::span<const Vertex> dominators,
             int k);

struct DominationSolution {
  // Selection order for greedy results, ascending otherwise.
  std::vector<Vertex> dominators;
  int k = 1;
  int dom_value = 0;
  int ext_value = 0;

  int size() const { return static_cast<int>(dominators.size()); }
};

// How greedy resolves equal marginal gains.
//  kLowestId / kHighestId: plain id order.
//  kCenterPriority: designated centers first, then vertices not yet
//  dominated, then lowest id.
struct TieBreakPolicy {
  enum class Variant { kLowestId, kHighestId, kCenterPriority };

  Variant variant = Variant::kLowestId;
  std::vector<Vertex> centers;

  static TieBreakPolicy LowestId() { return {}; }
  static TieBreakPolicy HighestId() { return {Variant::kHighestId, {}}; }
  static TieBreakPolicy CenterPriority(std::vector<Vertex> centers) {
    return {Variant::kCenterPriority, std::move(centers)};
  }
};

// The greedy run A_1 ⊂ A_2 ⊂ ... ⊂ A_p, stored as the selection order plus
// dom/ext after each step (index i holds the values of A_{i+1}).
struct GreedyTrace {
  int num_vertices = 0;
  int k = 1;
  std::vector<Vertex> order;
  std::vector<int> dom;
  std::vector<int> ext;

  int steps() const { return static_cast<int>(order.size()); }
  // The solution formed by the first `p` picks; p == steps() by default.
  DominationSolution Prefix(int p) const;
  DominationSolution Final() const { return Prefix(steps()); }
};

// Repeatedly adds the vertex with the largest marginal dom gain. p == 0
// yields an empty trace; p > n throws kInfeasibleCardinality.
GreedyTrace GreedyDominators(const UndirectedGraph& g, int p, int k,
                             const TieBreakPolicy& policy);

struct ThetaSigmaProfile {
  // theta[i] = ext(A_{i+1}) / (i+1).
  std::vector<Rational> theta;
  // sigma[i] = ext(A_{i+1}) / (n-i-1); absent where the prefix is all of V.
  std::vector<std::optional<Rational>> sigma;
};

ThetaSigmaProfile ComputeThetaSigma(const GreedyTrace& trace, int n);

}  // namespace extdom

#endif  // EXTDOM_DOMINATION_H_
