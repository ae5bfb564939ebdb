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

#ifndef EXTDOM_DECOMPOSITION_H_
#define EXTDOM_DECOMPOSITION_H_

#include <vector>

#include "extdom/domination.h"
#include "extdom/graph.h"

namespace extdom {

// One rooted piece of a tree decomposition. `tree.root` is the vertex the
// decomposition picked for this piece.
struct TreeComponent {
  RootedTree tree;
  // The leftover of the input tree was too small to stand alone and was
  // merged into this piece; the picked root is kept.
  bool absorbed_remainder = false;
  // The whole input tree was under the size floor and returned as is.
  bool below_threshold = false;

  Vertex root() const { return tree.root; }
  int size() const { return tree.size(); }
};

// Splits `t` into rooted pieces of at least k+1+delta vertices each, every
// piece minimal (all subtrees below its root have at most k+delta vertices)
// except one that absorbed a too-small remainder. The next piece is always
// rooted at the first vertex, in post-order with ascending children, whose
// remaining subtree reaches the floor. delta must be 0 or 1.
std::vector<TreeComponent> DecomposeTree(const RootedTree& t, int delta, int k);

// Shape of a piece as a member of S_{leaves, pendants}: a hub adjacent to
// `leaf_children` leaves and to `pendant_children` vertices that each carry
// exactly one further leaf.
struct SnmClass {
  int leaf_children = 0;
  int pendant_children = 0;
  Vertex hub = 0;

  friend bool operator==(const SnmClass&, const SnmClass&) = default;
};

// Requires at least 3 vertices. The hub is the piece's root when the root
// qualifies, otherwise the lowest qualifying id; leaf_children +
// pendant_children >= 2 always holds. Throws kStructural on other shapes.
SnmClass ClassifyComponent(const TreeComponent& c);

// The hub, except for the five-vertex path S_{0,2} where it is the lower-id
// neighbor of the hub.
Vertex DesignateCenter(const TreeComponent& c);

struct AuxiliaryGraph {
  UndirectedGraph graph;
  std::vector<TreeComponent> components;
  // Populated only for delta = 1, k = 1; pieces under 3 vertices get none.
  std::vector<Vertex> centers;
};

AuxiliaryGraph BuildAuxiliaryGraph(const UndirectedGraph& g, int delta, int k);

struct Algorithm2Result {
  DominationSolution solution;
  // Greedy on g with lowest-id ties, measured on g.
  DominationSolution graph_branch;
  // Greedy on the auxiliary graph, dom/ext re-measured on g.
  DominationSolution auxiliary_branch;
  // ext of the auxiliary greedy set measured inside the auxiliary graph.
  int auxiliary_internal_ext = 0;
  bool auxiliary_won = false;
};

// Best of greedy on g and greedy on the decomposed auxiliary graph, compared
// by ext on g. Ties keep the g branch. Center-priority ties are used on the
// auxiliary graph when delta = 1 and k = 1.
Algorithm2Result RunAlgorithm2(const UndirectedGraph& g, int p, int k,
                               int delta);

}  // namespace extdom

#endif  // EXTDOM_DECOMPOSITION_H_
