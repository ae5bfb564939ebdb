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

#include "extdom/decomposition.h"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "extdom/error.h"

namespace extdom {
namespace {

void CheckDelta(int delta) {
  if (delta != 0 && delta != 1) {
    throw Error(ErrorCode::kInvalidArgument, "delta must be 0 or 1");
  }
}

// Post-order over the vertices still in `alive`, children ascending.
std::vector<Vertex> PostOrder(Vertex root,
                              const std::map<Vertex, std::vector<Vertex>>& children,
                              const std::set<Vertex>& alive) {
  std::vector<Vertex> order;
  std::vector<std::pair<Vertex, bool>> stack{{root, false}};
  while (!stack.empty()) {
    auto [v, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      order.push_back(v);
      continue;
    }
    stack.emplace_back(v, true);
    const auto& kids = children.at(v);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      if (alive.count(*it)) stack.emplace_back(*it, false);
    }
  }
  return order;
}

RootedTree Restrict(const RootedTree& t, const std::vector<Vertex>& members,
                    Vertex root) {
  RootedTree out;
  out.root = root;
  out.vertices = members;
  std::sort(out.vertices.begin(), out.vertices.end());
  for (Vertex v : out.vertices) {
    out.parent[v] = v == root ? v : t.parent.at(v);
  }
  return out;
}

}  // namespace

std::vector<TreeComponent> DecomposeTree(const RootedTree& t, int delta,
                                         int k) {
  CheckDelta(delta);
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "hop radius must be >= 1");
  t.Validate();
  const int floor_size = k + 1 + delta;
  if (t.size() < floor_size) {
    return {TreeComponent{t, false, true}};
  }

  const auto children = t.Children();
  std::set<Vertex> alive(t.vertices.begin(), t.vertices.end());
  std::vector<TreeComponent> pieces;

  while (!alive.empty()) {
    const std::vector<Vertex> order = PostOrder(t.root, children, alive);
    std::map<Vertex, int> size;
    Vertex pick = -1;
    for (Vertex v : order) {
      int s = 1;
      for (Vertex c : children.at(v)) {
        if (alive.count(c)) s += size[c];
      }
      size[v] = s;
      if (s >= floor_size) {
        pick = v;
        break;
      }
    }
    // The remaining tree always holds at least floor_size vertices here.
    if (pick < 0) {
      throw Error(ErrorCode::kStructural, "no vertex reaches the size floor");
    }

    std::vector<Vertex> members;
    std::vector<Vertex> stack{pick};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (Vertex c : children.at(v)) {
        if (alive.count(c)) stack.push_back(c);
      }
    }

    TreeComponent piece;
    const int rest = static_cast<int>(alive.size()) - static_cast<int>(members.size());
    if (rest > 0 && rest < floor_size) {
      std::vector<Vertex> all(alive.begin(), alive.end());
      piece.tree = Reroot(Restrict(t, all, t.root), pick);
      piece.absorbed_remainder = true;
      alive.clear();
    } else {
      piece.tree = Restrict(t, members, pick);
      for (Vertex v : members) alive.erase(v);
    }
    pieces.push_back(std::move(piece));
  }
  return pieces;
}

SnmClass ClassifyComponent(const TreeComponent& c) {
  const RootedTree& t = c.tree;
  if (t.size() < 3) {
    throw Error(ErrorCode::kStructural,
                "pieces under 3 vertices have no S_{n,m} class");
  }
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const auto& [u, v] : t.Edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }

  auto try_hub = [&](Vertex hub) -> std::optional<SnmClass> {
    SnmClass cls;
    cls.hub = hub;
    for (Vertex u : adj[hub]) {
      const auto& nu = adj[u];
      if (nu.size() == 1) {
        ++cls.leaf_children;
      } else if (nu.size() == 2) {
        const Vertex far = nu[0] == hub ? nu[1] : nu[0];
        if (adj[far].size() != 1) return std::nullopt;
        ++cls.pendant_children;
      } else {
        return std::nullopt;
      }
    }
    if (cls.leaf_children + cls.pendant_children < 2) return std::nullopt;
    return cls;
  };

  if (auto cls = try_hub(t.root)) return *cls;
  for (Vertex v : t.vertices) {
    if (auto cls = try_hub(v)) return *cls;
  }
  throw Error(ErrorCode::kStructural,
              "piece rooted at " + std::to_string(t.root) +
                  " does not belong to any S_{n,m} with n+m >= 2");
}

Vertex DesignateCenter(const TreeComponent& c) {
  const SnmClass cls = ClassifyComponent(c);
  if (cls.leaf_children == 0 && cls.pendant_children == 2) {
    Vertex lowest = -1;
    for (const auto& [u, v] : c.tree.Edges()) {
      Vertex other = -1;
      if (u == cls.hub) other = v;
      if (v == cls.hub) other = u;
      if (other >= 0 && (lowest < 0 || other < lowest)) lowest = other;
    }
    return lowest;
  }
  return cls.hub;
}

AuxiliaryGraph BuildAuxiliaryGraph(const UndirectedGraph& g, int delta, int k) {
  CheckDelta(delta);
  AuxiliaryGraph aux;
  std::vector<Edge> edges;
  for (const RootedTree& tree : SpanningForest(g)) {
    for (TreeComponent& piece : DecomposeTree(tree, delta, k)) {
      const auto piece_edges = piece.tree.Edges();
      edges.insert(edges.end(), piece_edges.begin(), piece_edges.end());
      aux.components.push_back(std::move(piece));
    }
  }
  std::sort(edges.begin(), edges.end());
  aux.graph = UndirectedGraph(g.num_vertices(), edges);
  if (delta == 1 && k == 1) {
    for (const TreeComponent& piece : aux.components) {
      if (piece.size() >= 3) aux.centers.push_back(DesignateCenter(piece));
    }
    std::sort(aux.centers.begin(), aux.centers.end());
  }
  return aux;
}

Algorithm2Result RunAlgorithm2(const UndirectedGraph& g, int p, int k,
                               int delta) {
  CheckDelta(delta);
  if (p < 0 || p > g.num_vertices()) {
    throw Error(ErrorCode::kInfeasibleCardinality,
                "cannot choose " + std::to_string(p) + " dominators among " +
                    std::to_string(g.num_vertices()) + " vertices");
  }
  const AuxiliaryGraph aux = BuildAuxiliaryGraph(g, delta, k);
  const TieBreakPolicy aux_policy =
      (delta == 1 && k == 1) ? TieBreakPolicy::CenterPriority(aux.centers)
                             : TieBreakPolicy::LowestId();

  Algorithm2Result result;
  result.graph_branch =
      GreedyDominators(g, p, k, TieBreakPolicy::LowestId()).Final();
  const DominationSolution aux_solution =
      GreedyDominators(aux.graph, p, k, aux_policy).Final();
  result.auxiliary_internal_ext = aux_solution.ext_value;

  DominationSolution& remeasured = result.auxiliary_branch;
  remeasured.dominators = aux_solution.dominators;
  remeasured.k = k;
  remeasured.dom_value = DomCount(g, remeasured.dominators, k);
  remeasured.ext_value = remeasured.dom_value - remeasured.size();

  result.auxiliary_won =
      remeasured.ext_value > result.graph_branch.ext_value;
  result.solution =
      result.auxiliary_won ? result.auxiliary_branch : result.graph_branch;
  return result;
}

}  // namespace extdom
