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

#include "extdom/graph.h"

#include <algorithm>
#include <deque>
#include <functional>
#include <string>

#include "extdom/error.h"

namespace extdom {
namespace {

void CheckRange(Vertex v, int n) {
  if (v < 0 || v >= n) {
    throw Error(ErrorCode::kInvalidVertex,
                "vertex " + std::to_string(v) + " outside [0, " +
                    std::to_string(n) + ")");
  }
}

}  // namespace

UndirectedGraph::UndirectedGraph(int n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  adjacency_.resize(n);
}

UndirectedGraph::UndirectedGraph(int n, const std::vector<Edge>& edges)
    : UndirectedGraph(n) {
  for (const auto& [u, v] : edges) {
    CheckRange(u, n);
    CheckRange(v, n);
    if (u == v) {
      throw Error(ErrorCode::kInvalidArgument,
                  "self-loop at vertex " + std::to_string(u));
    }
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate edge");
    }
  }
  num_edges_ = static_cast<int>(edges.size());
}

const std::vector<Vertex>& UndirectedGraph::neighbors(Vertex v) const {
  CheckVertex(v);
  return adjacency_[v];
}

bool UndirectedGraph::HasEdge(Vertex u, Vertex v) const {
  const auto& list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> UndirectedGraph::Edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void UndirectedGraph::CheckVertex(Vertex v) const {
  CheckRange(v, num_vertices());
}

DirectedGraph::DirectedGraph(int n, const std::vector<Edge>& arcs) : out_(n) {
  for (const auto& [u, v] : arcs) {
    CheckRange(u, n);
    CheckRange(v, n);
    if (u == v) {
      throw Error(ErrorCode::kInvalidArgument,
                  "self-arc at vertex " + std::to_string(u));
    }
    out_[u].push_back(v);
  }
  for (auto& list : out_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate arc");
    }
  }
  num_arcs_ = static_cast<int>(arcs.size());
}

bool DirectedGraph::HasArc(Vertex u, Vertex v) const {
  const auto& list = successors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> DirectedGraph::Arcs() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : out_[u]) out.emplace_back(u, v);
  }
  return out;
}

UndirectedGraph DirectedGraph::Underlying() const {
  std::vector<Edge> edges;
  for (const auto& [u, v] : Arcs()) edges.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return UndirectedGraph(num_vertices(), edges);
}

std::map<Vertex, std::vector<Vertex>> RootedTree::Children() const {
  std::map<Vertex, std::vector<Vertex>> children;
  for (Vertex v : vertices) children[v];
  for (const auto& [child, par] : parent) {
    if (child != par) children[par].push_back(child);
  }
  // std::map iteration already yields ascending children.
  return children;
}

std::vector<Edge> RootedTree::Edges() const {
  std::vector<Edge> out;
  for (const auto& [child, par] : parent) {
    if (child != par) out.emplace_back(std::min(child, par), std::max(child, par));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void RootedTree::Validate() const {
  if (vertices.empty()) {
    throw Error(ErrorCode::kStructural, "rooted tree without vertices");
  }
  if (!std::is_sorted(vertices.begin(), vertices.end()) ||
      parent.size() != vertices.size()) {
    throw Error(ErrorCode::kStructural, "vertex list and parent map disagree");
  }
  for (Vertex v : vertices) {
    auto it = parent.find(v);
    if (it == parent.end()) {
      throw Error(ErrorCode::kStructural, "vertex without parent entry");
    }
    if (!Contains(it->second)) {
      throw Error(ErrorCode::kStructural, "parent outside tree");
    }
    if ((it->second == v) != (v == root)) {
      throw Error(ErrorCode::kStructural, "root must be the unique fixed point");
    }
  }
  // Every vertex must reach the root within |V| steps.
  for (Vertex v : vertices) {
    Vertex cur = v;
    int steps = 0;
    while (cur != root) {
      cur = parent.at(cur);
      if (++steps > size()) {
        throw Error(ErrorCode::kStructural, "cycle in parent map");
      }
    }
  }
}

std::vector<Vertex> KHopClosedNeighborhood(const UndirectedGraph& g, Vertex v,
                                           int k) {
  VertexSet ball = KHopBall(g, v, k);
  std::vector<Vertex> out;
  for (auto i = ball.find_first(); i != VertexSet::npos; i = ball.find_next(i)) {
    out.push_back(static_cast<Vertex>(i));
  }
  return out;
}

VertexSet KHopBall(const UndirectedGraph& g, Vertex v, int k) {
  g.CheckVertex(v);
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "hop radius must be >= 1");
  VertexSet seen(g.num_vertices());
  std::vector<Vertex> frontier{v};
  seen.set(v);
  for (int depth = 0; depth < k && !frontier.empty(); ++depth) {
    std::vector<Vertex> next;
    for (Vertex u : frontier) {
      for (Vertex w : g.neighbors(u)) {
        if (!seen.test(w)) {
          seen.set(w);
          next.push_back(w);
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

std::vector<VertexSet> AllKHopBalls(const UndirectedGraph& g, int k) {
  std::vector<VertexSet> balls;
  balls.reserve(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) balls.push_back(KHopBall(g, v, k));
  return balls;
}

std::vector<RootedTree> SpanningForest(const UndirectedGraph& g) {
  const int n = g.num_vertices();
  std::vector<bool> visited(n, false);
  std::vector<RootedTree> forest;
  for (Vertex start = 0; start < n; ++start) {
    if (visited[start]) continue;
    RootedTree tree;
    tree.root = start;
    tree.parent[start] = start;
    visited[start] = true;
    std::deque<Vertex> queue{start};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      tree.vertices.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (visited[w]) continue;
        visited[w] = true;
        tree.parent[w] = u;
        queue.push_back(w);
      }
    }
    std::sort(tree.vertices.begin(), tree.vertices.end());
    forest.push_back(std::move(tree));
  }
  return forest;
}

std::map<Vertex, int> SubtreeSizes(const RootedTree& t) {
  const auto children = t.Children();
  std::map<Vertex, int> sizes;
  // Iterative post-order so deep paths do not recurse.
  std::vector<std::pair<Vertex, bool>> stack{{t.root, false}};
  while (!stack.empty()) {
    auto [v, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      int total = 1;
      for (Vertex c : children.at(v)) total += sizes.at(c);
      sizes[v] = total;
      continue;
    }
    stack.emplace_back(v, true);
    for (Vertex c : children.at(v)) stack.emplace_back(c, false);
  }
  return sizes;
}

RootedTree Reroot(const RootedTree& t, Vertex new_root) {
  if (!t.Contains(new_root)) {
    throw Error(ErrorCode::kInvalidVertex, "new root not in tree");
  }
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const auto& [u, v] : t.Edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  RootedTree out;
  out.root = new_root;
  out.vertices = t.vertices;
  out.parent[new_root] = new_root;
  std::vector<Vertex> stack{new_root};
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : adj[u]) {
      if (out.parent.count(w)) continue;
      out.parent[w] = u;
      stack.push_back(w);
    }
  }
  return out;
}

int CountComponents(const UndirectedGraph& g) {
  return static_cast<int>(SpanningForest(g).size());
}

bool IsConnected(const UndirectedGraph& g) { return CountComponents(g) <= 1; }

bool HasIsolatedVertex(const UndirectedGraph& g) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 0) return true;
  }
  return false;
}

}  // namespace extdom
