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

#ifndef EXTDOM_GRAPH_H_
#define EXTDOM_GRAPH_H_

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace extdom {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

// Simple undirected graph on the dense vertex range [0, n). Immutable after
// construction; neighbor lists are kept sorted by ascending id.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(int n);
  // Rejects self-loops, duplicate edges and out-of-range endpoints.
  UndirectedGraph(int n, const std::vector<Edge>& edges);

  int num_vertices() const { return static_cast<int>(adjacency_.size()); }
  int num_edges() const { return num_edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool HasEdge(Vertex u, Vertex v) const;
  // Each edge once as (min, max), sorted lexicographically.
  std::vector<Edge> Edges() const;
  void CheckVertex(Vertex v) const;

  friend bool operator==(const UndirectedGraph&,
                         const UndirectedGraph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  int num_edges_ = 0;
};

// Simple digraph on [0, n). Self-arcs are rejected; self-approval in
// elections is tracked by the election model, not here.
class DirectedGraph {
 public:
  DirectedGraph() = default;
  explicit DirectedGraph(int n) : out_(n) {}
  DirectedGraph(int n, const std::vector<Edge>& arcs);

  int num_vertices() const { return static_cast<int>(out_.size()); }
  int num_arcs() const { return num_arcs_; }
  const std::vector<Vertex>& successors(Vertex v) const { return out_.at(v); }
  bool HasArc(Vertex u, Vertex v) const;
  std::vector<Edge> Arcs() const;
  // Drops orientation and merges antiparallel arcs.
  UndirectedGraph Underlying() const;

  friend bool operator==(const DirectedGraph&, const DirectedGraph&) = default;

 private:
  std::vector<std::vector<Vertex>> out_;
  int num_arcs_ = 0;
};

// A rooted tree over a subset of a host graph's vertex ids.
struct RootedTree {
  Vertex root = 0;
  // Ascending ids.
  std::vector<Vertex> vertices;
  // child -> parent; the root maps to itself.
  std::map<Vertex, Vertex> parent;

  int size() const { return static_cast<int>(vertices.size()); }
  bool Contains(Vertex v) const { return parent.count(v) > 0; }
  // Children of every vertex, ascending.
  std::map<Vertex, std::vector<Vertex>> Children() const;
  // Tree edges as (min, max), sorted.
  std::vector<Edge> Edges() const;
  // Throws kStructural unless connected, acyclic and singly rooted.
  void Validate() const;
};

// N_k[v]: every vertex within BFS distance k of v, v included. Ascending.
std::vector<Vertex> KHopClosedNeighborhood(const UndirectedGraph& g, Vertex v,
                                           int k);
// Bitset form of the same ball, sized g.num_vertices().
VertexSet KHopBall(const UndirectedGraph& g, Vertex v, int k);
// All balls at once, indexed by vertex.
std::vector<VertexSet> AllKHopBalls(const UndirectedGraph& g, int k);

// One BFS tree per connected component, rooted at the component's lowest id,
// children visited in ascending order.
std::vector<RootedTree> SpanningForest(const UndirectedGraph& g);

std::map<Vertex, int> SubtreeSizes(const RootedTree& t);

// Same vertex set and edges, rooted at `new_root`.
RootedTree Reroot(const RootedTree& t, Vertex new_root);

int CountComponents(const UndirectedGraph& g);
bool IsConnected(const UndirectedGraph& g);
bool HasIsolatedVertex(const UndirectedGraph& g);

}  // namespace extdom

#endif  // EXTDOM_GRAPH_H_
