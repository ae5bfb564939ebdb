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

#ifndef EXTDOM_GENERATORS_H_
#define EXTDOM_GENERATORS_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "extdom/elections.h"
#include "extdom/graph.h"

namespace extdom {

enum class ClassicFamily { kPath, kCycle, kStar, kComplete };

ClassicFamily ParseClassicFamily(std::string_view name);

// Canonical labels: path edges {i, i+1}, cycle adds {n-1, 0}, star center 0.
UndirectedGraph GenClassic(ClassicFamily family, int n);

// G(n, prob): each pair u < v, in lexicographic order, is an edge with
// probability prob.
UndirectedGraph GenErdosRenyi(int n, double prob, std::uint64_t seed);

// Random parent attachment (vertex i hangs below a uniform earlier vertex),
// then a uniform relabeling.
UndirectedGraph GenRandomTree(int n, std::uint64_t seed);

// G(n, prob) redrawn from the same stream until connected.
UndirectedGraph GenConnectedErdosRenyi(int n, double prob, std::uint64_t seed);

// Gadget graph: q1 copies of g, one star of q2+1 vertices per vertex of g,
// and a connector per vertex adjacent to all its copies and joined to its
// star's center by a path of K-1 edges. (q1 + q2 + K) * n vertices.
struct ReductionGraph {
  UndirectedGraph graph;
  // connectors[i] is the connector of g's vertex i.
  std::vector<Vertex> connectors;
  std::vector<Vertex> star_centers;
  // copy_of[j][i] is vertex i of copy j.
  std::vector<std::vector<Vertex>> copy_of;
};

ReductionGraph GenReductionGraph(const UndirectedGraph& g, int K, int q1,
                                 int q2);

struct ElectionParams {
  int num_voters = 1;
  int num_candidates = 1;
  double approval_prob = 0.3;
  // Fraction of candidates that are also voters.
  double overlap = 0.0;
  // Every candidate votes and approves at least one other candidate. Forces
  // full overlap, so it needs num_candidates <= num_voters and >= 2.
  bool require_other_approval = false;
  Setting setting = Setting::kNonSecrecy;
  int committee_size = 1;
};

// Candidate-voters always approve of themselves.
ElectionInstance GenRandomElection(const ElectionParams& params,
                                   std::uint64_t seed);

}  // namespace extdom

#endif  // EXTDOM_GENERATORS_H_
