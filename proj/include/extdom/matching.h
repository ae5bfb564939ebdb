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

#ifndef EXTDOM_MATCHING_H_
#define EXTDOM_MATCHING_H_

#include <vector>

#include "extdom/graph.h"

namespace extdom {

// Maximum-cardinality matching of a general graph via Edmonds' blossom
// shrinking, O(V^3). Edges come back as (min, max), sorted.
std::vector<Edge> MaximumMatching(const UndirectedGraph& g);

// Matching of the underlying simple graph: orientation dropped,
// antiparallel arcs merged.
std::vector<Edge> MaximumMatching(const DirectedGraph& d);

}  // namespace extdom

#endif  // EXTDOM_MATCHING_H_
