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

#ifndef EXTDOM_OPTEXT_H_
#define EXTDOM_OPTEXT_H_

#include <span>
#include <vector>

#include "extdom/graph.h"

namespace extdom {

using Object = int;

// OPT-EXT(0,1): objects [0, m) with 0/1 values, to be placed one per vertex.
struct OptExtInstance {
  UndirectedGraph graph;
  // object -> 0 or 1; size equals graph.num_vertices() once normalized.
  std::vector<int> valuation;

  int ones() const;
};

// Builds a normalized instance. Fewer objects than vertices are padded with
// 0-valued dummies when `pad` is set and rejected otherwise; more objects
// than vertices are always rejected (kInstance). Values other than 0/1 throw.
OptExtInstance MakeOptExtInstance(UndirectedGraph graph,
                                  std::vector<int> valuation, bool pad);

struct Allocation {
  // vertex -> object.
  std::vector<Object> object_of;
  int externality = 0;
  // Vertices holding 1-valued objects, ascending.
  std::vector<Vertex> ones_holders;
};

// Number of 0-holders with a neighboring 1-holder. Throws
// kInvalidAllocation unless `object_of` is a bijection onto the objects.
int ExternalityOfAllocation(const OptExtInstance& inst,
                            std::span<const Object> object_of);

// Places the 1-objects on the dominator set of Algorithm 2 (k = 1,
// delta = 1) with p = number of 1-objects, pairing both sides in ascending
// order; 0-objects fill the remaining vertices in ascending order.
Allocation ReduceAndSolve(const OptExtInstance& inst);

// Same placement for an explicit holder set of size ones().
Allocation AllocateOnes(const OptExtInstance& inst,
                        std::vector<Vertex> holders);

}  // namespace extdom

#endif  // EXTDOM_OPTEXT_H_
