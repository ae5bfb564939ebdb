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

#include "extdom/optext.h"

#include <algorithm>
#include <string>

#include "extdom/decomposition.h"
#include "extdom/error.h"

namespace extdom {

int OptExtInstance::ones() const {
  return static_cast<int>(std::count(valuation.begin(), valuation.end(), 1));
}

OptExtInstance MakeOptExtInstance(UndirectedGraph graph,
                                  std::vector<int> valuation, bool pad) {
  const int n = graph.num_vertices();
  for (int value : valuation) {
    if (value != 0 && value != 1) {
      throw Error(ErrorCode::kInstance, "object values must be 0 or 1");
    }
  }
  const int m = static_cast<int>(valuation.size());
  if (m > n) {
    throw Error(ErrorCode::kInstance,
                std::to_string(m) + " objects for " + std::to_string(n) +
                    " vertices");
  }
  if (m < n) {
    if (!pad) {
      throw Error(ErrorCode::kInstance,
                  "object count " + std::to_string(m) +
                      " differs from vertex count " + std::to_string(n) +
                      " and padding is disabled");
    }
    valuation.resize(n, 0);
  }
  return OptExtInstance{std::move(graph), std::move(valuation)};
}

int ExternalityOfAllocation(const OptExtInstance& inst,
                            std::span<const Object> object_of) {
  const int n = inst.graph.num_vertices();
  if (static_cast<int>(object_of.size()) != n ||
      static_cast<int>(inst.valuation.size()) != n) {
    throw Error(ErrorCode::kInvalidAllocation,
                "allocation must cover every vertex with one object");
  }
  std::vector<bool> used(n, false);
  for (Object o : object_of) {
    if (o < 0 || o >= n || used[o]) {
      throw Error(ErrorCode::kInvalidAllocation,
                  "allocation is not a bijection");
    }
    used[o] = true;
  }
  int total = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (inst.valuation[object_of[v]] != 0) continue;
    for (Vertex u : inst.graph.neighbors(v)) {
      if (inst.valuation[object_of[u]] == 1) {
        ++total;
        break;
      }
    }
  }
  return total;
}

Allocation AllocateOnes(const OptExtInstance& inst,
                        std::vector<Vertex> holders) {
  const int n = inst.graph.num_vertices();
  std::sort(holders.begin(), holders.end());
  if (static_cast<int>(holders.size()) != inst.ones()) {
    throw Error(ErrorCode::kInvalidAllocation,
                "holder count differs from the number of 1-objects");
  }
  std::vector<Object> ones, zeros;
  for (Object o = 0; o < static_cast<int>(inst.valuation.size()); ++o) {
    (inst.valuation[o] == 1 ? ones : zeros).push_back(o);
  }
  Allocation alloc;
  alloc.object_of.assign(n, -1);
  std::vector<bool> is_holder(n, false);
  for (size_t i = 0; i < holders.size(); ++i) {
    inst.graph.CheckVertex(holders[i]);
    alloc.object_of[holders[i]] = ones[i];
    is_holder[holders[i]] = true;
  }
  size_t next_zero = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!is_holder[v]) alloc.object_of[v] = zeros.at(next_zero++);
  }
  alloc.ones_holders = std::move(holders);
  alloc.externality = ExternalityOfAllocation(inst, alloc.object_of);
  return alloc;
}

Allocation ReduceAndSolve(const OptExtInstance& inst) {
  const int n = inst.graph.num_vertices();
  if (static_cast<int>(inst.valuation.size()) != n) {
    throw Error(ErrorCode::kInstance, "instance is not normalized");
  }
  const int p = inst.ones();
  std::vector<Vertex> holders;
  if (p == n) {
    for (Vertex v = 0; v < n; ++v) holders.push_back(v);
  } else if (p > 0) {
    holders = RunAlgorithm2(inst.graph, p, 1, 1).solution.dominators;
  }
  return AllocateOnes(inst, std::move(holders));
}

}  // namespace extdom
