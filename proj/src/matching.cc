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

#include "extdom/matching.h"

#include <algorithm>
#include <deque>

namespace extdom {
namespace {

class BlossomMatcher {
 public:
  explicit BlossomMatcher(const UndirectedGraph& g)
      : g_(g),
        n_(g.num_vertices()),
        mate_(n_, -1),
        parent_(n_, -1),
        base_(n_),
        in_queue_(n_, false),
        in_blossom_(n_, false) {}

  std::vector<Edge> Run() {
    // A greedy start only shortens the search; correctness does not need it.
    for (Vertex v = 0; v < n_; ++v) {
      if (mate_[v] != -1) continue;
      for (Vertex w : g_.neighbors(v)) {
        if (mate_[w] == -1) {
          mate_[v] = w;
          mate_[w] = v;
          break;
        }
      }
    }
    for (Vertex root = 0; root < n_; ++root) {
      if (mate_[root] != -1) continue;
      Vertex end = FindAugmentingPath(root);
      // Flip the alternating path ending at `end`.
      while (end != -1) {
        const Vertex prev = parent_[end];
        const Vertex next = mate_[prev];
        mate_[end] = prev;
        mate_[prev] = end;
        end = next;
      }
    }
    std::vector<Edge> out;
    for (Vertex v = 0; v < n_; ++v) {
      if (mate_[v] > v) out.emplace_back(v, mate_[v]);
    }
    return out;
  }

 private:
  Vertex LowestCommonBase(Vertex a, Vertex b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void MarkBlossomPath(Vertex v, Vertex blossom_base, Vertex child) {
    while (base_[v] != blossom_base) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  Vertex FindAugmentingPath(Vertex root) {
    std::fill(parent_.begin(), parent_.end(), -1);
    std::fill(in_queue_.begin(), in_queue_.end(), false);
    for (Vertex v = 0; v < n_; ++v) base_[v] = v;

    std::deque<Vertex> queue{root};
    in_queue_[root] = true;
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          // Odd cycle: contract it into its base.
          const Vertex cur = LowestCommonBase(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          MarkBlossomPath(v, cur, to);
          MarkBlossomPath(to, cur, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = cur;
            if (!in_queue_[i]) {
              in_queue_[i] = true;
              queue.push_back(i);
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) return to;
          in_queue_[mate_[to]] = true;
          queue.push_back(mate_[to]);
        }
      }
    }
    return -1;
  }

  const UndirectedGraph& g_;
  int n_;
  std::vector<Vertex> mate_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<bool> in_queue_;
  std::vector<bool> in_blossom_;
};

}  // namespace

std::vector<Edge> MaximumMatching(const UndirectedGraph& g) {
  return BlossomMatcher(g).Run();
}

std::vector<Edge> MaximumMatching(const DirectedGraph& d) {
  return MaximumMatching(d.Underlying());
}

}  // namespace extdom
