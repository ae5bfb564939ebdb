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

#include "extdom/domination.h"

#include <string>

#include "extdom/error.h"

namespace extdom {

int DomCount(const UndirectedGraph& g, std::span<const Vertex> dominators,
             int k) {
  VertexSet covered(g.num_vertices());
  VertexSet chosen(g.num_vertices());
  for (Vertex v : dominators) {
    g.CheckVertex(v);
    if (chosen.test(v)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "dominator " + std::to_string(v) + " listed twice");
    }
    chosen.set(v);
    covered |= KHopBall(g, v, k);
  }
  return static_cast<int>(covered.count());
}

int ExtCount(const UndirectedGraph& g, std::span<const Vertex> dominators,
             int k) {
  return DomCount(g, dominators, k) - static_cast<int>(dominators.size());
}

DominationSolution GreedyTrace::Prefix(int p) const {
  if (p < 0 || p > steps()) {
    throw Error(ErrorCode::kInvalidArgument, "prefix length out of range");
  }
  DominationSolution s;
  s.k = k;
  s.dominators.assign(order.begin(), order.begin() + p);
  s.dom_value = p == 0 ? 0 : dom[p - 1];
  s.ext_value = p == 0 ? 0 : ext[p - 1];
  return s;
}

GreedyTrace GreedyDominators(const UndirectedGraph& g, int p, int k,
                             const TieBreakPolicy& policy) {
  const int n = g.num_vertices();
  if (p < 0 || p > n) {
    throw Error(ErrorCode::kInfeasibleCardinality,
                "cannot choose " + std::to_string(p) + " dominators among " +
                    std::to_string(n) + " vertices");
  }
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "hop radius must be >= 1");

  const std::vector<VertexSet> balls = AllKHopBalls(g, k);
  VertexSet is_center(n);
  for (Vertex c : policy.centers) {
    g.CheckVertex(c);
    is_center.set(c);
  }

  GreedyTrace trace;
  trace.num_vertices = n;
  trace.k = k;
  VertexSet dominated(n);
  VertexSet chosen(n);

  // Larger key wins; gain dominates, then the policy's preferences.
  auto better = [&](Vertex a, int gain_a, Vertex b, int gain_b) {
    if (gain_a != gain_b) return gain_a > gain_b;
    switch (policy.variant) {
      case TieBreakPolicy::Variant::kLowestId:
        return a < b;
      case TieBreakPolicy::Variant::kHighestId:
        return a > b;
      case TieBreakPolicy::Variant::kCenterPriority:
        if (is_center.test(a) != is_center.test(b)) return is_center.test(a);
        if (dominated.test(a) != dominated.test(b)) return !dominated.test(a);
        return a < b;
    }
    return a < b;
  };

  for (int step = 0; step < p; ++step) {
    Vertex best = -1;
    int best_gain = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (chosen.test(v)) continue;
      const int gain = static_cast<int>((balls[v] - dominated).count());
      if (best < 0 || better(v, gain, best, best_gain)) {
        best = v;
        best_gain = gain;
      }
    }
    chosen.set(best);
    dominated |= balls[best];
    trace.order.push_back(best);
    const int dom = static_cast<int>(dominated.count());
    trace.dom.push_back(dom);
    trace.ext.push_back(dom - (step + 1));
  }
  return trace;
}

ThetaSigmaProfile ComputeThetaSigma(const GreedyTrace& trace, int n) {
  ThetaSigmaProfile profile;
  for (int i = 0; i < trace.steps(); ++i) {
    const std::int64_t size = i + 1;
    profile.theta.emplace_back(trace.ext[i], size);
    if (size < n) {
      profile.sigma.emplace_back(Rational(trace.ext[i], n - size));
    } else {
      profile.sigma.emplace_back(std::nullopt);
    }
  }
  return profile;
}

}  // namespace extdom
