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

#include "extdom/generators.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "extdom/error.h"
#include "extdom/rng.h"

namespace extdom {

ClassicFamily ParseClassicFamily(std::string_view name) {
  if (name == "path") return ClassicFamily::kPath;
  if (name == "cycle") return ClassicFamily::kCycle;
  if (name == "star") return ClassicFamily::kStar;
  if (name == "complete") return ClassicFamily::kComplete;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown graph family '" + std::string(name) + "'");
}

UndirectedGraph GenClassic(ClassicFamily family, int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "need n >= 1");
  std::vector<Edge> edges;
  switch (family) {
    case ClassicFamily::kPath:
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case ClassicFamily::kCycle:
      if (n < 3) throw Error(ErrorCode::kInvalidArgument, "cycle needs n >= 3");
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(0, n - 1);
      break;
    case ClassicFamily::kStar:
      for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
      break;
    case ClassicFamily::kComplete:
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      }
      break;
  }
  return UndirectedGraph(n, edges);
}

namespace {

UndirectedGraph DrawErdosRenyi(int n, double prob, Rng& rng) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.Bernoulli(prob)) edges.emplace_back(u, v);
    }
  }
  return UndirectedGraph(n, edges);
}

void CheckProbability(double prob) {
  if (!(prob >= 0.0 && prob <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "probability outside [0, 1]");
  }
}

}  // namespace

UndirectedGraph GenErdosRenyi(int n, double prob, std::uint64_t seed) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  CheckProbability(prob);
  Rng rng(seed);
  return DrawErdosRenyi(n, prob, rng);
}

UndirectedGraph GenRandomTree(int n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "need n >= 1");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) {
    edges.emplace_back(static_cast<int>(rng.UniformInt(i)), i);
  }
  std::vector<int> label(n);
  std::iota(label.begin(), label.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(label[i], label[rng.UniformInt(i + 1)]);
  }
  for (auto& [u, v] : edges) {
    u = label[u];
    v = label[v];
  }
  return UndirectedGraph(n, edges);
}

UndirectedGraph GenConnectedErdosRenyi(int n, double prob, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "need n >= 1");
  CheckProbability(prob);
  if (n > 1 && prob == 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "probability 0 never yields a connected graph");
  }
  Rng rng(seed);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    UndirectedGraph g = DrawErdosRenyi(n, prob, rng);
    if (IsConnected(g)) return g;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "no connected draw within 100000 attempts; raise the probability");
}

ReductionGraph GenReductionGraph(const UndirectedGraph& g, int K, int q1,
                                 int q2) {
  const int n = g.num_vertices();
  if (K < 2) throw Error(ErrorCode::kInvalidArgument, "K must be >= 2");
  if (q1 < 1 || q2 < 1) {
    throw Error(ErrorCode::kInvalidArgument, "q1 and q2 must be positive");
  }
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "empty base graph");

  ReductionGraph out;
  std::vector<Edge> edges;
  // Layout: copies, then stars, then connectors, then path interiors.
  out.copy_of.assign(q1, std::vector<Vertex>(n));
  for (int j = 0; j < q1; ++j) {
    for (int i = 0; i < n; ++i) out.copy_of[j][i] = j * n + i;
    for (const auto& [a, b] : g.Edges()) {
      edges.emplace_back(out.copy_of[j][a], out.copy_of[j][b]);
    }
  }
  const int star_base = q1 * n;
  for (int i = 0; i < n; ++i) {
    const Vertex center = star_base + i * (q2 + 1);
    out.star_centers.push_back(center);
    for (int leaf = 1; leaf <= q2; ++leaf) edges.emplace_back(center, center + leaf);
  }
  const int connector_base = star_base + n * (q2 + 1);
  const int path_base = connector_base + n;
  for (int i = 0; i < n; ++i) {
    const Vertex connector = connector_base + i;
    out.connectors.push_back(connector);
    for (int j = 0; j < q1; ++j) edges.emplace_back(connector, out.copy_of[j][i]);
    Vertex prev = connector;
    for (int t = 0; t < K - 2; ++t) {
      const Vertex inner = path_base + i * (K - 2) + t;
      edges.emplace_back(prev, inner);
      prev = inner;
    }
    edges.emplace_back(prev, out.star_centers[i]);
  }
  out.graph = UndirectedGraph((q1 + q2 + K) * n, edges);
  return out;
}

ElectionInstance GenRandomElection(const ElectionParams& params,
                                   std::uint64_t seed) {
  const int n = params.num_voters;
  const int m = params.num_candidates;
  if (n < 0 || m < 1) {
    throw Error(ErrorCode::kInvalidArgument, "need voters >= 0, candidates >= 1");
  }
  CheckProbability(params.approval_prob);
  if (!(params.overlap >= 0.0 && params.overlap <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "overlap outside [0, 1]");
  }
  int overlap_count = static_cast<int>(std::lround(params.overlap * m));
  if (params.require_other_approval) {
    if (m < 2) {
      throw Error(ErrorCode::kInvalidArgument,
                  "approving another candidate needs at least 2 candidates");
    }
    overlap_count = m;
  }
  if (overlap_count > n) {
    throw Error(ErrorCode::kInvalidArgument,
                std::to_string(overlap_count) +
                    " candidate-voters exceed the voter count");
  }

  Rng rng(seed);
  ElectionInstance inst;
  inst.num_voters = n;
  inst.num_candidates = m;
  inst.setting = params.setting;
  inst.committee_size = params.committee_size;
  inst.approvals.assign(n, {});
  inst.candidate_voter.assign(m, std::nullopt);

  // Candidates 0..overlap_count-1 take the first voters of a uniform shuffle.
  std::vector<int> voters(n);
  std::iota(voters.begin(), voters.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(voters[i], voters[rng.UniformInt(i + 1)]);
  for (int c = 0; c < overlap_count; ++c) inst.candidate_voter[c] = voters[c];

  for (int v = 0; v < n; ++v) {
    for (int c = 0; c < m; ++c) {
      if (rng.Bernoulli(params.approval_prob)) inst.approvals[v].push_back(c);
    }
  }
  auto approve = [&](int v, int c) {
    auto& vote = inst.approvals[v];
    auto it = std::lower_bound(vote.begin(), vote.end(), c);
    if (it == vote.end() || *it != c) vote.insert(it, c);
  };
  for (int c = 0; c < overlap_count; ++c) approve(*inst.candidate_voter[c], c);
  if (params.require_other_approval) {
    for (int c = 0; c < m; ++c) {
      const int v = *inst.candidate_voter[c];
      if (inst.approvals[v].size() >= 2) continue;
      int other = static_cast<int>(rng.UniformInt(m - 1));
      if (other >= c) ++other;
      approve(v, other);
    }
  }
  inst.Validate();
  return inst;
}

}  // namespace extdom
