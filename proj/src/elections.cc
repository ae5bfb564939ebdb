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

#include "extdom/elections.h"

#include <algorithm>
#include <string>

#include "extdom/error.h"
#include "extdom/matching.h"

namespace extdom {
namespace {

void CheckCommittee(const ElectionInstance& inst,
                    std::span<const Candidate> committee) {
  std::vector<bool> seen(inst.num_candidates, false);
  for (Candidate c : committee) {
    if (c < 0 || c >= inst.num_candidates) {
      throw Error(ErrorCode::kInvalidCandidate,
                  "candidate " + std::to_string(c) + " not in the election");
    }
    if (seen[c]) {
      throw Error(ErrorCode::kInvalidCandidate,
                  "candidate " + std::to_string(c) + " listed twice");
    }
    seen[c] = true;
  }
}

VertexSet RepresentedVoters(const ElectionInstance& inst,
                            std::span<const Candidate> committee) {
  CheckCommittee(inst, committee);
  std::vector<bool> elected(inst.num_candidates, false);
  for (Candidate c : committee) elected[c] = true;
  VertexSet represented(inst.num_voters);
  for (Voter v = 0; v < inst.num_voters; ++v) {
    for (Candidate c : inst.approvals[v]) {
      if (elected[c]) {
        represented.set(v);
        break;
      }
    }
  }
  return represented;
}

void CheckSeats(const ElectionInstance& inst) {
  if (inst.committee_size < 0 || inst.committee_size > inst.num_candidates) {
    throw Error(ErrorCode::kInfeasibleCardinality,
                "committee of " + std::to_string(inst.committee_size) +
                    " from " + std::to_string(inst.num_candidates) +
                    " candidates");
  }
}

Committee Evaluate(const ElectionInstance& inst, std::vector<Candidate> members) {
  std::sort(members.begin(), members.end());
  Committee out;
  out.rep_value = RepresentedCount(inst, members);
  out.ext_value = ExternalRepCount(inst, members);
  out.members = std::move(members);
  return out;
}

}  // namespace

std::string_view SettingName(Setting s) {
  return s == Setting::kNonSecrecy ? "non-secrecy" : "rational-candidate";
}

Setting ParseSetting(std::string_view name) {
  if (name == "non-secrecy") return Setting::kNonSecrecy;
  if (name == "rational-candidate") return Setting::kRationalCandidate;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown setting '" + std::string(name) + "'");
}

void ElectionInstance::Validate() const {
  if (num_voters < 0 || num_candidates < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative voter/candidate count");
  }
  if (static_cast<int>(approvals.size()) != num_voters ||
      static_cast<int>(candidate_voter.size()) != num_candidates) {
    throw Error(ErrorCode::kInvalidArgument, "table sizes disagree with counts");
  }
  for (Voter v = 0; v < num_voters; ++v) {
    const auto& vote = approvals[v];
    for (size_t i = 0; i < vote.size(); ++i) {
      if (vote[i] < 0 || vote[i] >= num_candidates) {
        throw Error(ErrorCode::kInvalidCandidate,
                    "voter " + std::to_string(v) + " approves unknown candidate " +
                        std::to_string(vote[i]));
      }
      if (i > 0 && vote[i] <= vote[i - 1]) {
        throw Error(ErrorCode::kInvalidArgument,
                    "approvals of voter " + std::to_string(v) +
                        " must be strictly ascending");
      }
    }
  }
  std::vector<bool> claimed(num_voters, false);
  for (Candidate c = 0; c < num_candidates; ++c) {
    if (!candidate_voter[c]) continue;
    const Voter v = *candidate_voter[c];
    if (v < 0 || v >= num_voters) {
      throw Error(ErrorCode::kInvalidArgument,
                  "candidate " + std::to_string(c) + " mapped to unknown voter");
    }
    if (claimed[v]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "voter " + std::to_string(v) + " mapped to two candidates");
    }
    claimed[v] = true;
    if (setting == Setting::kRationalCandidate &&
        !std::binary_search(approvals[v].begin(), approvals[v].end(), c)) {
      throw Error(ErrorCode::kSettingViolation,
                  "candidate " + std::to_string(c) +
                      " votes but does not approve of themselves");
    }
  }
}

std::vector<std::vector<Voter>> ElectionInstance::ApproverSets() const {
  std::vector<std::vector<Voter>> sets(num_candidates);
  for (Voter v = 0; v < num_voters; ++v) {
    for (Candidate c : approvals[v]) sets[c].push_back(v);
  }
  return sets;
}

int RepresentedCount(const ElectionInstance& inst,
                     std::span<const Candidate> committee) {
  return static_cast<int>(RepresentedVoters(inst, committee).count());
}

int ExternalRepCount(const ElectionInstance& inst,
                     std::span<const Candidate> committee) {
  VertexSet represented = RepresentedVoters(inst, committee);
  if (inst.setting == Setting::kRationalCandidate) {
    int voting_members = 0;
    for (Candidate c : committee) {
      if (inst.candidate_voter[c]) ++voting_members;
    }
    return static_cast<int>(represented.count()) - voting_members;
  }
  for (Candidate c : committee) {
    if (inst.candidate_voter[c]) represented.reset(*inst.candidate_voter[c]);
  }
  return static_cast<int>(represented.count());
}

ElectionInstance SelfApprovalClosure(const ElectionInstance& inst) {
  ElectionInstance out = inst;
  for (Candidate c = 0; c < inst.num_candidates; ++c) {
    Voter v;
    if (inst.candidate_voter[c]) {
      v = *inst.candidate_voter[c];
    } else {
      v = out.num_voters++;
      out.approvals.emplace_back();
      out.candidate_voter[c] = v;
    }
    auto& vote = out.approvals[v];
    auto it = std::lower_bound(vote.begin(), vote.end(), c);
    if (it == vote.end() || *it != c) vote.insert(it, c);
  }
  return out;
}

Committee GreedyCommittee(const ElectionInstance& inst) {
  inst.Validate();
  CheckSeats(inst);
  const ElectionInstance closure = SelfApprovalClosure(inst);
  std::vector<VertexSet> approvers(closure.num_candidates,
                                   VertexSet(closure.num_voters));
  for (Voter v = 0; v < closure.num_voters; ++v) {
    for (Candidate c : closure.approvals[v]) approvers[c].set(v);
  }
  VertexSet covered(closure.num_voters);
  std::vector<bool> elected(closure.num_candidates, false);
  std::vector<Candidate> members;
  for (int seat = 0; seat < inst.committee_size; ++seat) {
    Candidate best = -1;
    std::size_t best_gain = 0;
    for (Candidate c = 0; c < closure.num_candidates; ++c) {
      if (elected[c]) continue;
      const std::size_t gain = (approvers[c] - covered).count();
      if (best < 0 || gain > best_gain) {
        best = c;
        best_gain = gain;
      }
    }
    elected[best] = true;
    covered |= approvers[best];
    members.push_back(best);
  }
  return Evaluate(inst, std::move(members));
}

ApprovalDigraph BuildApprovalDigraph(const ElectionInstance& inst) {
  ApprovalDigraph out;
  int n = inst.num_voters;
  out.vertex_of.resize(inst.num_candidates);
  for (Candidate c = 0; c < inst.num_candidates; ++c) {
    out.vertex_of[c] = inst.candidate_voter[c] ? *inst.candidate_voter[c] : n++;
  }
  out.candidate_at.assign(n, std::nullopt);
  for (Candidate c = 0; c < inst.num_candidates; ++c) {
    out.candidate_at[out.vertex_of[c]] = c;
  }
  std::vector<Edge> arcs;
  for (Voter v = 0; v < inst.num_voters; ++v) {
    for (Candidate c : inst.approvals[v]) {
      if (out.vertex_of[c] != v) arcs.emplace_back(v, out.vertex_of[c]);
    }
  }
  out.graph = DirectedGraph(n, arcs);
  return out;
}

Committee MatchingCommittee(const ElectionInstance& inst) {
  inst.Validate();
  if (inst.setting != Setting::kNonSecrecy) {
    throw Error(ErrorCode::kWrongSetting,
                "the matching committee needs voter identities (non-secrecy)");
  }
  CheckSeats(inst);
  const ApprovalDigraph digraph = BuildApprovalDigraph(inst);
  const int n = digraph.graph.num_vertices();
  std::vector<bool> reserved(n, false);
  std::vector<bool> elected(inst.num_candidates, false);
  std::vector<Candidate> members;
  const int seats = inst.committee_size;

  // An endpoint qualifies if it is a candidate its partner approves of.
  auto qualifies = [&](Vertex x, Vertex partner) {
    return digraph.candidate_at[x].has_value() && !reserved[x] &&
           digraph.graph.HasArc(partner, x);
  };
  for (const auto& [x, y] : MaximumMatching(digraph.graph)) {
    if (static_cast<int>(members.size()) == seats) break;
    Vertex pick = -1, partner = -1;
    if (qualifies(x, y)) {
      pick = x;
      partner = y;
    } else if (qualifies(y, x)) {
      pick = y;
      partner = x;
    } else {
      continue;
    }
    const Candidate c = *digraph.candidate_at[pick];
    elected[c] = true;
    members.push_back(c);
    reserved[partner] = true;
  }

  auto fill = [&](bool allow_reserved) {
    for (Candidate c = 0; c < inst.num_candidates; ++c) {
      if (static_cast<int>(members.size()) == seats) return;
      if (elected[c]) continue;
      if (!allow_reserved && reserved[digraph.vertex_of[c]]) continue;
      elected[c] = true;
      members.push_back(c);
    }
  };
  fill(false);
  fill(true);
  return Evaluate(inst, std::move(members));
}

Committee SolveExtRepresentation(const ElectionInstance& inst) {
  Committee greedy = GreedyCommittee(inst);
  if (inst.setting == Setting::kRationalCandidate) return greedy;
  Committee matched = MatchingCommittee(inst);
  return matched.ext_value > greedy.ext_value ? matched : greedy;
}

}  // namespace extdom
