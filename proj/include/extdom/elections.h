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

#ifndef EXTDOM_ELECTIONS_H_
#define EXTDOM_ELECTIONS_H_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "extdom/graph.h"

namespace extdom {

using Voter = int;
using Candidate = int;

enum class Setting { kNonSecrecy, kRationalCandidate };

std::string_view SettingName(Setting s);
// Accepts "non-secrecy" and "rational-candidate".
Setting ParseSetting(std::string_view name);

// Approval election with voters [0, num_voters) and candidates
// [0, num_candidates). A candidate may also be a voter; the identity is
// recorded in `candidate_voter`.
struct ElectionInstance {
  int num_voters = 0;
  int num_candidates = 0;
  // voter -> approved candidates, ascending.
  std::vector<std::vector<Candidate>> approvals;
  // candidate -> voter id of the same person, if any.
  std::vector<std::optional<Voter>> candidate_voter;
  Setting setting = Setting::kNonSecrecy;
  int committee_size = 1;

  // Throws on malformed ranges (kInvalidCandidate / kInvalidArgument) and,
  // for the rational-candidate setting, on a candidate-voter who does not
  // approve of themselves (kSettingViolation).
  void Validate() const;

  // S_c: voters approving candidate c, ascending.
  std::vector<std::vector<Voter>> ApproverSets() const;

  friend bool operator==(const ElectionInstance&,
                         const ElectionInstance&) = default;
};

struct Committee {
  // Ascending candidate ids.
  std::vector<Candidate> members;
  int rep_value = 0;
  int ext_value = 0;
};

// rep(C): voters approving at least one member.
int RepresentedCount(const ElectionInstance& inst,
                     std::span<const Candidate> committee);
// Voters represented by C who are not themselves members, counted the way
// the instance's setting allows: by identity under non-secrecy, as
// rep(C) - |C ∩ candidate-voters| under rational-candidate.
int ExternalRepCount(const ElectionInstance& inst,
                     std::span<const Candidate> committee);

// Every candidate approves of itself; candidates without a voter identity
// get a synthetic voter (ids after the real voters) approving only them.
// On the result ExternalRepCount(C) == RepresentedCount(C) - |C|, and it
// equals ExternalRepCount(C) on the input.
ElectionInstance SelfApprovalClosure(const ElectionInstance& inst);

// Coverage greedy on the closure with lowest-id ties; values reported on
// the original instance.
Committee GreedyCommittee(const ElectionInstance& inst);

// Approval digraph over the shared voter/candidate namespace: vertex v <
// num_voters is voter v; candidates without a voter identity follow.
struct ApprovalDigraph {
  DirectedGraph graph;
  // vertex -> candidate at that vertex, if any.
  std::vector<std::optional<Candidate>> candidate_at;
  // candidate -> vertex.
  std::vector<Vertex> vertex_of;
};

ApprovalDigraph BuildApprovalDigraph(const ElectionInstance& inst);

// Elects matched candidates whose partner approves them, keeping partners
// off the committee, then fills seats by lowest id. Non-secrecy only.
Committee MatchingCommittee(const ElectionInstance& inst);

// Non-secrecy: better of greedy and matching (ties keep greedy).
// Rational-candidate: greedy.
Committee SolveExtRepresentation(const ElectionInstance& inst);

}  // namespace extdom

#endif  // EXTDOM_ELECTIONS_H_
