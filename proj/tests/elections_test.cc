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

#include <cmath>
#include <set>

#include "gtest/gtest.h"
#include "extdom/error.h"
#include "extdom/generators.h"
#include "extdom/oracle.h"

namespace extdom {
namespace {

using Members = std::vector<Candidate>;

// Nine voters, three candidates; candidate j is also voter j.
ElectionInstance ThreeCampsInstance(int seats) {
  ElectionInstance inst;
  inst.num_voters = 9;
  inst.num_candidates = 3;
  inst.approvals = {{0, 2}, {0}, {0}, {0}, {1}, {1}, {1}, {2}, {2}};
  inst.candidate_voter = {0, 1, 2};
  inst.committee_size = seats;
  inst.Validate();
  return inst;
}

TEST(ElectionsTest, RepresentationAndExternality) {
  const ElectionInstance inst = ThreeCampsInstance(2);
  EXPECT_EQ(RepresentedCount(inst, Members{0, 1}), 7);
  EXPECT_EQ(ExternalRepCount(inst, Members{0, 1}), 5);
  EXPECT_EQ(RepresentedCount(inst, Members{1, 2}), 6);
  EXPECT_EQ(ExternalRepCount(inst, Members{1, 2}), 6);
  EXPECT_EQ(ExternalRepCount(inst, Members{}), 0);
}

TEST(ElectionsTest, RepresentationOptimumDiffersFromExternalOptimum) {
  const ElectionInstance inst = ThreeCampsInstance(2);
  std::set<Members> rep_best, ext_best;
  int best_rep = -1, best_ext = -1;
  ForEachCombination(3, 2, [&](const std::vector<int>& c) {
    const int r = RepresentedCount(inst, c), e = ExternalRepCount(inst, c);
    if (r > best_rep) rep_best.clear(), best_rep = r;
    if (r == best_rep) rep_best.insert(c);
    if (e > best_ext) ext_best.clear(), best_ext = e;
    if (e == best_ext) ext_best.insert(c);
    return true;
  });
  EXPECT_EQ(rep_best, (std::set<Members>{{0, 1}}));
  EXPECT_EQ(ext_best, (std::set<Members>{{1, 2}}));
}

TEST(ClosureTest, AddsSelfApprovals) {
  const ElectionInstance closed = SelfApprovalClosure(ThreeCampsInstance(2));
  EXPECT_EQ(closed.num_voters, 9);
  const auto sets = closed.ApproverSets();
  EXPECT_EQ(sets[0], (std::vector<Voter>{0, 1, 2, 3}));
  EXPECT_EQ(sets[1], (std::vector<Voter>{1, 4, 5, 6}));
  EXPECT_EQ(sets[2], (std::vector<Voter>{0, 2, 7, 8}));
  EXPECT_EQ(RepresentedCount(closed, Members{1, 2}) - 2, 6);
}

TEST(ClosureTest, NonVoterCandidateGetsSyntheticVoter) {
  ElectionInstance inst;
  inst.num_voters = 2;
  inst.num_candidates = 2;
  inst.approvals = {{1}, {0, 1}};
  inst.candidate_voter = {0, std::nullopt};
  inst.Validate();
  const ElectionInstance closed = SelfApprovalClosure(inst);
  EXPECT_EQ(closed.num_voters, 3);
  EXPECT_EQ(closed.candidate_voter[1], 2);
  EXPECT_EQ(closed.approvals[2], (std::vector<Candidate>{1}));
  EXPECT_EQ(closed.approvals[0], (std::vector<Candidate>{0, 1}));
}

// ext on the original equals rep on the closure minus the committee size.
TEST(ClosureTest, ExternalityIdentityHoldsExhaustively) {
  for (int seed = 1; seed <= 120; ++seed) {
    ElectionParams params;
    params.num_voters = 2 + seed % 7;
    params.num_candidates = 1 + seed % 6;
    params.approval_prob = 0.2 + 0.1 * (seed % 4);
    params.overlap = 0.2 * (seed % 5);
    if (std::lround(params.overlap * params.num_candidates) > params.num_voters)
      params.overlap = 0.0;
    params.setting =
        seed % 2 ? Setting::kNonSecrecy : Setting::kRationalCandidate;
    const ElectionInstance inst = GenRandomElection(params, seed);
    const ElectionInstance closed = SelfApprovalClosure(inst);
    for (int r = 0; r <= inst.num_candidates; ++r) {
      ForEachCombination(inst.num_candidates, r, [&](const std::vector<int>& c) {
        EXPECT_EQ(ExternalRepCount(inst, c), RepresentedCount(closed, c) - r)
            << "seed " << seed;
        return true;
      });
    }
  }
}

TEST(GreedyCommitteeTest, SingleSeat) {
  const Committee c = GreedyCommittee(ThreeCampsInstance(1));
  EXPECT_EQ(c.members, Members{0});
  EXPECT_EQ(c.ext_value, 3);
  EXPECT_EQ(ExactExtRepresentation(ThreeCampsInstance(1)).optimum_ext, 3);
}

TEST(GreedyCommitteeTest, TwoSeats) {
  const Committee c = GreedyCommittee(ThreeCampsInstance(2));
  EXPECT_EQ(c.members, (Members{0, 1}));
  EXPECT_EQ(c.rep_value, 7);
  EXPECT_EQ(c.ext_value, 5);
}

TEST(MatchingCommitteeTest, MutualApprovals) {
  ElectionInstance inst;
  inst.num_voters = 2;
  inst.num_candidates = 2;
  inst.approvals = {{1}, {0}};
  inst.candidate_voter = {0, 1};
  inst.committee_size = 1;
  Committee one = MatchingCommittee(inst);
  EXPECT_EQ(one.members, Members{0});
  EXPECT_EQ(one.ext_value, 1);
  // The second seat has to go to the reserved partner.
  inst.committee_size = 2;
  Committee two = MatchingCommittee(inst);
  EXPECT_EQ(two.members, (Members{0, 1}));
  EXPECT_EQ(two.ext_value, 0);
}

TEST(MatchingCommitteeTest, ThreeCamps) {
  const Committee c = MatchingCommittee(ThreeCampsInstance(2));
  ASSERT_EQ(c.members.size(), 2u);
  EXPECT_EQ(c.members[0], 0);
  EXPECT_EQ(c.ext_value, ExternalRepCount(ThreeCampsInstance(2), c.members));
  EXPECT_GE(c.ext_value, 5);
}

TEST(MatchingCommitteeTest, NoApprovalsFallsBackToLowestIds) {
  ElectionInstance inst;
  inst.num_voters = 3;
  inst.num_candidates = 3;
  inst.approvals = {{}, {}, {}};
  inst.candidate_voter = {std::nullopt, std::nullopt, std::nullopt};
  inst.committee_size = 2;
  const Committee c = MatchingCommittee(inst);
  EXPECT_EQ(c.members, (Members{0, 1}));
  EXPECT_EQ(c.ext_value, 0);
}

TEST(MatchingCommitteeTest, RejectsRationalCandidateSetting) {
  ElectionInstance inst = ThreeCampsInstance(2);
  inst.approvals[1] = {0, 1};
  inst.approvals[2] = {0, 2};
  inst.setting = Setting::kRationalCandidate;
  inst.Validate();
  try {
    MatchingCommittee(inst);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kWrongSetting);
  }
  // The combined solver only uses the greedy there.
  EXPECT_EQ(SolveExtRepresentation(inst).members, GreedyCommittee(inst).members);
}

TEST(ElectionsTest, RationalCandidateNeedsSelfApproval) {
  ElectionInstance inst = ThreeCampsInstance(2);
  inst.setting = Setting::kRationalCandidate;
  try {
    inst.Validate();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSettingViolation);
  }
}

TEST(ElectionsTest, RejectsOutOfRangeCommittee) {
  const ElectionInstance inst = ThreeCampsInstance(2);
  EXPECT_THROW(RepresentedCount(inst, Members{3}), Error);
  ElectionInstance too_many = inst;
  too_many.committee_size = 4;
  EXPECT_THROW(GreedyCommittee(too_many), Error);
}

TEST(ElectionsTest, SettingNames) {
  EXPECT_EQ(ParseSetting("non-secrecy"), Setting::kNonSecrecy);
  EXPECT_EQ(ParseSetting("rational-candidate"), Setting::kRationalCandidate);
  EXPECT_EQ(SettingName(Setting::kRationalCandidate), "rational-candidate");
  EXPECT_THROW(ParseSetting("secret"), Error);
}

TEST(SolveTest, ThreeCampsStaysAboveGuarantee) {
  const Committee c = SolveExtRepresentation(ThreeCampsInstance(2));
  EXPECT_EQ(c.ext_value, 5);
  EXPECT_EQ(ExactExtRepresentation(ThreeCampsInstance(2)).optimum_ext, 6);
  EXPECT_GE(static_cast<long double>(c.ext_value),
            BoundValue(BoundName::kThm3) * 6);
}

}  // namespace
}  // namespace extdom
