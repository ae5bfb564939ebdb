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

#ifndef EXTDOM_BENCH_H_
#define EXTDOM_BENCH_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace extdom {

// Everything one CLI invocation needs. Field defaults match the CLI flags.
struct RunConfig {
  // solve | oracle | certify | decompose | gen
  std::string command;
  std::vector<std::string> inputs;

  // solve: algorithm2 | greedy | optext | committee | committee-greedy |
  // committee-matching
  std::string algorithm = "algorithm2";
  // Unset: graph commands need --p (certify sweeps all p); elections use
  // the file's committee size.
  std::optional<int> p;
  int k = 1;
  int delta = 1;
  // Greedy tie-breaking for `solve --alg greedy`: lowest | highest.
  std::string ties = "lowest";
  // Overrides the election file's setting when set.
  std::optional<std::string> setting;
  bool with_optimum = false;

  // optext: number of 1-valued objects, total objects (-1: one per vertex).
  int ones = -1;
  int objects = -1;
  bool pad = true;

  // certify / gen
  std::string bound;
  std::string family;
  int n = 8;
  int n_min = -1;
  int count = 100;
  std::uint64_t seed = 1;
  double prob = 0.4;
  int voters = 8;
  int candidates = 6;
  double approval_prob = 0.3;
  double overlap = 0.5;
  bool require_other_approval = false;
  int reduction_k = 2;
  int q1 = 2;
  int q2 = 2;
  std::string output;

  std::int64_t budget = 0;  // 0: EXTDOM_ORACLE_BUDGET or the default
  int jobs = 1;
  std::string format = "text";  // text | json
};

// Executes one command. Returns the process exit code: 0 when every verdict
// passed (or the command has none), 1 when a verdict failed, 2 on usage,
// parse or budget errors (diagnostic written to `err`).
int Run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace extdom

#endif  // EXTDOM_BENCH_H_
