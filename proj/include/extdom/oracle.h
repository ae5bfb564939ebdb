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

#ifndef EXTDOM_ORACLE_H_
#define EXTDOM_ORACLE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "extdom/domination.h"
#include "extdom/elections.h"
#include "extdom/graph.h"

namespace extdom {

inline constexpr std::int64_t kDefaultOracleBudget = 2'000'000;

// kDefaultOracleBudget unless EXTDOM_ORACLE_BUDGET holds a positive integer.
std::int64_t OracleBudgetFromEnv();

// C(n, r), saturating at INT64_MAX.
std::int64_t Binomial(int n, int r);

struct ExactDomination {
  int optimum_ext = 0;
  int optimum_dom = 0;
  // Lexicographically smallest optimal p-subset.
  std::vector<Vertex> witness;
  std::int64_t optimal_sets = 0;
};

// Enumerates every p-subset. Throws kOracleBudget when C(n, p) > budget.
ExactDomination ExactExtDomination(const UndirectedGraph& g, int p, int k,
                                   std::int64_t budget = kDefaultOracleBudget);

// All optimal p-subsets for dom and for ext, in lexicographic order.
std::vector<std::vector<Vertex>> AllDomOptimalSets(
    const UndirectedGraph& g, int p, int k,
    std::int64_t budget = kDefaultOracleBudget);
std::vector<std::vector<Vertex>> AllExtOptimalSets(
    const UndirectedGraph& g, int p, int k,
    std::int64_t budget = kDefaultOracleBudget);

struct ExactRepresentation {
  int optimum_ext = 0;
  std::vector<Candidate> witness;
};

// Best committee of size inst.committee_size under the instance's setting.
ExactRepresentation ExactExtRepresentation(
    const ElectionInstance& inst, std::int64_t budget = kDefaultOracleBudget);

// Maximum matching size by exhaustive search; graphs up to 20 vertices.
int ExhaustiveMatchingSize(const UndirectedGraph& g);

// Calls `visit` on every r-subset of [0, n) in lexicographic order. The
// callback returns false to stop early.
void ForEachCombination(int n, int r,
                        const std::function<bool(const std::vector<int>&)>& visit);

// --- ratio certification -------------------------------------------------

enum class BoundName { kThm2, kLemma1D0, kLemma1D1, kThm3, kThm4, kThm5, kCor41 };

std::string_view BoundLabel(BoundName b);
BoundName ParseBoundName(std::string_view name);

// Claimed approximation ratio; `k` matters only for the hop-radius bounds.
long double BoundValue(BoundName b, int k = 1);

inline constexpr long double kBoundTolerance = 1e-12L;

struct RatioReport {
  std::string instance;
  std::string algorithm;
  int value = 0;
  int optimum = 0;
  std::optional<Rational> ratio;
  std::string bound_name;
  long double bound = 0;
  bool pass = false;
  bool vacuous = false;
  // Set when the instance could not be evaluated; such reports fail.
  std::string error;
};

// value >= (bound - kBoundTolerance) * optimum, with optimum == 0 a
// vacuous pass.
RatioReport MakeReport(std::string instance, std::string algorithm, int value,
                       int optimum, std::string bound_name, long double bound);

struct CertifyCase {
  std::string instance;
  // Returns (algorithm value, optimal value).
  std::function<std::pair<int, int>()> evaluate;
};

// Evaluates every case, optionally on `jobs` worker threads. Reports come
// back in input order; an exception inside one case becomes a failing
// report for that case only.
std::vector<RatioReport> Certify(const std::vector<CertifyCase>& cases,
                                 std::string_view algorithm,
                                 BoundName bound, int k = 1, int jobs = 1);

bool AllPass(const std::vector<RatioReport>& reports);

}  // namespace extdom

#endif  // EXTDOM_ORACLE_H_
