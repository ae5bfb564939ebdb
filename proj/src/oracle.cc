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

#include "extdom/oracle.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <thread>
#include <unordered_map>

#include "extdom/error.h"

namespace extdom {
namespace {

// e to 30 significant digits.
constexpr long double kE = 2.71828182845904523536028747135L;

void CheckBudget(int n, int r, std::int64_t budget) {
  const std::int64_t total = Binomial(n, r);
  if (total > budget) {
    throw Error(ErrorCode::kOracleBudget,
                "C(" + std::to_string(n) + ", " + std::to_string(r) + ") = " +
                    std::to_string(total) + " subsets exceeds budget " +
                    std::to_string(budget));
  }
}

// Depth-first over r-subsets of `sets` in lexicographic order, keeping the
// union of each prefix so every leaf costs one bitset OR.
template <typename Visit>
void EnumerateUnions(const std::vector<VertexSet>& sets, std::size_t universe,
                     int r, Visit&& visit) {
  const int n = static_cast<int>(sets.size());
  if (r < 0 || r > n) return;
  std::vector<int> combo;
  std::vector<VertexSet> prefix(r + 1, VertexSet(universe));
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == r) {
      visit(combo, prefix[depth]);
      return;
    }
    for (int i = start; i <= n - (r - depth); ++i) {
      prefix[depth + 1] = prefix[depth];
      prefix[depth + 1] |= sets[i];
      combo.push_back(i);
      self(self, i + 1, depth + 1);
      combo.pop_back();
    }
  };
  rec(rec, 0, 0);
}

void CheckCardinality(int p, int n) {
  if (p < 0 || p > n) {
    throw Error(ErrorCode::kInfeasibleCardinality,
                "cannot choose " + std::to_string(p) + " of " +
                    std::to_string(n));
  }
}

}  // namespace

std::int64_t OracleBudgetFromEnv() {
  if (const char* raw = std::getenv("EXTDOM_ORACLE_BUDGET")) {
    char* end = nullptr;
    const long long value = std::strtoll(raw, &end, 10);
    if (end != raw && *end == '\0' && value > 0) return value;
  }
  return kDefaultOracleBudget;
}

std::int64_t Binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  std::int64_t result = 1;
  for (int i = 1; i <= r; ++i) {
    // result * (n - r + i) / i stays exact because result = C(n-r+i-1, i-1).
    const std::int64_t factor = n - r + i;
    if (result > kMax / factor) return kMax;
    result = result * factor / i;
  }
  return result;
}

ExactDomination ExactExtDomination(const UndirectedGraph& g, int p, int k,
                                   std::int64_t budget) {
  const int n = g.num_vertices();
  CheckCardinality(p, n);
  CheckBudget(n, p, budget);
  const auto balls = AllKHopBalls(g, k);
  ExactDomination best;
  best.optimum_dom = -1;
  EnumerateUnions(balls, n, p, [&](const std::vector<int>& combo,
                                   const VertexSet& covered) {
    const int dom = static_cast<int>(covered.count());
    if (dom > best.optimum_dom) {
      best.optimum_dom = dom;
      best.witness = combo;
      best.optimal_sets = 1;
    } else if (dom == best.optimum_dom) {
      ++best.optimal_sets;
    }
  });
  best.optimum_ext = best.optimum_dom - p;
  return best;
}

std::vector<std::vector<Vertex>> AllDomOptimalSets(const UndirectedGraph& g,
                                                   int p, int k,
                                                   std::int64_t budget) {
  const int n = g.num_vertices();
  CheckCardinality(p, n);
  CheckBudget(n, p, budget);
  const auto balls = AllKHopBalls(g, k);
  int best = -1;
  std::vector<std::vector<Vertex>> out;
  EnumerateUnions(balls, n, p, [&](const std::vector<int>& combo,
                                   const VertexSet& covered) {
    const int dom = static_cast<int>(covered.count());
    if (dom > best) {
      best = dom;
      out.clear();
    }
    if (dom == best) out.push_back(combo);
  });
  return out;
}

std::vector<std::vector<Vertex>> AllExtOptimalSets(const UndirectedGraph& g,
                                                   int p, int k,
                                                   std::int64_t budget) {
  const int n = g.num_vertices();
  CheckCardinality(p, n);
  CheckBudget(n, p, budget);
  const auto balls = AllKHopBalls(g, k);
  int best = std::numeric_limits<int>::min();
  std::vector<std::vector<Vertex>> out;
  // Counts externally dominated vertices directly: covered minus chosen.
  EnumerateUnions(balls, n, p, [&](const std::vector<int>& combo,
                                   const VertexSet& covered) {
    VertexSet external = covered;
    for (int v : combo) external.reset(v);
    const int ext = static_cast<int>(external.count());
    if (ext > best) {
      best = ext;
      out.clear();
    }
    if (ext == best) out.push_back(combo);
  });
  return out;
}

ExactRepresentation ExactExtRepresentation(const ElectionInstance& inst,
                                           std::int64_t budget) {
  inst.Validate();
  const int m = inst.num_candidates;
  const int p = inst.committee_size;
  CheckCardinality(p, m);
  CheckBudget(m, p, budget);
  ExactRepresentation best;
  best.optimum_ext = -1;
  ForEachCombination(m, p, [&](const std::vector<int>& committee) {
    const int ext = ExternalRepCount(inst, committee);
    if (ext > best.optimum_ext) {
      best.optimum_ext = ext;
      best.witness = committee;
    }
    return true;
  });
  return best;
}

int ExhaustiveMatchingSize(const UndirectedGraph& g) {
  const int n = g.num_vertices();
  if (n > 20) {
    throw Error(ErrorCode::kOracleBudget,
                "exhaustive matching is limited to 20 vertices");
  }
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& [u, v] : g.Edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  std::unordered_map<std::uint32_t, int> memo;
  // best(mask) = max matching inside the vertex set `mask`: the lowest
  // vertex either stays unmatched or pairs with one of its neighbors.
  auto best = [&](auto&& self, std::uint32_t mask) -> int {
    if (mask == 0) return 0;
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const int v = __builtin_ctz(mask);
    const std::uint32_t rest = mask & ~(1u << v);
    int result = self(self, rest);
    for (std::uint32_t cand = adj[v] & rest; cand; cand &= cand - 1) {
      const int u = __builtin_ctz(cand);
      result = std::max(result, 1 + self(self, rest & ~(1u << u)));
    }
    memo.emplace(mask, result);
    return result;
  };
  const std::uint32_t all = (1u << n) - 1;
  return best(best, all);
}

void ForEachCombination(
    int n, int r, const std::function<bool(const std::vector<int>&)>& visit) {
  if (r < 0 || r > n) return;
  std::vector<int> combo(r);
  for (int i = 0; i < r; ++i) combo[i] = i;
  while (true) {
    if (!visit(combo)) return;
    int i = r - 1;
    while (i >= 0 && combo[i] == n - r + i) --i;
    if (i < 0) return;
    ++combo[i];
    for (int j = i + 1; j < r; ++j) combo[j] = combo[j - 1] + 1;
  }
}

std::string_view BoundLabel(BoundName b) {
  switch (b) {
    case BoundName::kThm2:
      return "thm2";
    case BoundName::kLemma1D0:
      return "lemma1-d0";
    case BoundName::kLemma1D1:
      return "lemma1-d1";
    case BoundName::kThm3:
      return "thm3";
    case BoundName::kThm4:
      return "thm4";
    case BoundName::kThm5:
      return "thm5";
    case BoundName::kCor41:
      return "cor41";
  }
  return "?";
}

BoundName ParseBoundName(std::string_view name) {
  for (BoundName b : {BoundName::kThm2, BoundName::kLemma1D0,
                      BoundName::kLemma1D1, BoundName::kThm3, BoundName::kThm4,
                      BoundName::kThm5, BoundName::kCor41}) {
    if (BoundLabel(b) == name) return b;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown bound '" + std::string(name) + "'");
}

long double BoundValue(BoundName b, int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "hop radius must be >= 1");
  const long double kk = k;
  switch (b) {
    case BoundName::kThm2:
    case BoundName::kThm5:
      return (6 * kE - 5) / (6 * kE + 5);
    case BoundName::kLemma1D0:
      return (kE - 1) / (kE + 1 / kk);
    case BoundName::kLemma1D1:
      return std::min((kE - 1) / (kE + 1 / (kk + 1)), kk / (kk + 1));
    case BoundName::kThm3:
    case BoundName::kThm4:
    case BoundName::kCor41:
      return (kE - 1) / (kE + 1);
  }
  return 0;
}

RatioReport MakeReport(std::string instance, std::string algorithm, int value,
                       int optimum, std::string bound_name, long double bound) {
  RatioReport r;
  r.instance = std::move(instance);
  r.algorithm = std::move(algorithm);
  r.value = value;
  r.optimum = optimum;
  r.bound_name = std::move(bound_name);
  r.bound = bound;
  if (optimum == 0) {
    r.vacuous = true;
    r.pass = true;
    return r;
  }
  r.ratio = Rational(value, optimum);
  r.pass = static_cast<long double>(value) >=
           (bound - kBoundTolerance) * static_cast<long double>(optimum);
  return r;
}

std::vector<RatioReport> Certify(const std::vector<CertifyCase>& cases,
                                 std::string_view algorithm, BoundName bound,
                                 int k, int jobs) {
  const long double bound_value = BoundValue(bound, k);
  const std::string bound_label(BoundLabel(bound));
  std::vector<RatioReport> reports(cases.size());
  auto run_one = [&](std::size_t i) {
    try {
      const auto [value, optimum] = cases[i].evaluate();
      reports[i] = MakeReport(cases[i].instance, std::string(algorithm), value,
                              optimum, bound_label, bound_value);
    } catch (const std::exception& e) {
      RatioReport failed;
      failed.instance = cases[i].instance;
      failed.algorithm = std::string(algorithm);
      failed.bound_name = bound_label;
      failed.bound = bound_value;
      failed.error = e.what();
      reports[i] = std::move(failed);
    }
  };
  if (jobs <= 1 || cases.size() < 2) {
    for (std::size_t i = 0; i < cases.size(); ++i) run_one(i);
    return reports;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  const int count = std::min<int>(jobs, static_cast<int>(cases.size()));
  for (int w = 0; w < count; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < cases.size(); i = next++) run_one(i);
    });
  }
  for (auto& t : workers) t.join();
  return reports;
}

bool AllPass(const std::vector<RatioReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const RatioReport& r) { return r.pass; });
}

}  // namespace extdom
