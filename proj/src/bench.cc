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

#include "extdom/bench.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "json.hpp"

#include "extdom/decomposition.h"
#include "extdom/domination.h"
#include "extdom/elections.h"
#include "extdom/error.h"
#include "extdom/generators.h"
#include "extdom/instance_io.h"
#include "extdom/optext.h"
#include "extdom/oracle.h"
#include "extdom/rng.h"

namespace extdom {
namespace {

using nlohmann::json;

std::string Decimal(long double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12Lf", x);
  return buf;
}

std::string RatioText(const RatioReport& r) {
  if (!r.ratio) return "";
  return Decimal(static_cast<long double>(r.ratio->numerator()) /
                 static_cast<long double>(r.ratio->denominator()));
}

std::string Verdict(const RatioReport& r) {
  if (!r.error.empty()) return "error";
  if (r.bound_name.empty()) return "n/a";
  if (r.vacuous) return "vacuous-pass";
  return r.pass ? "pass" : "fail";
}

// One solver outcome plus whatever detail the command wants to show.
struct Row {
  RatioReport report;
  bool has_optimum = false;
  json detail = json::object();
};

class Reporter {
 public:
  Reporter(const RunConfig& config, std::ostream& out)
      : json_(config.format == "json"), out_(out) {}

  void Add(Row row) { rows_.push_back(std::move(row)); }
  void Note(const std::string& line) { notes_.push_back(line); }

  int Finish() {
    bool ok = true;
    int passes = 0, vacuous = 0, failures = 0;
    for (const Row& row : rows_) {
      const std::string v = Verdict(row.report);
      if (v == "fail" || v == "error") {
        ok = false;
        ++failures;
      } else if (v == "vacuous-pass") {
        ++vacuous;
      } else if (v == "pass") {
        ++passes;
      }
    }
    if (json_) {
      json doc;
      doc["reports"] = json::array();
      for (const Row& row : rows_) doc["reports"].push_back(ToJson(row));
      doc["summary"] = {{"instances", rows_.size()},
                        {"pass", passes},
                        {"vacuous", vacuous},
                        {"fail", failures},
                        {"all_pass", ok}};
      if (!notes_.empty()) doc["notes"] = notes_;
      out_ << doc.dump(2) << "\n";
    } else {
      for (const std::string& note : notes_) out_ << note << "\n";
      for (const Row& row : rows_) out_ << ToText(row) << "\n";
      if (!rows_.empty() && !rows_.front().report.bound_name.empty()) {
        out_ << "summary: " << rows_.size() << " checked, " << passes
             << " pass, " << vacuous << " vacuous, " << failures
             << " fail -> " << (ok ? "PASS" : "FAIL") << "\n";
      }
    }
    return ok ? 0 : 1;
  }

 private:
  static json ToJson(const Row& row) {
    const RatioReport& r = row.report;
    json j;
    j["instance"] = r.instance;
    j["algorithm"] = r.algorithm;
    j["value"] = r.value;
    j["optimum"] = row.has_optimum ? json(r.optimum) : json(nullptr);
    j["ratio"] = r.ratio ? json(RatioText(r)) : json(nullptr);
    if (r.bound_name.empty()) {
      j["bound"] = nullptr;
    } else {
      j["bound"] = {{"name", r.bound_name}, {"value", Decimal(r.bound)}};
    }
    j["verdict"] = Verdict(r);
    if (!r.error.empty()) j["error"] = r.error;
    if (!row.detail.empty()) j["detail"] = row.detail;
    return j;
  }

  static std::string ToText(const Row& row) {
    const RatioReport& r = row.report;
    std::ostringstream s;
    s << r.instance << " " << r.algorithm << " value=" << r.value;
    if (row.has_optimum) s << " optimum=" << r.optimum;
    if (r.ratio) s << " ratio=" << RatioText(r);
    if (!r.bound_name.empty()) {
      s << " bound=" << r.bound_name << "(" << Decimal(r.bound) << ")";
    }
    s << " verdict=" << Verdict(r);
    if (!r.error.empty()) s << " error=\"" << r.error << "\"";
    for (const auto& [key, value] : row.detail.items()) {
      s << " " << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump());
    }
    return s.str();
  }

  bool json_;
  std::ostream& out_;
  std::vector<Row> rows_;
  std::vector<std::string> notes_;
};

std::int64_t Budget(const RunConfig& c) {
  return c.budget > 0 ? c.budget : OracleBudgetFromEnv();
}

std::string VertexList(const std::vector<Vertex>& vs,
                       const std::vector<std::string>& labels) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ",";
    s += labels.empty() ? std::to_string(vs[i]) : labels[vs[i]];
  }
  return s + "}";
}

std::string CandidateList(std::vector<Candidate> cs) {
  std::sort(cs.begin(), cs.end());
  std::string s = "{";
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) s += ",";
    s += "c" + std::to_string(cs[i] + 1);
  }
  return s + "}";
}

const std::string& SingleInput(const RunConfig& c) {
  if (c.inputs.size() != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "'" + c.command + "' takes exactly one instance file");
  }
  return c.inputs.front();
}

int RequireP(const RunConfig& c) {
  if (!c.p) throw Error(ErrorCode::kInvalidArgument, "--p is required");
  return *c.p;
}

ElectionInstance LoadElection(const RunConfig& c, const std::string& path) {
  ElectionInstance inst = ParseElectionFile(path);
  if (c.setting) {
    inst.setting = ParseSetting(*c.setting);
    inst.Validate();
  }
  if (c.p) inst.committee_size = *c.p;
  return inst;
}

RatioReport PlainReport(std::string instance, std::string algorithm, int value,
                        std::optional<int> optimum) {
  RatioReport r;
  r.instance = std::move(instance);
  r.algorithm = std::move(algorithm);
  r.value = value;
  if (optimum) {
    r.optimum = *optimum;
    if (*optimum > 0) r.ratio = Rational(value, *optimum);
  }
  return r;
}

// --- solve ----------------------------------------------------------------

int SolveGraph(const RunConfig& c, const std::string& path, Reporter& rep) {
  const GraphFile file = ParseGraphFile(path);
  if (file.directed) {
    throw Error(ErrorCode::kInvalidArgument, "domination needs an undirected graph");
  }
  const UndirectedGraph& g = file.undirected;
  Row row;
  std::optional<int> optimum;
  int value = 0;
  std::string name = c.algorithm;
  if (c.algorithm == "algorithm2" || c.algorithm == "greedy") {
    const int p = RequireP(c);
    DominationSolution s;
    if (c.algorithm == "algorithm2") {
      const Algorithm2Result r = RunAlgorithm2(g, p, c.k, c.delta);
      s = r.solution;
      row.detail["branch"] = r.auxiliary_won ? "auxiliary" : "graph";
      row.detail["graph_branch_ext"] = r.graph_branch.ext_value;
      row.detail["auxiliary_branch_ext"] = r.auxiliary_branch.ext_value;
      name += "(k=" + std::to_string(c.k) + ",delta=" + std::to_string(c.delta) + ")";
    } else {
      TieBreakPolicy policy;
      if (c.ties == "highest") {
        policy = TieBreakPolicy::HighestId();
      } else if (c.ties != "lowest") {
        throw Error(ErrorCode::kInvalidArgument, "--ties must be lowest or highest");
      }
      s = GreedyDominators(g, p, c.k, policy).Final();
      name += "(k=" + std::to_string(c.k) + ",ties=" + c.ties + ")";
    }
    value = s.ext_value;
    row.detail["dominators"] = VertexList(s.dominators, file.labels);
    row.detail["dom"] = s.dom_value;
    row.detail["ext"] = s.ext_value;
    if (c.with_optimum) {
      optimum = ExactExtDomination(g, p, c.k, Budget(c)).optimum_ext;
    }
  } else if (c.algorithm == "optext") {
    if (c.ones < 0) throw Error(ErrorCode::kInvalidArgument, "--ones is required");
    const int total = c.objects < 0 ? g.num_vertices() : c.objects;
    if (c.ones > total) {
      throw Error(ErrorCode::kInstance, "more 1-objects than objects");
    }
    std::vector<int> values(total, 0);
    std::fill(values.begin(), values.begin() + c.ones, 1);
    const OptExtInstance inst = MakeOptExtInstance(g, values, c.pad);
    const Allocation alloc = ReduceAndSolve(inst);
    value = alloc.externality;
    row.detail["ones_on"] = VertexList(alloc.ones_holders, file.labels);
    row.detail["externality"] = alloc.externality;
    if (c.with_optimum) {
      optimum = ExactExtDomination(g, inst.ones(), 1, Budget(c)).optimum_ext;
    }
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown graph algorithm '" + c.algorithm + "'");
  }
  row.report = PlainReport(path, name, value, optimum);
  row.has_optimum = optimum.has_value();
  rep.Add(std::move(row));
  return 0;
}

int SolveElection(const RunConfig& c, const std::string& path, Reporter& rep) {
  const ElectionInstance inst = LoadElection(c, path);
  Committee committee;
  if (c.algorithm == "committee" || c.algorithm == "algorithm2") {
    committee = SolveExtRepresentation(inst);
  } else if (c.algorithm == "committee-greedy" || c.algorithm == "greedy") {
    committee = GreedyCommittee(inst);
  } else if (c.algorithm == "committee-matching" || c.algorithm == "matching") {
    committee = MatchingCommittee(inst);
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown election algorithm '" + c.algorithm + "'");
  }
  std::optional<int> optimum;
  if (c.with_optimum) optimum = ExactExtRepresentation(inst, Budget(c)).optimum_ext;
  Row row;
  row.report = PlainReport(path, c.algorithm + "(" + std::string(SettingName(inst.setting)) + ")",
                           committee.ext_value, optimum);
  row.has_optimum = optimum.has_value();
  row.detail["committee"] = CandidateList(committee.members);
  row.detail["rep"] = committee.rep_value;
  row.detail["ext"] = committee.ext_value;
  rep.Add(std::move(row));
  return 0;
}

int Solve(const RunConfig& c, Reporter& rep) {
  const std::string& path = SingleInput(c);
  if (InstanceKind(ReadFile(path)) == "election") return SolveElection(c, path, rep);
  return SolveGraph(c, path, rep);
}

// --- oracle ---------------------------------------------------------------

int Oracle(const RunConfig& c, Reporter& rep) {
  const std::string& path = SingleInput(c);
  Row row;
  if (InstanceKind(ReadFile(path)) == "election") {
    const ElectionInstance inst = LoadElection(c, path);
    const ExactRepresentation best = ExactExtRepresentation(inst, Budget(c));
    row.report = PlainReport(path, "exact-ext-representation", best.optimum_ext,
                             best.optimum_ext);
    row.detail["witness"] = CandidateList(best.witness);
  } else {
    const GraphFile file = ParseGraphFile(path);
    if (file.directed) {
      throw Error(ErrorCode::kInvalidArgument, "domination needs an undirected graph");
    }
    const ExactDomination best =
        ExactExtDomination(file.undirected, RequireP(c), c.k, Budget(c));
    row.report = PlainReport(path, "exact-ext-domination(k=" + std::to_string(c.k) + ")",
                             best.optimum_ext, best.optimum_ext);
    row.detail["dom"] = best.optimum_dom;
    row.detail["witness"] = VertexList(best.witness, file.labels);
    row.detail["optimal_sets"] = best.optimal_sets;
  }
  row.has_optimum = true;
  rep.Add(std::move(row));
  return 0;
}

// --- decompose --------------------------------------------------------------

int Decompose(const RunConfig& c, std::ostream& out) {
  const GraphFile file = ParseGraphFile(SingleInput(c));
  if (file.directed) {
    throw Error(ErrorCode::kInvalidArgument, "decomposition needs an undirected graph");
  }
  const AuxiliaryGraph aux = BuildAuxiliaryGraph(file.undirected, c.delta, c.k);
  const bool classify = c.delta == 1 && c.k == 1;
  json doc = json::array();
  for (const TreeComponent& piece : aux.components) {
    json j;
    j["root"] = file.labels[piece.root()];
    j["vertices"] = VertexList(piece.tree.vertices, file.labels);
    j["absorbed_remainder"] = piece.absorbed_remainder;
    j["below_threshold"] = piece.below_threshold;
    if (classify && piece.size() >= 3) {
      const SnmClass cls = ClassifyComponent(piece);
      j["class"] = "S_{" + std::to_string(cls.leaf_children) + "," +
                   std::to_string(cls.pendant_children) + "}";
      j["hub"] = file.labels[cls.hub];
      j["center"] = file.labels[DesignateCenter(piece)];
    }
    doc.push_back(j);
  }
  if (c.format == "json") {
    out << json{{"components", doc},
                {"dropped_edges",
                 file.undirected.num_edges() - aux.graph.num_edges()}}
               .dump(2)
        << "\n";
    return 0;
  }
  out << aux.components.size() << " component(s), "
      << file.undirected.num_edges() - aux.graph.num_edges()
      << " edge(s) dropped\n";
  for (const json& j : doc) {
    out << "component root=" << j["root"].get<std::string>()
        << " vertices=" << j["vertices"].get<std::string>();
    if (j["absorbed_remainder"].get<bool>()) out << " absorbed";
    if (j["below_threshold"].get<bool>()) out << " below-threshold";
    if (j.contains("class")) {
      out << " class=" << j["class"].get<std::string>()
          << " center=" << j["center"].get<std::string>();
    }
    out << "\n";
  }
  return 0;
}

// --- certify ----------------------------------------------------------------

struct GraphInstance {
  std::string label;
  UndirectedGraph graph;
};

std::vector<GraphInstance> GenerateGraphs(const RunConfig& c, bool no_isolated) {
  std::vector<GraphInstance> out;
  std::string family = c.family.empty() ? "connected" : c.family;
  const int n_min = c.n_min < 0 ? c.n : c.n_min;
  if (n_min < 1 || n_min > c.n) {
    throw Error(ErrorCode::kInvalidArgument, "need 1 <= --n-min <= --n");
  }
  Rng master(c.seed);
  for (int i = 0; i < c.count; ++i) {
    const int n = n_min + static_cast<int>(master.UniformInt(c.n - n_min + 1));
    const std::uint64_t seed = master.Next();
    UndirectedGraph g;
    for (std::uint64_t attempt = 0;; ++attempt) {
      const std::uint64_t s = seed + attempt;
      if (family == "er") {
        g = GenErdosRenyi(n, c.prob, s);
      } else if (family == "connected") {
        g = GenConnectedErdosRenyi(n, c.prob, s);
      } else if (family == "tree") {
        g = GenRandomTree(n, s);
      } else {
        g = GenClassic(ParseClassicFamily(family), n);
      }
      if (!no_isolated || !HasIsolatedVertex(g)) break;
      if (attempt > 10000 || n < 2) {
        throw Error(ErrorCode::kInvalidArgument,
                    "cannot draw a graph without isolated vertices");
      }
    }
    std::ostringstream label;
    label << family << "#" << i << "(n=" << n << ",seed=" << seed << ")";
    out.push_back({label.str(), std::move(g)});
  }
  return out;
}

std::vector<std::string> DirectoryFiles(const std::string& dir,
                                        const std::string& ext) {
  std::vector<std::string> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ext) {
      files.push_back(entry.path().string());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

int CertifyGraphs(const RunConfig& c, BoundName bound, Reporter& rep) {
  const bool no_isolated = bound == BoundName::kCor41;
  std::vector<GraphInstance> graphs;
  if (!c.inputs.empty()) {
    for (const std::string& input : c.inputs) {
      const auto paths = std::filesystem::is_directory(input)
                             ? DirectoryFiles(input, ".graph")
                             : std::vector<std::string>{input};
      for (const std::string& path : paths) {
        GraphFile file = ParseGraphFile(path);
        if (file.directed) {
          rep.Note("skipped " + path + ": directed graph");
          continue;
        }
        if (no_isolated && HasIsolatedVertex(file.undirected)) {
          rep.Note("skipped " + path + ": isolated vertex");
          continue;
        }
        graphs.push_back({path, std::move(file.undirected)});
      }
    }
  } else {
    graphs = GenerateGraphs(c, no_isolated);
  }

  int k = c.k, delta = c.delta;
  std::string algorithm;
  switch (bound) {
    case BoundName::kThm2:
      k = 1;
      delta = 1;
      algorithm = "algorithm2(k=1,delta=1)";
      break;
    case BoundName::kLemma1D0:
    case BoundName::kLemma1D1:
      delta = bound == BoundName::kLemma1D0 ? 0 : 1;
      algorithm = "algorithm2(k=" + std::to_string(k) + ",delta=" +
                  std::to_string(delta) + ")";
      break;
    case BoundName::kThm5:
      k = 1;
      algorithm = "optext-reduction";
      break;
    case BoundName::kCor41:
      k = 1;
      algorithm = "greedy(k=1,ties=lowest)";
      break;
    default:
      throw Error(ErrorCode::kInvalidArgument, "not a graph bound");
  }

  const std::int64_t budget = Budget(c);
  std::vector<CertifyCase> cases;
  for (const GraphInstance& inst : graphs) {
    const int n = inst.graph.num_vertices();
    std::vector<int> ps;
    if (c.p) {
      ps.push_back(*c.p);
    } else {
      for (int p = 1; p <= n - 1; ++p) ps.push_back(p);
    }
    for (int p : ps) {
      const UndirectedGraph* g = &inst.graph;
      cases.push_back(
          {inst.label + " p=" + std::to_string(p), [=]() -> std::pair<int, int> {
             const int optimum = ExactExtDomination(*g, p, k, budget).optimum_ext;
             int value = 0;
             if (bound == BoundName::kThm5) {
               std::vector<int> values(g->num_vertices(), 0);
               std::fill(values.begin(), values.begin() + p, 1);
               value = ReduceAndSolve(MakeOptExtInstance(*g, values, false)).externality;
             } else if (bound == BoundName::kCor41) {
               value = GreedyDominators(*g, p, 1, TieBreakPolicy::LowestId()).Final().ext_value;
             } else {
               value = RunAlgorithm2(*g, p, k, delta).solution.ext_value;
             }
             return {value, optimum};
           }});
    }
  }
  for (RatioReport& r : Certify(cases, algorithm, bound, k, c.jobs)) {
    Row row;
    row.has_optimum = r.error.empty();
    row.report = std::move(r);
    rep.Add(std::move(row));
  }
  return 0;
}

// Every candidate votes and approves some candidate other than themselves.
bool ApprovesAnother(const ElectionInstance& inst) {
  for (Candidate c = 0; c < inst.num_candidates; ++c) {
    if (!inst.candidate_voter[c]) return false;
    const auto& vote = inst.approvals[*inst.candidate_voter[c]];
    if (std::none_of(vote.begin(), vote.end(), [c](Candidate x) { return x != c; })) {
      return false;
    }
  }
  return true;
}

int CertifyElections(const RunConfig& c, BoundName bound, Reporter& rep) {
  struct Item {
    std::string label;
    ElectionInstance inst;
  };
  std::vector<Item> items;
  const bool thm4 = bound == BoundName::kThm4;
  if (!c.inputs.empty()) {
    for (const std::string& input : c.inputs) {
      const auto paths = std::filesystem::is_directory(input)
                             ? DirectoryFiles(input, ".election")
                             : std::vector<std::string>{input};
      for (const std::string& path : paths) {
        ElectionInstance inst = LoadElection(c, path);
        if (thm4 && !ApprovesAnother(inst)) {
          rep.Note("skipped " + path + ": some candidate approves no other candidate");
          continue;
        }
        if (!thm4 && inst.setting != Setting::kNonSecrecy) {
          rep.Note("skipped " + path + ": thm3 needs the non-secrecy setting");
          continue;
        }
        items.push_back({path, std::move(inst)});
      }
    }
  } else {
    Rng master(c.seed);
    const std::vector<Setting> settings =
        thm4 ? std::vector<Setting>{Setting::kNonSecrecy, Setting::kRationalCandidate}
             : std::vector<Setting>{Setting::kNonSecrecy};
    for (int i = 0; i < c.count; ++i) {
      const std::uint64_t seed = master.Next();
      ElectionParams params;
      params.num_voters = c.voters;
      params.num_candidates = c.candidates;
      params.approval_prob = c.approval_prob;
      params.overlap = c.overlap;
      params.require_other_approval = thm4 || c.require_other_approval;
      for (Setting setting : settings) {
        params.setting = setting;
        const ElectionInstance base = GenRandomElection(params, seed);
        std::vector<int> ps;
        if (c.p) {
          ps.push_back(*c.p);
        } else {
          for (int p = 1; p < base.num_candidates; ++p) ps.push_back(p);
        }
        for (int p : ps) {
          ElectionInstance inst = base;
          inst.committee_size = p;
          std::ostringstream label;
          label << "election#" << i << "(seed=" << seed << ","
                << SettingName(setting) << ") p=" << p;
          items.push_back({label.str(), std::move(inst)});
        }
      }
    }
  }
  const std::int64_t budget = Budget(c);
  std::vector<CertifyCase> cases;
  for (const Item& item : items) {
    const ElectionInstance* inst = &item.inst;
    cases.push_back({item.label, [=]() -> std::pair<int, int> {
                       const int optimum = ExactExtRepresentation(*inst, budget).optimum_ext;
                       const Committee committee = thm4 ? GreedyCommittee(*inst)
                                                        : SolveExtRepresentation(*inst);
                       return {committee.ext_value, optimum};
                     }});
  }
  const std::string algorithm = thm4 ? "committee-greedy" : "committee(best-of)";
  for (RatioReport& r : Certify(cases, algorithm, bound, 1, c.jobs)) {
    Row row;
    row.has_optimum = r.error.empty();
    row.report = std::move(r);
    rep.Add(std::move(row));
  }
  return 0;
}

int CertifyCommand(const RunConfig& c, Reporter& rep) {
  if (c.bound.empty()) throw Error(ErrorCode::kInvalidArgument, "--bound is required");
  const BoundName bound = ParseBoundName(c.bound);
  if (bound == BoundName::kThm3 || bound == BoundName::kThm4) {
    return CertifyElections(c, bound, rep);
  }
  return CertifyGraphs(c, bound, rep);
}

// --- gen --------------------------------------------------------------------

int Gen(const RunConfig& c, std::ostream& out) {
  std::string text;
  const std::string& family = c.family;
  if (family == "election") {
    ElectionParams params;
    params.num_voters = c.voters;
    params.num_candidates = c.candidates;
    params.approval_prob = c.approval_prob;
    params.overlap = c.overlap;
    params.require_other_approval = c.require_other_approval;
    params.setting = c.setting ? ParseSetting(*c.setting) : Setting::kNonSecrecy;
    params.committee_size = c.p.value_or(1);
    text = FormatElection(GenRandomElection(params, c.seed));
  } else if (family == "reduction") {
    const GraphFile base = ParseGraphFile(SingleInput(c));
    text = FormatGraph(GenReductionGraph(base.undirected, c.reduction_k, c.q1, c.q2).graph);
  } else if (family == "er") {
    text = FormatGraph(GenErdosRenyi(c.n, c.prob, c.seed));
  } else if (family == "connected") {
    text = FormatGraph(GenConnectedErdosRenyi(c.n, c.prob, c.seed));
  } else if (family == "tree") {
    text = FormatGraph(GenRandomTree(c.n, c.seed));
  } else {
    text = FormatGraph(GenClassic(ParseClassicFamily(family), c.n));
  }
  if (c.output.empty()) {
    out << text;
  } else {
    std::ofstream file(c.output);
    if (!file) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + c.output + "'");
    file << text;
  }
  return 0;
}

}  // namespace

int Run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.format != "text" && config.format != "json") {
      throw Error(ErrorCode::kInvalidArgument, "--format must be text or json");
    }
    if (config.k < 1) throw Error(ErrorCode::kInvalidArgument, "--k must be >= 1");
    if (config.delta != 0 && config.delta != 1) {
      throw Error(ErrorCode::kInvalidArgument, "--delta must be 0 or 1");
    }
    if (config.command == "decompose") return Decompose(config, out);
    if (config.command == "gen") return Gen(config, out);
    Reporter rep(config, out);
    if (config.command == "solve") {
      Solve(config, rep);
    } else if (config.command == "oracle") {
      Oracle(config, rep);
    } else if (config.command == "certify") {
      CertifyCommand(config, rep);
    } else {
      throw Error(ErrorCode::kInvalidArgument,
                  "unknown command '" + config.command + "'");
    }
    return rep.Finish();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace extdom
