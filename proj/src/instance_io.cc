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

#include "extdom/instance_io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "extdom/error.h"

namespace extdom {
namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

// Non-empty lines with comments stripped, split on whitespace.
std::vector<Line> Tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] void Fail(int line, const std::string& message) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + message);
}

bool ParseInt(std::string_view s, long long& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

int ParseCount(const Line& line, std::size_t index, const char* what) {
  long long value = 0;
  if (index >= line.tokens.size() || !ParseInt(line.tokens[index], value) ||
      value < 0 || value > 100'000'000) {
    Fail(line.number, std::string("expected a non-negative ") + what);
  }
  return static_cast<int>(value);
}

// "v12" -> 11 when 1 <= 12 <= limit.
int ParsePrefixedId(const Line& line, std::string_view tok, char prefix,
                    int limit, const char* what) {
  long long value = 0;
  if (tok.size() < 2 || tok[0] != prefix || !ParseInt(tok.substr(1), value)) {
    Fail(line.number, "malformed " + std::string(what) + " '" + std::string(tok) + "'");
  }
  if (value < 1 || value > limit) {
    Fail(line.number, "unknown " + std::string(what) + " '" + std::string(tok) + "'");
  }
  return static_cast<int>(value - 1);
}

}  // namespace

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string InstanceKind(std::string_view text) {
  const auto lines = Tokenize(text);
  if (lines.empty()) throw Error(ErrorCode::kParse, "empty instance file");
  return lines.front().tokens.front();
}

GraphFile ParseGraphText(std::string_view text) {
  const auto lines = Tokenize(text);
  if (lines.empty()) throw Error(ErrorCode::kParse, "empty graph file");
  const Line& header = lines.front();
  if (header.tokens.size() != 3 ||
      (header.tokens[0] != "undirected" && header.tokens[0] != "directed")) {
    Fail(header.number, "expected 'undirected <n> <m>' or 'directed <n> <m>'");
  }
  GraphFile out;
  out.directed = header.tokens[0] == "directed";
  const int n = ParseCount(header, 1, "vertex count");
  const int m = ParseCount(header, 2, "edge count");
  if (static_cast<int>(lines.size()) - 1 != m) {
    Fail(header.number, "header announces " + std::to_string(m) +
                            " edges, file has " +
                            std::to_string(lines.size() - 1));
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].tokens.size() != 2) Fail(lines[i].number, "expected 'u v'");
  }

  bool numeric = true;
  for (std::size_t i = 1; i < lines.size() && numeric; ++i) {
    for (const auto& tok : lines[i].tokens) {
      long long v = 0;
      if (!ParseInt(tok, v) || v < 0 || v >= n) numeric = false;
    }
  }
  // A token that looks numeric but is out of range is a dangling id, not a
  // label.
  if (!numeric) {
    bool any_label = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      for (const auto& tok : lines[i].tokens) {
        long long v = 0;
        if (!ParseInt(tok, v)) any_label = true;
      }
    }
    if (!any_label) {
      for (std::size_t i = 1; i < lines.size(); ++i) {
        for (const auto& tok : lines[i].tokens) {
          long long v = 0;
          ParseInt(tok, v);
          if (v < 0 || v >= n) Fail(lines[i].number, "dangling vertex id " + tok);
        }
      }
    }
  }

  std::map<std::string, int> ids;
  out.labels.clear();
  if (numeric) {
    for (int v = 0; v < n; ++v) out.labels.push_back(std::to_string(v));
  }
  auto resolve = [&](const Line& line, const std::string& tok) {
    if (numeric) return std::stoi(tok);
    auto [it, inserted] = ids.emplace(tok, static_cast<int>(ids.size()));
    if (inserted) {
      if (it->second >= n) {
        Fail(line.number, "label '" + tok + "' exceeds the " +
                              std::to_string(n) + " announced vertices");
      }
      out.labels.push_back(tok);
    }
    return it->second;
  };

  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const int u = resolve(line, line.tokens[0]);
    const int v = resolve(line, line.tokens[1]);
    if (u == v) Fail(line.number, "self-loop at '" + line.tokens[0] + "'");
    Edge key = out.directed ? Edge{u, v} : Edge{std::min(u, v), std::max(u, v)};
    if (!seen.insert(key).second) {
      Fail(line.number, "duplicate edge '" + line.tokens[0] + " " +
                            line.tokens[1] + "'");
    }
    edges.emplace_back(u, v);
  }
  while (static_cast<int>(out.labels.size()) < n) {
    out.labels.push_back("_" + std::to_string(out.labels.size()));
  }
  if (out.directed) {
    out.digraph = DirectedGraph(n, edges);
  } else {
    out.undirected = UndirectedGraph(n, edges);
  }
  return out;
}

GraphFile ParseGraphFile(const std::string& path) {
  return ParseGraphText(ReadFile(path));
}

std::string FormatGraph(const UndirectedGraph& g) {
  std::ostringstream out;
  out << "undirected " << g.num_vertices() << " " << g.num_edges() << "\n";
  for (const auto& [u, v] : g.Edges()) out << u << " " << v << "\n";
  return out.str();
}

std::string FormatGraph(const DirectedGraph& d) {
  std::ostringstream out;
  out << "directed " << d.num_vertices() << " " << d.num_arcs() << "\n";
  for (const auto& [u, v] : d.Arcs()) out << u << " " << v << "\n";
  return out.str();
}

ElectionInstance ParseElectionText(std::string_view text) {
  const auto lines = Tokenize(text);
  if (lines.empty()) throw Error(ErrorCode::kParse, "empty election file");
  const Line& header = lines.front();
  if (header.tokens.size() != 5 || header.tokens[0] != "election") {
    Fail(header.number,
         "expected 'election <n_voters> <m_candidates> <setting> <p>'");
  }
  ElectionInstance inst;
  inst.num_voters = ParseCount(header, 1, "voter count");
  inst.num_candidates = ParseCount(header, 2, "candidate count");
  try {
    inst.setting = ParseSetting(header.tokens[3]);
  } catch (const Error&) {
    Fail(header.number, "unknown setting '" + header.tokens[3] + "'");
  }
  inst.committee_size = ParseCount(header, 4, "committee size");
  inst.approvals.assign(inst.num_voters, {});
  inst.candidate_voter.assign(inst.num_candidates, std::nullopt);

  std::vector<bool> voter_seen(inst.num_voters, false);
  bool mapping_seen = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& head = line.tokens[0];
    if (head == "candidate-voters:") {
      if (mapping_seen) Fail(line.number, "second candidate-voters line");
      mapping_seen = true;
      std::vector<bool> voter_used(inst.num_voters, false);
      for (std::size_t t = 1; t < line.tokens.size(); ++t) {
        const std::string& pair = line.tokens[t];
        const auto eq = pair.find('=');
        if (eq == std::string::npos) Fail(line.number, "expected v<i>=c<j>");
        const int v = ParsePrefixedId(line, std::string_view(pair).substr(0, eq),
                                      'v', inst.num_voters, "voter");
        const int c = ParsePrefixedId(line, std::string_view(pair).substr(eq + 1),
                                      'c', inst.num_candidates, "candidate");
        if (voter_used[v] || inst.candidate_voter[c]) {
          Fail(line.number, "duplicate mapping '" + pair + "'");
        }
        voter_used[v] = true;
        inst.candidate_voter[c] = v;
      }
      continue;
    }
    if (head.size() < 3 || head.back() != ':') {
      Fail(line.number, "expected 'v<i>: ...' or 'candidate-voters: ...'");
    }
    const int v = ParsePrefixedId(line, std::string_view(head).substr(0, head.size() - 1),
                                  'v', inst.num_voters, "voter");
    if (voter_seen[v]) Fail(line.number, "second line for voter " + head);
    voter_seen[v] = true;
    auto& vote = inst.approvals[v];
    for (std::size_t t = 1; t < line.tokens.size(); ++t) {
      vote.push_back(ParsePrefixedId(line, line.tokens[t], 'c',
                                     inst.num_candidates, "candidate"));
    }
    std::sort(vote.begin(), vote.end());
    if (std::adjacent_find(vote.begin(), vote.end()) != vote.end()) {
      Fail(line.number, "candidate approved twice");
    }
  }
  inst.Validate();
  return inst;
}

ElectionInstance ParseElectionFile(const std::string& path) {
  return ParseElectionText(ReadFile(path));
}

std::string FormatElection(const ElectionInstance& inst) {
  std::ostringstream out;
  out << "election " << inst.num_voters << " " << inst.num_candidates << " "
      << SettingName(inst.setting) << " " << inst.committee_size << "\n";
  for (int v = 0; v < inst.num_voters; ++v) {
    out << "v" << v + 1 << ":";
    for (int c : inst.approvals[v]) out << " c" << c + 1;
    out << "\n";
  }
  out << "candidate-voters:";
  for (int c = 0; c < inst.num_candidates; ++c) {
    if (inst.candidate_voter[c]) {
      out << " v" << *inst.candidate_voter[c] + 1 << "=c" << c + 1;
    }
  }
  out << "\n";
  return out.str();
}

}  // namespace extdom
