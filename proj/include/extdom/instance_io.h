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

#ifndef EXTDOM_INSTANCE_IO_H_
#define EXTDOM_INSTANCE_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "extdom/elections.h"
#include "extdom/graph.h"

namespace extdom {

// Graph files:
//
//   # comment
//   undirected <n> <m>        (or: directed <n> <m>)
//   <u> <v>                   (m lines)
//
// Endpoints are 0-based ids when every endpoint is an integer in [0, n);
// otherwise every token is a label, numbered in order of first appearance.
// Self-loops, duplicate edges and more than n distinct labels are rejected.
struct GraphFile {
  bool directed = false;
  UndirectedGraph undirected;
  DirectedGraph digraph;
  // labels[id]; numeric files get "0", "1", ...; unnamed vertices "_<id>".
  std::vector<std::string> labels;
};

GraphFile ParseGraphText(std::string_view text);
GraphFile ParseGraphFile(const std::string& path);
std::string FormatGraph(const UndirectedGraph& g);
std::string FormatGraph(const DirectedGraph& d);

// Election files (ids are 1-based in the file, 0-based in memory):
//
//   election <n_voters> <m_candidates> <setting> <p>
//   v<i>: c<j> c<j> ...       (voters without a line approve nobody)
//   candidate-voters: v<i>=c<j> ...
ElectionInstance ParseElectionText(std::string_view text);
ElectionInstance ParseElectionFile(const std::string& path);
std::string FormatElection(const ElectionInstance& inst);

// Sniffs the header keyword: "undirected", "directed" or "election".
std::string InstanceKind(std::string_view text);
std::string ReadFile(const std::string& path);

}  // namespace extdom

#endif  // EXTDOM_INSTANCE_IO_H_
