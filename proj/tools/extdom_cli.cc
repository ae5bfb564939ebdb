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

// Command-line front end: solve, oracle, certify, decompose, gen.

#include <iostream>

#include "CLI11.hpp"

#include "extdom/bench.h"

namespace {

void AddCommon(CLI::App* cmd, extdom::RunConfig& c) {
  cmd->add_option("--k", c.k, "hop radius")->check(CLI::PositiveNumber);
  cmd->add_option("--delta", c.delta, "decomposition slack (0 or 1)")
      ->check(CLI::IsMember({0, 1}));
  cmd->add_option("--format", c.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--budget", c.budget,
                  "subset-enumeration budget (default: EXTDOM_ORACLE_BUDGET or 2000000)");
}

}  // namespace

int main(int argc, char** argv) {
  extdom::RunConfig c;
  CLI::App app{"Approximation algorithms for external domination and representation"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "run a solver on one instance");
  solve->add_option("--alg", c.algorithm,
                    "algorithm2 | greedy | optext | committee | committee-greedy | "
                    "committee-matching");
  solve->add_option("--p", c.p, "number of dominators / committee size");
  solve->add_option("--ties", c.ties, "greedy tie-breaking: lowest | highest");
  solve->add_option("--setting", c.setting, "override the election setting");
  solve->add_option("--ones", c.ones, "optext: number of 1-valued objects");
  solve->add_option("--objects", c.objects, "optext: total number of objects");
  solve->add_flag("!--no-pad", c.pad, "optext: reject fewer objects than vertices");
  solve->add_flag("--with-optimum", c.with_optimum, "also run the exact oracle");
  solve->add_option("input", c.inputs, "instance file")->required();
  AddCommon(solve, c);

  auto* oracle = app.add_subcommand("oracle", "exact optimum by enumeration");
  oracle->add_option("--p", c.p, "number of dominators / committee size");
  oracle->add_option("--setting", c.setting, "override the election setting");
  oracle->add_option("input", c.inputs, "instance file")->required();
  AddCommon(oracle, c);

  auto* certify = app.add_subcommand("certify", "check a claimed ratio against the oracle");
  certify->add_option("--bound", c.bound,
                      "thm2 | lemma1-d0 | lemma1-d1 | thm3 | thm4 | thm5 | cor41")
      ->required();
  certify->add_option("--family", c.family,
                      "er | connected | tree | path | cycle | star | complete");
  certify->add_option("--n", c.n, "vertices (upper end when --n-min is given)");
  certify->add_option("--n-min", c.n_min, "lower end of the vertex-count range");
  certify->add_option("--count", c.count, "number of generated instances");
  certify->add_option("--seed", c.seed, "master seed");
  certify->add_option("--prob", c.prob, "edge probability");
  certify->add_option("--p", c.p, "fix p instead of sweeping");
  certify->add_option("--voters", c.voters, "election voters");
  certify->add_option("--candidates", c.candidates, "election candidates");
  certify->add_option("--approval-prob", c.approval_prob, "election approval probability");
  certify->add_option("--overlap", c.overlap, "fraction of candidates who vote");
  certify->add_option("--setting", c.setting, "override the election setting of files");
  certify->add_option("--jobs", c.jobs, "worker threads");
  certify->add_option("inputs", c.inputs, "instance files or directories");
  AddCommon(certify, c);

  auto* decompose = app.add_subcommand("decompose", "print the tree decomposition");
  decompose->add_option("input", c.inputs, "graph file")->required();
  AddCommon(decompose, c);

  auto* gen = app.add_subcommand("gen", "write a generated instance");
  gen->add_option("--family", c.family,
                  "path | cycle | star | complete | er | connected | tree | reduction | "
                  "election")
      ->required();
  gen->add_option("--n", c.n, "vertices");
  gen->add_option("--seed", c.seed, "seed");
  gen->add_option("--prob", c.prob, "edge probability");
  gen->add_option("--K", c.reduction_k, "reduction: hop parameter K >= 2");
  gen->add_option("--q1", c.q1, "reduction: copies of the base graph");
  gen->add_option("--q2", c.q2, "reduction: leaves per star");
  gen->add_option("--voters", c.voters, "election voters");
  gen->add_option("--candidates", c.candidates, "election candidates");
  gen->add_option("--approval-prob", c.approval_prob, "election approval probability");
  gen->add_option("--overlap", c.overlap, "fraction of candidates who vote");
  gen->add_flag("--require-other-approval", c.require_other_approval,
                "every candidate approves another candidate");
  gen->add_option("--setting", c.setting, "non-secrecy | rational-candidate");
  gen->add_option("--p", c.p, "committee size written to the election header");
  gen->add_option("-o,--output", c.output, "output file (default stdout)");
  gen->add_option("input", c.inputs, "base graph for --family reduction");
  AddCommon(gen, c);

  CLI11_PARSE(app, argc, argv);
  for (auto* sub : {solve, oracle, certify, decompose, gen}) {
    if (sub->parsed()) c.command = sub->get_name();
  }
  return extdom::Run(c, std::cout, std::cerr);
}
