// Copyright 2026 The mld Authors
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

#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "mld/graph.hpp"

namespace mld {

// A graph plus an injective role-name -> vertex map ("p", "a_3", "b_0", ...)
// so generated instances stay readable in reports and CLI output.
struct LabeledGraph {
  Graph graph;
  std::map<std::string, int> labels;
  std::string id;  // stable family id, e.g. "gs_1", "comb_3", "path_6"
};

// Layered gadget with an exponential gap between the locating-domination
// number and the metric-locating-domination number. Vertices: hub p; for
// each i in [0, 2^(s+1)): a_i adjacent to p, and b_i adjacent to a_i; tags
// c_0..c_s with b_i adjacent to c_j exactly when bit j of i is set.
// Indices: p=0, a_i=1+i, b_i=1+2^(s+1)+i, c_j=1+2^(s+2)+j.
// Supported range 1 <= s <= 4 (solver feasibility).
LabeledGraph gen_gs(int s);

// Comb: path a_1..a_t with one pendant b_i per a_i (n = 2t, t >= 1).
// Indices: a_i = i-1, b_i = t+i-1. t = 1 yields the two-vertex path.
LabeledGraph gen_comb(int t);

LabeledGraph gen_path(int n);                      // n >= 2
LabeledGraph gen_star(int k);                      // K_{1,k}, center 0, k >= 1
LabeledGraph gen_spider(int legs, int leg_len);    // legs >= 3, leg_len >= 1
LabeledGraph gen_double_star(int a, int b);        // adjacent centers, a,b >= 1

// Uniform labeled tree, decoded from a random sequence. n >= 2.
LabeledGraph gen_random_tree(int n, std::uint64_t seed);

// Erdos–Renyi G(n, p) conditioned on connectivity by rejection; throws
// Error(GiveUp) after 1000 failed attempts. n >= 2, 0 < p <= 1.
LabeledGraph gen_random_connected(int n, double edge_prob, std::uint64_t seed);

enum class ConstraintKind {
  C4C6Free,  // no 4- or 6-cycle subgraph
  Girth5,    // girth >= 5, or acyclic
};

// Random connected graph honoring the constraint: random spanning tree, then
// shuffled candidate edges added one at a time, skipping any that would
// violate the constraint. May stop below target_edges when no candidate
// fits; the result always satisfies the constraint.
LabeledGraph gen_random_constrained(int n, int target_edges,
                                    ConstraintKind constraint,
                                    std::uint64_t seed);

}  // namespace mld
