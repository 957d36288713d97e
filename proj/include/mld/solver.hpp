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

#include <chrono>
#include <string>
#include <vector>

#include "mld/graph.hpp"
#include "mld/predicates.hpp"
#include "mld/vertex_set.hpp"

namespace mld {

enum class Invariant { Gamma, Dim, GammaM, GammaL, Psi };

inline constexpr Invariant kAllInvariants[] = {
    Invariant::Gamma, Invariant::Dim, Invariant::GammaM, Invariant::GammaL,
    Invariant::Psi};

const char* invariant_name(Invariant inv);          // "gamma", "dim", ...
Invariant invariant_from_name(const std::string& name);

struct SolveOptions {
  double budget_seconds = 60.0;  // per invariant
};

struct InvariantResult {
  Invariant which;
  int value = 0;
  VertexSet witness;  // lexicographically least optimal set
  double elapsed_seconds = 0.0;
};

// Maximal groups of mutually interchangeable vertices (identical open
// neighborhoods, or identical closed neighborhoods). Only groups of size >= 2
// are returned. Any set with distinct distance vectors must contain all but
// at most one member of each group.
std::vector<std::vector<int>> twin_classes(const Graph& g);

// Certified lower bound used as the starting cardinality:
//   domination-type: ceil(n / (max degree + 1))
//   resolution-type: sum of (|class| - 1) over twin classes
//   psi additionally needs two vertices.
int lower_bound(const Graph& g, Invariant inv);

// Size of a feasible set found greedily (full vertex set shrunk one vertex at
// a time). Used to report a valid upper bound when a search times out.
int greedy_upper_bound(const Graph& g, Invariant inv);

// Exact value by feasibility search over subsets in ascending cardinality,
// lexicographic order within each cardinality. The witness is therefore the
// lexicographically least optimal set. Throws Error(Timeout) with the greedy
// upper bound as payload when the budget runs out; supports n <= 64.
InvariantResult solve(const Graph& g, Invariant inv,
                      const SolveOptions& options = {});

struct GraphInvariants {
  InvariantResult gamma;
  InvariantResult dim;
  InvariantResult gamma_m;
  InvariantResult gamma_l;
  InvariantResult psi;
  Girth girth;
  bool tree = false;
  bool c4c6_free = false;

  const InvariantResult& get(Invariant inv) const;
};

GraphInvariants solve_all(const Graph& g, const SolveOptions& options = {});

}  // namespace mld
