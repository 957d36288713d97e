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

#include "mld/graph.hpp"
#include "mld/solver.hpp"
#include "mld/vertex_set.hpp"

namespace mld {

struct TransformOutcome {
  VertexSet input_set;
  VertexSet output_set;
  bool certified = false;      // output passed its target predicate
  bool size_bound_ok = false;  // |output| <= size_limit
  int size_limit = 0;
};

// Builds a locating-dominating set from a metric-locating-dominating set S in
// a graph with no 4- or 6-cycle subgraph: for every pair u,v in S, add the
// interior vertices {u',v'} of every path (u,u',v',v) of length 3. The output
// is always a locating-dominating set (certified by is_ld).
//
// size_limit is |S|^2. Pairs of S at distance 3 have a unique length-3 path
// (two would close a 4- or 6-cycle), so they add at most two vertices each;
// pairs at distance 2 can carry two length-3 paths sharing one interior
// vertex, adding three. The |S|^2 budget can therefore be exceeded, which
// size_bound_ok reports honestly; |S| + 3*C(|S|,2) is the provable ceiling.
//
// Errors: PreconditionC4C6, NotMld.
TransformOutcome ld_closure(const Graph& g, const VertexSet& s);

// In a graph of girth >= 5 (or a tree) other than the two-vertex path, swaps
// every member u of an MLD-set for its pendant neighbor outside the set when
// one exists (a resolving set never leaves two such pendants, so the swap is
// well-defined). The result is a doubly resolving set of the same size.
//
// Errors: PreconditionGirth, IsP2, NotMld; TwoPendants is defensive only.
TransformOutcome pendant_swap(const Graph& g, const VertexSet& s);

struct UnionRepairResult {
  TransformOutcome outcome;
  InvariantResult mld;         // minimum MLD-set used (S1)
  InvariantResult dominating;  // minimum dominating set used (S2)
  VertexSet repairs;           // vertices added to patch unresolved pairs
};

// Doubly resolving set of size at most gammaM + gamma: union of a minimum
// MLD-set S1 and a minimum dominating set S2, plus, for every x in the
// intersection, the (at most one) outside vertex y whose pair {x,y} the union
// fails to doubly resolve. Certified by is_doubly_resolving.
UnionRepairResult union_repair(const Graph& g, const SolveOptions& options = {});

// Same construction from already-solved minimum sets.
UnionRepairResult union_repair(const Graph& g, const InvariantResult& mld_min,
                               const InvariantResult& dominating_min);

}  // namespace mld
