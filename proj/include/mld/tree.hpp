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
#include <utility>
#include <vector>

#include "mld/graph.hpp"
#include "mld/vertex_set.hpp"

namespace mld {

// Structural census of a tree.
//
// leaves: degree-1 vertices.
// supports: vertices adjacent to a leaf. Only for n = 2 can a support also
//   be a leaf.
// strong_supports: vertices adjacent to two or more leaves.
// ell_prime: total number of leaves hanging off strong supports.
// majors: degree >= 3 vertices.
// exterior majors: majors with at least one terminal vertex, where a leaf x
//   is a terminal vertex of the major closest to it (the first major on the
//   walk from x into the tree; unique because the walk is forced through
//   degree-2 vertices).
struct TreeProfile {
  VertexSet leaves;
  VertexSet supports;
  VertexSet strong_supports;
  int ell = 0;        // |leaves|
  int ell_prime = 0;  // leaves adjacent to strong supports
  VertexSet majors;
  VertexSet exterior_majors;
  // (exterior major, its terminal vertices ascending), sorted by major.
  std::vector<std::pair<int, std::vector<int>>> terminal_map;
  bool is_path = false;

  int terminal_count(int major) const;  // 0 if not an exterior major
};

// Requires a tree (throws Error(NotATree) otherwise).
TreeProfile tree_profile(const Graph& g);

// Domination number of a tree by dynamic programming over a rooted
// orientation. Linear time; requires a tree.
int gamma_tree(const Graph& g);

// Closed-form value of the metric-locating-domination number of a tree:
//   gamma(T) + ell_prime(T) - |strong supports|.
int gamma_m_tree(const Graph& g);

struct DimTreeResult {
  int value = 0;
  VertexSet witness;  // resolving set realizing the value
};

// Metric dimension of a tree: 1 for paths (witness: one endpoint); otherwise
// the sum over exterior majors of (terminal count - 1), with the canonical
// witness dropping the least terminal vertex of each exterior major.
DimTreeResult dim_tree(const Graph& g);

struct CharacterizationVerdict {
  std::vector<bool> flags;  // one per condition, in documented order
  bool all_equal = false;   // every flag identical (the equivalence holds)
};

// Four equivalent conditions for a non-path tree (throws IsAPath on paths):
//  [0] gammaM(T) == dim(T) + gamma(T)
//  [1] dim(T) == ell_prime(T) - |strong supports|
//  [2] every exterior major with >= 2 terminal vertices is adjacent to each
//      of its terminal vertices
//  [3] the path between any two leaves at distance > 2 passes through at
//      least two majors
CharacterizationVerdict characterize_dim_plus_gamma(const Graph& g);

// Three equivalent conditions for any tree except the two-vertex path
// (throws IsP2):
//  [0] gammaM(T) == number of leaves
//  [1] gamma(T) == number of supports
//  [2] every vertex has a leaf within distance 2
CharacterizationVerdict characterize_leaf_count(const Graph& g);

// Uniform random labeled tree (random length-(n-2) sequence over the vertex
// set, decoded by the standard bijection). Deterministic per seed; n >= 2.
Graph random_tree(int n, std::uint64_t seed);

}  // namespace mld
