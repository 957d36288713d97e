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
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mld/vertex_set.hpp"

namespace mld {

// Largest supported vertex count. Distances fit in 16 bits below this.
inline constexpr int kMaxOrder = 10000;

// Simple connected undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  // Validates and normalizes: n >= 2, endpoints in range, no loops,
  // duplicate edges collapsed, connectivity required.
  static Graph build(int n, const std::vector<std::pair<int, int>>& edges);

  // Fast path for generators whose output is simple and loop-free by
  // construction. Adjacency lists must be sorted; connectivity is still
  // verified (it is cheap relative to everything downstream).
  static Graph from_adjacency(int n, std::vector<std::vector<int>> adj);

  int order() const { return n_; }
  int edge_count() const { return m_; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  std::span<const int> neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const;

  // Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;

 private:
  Graph(int n, int m, std::vector<std::vector<int>> adj)
      : n_(n), m_(m), adj_(std::move(adj)) {}

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
};

// All-pairs shortest-path distances via BFS from every source.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g);

  int n() const { return n_; }
  int at(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }

 private:
  int n_ = 0;
  std::vector<std::uint16_t> d_;
};

inline DistanceMatrix distances(const Graph& g) { return DistanceMatrix(g); }

// Shortest cycle length; acyclic graphs (trees) carry no value and are
// treated as having arbitrarily large girth by at_least().
struct Girth {
  std::optional<int> length;

  bool acyclic() const { return !length.has_value(); }
  bool at_least(int g) const { return acyclic() || *length >= g; }
};

Girth girth(const Graph& g);

// True when the graph contains a 4-cycle or a 6-cycle as a subgraph
// (not necessarily induced).
bool has_c4_or_c6_subgraph(const Graph& g);

VertexSet degree_one_vertices(const Graph& g);

inline bool is_tree(const Graph& g) { return g.edge_count() == g.order() - 1; }

}  // namespace mld
