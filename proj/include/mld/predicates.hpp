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

#include <optional>
#include <span>
#include <string>

#include "mld/graph.hpp"
#include "mld/vertex_set.hpp"

namespace mld {

// Which requirement a candidate set failed, with the first counterexample in
// vertex order (single vertex for domination, pair {u,v} with u < v for the
// distinctness requirements).
enum class FailureKind {
  NotDominating,
  NotResolving,
  NeighborhoodClash,
  NotDoublyResolved,
};

const char* failure_kind_name(FailureKind kind);

struct ResolutionFailure {
  FailureKind kind;
  int u = -1;
  int v = -1;  // -1 for single-vertex witnesses

  std::string to_string() const;
};

struct CheckResult {
  bool ok = false;
  std::optional<ResolutionFailure> failure;

  explicit operator bool() const { return ok; }

  static CheckResult pass() { return {true, std::nullopt}; }
  static CheckResult fail(FailureKind kind, int u, int v = -1) {
    return {false, ResolutionFailure{kind, u, v}};
  }
};

// Every vertex outside S has a neighbor in S.
CheckResult is_dominating(const Graph& g, const VertexSet& s);

// Distance vectors to S are pairwise distinct over all vertices.
CheckResult is_resolving(const Graph& g, const DistanceMatrix& d,
                         const VertexSet& s);
CheckResult is_resolving(const Graph& g, const VertexSet& s);

// Dominating and resolving (metric-locating-dominating).
CheckResult is_mld(const Graph& g, const DistanceMatrix& d, const VertexSet& s);
CheckResult is_mld(const Graph& g, const VertexSet& s);

// Dominating, and the neighborhood traces N(x) ∩ S are pairwise distinct
// over vertices outside S (locating-dominating).
CheckResult is_ld(const Graph& g, const VertexSet& s);

// d(u,x) - d(u,y) != d(v,x) - d(v,y). Requires u != v and x != y.
bool doubly_resolves(const DistanceMatrix& d, int u, int v, int x, int y);

// Some pair of distinct members of `s` doubly resolves {x, y}.
// False whenever s has fewer than two members.
bool set_doubly_resolves_pair(const DistanceMatrix& d, std::span<const int> s,
                              int x, int y);

// Every vertex pair is doubly resolved by some pair of set members.
// Requires |S| >= 2.
CheckResult is_doubly_resolving(const Graph& g, const DistanceMatrix& d,
                                const VertexSet& s);
CheckResult is_doubly_resolving(const Graph& g, const VertexSet& s);

}  // namespace mld
