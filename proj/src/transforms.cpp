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

#include "mld/transforms.hpp"

#include <vector>

#include "mld/error.hpp"
#include "mld/predicates.hpp"

namespace mld {

namespace {

void require_mld(const Graph& g, const DistanceMatrix& d, const VertexSet& s) {
  const CheckResult check = is_mld(g, d, s);
  if (!check) {
    throw Error(ErrorCode::NotMld,
                "input set " + s.to_string() +
                    " is not metric-locating-dominating: " +
                    check.failure->to_string());
  }
}

}  // namespace

TransformOutcome ld_closure(const Graph& g, const VertexSet& s) {
  if (has_c4_or_c6_subgraph(g)) {
    throw Error(ErrorCode::PreconditionC4C6,
                "graph contains a 4-cycle or 6-cycle subgraph");
  }
  const DistanceMatrix d(g);
  require_mld(g, d, s);

  TransformOutcome out;
  out.input_set = s;
  out.output_set = s;
  const std::vector<int> members = s.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const int u = members[i];
      const int v = members[j];
      // Interior vertices of every path (u, a, b, v) on four distinct
      // vertices.
      for (int a : g.neighbors(u)) {
        if (a == v) continue;
        for (int b : g.neighbors(a)) {
          if (b == u || b == v) continue;
          if (g.adjacent(b, v)) {
            out.output_set.insert(a);
            out.output_set.insert(b);
          }
        }
      }
    }
  }
  out.certified = is_ld(g, out.output_set).ok;
  out.size_limit = s.size() * s.size();
  out.size_bound_ok = out.output_set.size() <= out.size_limit;
  return out;
}

TransformOutcome pendant_swap(const Graph& g, const VertexSet& s) {
  if (!girth(g).at_least(5)) {
    throw Error(ErrorCode::PreconditionGirth,
                "graph has a cycle shorter than 5");
  }
  if (g.order() == 2) {
    throw Error(ErrorCode::IsP2,
                "the pendant swap excludes the two-vertex path");
  }
  const DistanceMatrix d(g);
  require_mld(g, d, s);

  TransformOutcome out;
  out.input_set = s;
  out.output_set = VertexSet(g.order());
  for (int u : s.members()) {
    int pendant = -1;
    for (int w : g.neighbors(u)) {
      if (g.degree(w) != 1 || s.contains(w)) continue;
      if (pendant >= 0) {
        // Two unmarked degree-1 neighbors share every distance, so the input
        // could not have been resolving; is_mld above rules this out.
        throw Error(ErrorCode::TwoPendants,
                    "vertex " + std::to_string(u) +
                        " has two pendant neighbors outside the set");
      }
      pendant = w;
    }
    out.output_set.insert(pendant >= 0 ? pendant : u);
  }
  out.certified = is_doubly_resolving(g, d, out.output_set).ok;
  out.size_limit = s.size();
  out.size_bound_ok = out.output_set.size() <= out.size_limit;
  return out;
}

UnionRepairResult union_repair(const Graph& g, const SolveOptions& options) {
  return union_repair(g, solve(g, Invariant::GammaM, options),
                      solve(g, Invariant::Gamma, options));
}

UnionRepairResult union_repair(const Graph& g, const InvariantResult& mld_min,
                               const InvariantResult& dominating_min) {
  if (mld_min.which != Invariant::GammaM ||
      dominating_min.which != Invariant::Gamma) {
    throw Error(ErrorCode::InvalidArgument,
                "union_repair needs a gammaM result and a gamma result");
  }
  if (mld_min.witness.universe() != g.order() ||
      dominating_min.witness.universe() != g.order()) {
    throw Error(ErrorCode::InvalidArgument,
                "witness universe does not match the graph");
  }
  const DistanceMatrix d(g);

  const VertexSet base = mld_min.witness | dominating_min.witness;
  const VertexSet both = mld_min.witness & dominating_min.witness;
  const std::vector<int> probes = base.members();

  VertexSet repairs(g.order());
  for (int x : both.members()) {
    for (int y = 0; y < g.order(); ++y) {
      if (base.contains(y)) continue;
      if (!set_doubly_resolves_pair(d, probes, x, y)) repairs.insert(y);
    }
  }

  UnionRepairResult result{TransformOutcome{}, mld_min, dominating_min,
                           repairs};
  result.outcome.input_set = base;
  result.outcome.output_set = base | repairs;
  result.outcome.certified =
      is_doubly_resolving(g, d, result.outcome.output_set).ok;
  result.outcome.size_limit = mld_min.value + dominating_min.value;
  result.outcome.size_bound_ok =
      result.outcome.output_set.size() <= result.outcome.size_limit;
  return result;
}

}  // namespace mld
