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

#include "mld/solver.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <sstream>

#include "mld/error.hpp"

namespace mld {

const char* invariant_name(Invariant inv) {
  switch (inv) {
    case Invariant::Gamma: return "gamma";
    case Invariant::Dim: return "dim";
    case Invariant::GammaM: return "gammaM";
    case Invariant::GammaL: return "gammaL";
    case Invariant::Psi: return "psi";
  }
  return "unknown";
}

Invariant invariant_from_name(const std::string& name) {
  for (Invariant inv : kAllInvariants) {
    if (name == invariant_name(inv)) return inv;
  }
  throw Error(ErrorCode::InvalidArgument,
              "unknown invariant '" + name +
                  "' (expected gamma, dim, gammaM, gammaL, or psi)");
}

namespace {

bool needs_domination(Invariant inv) {
  return inv == Invariant::Gamma || inv == Invariant::GammaM ||
         inv == Invariant::GammaL;
}

bool needs_resolution(Invariant inv) { return inv != Invariant::Gamma; }

int min_size(Invariant inv) { return inv == Invariant::Psi ? 2 : 1; }

bool feasible(const Graph& g, const DistanceMatrix& d, Invariant inv,
              const VertexSet& s) {
  if (s.size() < min_size(inv)) return false;
  switch (inv) {
    case Invariant::Gamma:
      return is_dominating(g, s).ok;
    case Invariant::Dim:
      return is_resolving(g, d, s).ok;
    case Invariant::GammaM:
      return is_mld(g, d, s).ok;
    case Invariant::GammaL:
      return is_ld(g, s).ok;
    case Invariant::Psi:
      return is_doubly_resolving(g, d, s).ok;
  }
  return false;
}

}  // namespace

std::vector<std::vector<int>> twin_classes(const Graph& g) {
  const int n = g.order();
  // Interchangeable pairs come in two flavors: identical open neighborhoods
  // (non-adjacent pairs) and identical closed neighborhoods (adjacent pairs).
  // No vertex can sit in both kinds of group at once, so grouping twice and
  // keeping groups of size >= 2 yields disjoint classes.
  std::map<std::vector<int>, std::vector<int>> open_groups;
  std::map<std::vector<int>, std::vector<int>> closed_groups;
  for (int v = 0; v < n; ++v) {
    std::vector<int> open(g.neighbors(v).begin(), g.neighbors(v).end());
    std::vector<int> closed = open;
    closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);
    open_groups[std::move(open)].push_back(v);
    closed_groups[std::move(closed)].push_back(v);
  }
  std::vector<std::vector<int>> classes;
  for (auto* groups : {&open_groups, &closed_groups}) {
    for (auto& [key, members] : *groups) {
      if (members.size() >= 2) classes.push_back(members);
    }
  }
  // Deterministic order: by first member.
  std::sort(classes.begin(), classes.end());
  return classes;
}

int lower_bound(const Graph& g, Invariant inv) {
  const int n = g.order();
  int bound = min_size(inv);
  if (needs_domination(inv)) {
    int max_degree = 0;
    for (int v = 0; v < n; ++v) max_degree = std::max(max_degree, g.degree(v));
    bound = std::max(bound, (n + max_degree) / (max_degree + 1));
  }
  if (needs_resolution(inv)) {
    int twin_bound = 0;
    for (const auto& cls : twin_classes(g)) {
      twin_bound += static_cast<int>(cls.size()) - 1;
    }
    bound = std::max(bound, twin_bound);
  }
  return bound;
}

int greedy_upper_bound(const Graph& g, Invariant inv) {
  const DistanceMatrix d(g);
  VertexSet s = VertexSet::full(g.order());
  for (int v = 0; v < g.order(); ++v) {
    if (s.size() <= min_size(inv)) break;
    s.erase(v);
    if (!feasible(g, d, inv, s)) s.insert(v);
  }
  return s.size();
}

InvariantResult solve(const Graph& g, Invariant inv,
                      const SolveOptions& options) {
  const int n = g.order();
  if (n > 64) {
    throw Error(ErrorCode::OutOfRange,
                "exact search supports at most 64 vertices, got " +
                    std::to_string(n));
  }
  const auto start = std::chrono::steady_clock::now();
  const auto elapsed = [&start]() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  };
  const DistanceMatrix d(g);

  // Twin pruning: a set that misses two members of one interchangeable class
  // cannot tell those two members apart, so it is infeasible for every
  // resolution-flavored invariant. Skipping such sets leaves the
  // lexicographic rank of the answer unchanged.
  std::vector<int> class_id(static_cast<std::size_t>(n), -1);
  std::vector<int> class_size;
  if (needs_resolution(inv)) {
    const auto classes = twin_classes(g);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      class_size.push_back(static_cast<int>(classes[c].size()));
      for (int v : classes[c]) class_id[static_cast<std::size_t>(v)] = static_cast<int>(c);
    }
  }
  std::vector<int> in_class(class_size.size(), 0);

  long long tick = 0;
  const auto check_budget = [&]() {
    if (++tick % 4096 != 0) return;
    if (elapsed() <= options.budget_seconds) return;
    const int ub = greedy_upper_bound(g, inv);
    std::ostringstream os;
    os << "exact search for " << invariant_name(inv) << " exceeded "
       << options.budget_seconds << "s; a feasible set of size " << ub
       << " is known";
    throw Error(ErrorCode::Timeout, os.str(), ub);
  };

  VertexSet candidate(n);
  for (int k = std::min(lower_bound(g, inv), n); k <= n; ++k) {
    std::vector<int> c(static_cast<std::size_t>(k));
    std::iota(c.begin(), c.end(), 0);
    while (true) {
      check_budget();
      bool pruned = false;
      if (!class_size.empty()) {
        std::fill(in_class.begin(), in_class.end(), 0);
        for (int v : c) {
          if (class_id[static_cast<std::size_t>(v)] >= 0) {
            ++in_class[static_cast<std::size_t>(
                class_id[static_cast<std::size_t>(v)])];
          }
        }
        for (std::size_t ci = 0; ci < class_size.size(); ++ci) {
          if (class_size[ci] - in_class[ci] >= 2) {
            pruned = true;
            break;
          }
        }
      }
      if (!pruned) {
        candidate.clear();
        for (int v : c) candidate.insert(v);
        if (feasible(g, d, inv, candidate)) {
          return InvariantResult{inv, k, candidate, elapsed()};
        }
      }
      // Advance to the next k-subset in lexicographic order.
      int i = k - 1;
      while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++c[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) {
        c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(i)] + j - i;
      }
    }
  }
  throw Error(ErrorCode::Internal,
              "no feasible set found although the full vertex set is one");
}

const InvariantResult& GraphInvariants::get(Invariant inv) const {
  switch (inv) {
    case Invariant::Gamma: return gamma;
    case Invariant::Dim: return dim;
    case Invariant::GammaM: return gamma_m;
    case Invariant::GammaL: return gamma_l;
    case Invariant::Psi: return psi;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown invariant");
}

GraphInvariants solve_all(const Graph& g, const SolveOptions& options) {
  GraphInvariants out;
  out.gamma = solve(g, Invariant::Gamma, options);
  out.dim = solve(g, Invariant::Dim, options);
  out.gamma_m = solve(g, Invariant::GammaM, options);
  out.gamma_l = solve(g, Invariant::GammaL, options);
  out.psi = solve(g, Invariant::Psi, options);
  out.girth = girth(g);
  out.tree = is_tree(g);
  out.c4c6_free = !has_c4_or_c6_subgraph(g);
  return out;
}

}  // namespace mld
