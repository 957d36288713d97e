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

#include "mld/predicates.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

#include "mld/error.hpp"

namespace mld {

const char* failure_kind_name(FailureKind kind) {
  switch (kind) {
    case FailureKind::NotDominating: return "not_dominating";
    case FailureKind::NotResolving: return "not_resolving";
    case FailureKind::NeighborhoodClash: return "neighborhood_clash";
    case FailureKind::NotDoublyResolved: return "not_doubly_resolved";
  }
  return "unknown";
}

std::string ResolutionFailure::to_string() const {
  std::ostringstream os;
  os << failure_kind_name(kind) << " at ";
  if (v < 0) {
    os << u;
  } else {
    os << '{' << u << ',' << v << '}';
  }
  return os.str();
}

namespace {

void require_nonempty(const VertexSet& s) {
  if (s.empty()) {
    throw Error(ErrorCode::EmptySet, "predicate requires a nonempty set");
  }
}

void require_universe(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) {
    throw Error(ErrorCode::InvalidArgument,
                "set universe " + std::to_string(s.universe()) +
                    " does not match graph order " +
                    std::to_string(g.order()));
  }
}

// Lexicographically first pair {x, y} (x < y) of vertices carrying equal
// keys, or nullopt. Keys are only compared, never interpreted.
template <typename Key>
std::optional<std::pair<int, int>> first_clash(
    const std::vector<std::pair<Key, int>>& keyed) {
  // Map key -> (first holder, second holder). The lexicographically first
  // clash overall is the minimum over groups of (first, second): any other
  // clashing pair within a group is lexicographically larger, and pairs
  // across groups do not clash.
  std::map<Key, std::pair<int, int>> groups;
  for (const auto& [key, v] : keyed) {
    auto [it, inserted] = groups.try_emplace(key, std::pair<int, int>{v, -1});
    if (!inserted && it->second.second < 0) it->second.second = v;
  }
  std::optional<std::pair<int, int>> best;
  for (const auto& [key, pair] : groups) {
    if (pair.second < 0) continue;
    if (!best || pair < *best) best = pair;
  }
  return best;
}

}  // namespace

CheckResult is_dominating(const Graph& g, const VertexSet& s) {
  require_universe(g, s);
  require_nonempty(s);
  for (int x = 0; x < g.order(); ++x) {
    if (s.contains(x)) continue;
    bool covered = false;
    for (int w : g.neighbors(x)) {
      if (s.contains(w)) {
        covered = true;
        break;
      }
    }
    if (!covered) return CheckResult::fail(FailureKind::NotDominating, x);
  }
  return CheckResult::pass();
}

CheckResult is_resolving(const Graph& g, const DistanceMatrix& d,
                         const VertexSet& s) {
  require_universe(g, s);
  require_nonempty(s);
  const std::vector<int> probes = s.members();
  std::vector<std::pair<std::vector<std::uint16_t>, int>> keyed;
  keyed.reserve(static_cast<std::size_t>(g.order()));
  for (int x = 0; x < g.order(); ++x) {
    std::vector<std::uint16_t> vec;
    vec.reserve(probes.size());
    for (int p : probes) vec.push_back(static_cast<std::uint16_t>(d.at(p, x)));
    keyed.emplace_back(std::move(vec), x);
  }
  if (auto clash = first_clash(keyed)) {
    return CheckResult::fail(FailureKind::NotResolving, clash->first,
                             clash->second);
  }
  return CheckResult::pass();
}

CheckResult is_resolving(const Graph& g, const VertexSet& s) {
  return is_resolving(g, distances(g), s);
}

CheckResult is_mld(const Graph& g, const DistanceMatrix& d,
                   const VertexSet& s) {
  if (auto dom = is_dominating(g, s); !dom) return dom;
  return is_resolving(g, d, s);
}

CheckResult is_mld(const Graph& g, const VertexSet& s) {
  return is_mld(g, distances(g), s);
}

CheckResult is_ld(const Graph& g, const VertexSet& s) {
  require_universe(g, s);
  require_nonempty(s);
  if (auto dom = is_dominating(g, s); !dom) return dom;
  std::vector<std::pair<std::vector<int>, int>> keyed;
  for (int x = 0; x < g.order(); ++x) {
    if (s.contains(x)) continue;
    std::vector<int> trace;
    for (int w : g.neighbors(x)) {
      if (s.contains(w)) trace.push_back(w);
    }
    keyed.emplace_back(std::move(trace), x);
  }
  if (auto clash = first_clash(keyed)) {
    return CheckResult::fail(FailureKind::NeighborhoodClash, clash->first,
                             clash->second);
  }
  return CheckResult::pass();
}

bool doubly_resolves(const DistanceMatrix& d, int u, int v, int x, int y) {
  if (u == v || x == y) {
    throw Error(ErrorCode::DegeneratePair,
                "doubly_resolves requires u != v and x != y");
  }
  return d.at(u, x) - d.at(u, y) != d.at(v, x) - d.at(v, y);
}

bool set_doubly_resolves_pair(const DistanceMatrix& d, std::span<const int> s,
                              int x, int y) {
  // {x, y} is doubly resolved iff the difference d(., x) - d(., y) is not
  // constant over the set.
  if (s.size() < 2) return false;
  const int first_diff = d.at(s[0], x) - d.at(s[0], y);
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (d.at(s[i], x) - d.at(s[i], y) != first_diff) return true;
  }
  return false;
}

CheckResult is_doubly_resolving(const Graph& g, const DistanceMatrix& d,
                                const VertexSet& s) {
  require_universe(g, s);
  if (s.size() < 2) {
    throw Error(ErrorCode::TooSmall,
                "doubly resolving sets need at least 2 vertices");
  }
  const std::vector<int> probes = s.members();
  for (int x = 0; x < g.order(); ++x) {
    for (int y = x + 1; y < g.order(); ++y) {
      if (!set_doubly_resolves_pair(d, probes, x, y)) {
        return CheckResult::fail(FailureKind::NotDoublyResolved, x, y);
      }
    }
  }
  return CheckResult::pass();
}

CheckResult is_doubly_resolving(const Graph& g, const VertexSet& s) {
  return is_doubly_resolving(g, distances(g), s);
}

}  // namespace mld
