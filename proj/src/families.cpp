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

#include "mld/families.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <utility>
#include <vector>

#include "mld/error.hpp"
#include "mld/rng.hpp"
#include "mld/tree.hpp"

namespace mld {

namespace {

std::string role(const char* base, int index) {
  std::ostringstream os;
  os << base << '_' << index;
  return os.str();
}

bool connected(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& [u, v] : edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        q.push(w);
      }
    }
  }
  return reached == n;
}

}  // namespace

LabeledGraph gen_gs(int s) {
  if (s < 1 || s > 4) {
    throw Error(ErrorCode::OutOfRange,
                "gs gadget supports 1 <= s <= 4, got " + std::to_string(s));
  }
  const int half = 1 << (s + 1);  // number of a/b pairs
  const int p = 0;
  const auto a = [](int i) { return 1 + i; };
  const auto b = [half](int i) { return 1 + half + i; };
  const auto c = [half](int j) { return 1 + 2 * half + j; };
  const int n = 2 * half + s + 2;

  std::vector<std::pair<int, int>> edges;
  std::map<std::string, int> labels;
  labels["p"] = p;
  for (int i = 0; i < half; ++i) {
    edges.emplace_back(p, a(i));
    edges.emplace_back(a(i), b(i));
    labels[role("a", i)] = a(i);
    labels[role("b", i)] = b(i);
    for (int j = 0; j <= s; ++j) {
      if ((i >> j) & 1) edges.emplace_back(b(i), c(j));
    }
  }
  for (int j = 0; j <= s; ++j) labels[role("c", j)] = c(j);

  LabeledGraph out{Graph::build(n, edges), std::move(labels),
                   role("gs", s)};
  return out;
}

LabeledGraph gen_comb(int t) {
  if (t < 1) {
    throw Error(ErrorCode::TooSmall, "comb needs t >= 1");
  }
  std::vector<std::pair<int, int>> edges;
  std::map<std::string, int> labels;
  for (int i = 1; i <= t; ++i) {
    const int spine = i - 1;
    const int tooth = t + i - 1;
    if (i < t) edges.emplace_back(spine, spine + 1);
    edges.emplace_back(spine, tooth);
    labels[role("a", i)] = spine;
    labels[role("b", i)] = tooth;
  }
  return LabeledGraph{Graph::build(2 * t, edges), std::move(labels),
                      role("comb", t)};
}

LabeledGraph gen_path(int n) {
  if (n < 2) throw Error(ErrorCode::TooSmall, "path needs n >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  std::map<std::string, int> labels{{"end_0", 0}, {"end_1", n - 1}};
  return LabeledGraph{Graph::build(n, edges), std::move(labels),
                      role("path", n)};
}

LabeledGraph gen_star(int k) {
  if (k < 1) throw Error(ErrorCode::TooSmall, "star needs k >= 1 leaves");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= k; ++v) edges.emplace_back(0, v);
  std::map<std::string, int> labels{{"center", 0}};
  return LabeledGraph{Graph::build(k + 1, edges), std::move(labels),
                      role("star", k)};
}

LabeledGraph gen_spider(int legs, int leg_len) {
  if (legs < 3) {
    throw Error(ErrorCode::InvalidArgument,
                "spider needs >= 3 legs (fewer is a path)");
  }
  if (leg_len < 1) {
    throw Error(ErrorCode::InvalidArgument, "spider legs need length >= 1");
  }
  std::vector<std::pair<int, int>> edges;
  for (int leg = 0; leg < legs; ++leg) {
    int prev = 0;
    for (int j = 0; j < leg_len; ++j) {
      const int v = 1 + leg * leg_len + j;
      edges.emplace_back(prev, v);
      prev = v;
    }
  }
  std::map<std::string, int> labels{{"center", 0}};
  std::ostringstream id;
  id << "spider_" << legs << 'x' << leg_len;
  return LabeledGraph{Graph::build(1 + legs * leg_len, edges),
                      std::move(labels), id.str()};
}

LabeledGraph gen_double_star(int a, int b) {
  if (a < 1 || b < 1) {
    throw Error(ErrorCode::InvalidArgument,
                "double star needs >= 1 leaf per center");
  }
  std::vector<std::pair<int, int>> edges;
  edges.emplace_back(0, 1);
  for (int v = 0; v < a; ++v) edges.emplace_back(0, 2 + v);
  for (int v = 0; v < b; ++v) edges.emplace_back(1, 2 + a + v);
  std::map<std::string, int> labels{{"center_a", 0}, {"center_b", 1}};
  std::ostringstream id;
  id << "double_star_" << a << '_' << b;
  return LabeledGraph{Graph::build(a + b + 2, edges), std::move(labels),
                      id.str()};
}

LabeledGraph gen_random_tree(int n, std::uint64_t seed) {
  std::ostringstream id;
  id << "tree_" << n << "_s" << seed;
  return LabeledGraph{random_tree(n, seed), {}, id.str()};
}

LabeledGraph gen_random_connected(int n, double edge_prob,
                                  std::uint64_t seed) {
  if (n < 2) throw Error(ErrorCode::TooSmall, "need n >= 2");
  if (!(edge_prob > 0.0) || edge_prob > 1.0) {
    throw Error(ErrorCode::InvalidArgument,
                "edge probability must lie in (0, 1]");
  }
  Rng rng(seed);
  constexpr int kAttempts = 1000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng.unit() < edge_prob) edges.emplace_back(u, v);
      }
    }
    if (!connected(n, edges)) continue;
    std::ostringstream id;
    id << "gnp_" << n << "_p" << edge_prob << "_s" << seed;
    return LabeledGraph{Graph::build(n, edges), {}, id.str()};
  }
  std::ostringstream os;
  os << "no connected sample in " << kAttempts << " attempts (n=" << n
     << ", p=" << edge_prob << ")";
  throw Error(ErrorCode::GiveUp, os.str());
}

LabeledGraph gen_random_constrained(int n, int target_edges,
                                    ConstraintKind constraint,
                                    std::uint64_t seed) {
  if (n < 2) throw Error(ErrorCode::TooSmall, "need n >= 2");
  if (target_edges < 0) {
    throw Error(ErrorCode::InvalidArgument, "target edge count is negative");
  }
  Rng rng(seed);
  const Graph tree = random_tree(n, rng.next());
  std::vector<std::pair<int, int>> edges = tree.edges();

  std::vector<std::pair<int, int>> candidates;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!tree.adjacent(u, v)) candidates.emplace_back(u, v);
    }
  }
  for (std::size_t i = candidates.size(); i > 1; --i) {
    const std::size_t j = rng.below(static_cast<std::uint32_t>(i));
    std::swap(candidates[i - 1], candidates[j]);
  }

  const auto satisfies = [&](const Graph& g) {
    switch (constraint) {
      case ConstraintKind::C4C6Free: return !has_c4_or_c6_subgraph(g);
      case ConstraintKind::Girth5: return girth(g).at_least(5);
    }
    return false;
  };

  Graph current = tree;
  for (const auto& e : candidates) {
    if (static_cast<int>(edges.size()) >= target_edges) break;
    edges.push_back(e);
    Graph next = Graph::build(n, edges);
    if (satisfies(next)) {
      current = std::move(next);
    } else {
      edges.pop_back();
    }
  }
  std::ostringstream id;
  id << (constraint == ConstraintKind::C4C6Free ? "c4c6free_" : "girth5_")
     << n << "_t" << target_edges << "_s" << seed;
  return LabeledGraph{std::move(current), {}, id.str()};
}

}  // namespace mld
