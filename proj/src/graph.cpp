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

#include "mld/graph.hpp"

#include <algorithm>
#include <unordered_set>

#include "mld/error.hpp"

namespace mld {

namespace {

// BFS reachability from vertex 0; returns number of reached vertices.
int reachable_count(int n, const std::vector<std::vector<int>>& adj) {
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> queue;
  queue.reserve(static_cast<std::size_t>(n));
  queue.push_back(0);
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int w : adj[static_cast<std::size_t>(queue[head])]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        queue.push_back(w);
      }
    }
  }
  return static_cast<int>(queue.size());
}

}  // namespace

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 2) {
    throw Error(ErrorCode::TooSmall,
                "graph needs at least 2 vertices, got " + std::to_string(n));
  }
  if (n > kMaxOrder) {
    throw Error(ErrorCode::OutOfRange,
                "graph order " + std::to_string(n) + " exceeds the supported "
                "maximum of " + std::to_string(kMaxOrder));
  }
  std::vector<std::pair<int, int>> normalized;
  normalized.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                      ") outside vertex range [0, " + std::to_string(n) + ")");
    }
    if (u == v) {
      throw Error(ErrorCode::LoopEdge,
                  "loop edge at vertex " + std::to_string(u));
    }
    normalized.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()),
                   normalized.end());

  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& [u, v] : normalized) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());

  int reached = reachable_count(n, adj);
  if (reached != n) {
    throw Error(ErrorCode::Disconnected,
                "graph is disconnected (" + std::to_string(reached) + " of " +
                    std::to_string(n) + " vertices reachable from 0)");
  }
  return Graph(n, static_cast<int>(normalized.size()), std::move(adj));
}

Graph Graph::from_adjacency(int n, std::vector<std::vector<int>> adj) {
  if (n < 2) {
    throw Error(ErrorCode::TooSmall,
                "graph needs at least 2 vertices, got " + std::to_string(n));
  }
  int twice_m = 0;
  for (const auto& row : adj) twice_m += static_cast<int>(row.size());
  if (reachable_count(n, adj) != n) {
    throw Error(ErrorCode::Disconnected, "generated graph is disconnected");
  }
  return Graph(n, twice_m / 2, std::move(adj));
}

bool Graph::adjacent(int u, int v) const {
  const auto& row = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[static_cast<std::size_t>(u)]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.order()) {
  d_.assign(static_cast<std::size_t>(n_) * n_, 0);
  std::vector<int> queue;
  queue.reserve(static_cast<std::size_t>(n_));
  std::vector<std::uint16_t> dist(static_cast<std::size_t>(n_));
  for (int src = 0; src < n_; ++src) {
    std::fill(dist.begin(), dist.end(), std::uint16_t(0xffff));
    queue.clear();
    queue.push_back(src);
    dist[static_cast<std::size_t>(src)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int w : g.neighbors(u)) {
        if (dist[static_cast<std::size_t>(w)] == 0xffff) {
          dist[static_cast<std::size_t>(w)] =
              static_cast<std::uint16_t>(dist[static_cast<std::size_t>(u)] + 1);
          queue.push_back(w);
        }
      }
    }
    std::copy(dist.begin(), dist.end(),
              d_.begin() + static_cast<std::size_t>(src) * n_);
  }
}

Girth girth(const Graph& g) {
  if (is_tree(g)) return Girth{std::nullopt};
  const int n = g.order();
  int best = n + 1;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::vector<int> queue;
  queue.reserve(static_cast<std::size_t>(n));
  // BFS from each root; a non-tree edge seen from u to an already-visited w
  // (w != parent of u) closes a cycle of length <= dist[u] + dist[w] + 1.
  // The minimum over all roots is exact.
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    queue.push_back(root);
    dist[static_cast<std::size_t>(root)] = 0;
    parent[static_cast<std::size_t>(root)] = -1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      if (2 * dist[static_cast<std::size_t>(u)] >= best) break;
      for (int w : g.neighbors(u)) {
        if (dist[static_cast<std::size_t>(w)] == -1) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(w)] = u;
          queue.push_back(w);
        } else if (w != parent[static_cast<std::size_t>(u)]) {
          int len = dist[static_cast<std::size_t>(u)] +
                    dist[static_cast<std::size_t>(w)] + 1;
          best = std::min(best, len);
        }
      }
    }
  }
  return Girth{best};
}

namespace {

// Any pair of vertices with two common neighbors spans a 4-cycle subgraph.
bool has_c4(const Graph& g) {
  const int n = g.order();
  std::unordered_set<std::uint64_t> seen_pairs;
  for (int w = 0; w < n; ++w) {
    auto nb = g.neighbors(w);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        std::uint64_t key = static_cast<std::uint64_t>(nb[i]) *
                                static_cast<std::uint64_t>(kMaxOrder) +
                            static_cast<std::uint64_t>(nb[j]);
        if (!seen_pairs.insert(key).second) return true;
      }
    }
  }
  return false;
}

// Depth-first enumeration of 6-cycles in canonical form: the start vertex is
// the cycle minimum and the walk leaves it toward its smaller cycle-neighbor.
bool has_c6(const Graph& g) {
  const int n = g.order();
  int path[6];
  std::vector<char> used(static_cast<std::size_t>(n), 0);

  for (int start = 0; start < n; ++start) {
    path[0] = start;
    used[static_cast<std::size_t>(start)] = 1;
    // Iterative DFS over positions 1..5.
    struct Frame { std::size_t next_idx; };
    Frame frames[6];
    int depth = 1;
    frames[1].next_idx = 0;
    while (depth >= 1) {
      int u = path[depth - 1];
      auto nb = g.neighbors(u);
      bool advanced = false;
      for (std::size_t& idx = frames[depth].next_idx; idx < nb.size();) {
        int w = nb[idx++];
        if (w <= start || used[static_cast<std::size_t>(w)]) continue;
        if (depth == 5) {
          if (g.adjacent(w, start) && path[1] < w) {
            used[static_cast<std::size_t>(start)] = 0;
            return true;
          }
          continue;
        }
        path[depth] = w;
        used[static_cast<std::size_t>(w)] = 1;
        ++depth;
        frames[depth].next_idx = 0;
        advanced = true;
        break;
      }
      if (!advanced) {
        --depth;
        if (depth >= 1) used[static_cast<std::size_t>(path[depth])] = 0;
      }
    }
    used[static_cast<std::size_t>(start)] = 0;
  }
  return false;
}

}  // namespace

bool has_c4_or_c6_subgraph(const Graph& g) { return has_c4(g) || has_c6(g); }

VertexSet degree_one_vertices(const Graph& g) {
  VertexSet out(g.order());
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) out.insert(v);
  }
  return out;
}

}  // namespace mld
