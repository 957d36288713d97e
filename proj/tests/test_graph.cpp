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

#include <doctest.h>

#include <algorithm>
#include <vector>

#include "mld/error.hpp"
#include "mld/families.hpp"
#include "mld/graph.hpp"
#include "mld/io.hpp"
#include "mld/rng.hpp"
#include "oracles.hpp"

namespace {

mld::Graph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return mld::Graph::build(n, edges);
}

mld::Graph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return mld::Graph::build(n, edges);
}

}  // namespace

TEST_CASE("edge list parsing round-trips") {
  const std::string text = "# a comment\n6 5\n0 1\n1 2\n2 3\n3 4\n\n4 5\n";
  const mld::Graph g = mld::parse_edge_list(text);
  CHECK(g.order() == 6);
  CHECK(g.edge_count() == 5);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));

  const mld::Graph again = mld::parse_edge_list(mld::format_edge_list(g));
  CHECK(again.order() == g.order());
  CHECK(again.edges() == g.edges());
}

TEST_CASE("edge list parser rejects malformed input") {
  auto code_of = [](const std::string& text) {
    try {
      mld::parse_edge_list(text);
    } catch (const mld::Error& e) {
      return e.code();
    }
    return mld::ErrorCode::Internal;  // not reached on the inputs below
  };
  CHECK(code_of("") == mld::ErrorCode::ParseError);
  CHECK(code_of("2\n0 1\n") == mld::ErrorCode::ParseError);
  CHECK(code_of("x y\n") == mld::ErrorCode::ParseError);
  CHECK(code_of("2 2\n0 1\n") == mld::ErrorCode::ParseError);  // edge shortfall
  CHECK(code_of("2 1\n0 2\n") == mld::ErrorCode::VertexOutOfRange);
  CHECK(code_of("2 1\n1 1\n") == mld::ErrorCode::LoopEdge);
  CHECK(code_of("4 2\n0 1\n2 3\n") == mld::ErrorCode::Disconnected);
  CHECK(code_of("1 0\n") == mld::ErrorCode::TooSmall);

  // Repeated edges are tolerated and deduplicated on ingestion.
  const mld::Graph dedup = mld::parse_edge_list("3 3\n0 1\n1 2\n0 1\n");
  CHECK(dedup.edge_count() == 2);
}

TEST_CASE("graph builder validates and normalizes") {
  const mld::Graph g = mld::Graph::build(3, {{2, 1}, {0, 1}});
  CHECK(g.order() == 3);
  CHECK(g.edge_count() == 2);
  // Edge endpoints are reported with u < v, in sorted order.
  const std::vector<std::pair<int, int>> want{{0, 1}, {1, 2}};
  CHECK(g.edges() == want);
  for (int v = 0; v < 3; ++v) {
    auto nb = g.neighbors(v);
    CHECK(std::is_sorted(nb.begin(), nb.end()));
  }
  CHECK(g.degree(1) == 2);

  CHECK_THROWS_AS(mld::Graph::build(2, {}), mld::Error);          // disconnected
  CHECK_THROWS_AS(mld::Graph::build(3, {{0, 0}}), mld::Error);    // loop
  CHECK_THROWS_AS(mld::Graph::build(3, {{0, 7}}), mld::Error);    // range
  CHECK_THROWS_AS(mld::Graph::build(1, {}), mld::Error);          // too small
}

TEST_CASE("from_adjacency matches build") {
  const mld::Graph g = oracle::petersen();
  std::vector<std::vector<int>> adj(g.order());
  for (const auto& [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  const mld::Graph h = mld::Graph::from_adjacency(g.order(), adj);
  CHECK(h.edges() == g.edges());
}

TEST_CASE("distance matrix agrees with Floyd-Warshall") {
  std::vector<mld::Graph> graphs{oracle::petersen(), cycle(7), complete(5),
                                 mld::gen_path(9).graph};
  mld::Rng rng(11);
  for (int i = 0; i < 8; ++i) {
    graphs.push_back(
        mld::gen_random_connected(4 + static_cast<int>(rng.below(7)),
                                  0.2 + 0.5 * rng.unit(), rng.next())
            .graph);
  }
  for (const mld::Graph& g : graphs) {
    const mld::DistanceMatrix d(g);
    const auto ref = oracle::all_distances(g);
    for (int u = 0; u < g.order(); ++u) {
      for (int v = 0; v < g.order(); ++v) {
        CHECK(d.at(u, v) == ref[u][v]);
      }
    }
  }
}

TEST_CASE("girth on pinned graphs") {
  CHECK(mld::girth(mld::gen_path(6).graph).acyclic());
  CHECK_FALSE(mld::girth(mld::gen_path(6).graph).length.has_value());
  CHECK(mld::girth(cycle(5)).length == 5);
  CHECK(mld::girth(cycle(6)).length == 6);
  CHECK(mld::girth(complete(4)).length == 3);
  CHECK(mld::girth(oracle::petersen()).length == 5);
  CHECK(mld::girth(mld::gen_gs(1).graph).length == 6);

  CHECK(mld::girth(oracle::petersen()).at_least(5));
  CHECK_FALSE(mld::girth(oracle::petersen()).at_least(6));
  CHECK(mld::girth(mld::gen_path(2).graph).at_least(5));  // acyclic
}

TEST_CASE("4-/6-cycle detection agrees with the walk oracle") {
  auto ref = [](const mld::Graph& g) {
    return oracle::has_cycle_subgraph(g, 4) || oracle::has_cycle_subgraph(g, 6);
  };
  // Girth 5 does not imply 6-cycle-freeness: the Petersen graph has
  // hexagons even though its shortest cycles have length 5.
  CHECK(mld::has_c4_or_c6_subgraph(oracle::petersen()));
  CHECK(oracle::has_cycle_subgraph(oracle::petersen(), 6));
  CHECK_FALSE(oracle::has_cycle_subgraph(oracle::petersen(), 4));
  CHECK(mld::has_c4_or_c6_subgraph(cycle(6)));
  CHECK(mld::has_c4_or_c6_subgraph(complete(4)));
  CHECK_FALSE(mld::has_c4_or_c6_subgraph(cycle(5)));
  CHECK_FALSE(mld::has_c4_or_c6_subgraph(mld::gen_path(8).graph));

  mld::Rng rng(23);
  for (int i = 0; i < 60; ++i) {
    const mld::Graph g =
        mld::gen_random_connected(4 + static_cast<int>(rng.below(5)),
                                  0.2 + 0.6 * rng.unit(), rng.next())
            .graph;
    CHECK(mld::has_c4_or_c6_subgraph(g) == ref(g));
  }
}

TEST_CASE("degree-one vertices and tree recognition") {
  const auto leaves = mld::degree_one_vertices(mld::gen_star(4).graph);
  CHECK(leaves.size() == 4);
  CHECK(mld::is_tree(mld::gen_star(4).graph));
  CHECK(mld::is_tree(mld::gen_path(2).graph));
  CHECK_FALSE(mld::is_tree(cycle(5)));
  CHECK(mld::degree_one_vertices(cycle(5)).empty());
}

TEST_CASE("labels sidecar JSON round-trips") {
  const mld::LabeledGraph g1 = mld::gen_gs(1);
  const std::string json = mld::labels_to_json(g1.labels);
  const auto back = mld::parse_labels_json(json);
  CHECK(back == g1.labels);
  CHECK(back.at("p") >= 0);
  CHECK_THROWS_AS(mld::parse_labels_json("not json"), mld::Error);
}
