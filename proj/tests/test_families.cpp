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

#include <string>
#include <vector>

#include "mld/error.hpp"
#include "mld/families.hpp"
#include "mld/graph.hpp"
#include "mld/predicates.hpp"
#include "mld/tree.hpp"
#include "mld/vertex_set.hpp"
#include "oracles.hpp"

TEST_CASE("layered cycle family has the pinned shape") {
  const mld::LabeledGraph g1 = mld::gen_gs(1);
  CHECK(g1.graph.order() == 11);
  CHECK(g1.graph.edge_count() == 12);
  CHECK(g1.labels.size() == 11);
  CHECK(g1.labels.count("p") == 1);
  CHECK(g1.labels.count("b_0") == 1);
  CHECK(g1.labels.count("c_0") == 1);
  CHECK(g1.labels.count("c_1") == 1);
  CHECK(mld::girth(g1.graph).length == 6);

  const mld::LabeledGraph g2 = mld::gen_gs(2);
  CHECK(g2.graph.order() == 20);
  CHECK(g2.labels.count("c_2") == 1);
  CHECK(g2.labels.count("b_7") == 1);

  CHECK_THROWS_AS(mld::gen_gs(0), mld::Error);
  CHECK_THROWS_AS(mld::gen_gs(5), mld::Error);
}

TEST_CASE("comb family wiring and labels") {
  const mld::LabeledGraph comb = mld::gen_comb(3);
  CHECK(comb.graph.order() == 6);
  CHECK(comb.graph.edge_count() == 5);
  // Spine a_1..a_3 occupies 0..2, teeth b_1..b_3 occupy 3..5, with b_i
  // pendant on a_i.
  for (int i = 1; i <= 3; ++i) {
    CHECK(comb.labels.at("a_" + std::to_string(i)) == i - 1);
    CHECK(comb.labels.at("b_" + std::to_string(i)) == i + 2);
    CHECK(comb.graph.adjacent(i - 1, i + 2));
    CHECK(comb.graph.degree(i + 2) == 1);
  }
  CHECK(comb.graph.adjacent(0, 1));
  CHECK(comb.graph.adjacent(1, 2));
  CHECK_FALSE(comb.graph.adjacent(0, 2));
  CHECK(mld::is_tree(comb.graph));
  // A one-tooth comb is just the two-vertex path.
  CHECK(mld::gen_comb(1).graph.order() == 2);
  CHECK_THROWS_AS(mld::gen_comb(0), mld::Error);
}

TEST_CASE("basic tree families") {
  CHECK(mld::gen_path(5).graph.order() == 5);
  CHECK(mld::gen_path(5).graph.edge_count() == 4);
  CHECK(mld::gen_path(2).id == "path_2");

  const mld::LabeledGraph star = mld::gen_star(4);
  CHECK(star.graph.order() == 5);
  CHECK(star.graph.degree(star.labels.at("center")) == 4);

  const mld::LabeledGraph ds = mld::gen_double_star(2, 3);
  CHECK(ds.graph.order() == 7);
  CHECK(mld::is_tree(ds.graph));
  CHECK(mld::tree_profile(ds.graph).ell == 5);

  const mld::LabeledGraph spider = mld::gen_spider(4, 2);
  CHECK(spider.graph.order() == 9);
  CHECK(mld::is_tree(spider.graph));
  CHECK(mld::tree_profile(spider.graph).ell == 4);

  CHECK_THROWS_AS(mld::gen_path(1), mld::Error);
  CHECK_THROWS_AS(mld::gen_star(0), mld::Error);
  CHECK_THROWS_AS(mld::gen_spider(2, 1), mld::Error);  // that's a path
}

TEST_CASE("random generators are deterministic per seed") {
  const mld::LabeledGraph a = mld::gen_random_tree(10, 7);
  const mld::LabeledGraph b = mld::gen_random_tree(10, 7);
  CHECK(a.graph.edges() == b.graph.edges());
  CHECK(a.id == b.id);

  const mld::LabeledGraph c = mld::gen_random_connected(8, 0.4, 3);
  const mld::LabeledGraph d = mld::gen_random_connected(8, 0.4, 3);
  CHECK(c.graph.edges() == d.graph.edges());
  CHECK(c.graph.order() == 8);

  const mld::LabeledGraph e =
      mld::gen_random_constrained(9, 12, mld::ConstraintKind::C4C6Free, 5);
  const mld::LabeledGraph f =
      mld::gen_random_constrained(9, 12, mld::ConstraintKind::C4C6Free, 5);
  CHECK(e.graph.edges() == f.graph.edges());
}

TEST_CASE("constrained generators honor their constraints") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const int n = 4 + static_cast<int>(seed % 7);
    const mld::LabeledGraph free46 = mld::gen_random_constrained(
        n, n + 2, mld::ConstraintKind::C4C6Free, seed);
    CHECK_FALSE(mld::has_c4_or_c6_subgraph(free46.graph));
    CHECK_FALSE(oracle::has_cycle_subgraph(free46.graph, 4));
    CHECK_FALSE(oracle::has_cycle_subgraph(free46.graph, 6));

    const mld::LabeledGraph g5 = mld::gen_random_constrained(
        n, n + 2, mld::ConstraintKind::Girth5, seed);
    CHECK(mld::girth(g5.graph).at_least(5));
  }
}

TEST_CASE("family ids name the instance") {
  CHECK(mld::gen_gs(2).id == "gs_2");
  CHECK(mld::gen_comb(3).id == "comb_3");
  CHECK(mld::gen_star(4).id == "star_4");
  CHECK(mld::gen_random_tree(6, 9).id != mld::gen_random_tree(7, 9).id);
}
