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

#include <cstdint>
#include <vector>

#include "mld/error.hpp"
#include "mld/families.hpp"
#include "mld/graph.hpp"
#include "mld/predicates.hpp"
#include "mld/vertex_set.hpp"
#include "oracles.hpp"

namespace {

// Every predicate, on every subset, against the oracle transcriptions.
void sweep_all_subsets(const mld::Graph& g) {
  const int n = g.order();
  const mld::DistanceMatrix d(g);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    mld::VertexSet s(n);
    std::vector<int> sv;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1) {
        s.insert(v);
        sv.push_back(v);
      }
    }
    CAPTURE(mask);
    CHECK(static_cast<bool>(mld::is_dominating(g, s)) ==
          oracle::dominating(g, sv));
    CHECK(static_cast<bool>(mld::is_resolving(g, d, s)) ==
          oracle::resolving(g, sv));
    CHECK(static_cast<bool>(mld::is_mld(g, d, s)) == oracle::mld_set(g, sv));
    CHECK(static_cast<bool>(mld::is_ld(g, s)) == oracle::ld_set(g, sv));
    if (sv.size() >= 2) {
      CHECK(static_cast<bool>(mld::is_doubly_resolving(g, d, s)) ==
            oracle::doubly_resolving(g, sv));
    } else {
      // The library rejects singletons outright where the oracle just says
      // "no"; both agree a lone vertex never doubly resolves.
      CHECK_FALSE(oracle::doubly_resolving(g, sv));
      CHECK_THROWS_AS(mld::is_doubly_resolving(g, d, s), mld::Error);
    }
  }
}

}  // namespace

TEST_CASE("predicates agree with oracle on every subset of pinned graphs") {
  // The two five- and six-vertex graphs are the pinned instances where the
  // LD closure exceeds its quadratic size estimate; they stress the length-3
  // path structure the predicates must see through.
  sweep_all_subsets(mld::gen_path(6).graph);
  sweep_all_subsets(mld::gen_star(3).graph);
  sweep_all_subsets(mld::gen_comb(3).graph);
  sweep_all_subsets(mld::Graph::build(
      5, {{0, 2}, {2, 3}, {1, 3}, {1, 2}, {0, 4}, {2, 4}}));
  sweep_all_subsets(mld::Graph::build(
      6, {{0, 1}, {0, 2}, {1, 3}, {3, 5}, {0, 4}, {4, 5}}));
  sweep_all_subsets(mld::Graph::build(
      6, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {3, 4}, {3, 5}, {4, 5}}));
  sweep_all_subsets(
      mld::Graph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}));
}

TEST_CASE("predicate edge cases") {
  const mld::Graph p2 = mld::gen_path(2).graph;
  const mld::DistanceMatrix d(p2);

  CHECK(static_cast<bool>(mld::is_mld(p2, mld::VertexSet::of(2, {0}))));
  // The doubly-resolving predicate needs two members by definition; the
  // library makes a singleton a hard error rather than a quiet "no".
  CHECK_THROWS_AS(mld::is_doubly_resolving(p2, d, mld::VertexSet::of(2, {0})),
                  mld::Error);
  CHECK(static_cast<bool>(
      mld::is_doubly_resolving(p2, d, mld::VertexSet::of(2, {0, 1}))));

  CHECK_THROWS_AS(mld::is_dominating(p2, mld::VertexSet(2)), mld::Error);

  const int s01[] = {0, 1};
  const int s0[] = {0};
  CHECK(mld::set_doubly_resolves_pair(d, s01, 0, 1));
  CHECK_FALSE(mld::set_doubly_resolves_pair(d, s0, 0, 1));
}

TEST_CASE("failed resolution check reports a concrete vertex pair") {
  const mld::Graph star = mld::gen_star(3).graph;  // center 0, leaves 1..3
  const mld::DistanceMatrix d(star);
  const auto check = mld::is_resolving(star, d, mld::VertexSet::of(4, {0}));
  REQUIRE_FALSE(static_cast<bool>(check));
  REQUIRE(check.failure.has_value());
  CHECK(check.failure->kind == mld::FailureKind::NotResolving);
  const int x = check.failure->u;
  const int y = check.failure->v;
  CHECK(x != y);
  CHECK(y != -1);
  // The reported pair really is unresolved by {0}: equidistant leaves.
  CHECK(d.at(0, x) == d.at(0, y));
}

TEST_CASE("doubly_resolves matches its defining inequality") {
  const mld::Graph c5 =
      mld::Graph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  const mld::DistanceMatrix d(c5);
  for (int u = 0; u < 5; ++u) {
    for (int v = 0; v < 5; ++v) {
      if (u == v) continue;
      for (int x = 0; x < 5; ++x) {
        for (int y = 0; y < 5; ++y) {
          if (x == y) continue;
          const bool want =
              d.at(u, x) - d.at(u, y) != d.at(v, x) - d.at(v, y);
          CHECK(mld::doubly_resolves(d, u, v, x, y) == want);
        }
      }
    }
  }
}
