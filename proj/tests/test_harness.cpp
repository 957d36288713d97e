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

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "mld/error.hpp"
#include "mld/families.hpp"
#include "mld/graph.hpp"
#include "mld/harness.hpp"
#include "mld/io.hpp"
#include "mld/predicates.hpp"
#include "mld/solver.hpp"

namespace {

using nlohmann::json;

bool has_chain(const std::vector<mld::ChainVerdict>& chains,
               mld::ChainId id) {
  return std::any_of(chains.begin(), chains.end(),
                     [&](const auto& c) { return c.id == id; });
}

bool all_hold(const std::vector<mld::ChainVerdict>& chains) {
  return std::all_of(chains.begin(), chains.end(),
                     [](const auto& c) { return c.holds; });
}

}  // namespace

TEST_CASE("chain selection respects structural guards") {
  const mld::Graph p2 = mld::gen_path(2).graph;
  const auto p2_chains = mld::run_chains(p2, mld::solve_all(p2));
  // On the two-vertex path the leaf-count and girth-5 chains would be
  // outright false (gammaM = 1 < ell = psi = 2), so they must not run.
  CHECK_FALSE(has_chain(p2_chains, mld::ChainId::TreeGammaMBounds));
  CHECK_FALSE(has_chain(p2_chains, mld::ChainId::Girth5Chain));
  CHECK(has_chain(p2_chains, mld::ChainId::TreeGammaLLtDoubleGammaM));
  CHECK(has_chain(p2_chains, mld::ChainId::PsiConjecture));
  CHECK(p2_chains.size() == 7);
  CHECK(all_hold(p2_chains));

  const mld::Graph p6 = mld::gen_path(6).graph;
  const auto p6_chains = mld::run_chains(p6, mld::solve_all(p6));
  CHECK(has_chain(p6_chains, mld::ChainId::TreeGammaMBounds));
  CHECK(has_chain(p6_chains, mld::ChainId::Girth5Chain));
  CHECK(p6_chains.size() == 9);
  CHECK(all_hold(p6_chains));

  const mld::Graph c4 =
      mld::Graph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const auto c4_chains = mld::run_chains(c4, mld::solve_all(c4));
  CHECK_FALSE(has_chain(c4_chains, mld::ChainId::Girth5Chain));
  CHECK_FALSE(has_chain(c4_chains, mld::ChainId::TreeGammaMBounds));
  CHECK_FALSE(has_chain(c4_chains, mld::ChainId::TreeGammaLLtDoubleGammaM));
  CHECK(all_hold(c4_chains));

  // Only the conjecture chain is advisory.
  for (const auto& c : p6_chains) {
    CHECK(c.advisory == (c.id == mld::ChainId::PsiConjecture));
  }
}

TEST_CASE("suites pass on pinned graphs") {
  for (const auto& lg : {mld::gen_path(6), mld::gen_star(3), mld::gen_comb(3),
                         mld::gen_gs(1)}) {
    const mld::GraphInvariants inv = mld::solve_all(lg.graph);
    const mld::DistanceMatrix d(lg.graph);
    const auto dr =
        mld::double_resolution_suite(lg.graph, d, inv.gamma_m.witness);
    CHECK(dr.ok);
    CHECK_FALSE(dr.skipped);
    const auto tf = mld::transform_suite(lg.graph, inv);
    CHECK(tf.ok);
    const auto tr = mld::tree_suite(lg.graph, inv);
    if (mld::is_tree(lg.graph)) {
      CHECK_FALSE(tr.skipped);
      CHECK(tr.ok);
    } else {
      CHECK(tr.skipped);
    }
  }
}

TEST_CASE("analyze_graph assembles a full report") {
  const mld::GraphReport report = mld::analyze_graph(mld::gen_path(6));
  CHECK(report.graph_id == "path_6");
  CHECK(report.n == 6);
  CHECK(report.m == 5);
  CHECK(report.tree);
  CHECK(report.c4c6_free);
  CHECK(report.girth.acyclic());
  CHECK(report.status == "ok");
  REQUIRE(report.invariants.has_value());
  CHECK(report.invariants->gamma_m.value == 2);
  CHECK(report.chains.size() == 9);
  CHECK(report.suites.size() == 3);
  CHECK_FALSE(report.fatal_violation());
  CHECK_FALSE(report.conjecture_violation());
}

TEST_CASE("analyze_graph reports a timeout instead of throwing") {
  mld::SolveOptions opts;
  opts.budget_seconds = 1e-9;
  const mld::GraphReport report =
      mld::analyze_graph(mld::gen_random_connected(40, 0.08, 4), opts);
  CHECK(report.status.rfind("timeout", 0) == 0);
  CHECK_FALSE(report.invariants.has_value());
  CHECK(report.chains.empty());
  CHECK_FALSE(report.fatal_violation());
}

TEST_CASE("report JSON carries the documented fields") {
  const mld::GraphReport report = mld::analyze_graph(mld::gen_comb(2));
  const json j = json::parse(mld::report_to_json(report));
  CHECK(j["graph_id"] == "comb_2");
  CHECK(j["n"] == 4);
  CHECK(j["girth"].is_null());
  CHECK(j["tree"] == true);
  CHECK(j["c4c6_free"] == true);
  CHECK(j["status"] == "ok");
  CHECK(j["fatal_violation"] == false);
  CHECK(j["conjecture_violation"] == false);
  CHECK(j["invariants"].is_object());
  for (const char* name : {"gamma", "dim", "gammaM", "gammaL", "psi"}) {
    CHECK(j["invariants"][name]["value"].is_number_integer());
    CHECK(j["invariants"][name]["witness"].is_array());
    CHECK(j["invariants"][name]["seconds"].is_number());
  }
  CHECK(j["chains"].is_array());
  CHECK(j["chains"].size() == report.chains.size());
  for (const auto& c : j["chains"]) {
    CHECK(c["id"].is_string());
    CHECK(c["holds"].is_boolean());
    CHECK(c["advisory"].is_boolean());
    CHECK(c["values"].is_array());
  }
  CHECK(j["suites"].is_array());
  CHECK(j["labels"].is_object());
  CHECK(j["labels"].size() == 4);
}

TEST_CASE("corpus builders and JSON specs agree") {
  mld::Corpus direct;
  mld::add_paths(direct, 2, 5);
  mld::add_stars(direct, 2, 3);
  mld::add_random_trees(direct, 4, 4, 8, 11);

  const mld::Corpus parsed = mld::build_corpus_from_json(R"({"items":[
    {"family":"paths","min":2,"max":5},
    {"family":"stars","min":2,"max":3},
    {"family":"prufer","count":4,"n_min":4,"n_max":8,"seed":11}
  ]})");
  REQUIRE(parsed.size() == direct.size());
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    CHECK(parsed[i].id == direct[i].id);
    CHECK(parsed[i].graph.edges() == direct[i].graph.edges());
  }

  CHECK_THROWS_AS(mld::build_corpus_from_json("{bad"), mld::Error);
  CHECK_THROWS_AS(
      mld::build_corpus_from_json(R"({"items":[{"family":"nope"}]})"),
      mld::Error);
}

TEST_CASE("corpus specs can pull graphs from files") {
  const std::string dir = "corpus_file_test";
  std::filesystem::create_directory(dir);
  const std::string path = dir + "/k13.el";
  std::ofstream(path) << mld::format_edge_list(mld::gen_star(3).graph);

  const mld::Corpus corpus = mld::build_corpus_from_json(
      R"({"items":[{"family":"file","path":")" + path + R"("}]})");
  REQUIRE(corpus.size() == 1);
  CHECK(corpus[0].graph.order() == 4);
  std::filesystem::remove_all(dir);
}

TEST_CASE("run_corpus is order-stable and parallel-safe") {
  mld::Corpus corpus;
  mld::add_paths(corpus, 2, 7);
  mld::add_stars(corpus, 2, 4);
  mld::add_random_connected(corpus, 6, 4, 7, 21);

  const mld::CorpusRunResult serial = mld::run_corpus(corpus, {}, 1);
  const mld::CorpusRunResult parallel = mld::run_corpus(corpus, {}, 4);
  REQUIRE(serial.reports.size() == corpus.size());
  REQUIRE(parallel.reports.size() == corpus.size());
  CHECK(serial.fatal_violations == 0);
  CHECK(serial.conjecture_violations == 0);
  CHECK(serial.timeouts == 0);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    CHECK(serial.reports[i].graph_id == corpus[i].id);
    CHECK(parallel.reports[i].graph_id == corpus[i].id);
    CHECK(serial.reports[i].invariants->gamma_m.value ==
          parallel.reports[i].invariants->gamma_m.value);
  }

  const std::string jsonl = mld::reports_to_jsonl(serial.reports);
  const long lines = std::count(jsonl.begin(), jsonl.end(), '\n');
  CHECK(lines == static_cast<long>(corpus.size()));
}

TEST_CASE("witness search hits the doubled-domination goal on the smallest path") {
  // psi = 2 and gammaM = 1 on the two-vertex path, so the very first phase
  // of the stream can satisfy psi == 2 * gammaM.
  mld::SearchGoal goal;
  goal.kind = mld::GoalKind::PsiEqualsTwiceGammaM;
  const mld::SearchResult r = mld::witness_search(goal, 6, 500, 1);
  REQUIRE(r.hit.has_value());
  CHECK(r.hit->psi == 2 * r.hit->gamma_m);

  const mld::SearchResult again = mld::witness_search(goal, 6, 500, 1);
  CHECK(again.graphs_examined == r.graphs_examined);
  REQUIRE(again.hit.has_value());
  CHECK(again.hit->edges == r.hit->edges);
}

TEST_CASE("witness search respects its graph budget") {
  mld::SearchGoal goal;
  goal.kind = mld::GoalKind::RatioGammaLOverGammaM;
  goal.threshold = 99.0;  // unattainable
  const mld::SearchResult r = mld::witness_search(goal, 5, 40, 3);
  CHECK_FALSE(r.hit.has_value());
  CHECK(r.graphs_examined == 40);

  CHECK_THROWS_AS(mld::witness_search(goal, 11, 10, 3), mld::Error);
  CHECK_THROWS_AS(mld::witness_search(goal, 1, 10, 3), mld::Error);
}

TEST_CASE("connected graph enumeration has the known counts") {
  const int expected[] = {0, 0, 1, 4, 38, 728};
  for (int n = 2; n <= 5; ++n) {
    int count = 0;
    mld::for_each_connected_graph(n, [&](const mld::Graph& g) {
      CHECK(g.order() == n);
      ++count;
    });
    CHECK(count == expected[n]);
  }
  CHECK_THROWS_AS(mld::for_each_connected_graph(8, [](const mld::Graph&) {}),
                  mld::Error);
}
