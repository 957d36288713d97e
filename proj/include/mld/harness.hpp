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

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mld/families.hpp"
#include "mld/graph.hpp"
#include "mld/solver.hpp"

namespace mld {

// Inequality chains re-verified on every analyzed graph. The conjecture is
// advisory: a violation is reported but never treated as fatal.
enum class ChainId {
  GammaMBounds,              // max(dim, gamma) <= gammaM <= dim + gamma
  ResolvingChain,            // dim <= gammaM <= gammaL
  DimLePsi,                  // dim <= psi
  TreeGammaMBounds,          // trees: max(ell, gamma) <= gammaM <= dim + gamma
  Girth5Chain,               // girth >= 5: dim <= psi <= gammaM <= gammaL
  PsiLeDoubleGammaM,         // dim <= psi <= 2*gammaM <= 2*gammaL
  PsiLeGammaMPlusGamma,      // psi <= gammaM + gamma
  TreeGammaLLtDoubleGammaM,  // trees: gammaL < 2*gammaM
  PsiConjecture,             // psi <= dim + gamma (advisory)
};

const char* chain_id_name(ChainId id);

struct ChainVerdict {
  ChainId id;
  bool holds = false;
  bool advisory = false;
  // Invariant values the chain was evaluated on, in display order.
  std::vector<std::pair<std::string, int>> values;
};

// Evaluates every chain applicable to g from already-solved invariants:
// TreeGammaMBounds on trees with n >= 3, TreeGammaLLtDoubleGammaM on all
// trees, Girth5Chain when girth >= 5 (or acyclic) and n >= 3, the rest
// everywhere. The two n >= 3 guards exclude the two-vertex path, where
// gammaM = 1 sits below both the leaf count and psi.
std::vector<ChainVerdict> run_chains(const Graph& g,
                                     const GraphInvariants& inv);

struct SuiteResult {
  std::string name;
  bool ok = true;
  bool skipped = false;
  std::vector<std::string> failures;
};

// Structural facts about how a minimum MLD-set doubly resolves the graph:
// pairs outside the set are doubly resolved; a failing pair always straddles
// the set with the outside vertex's neighborhood trace pinned to its partner,
// and each set member owns at most one such partner; pairs inside the set are
// doubly resolved by their own two vertices.
SuiteResult double_resolution_suite(const Graph& g, const DistanceMatrix& d,
                                    const VertexSet& mld_set);

// Applies every transform whose precondition g meets (ld_closure on 4-/6-
// cycle-free graphs, pendant_swap at girth >= 5 and n > 2, union_repair
// always) to the solved minimum sets, checking certification and size bounds.
SuiteResult transform_suite(const Graph& g, const GraphInvariants& inv);

// Tree-only cross-checks: closed-form values against the solver, the
// strong-support criterion for gammaM == gamma, both characterization
// equivalences, and leaf count strictly above metric dimension.
SuiteResult tree_suite(const Graph& g, const GraphInvariants& inv);

struct GraphReport {
  std::string graph_id;
  int n = 0;
  int m = 0;
  Girth girth;
  bool tree = false;
  bool c4c6_free = false;
  std::optional<GraphInvariants> invariants;  // absent after a timeout
  std::vector<ChainVerdict> chains;
  std::vector<SuiteResult> suites;
  std::map<std::string, int> labels;
  std::string status = "ok";  // "ok" or "timeout: ..."
  double elapsed_ms = 0.0;

  bool fatal_violation() const;       // non-advisory chain or suite failed
  bool conjecture_violation() const;  // advisory chain failed
};

// Solves, runs chains and applicable suites, and packages the result.
GraphReport analyze_graph(const LabeledGraph& lg,
                          const SolveOptions& options = {});

std::string report_to_json(const GraphReport& report);

using Corpus = std::vector<LabeledGraph>;

// Pinned corpus builders shared by the verification harness and the CLI.
void add_paths(Corpus& c, int n_from, int n_to);
void add_stars(Corpus& c, int k_from, int k_to);
void add_double_stars(Corpus& c, int max_each);  // a <= b <= max_each
void add_spiders(Corpus& c, int n_cap);  // legs 3..5, leg lengths 1..3
void add_random_trees(Corpus& c, int count, int n_min, int n_max,
                      std::uint64_t seed);
void add_random_connected(Corpus& c, int count, int n_min, int n_max,
                          std::uint64_t seed);
void add_random_constrained(Corpus& c, int count, int n_min, int n_max,
                            ConstraintKind constraint, std::uint64_t seed);

// Corpus description as JSON: {"items":[{"family":"paths","min":2,"max":12},
// {"family":"prufer","count":500,"n_min":4,"n_max":12,"seed":1}, ...]}.
// Families: paths, stars, double_stars, spiders, prufer, gnp, c4c6_free,
// girth5, path, star, comb, gs, spider, double_star, file.
Corpus build_corpus_from_json(const std::string& spec_json);

struct CorpusRunResult {
  std::vector<GraphReport> reports;
  int fatal_violations = 0;
  int conjecture_violations = 0;
  int timeouts = 0;
};

// Analyzes every corpus graph (optionally with a worker pool; reports always
// come back in corpus order) and aggregates violation counts.
CorpusRunResult run_corpus(const Corpus& corpus, const SolveOptions& options,
                           int jobs = 1);

std::string reports_to_jsonl(const std::vector<GraphReport>& reports);

enum class GoalKind {
  PsiEqualsTwiceGammaM,      // psi == 2 * gammaM
  PsiEqualsGammaMPlusGamma,  // psi == gammaM + gamma
  RatioGammaLOverGammaM,     // gammaL >= threshold * gammaM
};

struct SearchGoal {
  GoalKind kind = GoalKind::PsiEqualsGammaMPlusGamma;
  double threshold = 1.0;  // RatioGammaLOverGammaM only
};

struct SearchHit {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  int gamma = -1, dim = -1, gamma_m = -1, gamma_l = -1, psi = -1;
};

struct SearchResult {
  SearchGoal goal;
  std::optional<SearchHit> hit;
  long graphs_examined = 0;
  double elapsed_seconds = 0.0;
};

// Streams candidate graphs through the solver until the goal holds or the
// budget (counted in graphs examined, for reproducibility) runs out. The
// stream is seeded-random first, then — when budget remains — exhaustive over
// n <= min(n_max, 7) with a degree-sequence + distance-multiset memo to skip
// obvious isomorphs, then random again. n_max <= 10.
SearchResult witness_search(const SearchGoal& goal, int n_max,
                            long budget_graphs, std::uint64_t seed,
                            const SolveOptions& options = {});

// Every connected labeled graph on n vertices, in edge-mask order. n <= 7.
void for_each_connected_graph(int n,
                              const std::function<void(const Graph&)>& visit);

}  // namespace mld
