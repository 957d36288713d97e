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

#include "mld/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "mld/error.hpp"
#include "mld/io.hpp"
#include "mld/predicates.hpp"
#include "mld/rng.hpp"
#include "mld/transforms.hpp"
#include "mld/tree.hpp"

namespace mld {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

const char* chain_id_name(ChainId id) {
  switch (id) {
    case ChainId::GammaMBounds:
      return "gammaM_bounds";
    case ChainId::ResolvingChain:
      return "resolving_chain";
    case ChainId::DimLePsi:
      return "dim_le_psi";
    case ChainId::TreeGammaMBounds:
      return "tree_gammaM_bounds";
    case ChainId::Girth5Chain:
      return "girth5_chain";
    case ChainId::PsiLeDoubleGammaM:
      return "psi_le_double_gammaM";
    case ChainId::PsiLeGammaMPlusGamma:
      return "psi_le_gammaM_plus_gamma";
    case ChainId::TreeGammaLLtDoubleGammaM:
      return "tree_gammaL_lt_double_gammaM";
    case ChainId::PsiConjecture:
      return "psi_conjecture";
  }
  return "unknown";
}

std::vector<ChainVerdict> run_chains(const Graph& g,
                                     const GraphInvariants& inv) {
  const int gamma = inv.gamma.value;
  const int dim = inv.dim.value;
  const int gm = inv.gamma_m.value;
  const int gl = inv.gamma_l.value;
  const int psi = inv.psi.value;

  std::vector<ChainVerdict> out;
  auto add = [&out](ChainId id, bool holds,
                    std::vector<std::pair<std::string, int>> values,
                    bool advisory = false) {
    out.push_back(ChainVerdict{id, holds, advisory, std::move(values)});
  };

  add(ChainId::GammaMBounds, std::max(dim, gamma) <= gm && gm <= dim + gamma,
      {{"dim", dim}, {"gamma", gamma}, {"gammaM", gm}});
  add(ChainId::ResolvingChain, dim <= gm && gm <= gl,
      {{"dim", dim}, {"gammaM", gm}, {"gammaL", gl}});
  add(ChainId::DimLePsi, dim <= psi, {{"dim", dim}, {"psi", psi}});

  if (inv.tree && g.order() >= 3) {
    const int ell = degree_one_vertices(g).size();
    add(ChainId::TreeGammaMBounds,
        std::max(ell, gamma) <= gm && gm <= dim + gamma,
        {{"leaves", ell}, {"gamma", gamma}, {"gammaM", gm}, {"dim", dim}});
  }
  if (inv.girth.at_least(5) && g.order() >= 3) {
    add(ChainId::Girth5Chain, dim <= psi && psi <= gm && gm <= gl,
        {{"dim", dim}, {"psi", psi}, {"gammaM", gm}, {"gammaL", gl}});
  }

  add(ChainId::PsiLeDoubleGammaM, dim <= psi && psi <= 2 * gm && gm <= gl,
      {{"dim", dim}, {"psi", psi}, {"gammaM", gm}, {"gammaL", gl}});
  add(ChainId::PsiLeGammaMPlusGamma, psi <= gm + gamma,
      {{"psi", psi}, {"gammaM", gm}, {"gamma", gamma}});

  if (inv.tree) {
    add(ChainId::TreeGammaLLtDoubleGammaM, gl < 2 * gm,
        {{"gammaL", gl}, {"gammaM", gm}});
  }

  add(ChainId::PsiConjecture, psi <= dim + gamma,
      {{"psi", psi}, {"dim", dim}, {"gamma", gamma}}, /*advisory=*/true);
  return out;
}

SuiteResult double_resolution_suite(const Graph& g, const DistanceMatrix& d,
                                    const VertexSet& mld_set) {
  SuiteResult r;
  r.name = "double_resolution";

  const std::vector<int> members = mld_set.members();
  const int n = g.order();

  // (a) every pair outside the set is doubly resolved by the set.
  for (int x = 0; x < n; ++x) {
    if (mld_set.contains(x)) continue;
    for (int y = x + 1; y < n; ++y) {
      if (mld_set.contains(y)) continue;
      if (!set_doubly_resolves_pair(d, members, x, y)) {
        r.failures.push_back("outside pair {" + std::to_string(x) + "," +
                             std::to_string(y) + "} is not doubly resolved");
      }
    }
  }

  // (b) a straddling pair {u in S, x outside} the set fails to doubly
  // resolve pins x's neighborhood trace to exactly {u}, and no set member
  // owns two such partners.
  for (int u : members) {
    int partners = 0;
    for (int x = 0; x < n; ++x) {
      if (mld_set.contains(x)) continue;
      if (set_doubly_resolves_pair(d, members, u, x)) continue;
      ++partners;
      bool trace_is_u = true;
      for (int w : g.neighbors(x)) {
        if (mld_set.contains(w) && w != u) trace_is_u = false;
      }
      if (!g.adjacent(u, x)) trace_is_u = false;
      if (!trace_is_u) {
        r.failures.push_back(
            "unresolved straddling pair {" + std::to_string(u) + "," +
            std::to_string(x) + "} does not have trace {" + std::to_string(u) +
            "}");
      }
    }
    if (partners > 1) {
      r.failures.push_back("set member " + std::to_string(u) + " has " +
                           std::to_string(partners) +
                           " unresolved partners outside the set");
    }
  }

  // (c) every pair inside the set is doubly resolved by its own two vertices.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const int u = members[i];
      const int v = members[j];
      if (!doubly_resolves(d, u, v, u, v)) {
        r.failures.push_back("inside pair {" + std::to_string(u) + "," +
                             std::to_string(v) +
                             "} is not doubly resolved by itself");
      }
    }
  }

  r.ok = r.failures.empty();
  return r;
}

SuiteResult transform_suite(const Graph& g, const GraphInvariants& inv) {
  SuiteResult r;
  r.name = "transforms";
  const VertexSet& s = inv.gamma_m.witness;

  if (inv.c4c6_free) {
    const TransformOutcome t = ld_closure(g, s);
    if (!t.certified) {
      r.failures.push_back(
          "ld_closure output " + t.output_set.to_string() +
          " is not locating-dominating");
    }
    // The construction itself can exceed |S|^2 (size_bound_ok reports that
    // per graph); the inequality it exists to certify is checked on the
    // solved values instead.
    if (inv.gamma_l.value > inv.gamma_m.value * inv.gamma_m.value) {
      r.failures.push_back(
          "gammaL = " + std::to_string(inv.gamma_l.value) +
          " exceeds gammaM^2 = " +
          std::to_string(inv.gamma_m.value * inv.gamma_m.value));
    }
  }

  if (inv.girth.at_least(5) && g.order() > 2) {
    const TransformOutcome t = pendant_swap(g, s);
    if (!t.certified) {
      r.failures.push_back("pendant_swap output " + t.output_set.to_string() +
                           " is not doubly resolving");
    }
    if (!t.size_bound_ok) {
      r.failures.push_back("pendant_swap output " + t.output_set.to_string() +
                           " exceeds the gammaM budget of " +
                           std::to_string(t.size_limit));
    }
    // A swapped-in pendant keeps every distance difference of the vertex it
    // replaces: d(pendant, x) - d(pendant, y) = d(u, x) - d(u, y) for all
    // x, y other than the pendant itself.
    const DistanceMatrix d(g);
    for (int u : s.members()) {
      if (t.output_set.contains(u)) continue;
      int pendant = -1;
      for (int w : g.neighbors(u)) {
        if (g.degree(w) == 1 && t.output_set.contains(w)) pendant = w;
      }
      if (pendant < 0) {
        r.failures.push_back("swapped vertex " + std::to_string(u) +
                             " has no pendant neighbor in the output");
        continue;
      }
      for (int x = 0; x < g.order() && r.failures.size() < 32; ++x) {
        if (x == pendant) continue;
        for (int y = x + 1; y < g.order(); ++y) {
          if (y == pendant) continue;
          if (d.at(pendant, x) - d.at(pendant, y) != d.at(u, x) - d.at(u, y)) {
            r.failures.push_back(
                "pendant " + std::to_string(pendant) +
                " does not preserve the distance differences of " +
                std::to_string(u) + " on {" + std::to_string(x) + "," +
                std::to_string(y) + "}");
          }
        }
      }
    }
  }

  const UnionRepairResult u = union_repair(g, inv.gamma_m, inv.gamma);
  if (!u.outcome.certified) {
    r.failures.push_back("union_repair output " +
                         u.outcome.output_set.to_string() +
                         " is not doubly resolving");
  }
  if (!u.outcome.size_bound_ok) {
    r.failures.push_back("union_repair output " +
                         u.outcome.output_set.to_string() +
                         " exceeds the gammaM + gamma budget of " +
                         std::to_string(u.outcome.size_limit));
  }

  r.ok = r.failures.empty();
  return r;
}

SuiteResult tree_suite(const Graph& g, const GraphInvariants& inv) {
  SuiteResult r;
  r.name = "tree";
  if (!inv.tree) {
    r.skipped = true;
    return r;
  }

  const TreeProfile profile = tree_profile(g);

  const int gamma_formula = gamma_tree(g);
  if (gamma_formula != inv.gamma.value) {
    r.failures.push_back("gamma_tree = " + std::to_string(gamma_formula) +
                         " but the solver found " +
                         std::to_string(inv.gamma.value));
  }

  const int gm_formula = gamma_m_tree(g);
  if (gm_formula != inv.gamma_m.value) {
    r.failures.push_back("gamma_m_tree = " + std::to_string(gm_formula) +
                         " but the solver found " +
                         std::to_string(inv.gamma_m.value));
  }

  const DimTreeResult dim_formula = dim_tree(g);
  if (dim_formula.value != inv.dim.value) {
    r.failures.push_back("dim_tree = " + std::to_string(dim_formula.value) +
                         " but the solver found " +
                         std::to_string(inv.dim.value));
  }
  if (dim_formula.witness.size() != dim_formula.value ||
      !is_resolving(g, dim_formula.witness)) {
    r.failures.push_back("dim_tree witness " +
                         dim_formula.witness.to_string() +
                         " is not a resolving set of the claimed size");
  }

  // gammaM == gamma exactly when no vertex supports two or more leaves.
  const bool values_equal = inv.gamma_m.value == inv.gamma.value;
  const bool no_strong_support = profile.strong_supports.empty();
  if (values_equal != no_strong_support) {
    r.failures.push_back(
        "gammaM == gamma is " + std::string(values_equal ? "true" : "false") +
        " but the strong-support criterion says " +
        std::string(no_strong_support ? "true" : "false"));
  }

  // Characterization of gammaM == dim + gamma: for non-path trees the four
  // conditions are equivalent; among paths only P_3 attains the equality.
  if (profile.is_path) {
    const bool equality = inv.gamma_m.value == inv.dim.value + inv.gamma.value;
    if (equality != (g.order() == 3)) {
      r.failures.push_back(
          "path on " + std::to_string(g.order()) +
          " vertices: gammaM == dim + gamma should hold exactly on the "
          "three-vertex path");
    }
  } else {
    const CharacterizationVerdict v = characterize_dim_plus_gamma(g);
    if (!v.all_equal) {
      std::string flags;
      for (bool f : v.flags) flags += f ? '1' : '0';
      r.failures.push_back(
          "characterize_dim_plus_gamma conditions disagree: " + flags);
    }
  }

  // Characterization of gammaM == leaf count, except on the two-vertex path
  // (there gammaM = 1 < 2 leaves).
  if (g.order() == 2) {
    if (inv.gamma_m.value != 1 || profile.ell != 2) {
      r.failures.push_back(
          "two-vertex path should have gammaM = 1 and two leaves");
    }
  } else {
    const CharacterizationVerdict v = characterize_leaf_count(g);
    if (!v.all_equal) {
      std::string flags;
      for (bool f : v.flags) flags += f ? '1' : '0';
      r.failures.push_back("characterize_leaf_count conditions disagree: " +
                           flags);
    }
  }

  // Leaf count strictly exceeds the metric dimension on every tree.
  if (profile.ell <= inv.dim.value) {
    r.failures.push_back("leaf count " + std::to_string(profile.ell) +
                         " does not exceed dim = " +
                         std::to_string(inv.dim.value));
  }

  r.ok = r.failures.empty();
  return r;
}

bool GraphReport::fatal_violation() const {
  for (const ChainVerdict& c : chains) {
    if (!c.advisory && !c.holds) return true;
  }
  for (const SuiteResult& s : suites) {
    if (!s.skipped && !s.ok) return true;
  }
  return false;
}

bool GraphReport::conjecture_violation() const {
  for (const ChainVerdict& c : chains) {
    if (c.advisory && !c.holds) return true;
  }
  return false;
}

GraphReport analyze_graph(const LabeledGraph& lg, const SolveOptions& options) {
  const Clock::time_point start = Clock::now();
  const Graph& g = lg.graph;

  GraphReport r;
  r.graph_id = lg.id;
  r.n = g.order();
  r.m = g.edge_count();
  r.girth = girth(g);
  r.tree = is_tree(g);
  r.c4c6_free = !has_c4_or_c6_subgraph(g);
  r.labels = lg.labels;

  try {
    const GraphInvariants inv = solve_all(g, options);
    r.invariants = inv;
    r.chains = run_chains(g, inv);
    const DistanceMatrix d(g);
    r.suites.push_back(double_resolution_suite(g, d, inv.gamma_m.witness));
    r.suites.push_back(transform_suite(g, inv));
    if (r.tree) r.suites.push_back(tree_suite(g, inv));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Timeout) throw;
    r.status = std::string("timeout: ") + e.what();
  }

  r.elapsed_ms = seconds_since(start) * 1000.0;
  return r;
}

namespace {

nlohmann::json witness_json(const InvariantResult& res) {
  return nlohmann::json(res.witness.members());
}

nlohmann::json invariant_json(const InvariantResult& res) {
  return nlohmann::json{{"value", res.value},
                        {"witness", witness_json(res)},
                        {"seconds", res.elapsed_seconds}};
}

}  // namespace

std::string report_to_json(const GraphReport& report) {
  nlohmann::json j;
  j["graph_id"] = report.graph_id;
  j["n"] = report.n;
  j["m"] = report.m;
  if (report.girth.length.has_value()) {
    j["girth"] = *report.girth.length;
  } else {
    j["girth"] = nullptr;
  }
  j["tree"] = report.tree;
  j["c4c6_free"] = report.c4c6_free;
  j["status"] = report.status;
  j["elapsed_ms"] = report.elapsed_ms;

  if (report.invariants.has_value()) {
    const GraphInvariants& inv = *report.invariants;
    nlohmann::json values;
    nlohmann::json witnesses;
    for (Invariant which : kAllInvariants) {
      const InvariantResult& res = inv.get(which);
      values[invariant_name(which)] = invariant_json(res);
      witnesses[invariant_name(which)] = witness_json(res);
    }
    j["invariants"] = values;
    j["witnesses"] = witnesses;
  } else {
    j["invariants"] = nullptr;
    j["witnesses"] = nullptr;
  }

  nlohmann::json chains = nlohmann::json::array();
  for (const ChainVerdict& c : report.chains) {
    nlohmann::json values = nlohmann::json::array();
    for (const auto& [name, value] : c.values) {
      values.push_back(nlohmann::json::array({name, value}));
    }
    chains.push_back(nlohmann::json{{"id", chain_id_name(c.id)},
                                    {"holds", c.holds},
                                    {"advisory", c.advisory},
                                    {"values", values}});
  }
  j["chains"] = chains;

  nlohmann::json suites = nlohmann::json::array();
  for (const SuiteResult& s : report.suites) {
    suites.push_back(nlohmann::json{{"name", s.name},
                                    {"ok", s.ok},
                                    {"skipped", s.skipped},
                                    {"failures", s.failures}});
  }
  j["suites"] = suites;

  j["labels"] = report.labels;
  j["fatal_violation"] = report.fatal_violation();
  j["conjecture_violation"] = report.conjecture_violation();
  return j.dump();
}

void add_paths(Corpus& c, int n_from, int n_to) {
  for (int n = n_from; n <= n_to; ++n) c.push_back(gen_path(n));
}

void add_stars(Corpus& c, int k_from, int k_to) {
  for (int k = k_from; k <= k_to; ++k) c.push_back(gen_star(k));
}

void add_double_stars(Corpus& c, int max_each) {
  for (int a = 1; a <= max_each; ++a) {
    for (int b = a; b <= max_each; ++b) c.push_back(gen_double_star(a, b));
  }
}

void add_spiders(Corpus& c, int n_cap) {
  for (int legs = 3; legs <= 5; ++legs) {
    for (int len = 1; len <= 3; ++len) {
      if (1 + legs * len > n_cap) continue;
      c.push_back(gen_spider(legs, len));
    }
  }
}

void add_random_trees(Corpus& c, int count, int n_min, int n_max,
                      std::uint64_t seed) {
  if (n_min < 2 || n_max < n_min) {
    throw Error(ErrorCode::InvalidArgument,
                "random tree sizes need 2 <= n_min <= n_max");
  }
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    const int n =
        n_min + static_cast<int>(rng.below(
                    static_cast<std::uint32_t>(n_max - n_min + 1)));
    c.push_back(gen_random_tree(n, rng.next()));
  }
}

void add_random_connected(Corpus& c, int count, int n_min, int n_max,
                          std::uint64_t seed) {
  if (n_min < 2 || n_max < n_min) {
    throw Error(ErrorCode::InvalidArgument,
                "random graph sizes need 2 <= n_min <= n_max");
  }
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    const int n =
        n_min + static_cast<int>(rng.below(
                    static_cast<std::uint32_t>(n_max - n_min + 1)));
    const double p = 0.2 + 0.6 * rng.unit();
    c.push_back(gen_random_connected(n, p, rng.next()));
  }
}

void add_random_constrained(Corpus& c, int count, int n_min, int n_max,
                            ConstraintKind constraint, std::uint64_t seed) {
  if (n_min < 2 || n_max < n_min) {
    throw Error(ErrorCode::InvalidArgument,
                "random graph sizes need 2 <= n_min <= n_max");
  }
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    const int n =
        n_min + static_cast<int>(rng.below(
                    static_cast<std::uint32_t>(n_max - n_min + 1)));
    const int target =
        n - 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(n)));
    c.push_back(gen_random_constrained(n, target, constraint, rng.next()));
  }
}

namespace {

int json_int(const nlohmann::json& item, const char* key) {
  if (!item.contains(key) || !item[key].is_number_integer()) {
    throw Error(ErrorCode::ParseError,
                std::string("corpus item needs integer field \"") + key +
                    "\"");
  }
  return item[key].get<int>();
}

std::uint64_t json_seed(const nlohmann::json& item) {
  if (!item.contains("seed") || !item["seed"].is_number_unsigned()) {
    throw Error(ErrorCode::ParseError,
                "corpus item needs unsigned integer field \"seed\"");
  }
  return item["seed"].get<std::uint64_t>();
}

}  // namespace

Corpus build_corpus_from_json(const std::string& spec_json) {
  nlohmann::json doc = nlohmann::json::parse(spec_json, nullptr,
                                             /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("items") ||
      !doc["items"].is_array()) {
    throw Error(ErrorCode::ParseError,
                "corpus spec must be a JSON object with an \"items\" array");
  }

  Corpus corpus;
  for (const nlohmann::json& item : doc["items"]) {
    if (!item.is_object() || !item.contains("family") ||
        !item["family"].is_string()) {
      throw Error(ErrorCode::ParseError,
                  "every corpus item needs a string \"family\" field");
    }
    const std::string family = item["family"].get<std::string>();

    if (family == "paths") {
      add_paths(corpus, json_int(item, "min"), json_int(item, "max"));
    } else if (family == "stars") {
      add_stars(corpus, json_int(item, "min"), json_int(item, "max"));
    } else if (family == "double_stars") {
      add_double_stars(corpus, json_int(item, "max"));
    } else if (family == "spiders") {
      add_spiders(corpus, json_int(item, "n_cap"));
    } else if (family == "prufer") {
      add_random_trees(corpus, json_int(item, "count"),
                       json_int(item, "n_min"), json_int(item, "n_max"),
                       json_seed(item));
    } else if (family == "gnp") {
      add_random_connected(corpus, json_int(item, "count"),
                           json_int(item, "n_min"), json_int(item, "n_max"),
                           json_seed(item));
    } else if (family == "c4c6_free") {
      add_random_constrained(corpus, json_int(item, "count"),
                             json_int(item, "n_min"), json_int(item, "n_max"),
                             ConstraintKind::C4C6Free, json_seed(item));
    } else if (family == "girth5") {
      add_random_constrained(corpus, json_int(item, "count"),
                             json_int(item, "n_min"), json_int(item, "n_max"),
                             ConstraintKind::Girth5, json_seed(item));
    } else if (family == "path") {
      corpus.push_back(gen_path(json_int(item, "n")));
    } else if (family == "star") {
      corpus.push_back(gen_star(json_int(item, "k")));
    } else if (family == "comb") {
      corpus.push_back(gen_comb(json_int(item, "t")));
    } else if (family == "gs") {
      corpus.push_back(gen_gs(json_int(item, "s")));
    } else if (family == "spider") {
      corpus.push_back(
          gen_spider(json_int(item, "legs"), json_int(item, "leg_len")));
    } else if (family == "double_star") {
      corpus.push_back(
          gen_double_star(json_int(item, "a"), json_int(item, "b")));
    } else if (family == "file") {
      if (!item.contains("path") || !item["path"].is_string()) {
        throw Error(ErrorCode::ParseError,
                    "file corpus item needs a string \"path\" field");
      }
      const std::string path = item["path"].get<std::string>();
      std::map<std::string, int> labels;
      if (item.contains("labels") && item["labels"].is_string()) {
        labels = read_labels_file(item["labels"].get<std::string>());
      }
      std::string id = item.contains("id") && item["id"].is_string()
                           ? item["id"].get<std::string>()
                           : path;
      corpus.push_back(LabeledGraph{read_edge_list_file(path),
                                    std::move(labels), std::move(id)});
    } else {
      throw Error(ErrorCode::InvalidArgument,
                  "unknown corpus family \"" + family + "\"");
    }
  }
  return corpus;
}

CorpusRunResult run_corpus(const Corpus& corpus, const SolveOptions& options,
                           int jobs) {
  CorpusRunResult result;
  result.reports.resize(corpus.size());

  auto process = [&](std::size_t i) {
    try {
      result.reports[i] = analyze_graph(corpus[i], options);
    } catch (const Error& e) {
      GraphReport r;
      r.graph_id = corpus[i].id;
      r.n = corpus[i].graph.order();
      r.m = corpus[i].graph.edge_count();
      r.labels = corpus[i].labels;
      r.status = std::string("error: ") + e.what();
      result.reports[i] = std::move(r);
    }
  };

  if (jobs <= 1 || corpus.size() <= 1) {
    for (std::size_t i = 0; i < corpus.size(); ++i) process(i);
  } else {
    const int workers =
        std::min<int>(jobs, static_cast<int>(corpus.size()));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&]() {
        for (std::size_t i = next.fetch_add(1); i < corpus.size();
             i = next.fetch_add(1)) {
          process(i);
        }
      });
    }
    for (std::thread& t : pool) t.join();
  }

  for (const GraphReport& r : result.reports) {
    if (r.status.rfind("timeout", 0) == 0) ++result.timeouts;
    if (r.fatal_violation() || r.status.rfind("error", 0) == 0) {
      ++result.fatal_violations;
    }
    if (r.conjecture_violation()) ++result.conjecture_violations;
  }
  return result;
}

std::string reports_to_jsonl(const std::vector<GraphReport>& reports) {
  std::string out;
  for (const GraphReport& r : reports) {
    out += report_to_json(r);
    out += '\n';
  }
  return out;
}

namespace {

bool goal_satisfied(const SearchGoal& goal, const GraphInvariants& inv) {
  switch (goal.kind) {
    case GoalKind::PsiEqualsTwiceGammaM:
      return inv.psi.value == 2 * inv.gamma_m.value;
    case GoalKind::PsiEqualsGammaMPlusGamma:
      return inv.psi.value == inv.gamma_m.value + inv.gamma.value;
    case GoalKind::RatioGammaLOverGammaM:
      return inv.gamma_l.value >=
             goal.threshold * static_cast<double>(inv.gamma_m.value);
  }
  return false;
}

SearchHit make_hit(const Graph& g, const GraphInvariants& inv) {
  SearchHit hit;
  hit.n = g.order();
  hit.edges = g.edges();
  hit.gamma = inv.gamma.value;
  hit.dim = inv.dim.value;
  hit.gamma_m = inv.gamma_m.value;
  hit.gamma_l = inv.gamma_l.value;
  hit.psi = inv.psi.value;
  return hit;
}

// Cheap isomorph filter: sorted degree sequence plus sorted distance
// multiset. Distinct graphs may collide; colliding graphs are skipped, which
// only thins the stream.
using IsoKey = std::pair<std::vector<int>, std::vector<int>>;

IsoKey iso_key(const Graph& g, const DistanceMatrix& d) {
  std::vector<int> degrees;
  degrees.reserve(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) degrees.push_back(g.degree(v));
  std::sort(degrees.begin(), degrees.end());

  std::vector<int> dists;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) dists.push_back(d.at(u, v));
  }
  std::sort(dists.begin(), dists.end());
  return {std::move(degrees), std::move(dists)};
}

struct StopEnumeration {};

}  // namespace

SearchResult witness_search(const SearchGoal& goal, int n_max,
                            long budget_graphs, std::uint64_t seed,
                            const SolveOptions& options) {
  if (n_max < 2 || n_max > 10) {
    throw Error(ErrorCode::OutOfRange,
                "witness_search supports 2 <= n_max <= 10");
  }

  const Clock::time_point start = Clock::now();
  SearchResult result;
  result.goal = goal;

  auto consider = [&](const Graph& g) -> bool {
    ++result.graphs_examined;
    const GraphInvariants inv = solve_all(g, options);
    if (goal_satisfied(goal, inv)) {
      result.hit = make_hit(g, inv);
      return true;
    }
    return false;
  };
  auto budget_left = [&]() { return result.graphs_examined < budget_graphs; };

  Rng rng(seed);
  auto random_graph = [&]() -> std::optional<Graph> {
    const int n =
        2 + static_cast<int>(rng.below(static_cast<std::uint32_t>(n_max - 1)));
    const double p = 0.25 + 0.5 * rng.unit();
    try {
      return gen_random_connected(n, p, rng.next()).graph;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::GiveUp) return std::nullopt;
      throw;
    }
  };

  // Seeded-random graphs first, so a small budget samples the whole size
  // range instead of the enumeration prefix.
  constexpr int kRandomFirst = 100;
  for (int i = 0; i < kRandomFirst && budget_left() && !result.hit; ++i) {
    const std::optional<Graph> g = random_graph();
    if (g.has_value() && consider(*g)) break;
  }

  // Exhaustive sweep over small orders, thinned by the isomorph filter.
  if (!result.hit && budget_left()) {
    std::set<IsoKey> seen;
    try {
      for (int n = 2; n <= std::min(n_max, 7); ++n) {
        for_each_connected_graph(n, [&](const Graph& g) {
          if (!budget_left()) throw StopEnumeration{};
          const DistanceMatrix d(g);
          if (!seen.insert(iso_key(g, d)).second) return;
          if (consider(g)) throw StopEnumeration{};
        });
      }
    } catch (const StopEnumeration&) {
    }
  }

  // Spend whatever budget remains on more random graphs (the only source of
  // orders above 7).
  while (!result.hit && budget_left()) {
    const std::optional<Graph> g = random_graph();
    if (g.has_value()) consider(*g);
  }

  result.elapsed_seconds = seconds_since(start);
  return result;
}

void for_each_connected_graph(int n,
                              const std::function<void(const Graph&)>& visit) {
  if (n < 2 || n > 7) {
    throw Error(ErrorCode::OutOfRange,
                "exhaustive enumeration supports 2 <= n <= 7");
  }

  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  const int p = static_cast<int>(pairs.size());

  std::vector<int> parent(static_cast<std::size_t>(n));
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };

  std::vector<std::pair<int, int>> edges;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << p); ++mask) {
    edges.clear();
    for (int b = 0; b < p; ++b) {
      if (mask & (std::uint32_t{1} << b)) {
        edges.push_back(pairs[static_cast<std::size_t>(b)]);
      }
    }
    if (static_cast<int>(edges.size()) < n - 1) continue;

    for (int v = 0; v < n; ++v) parent[static_cast<std::size_t>(v)] = v;
    int components = n;
    for (const auto& [u, v] : edges) {
      const int ru = find(u);
      const int rv = find(v);
      if (ru != rv) {
        parent[static_cast<std::size_t>(ru)] = rv;
        --components;
      }
    }
    if (components != 1) continue;

    visit(Graph::build(n, edges));
  }
}

}  // namespace mld
