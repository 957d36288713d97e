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

#include "mld.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mld/error.hpp"
#include "mld/families.hpp"
#include "mld/graph.hpp"
#include "mld/harness.hpp"
#include "mld/io.hpp"
#include "mld/predicates.hpp"
#include "mld/solver.hpp"
#include "mld/transforms.hpp"
#include "mld/tree.hpp"
#include "mld/vertex_set.hpp"

struct mld_graph {
  mld::Graph graph;
};

namespace {

thread_local std::string g_last_error;

mld_status map_code(mld::ErrorCode code) {
  switch (code) {
    case mld::ErrorCode::TooSmall: return MLD_ERR_TOO_SMALL;
    case mld::ErrorCode::VertexOutOfRange: return MLD_ERR_VERTEX_OUT_OF_RANGE;
    case mld::ErrorCode::LoopEdge: return MLD_ERR_LOOP_EDGE;
    case mld::ErrorCode::Disconnected: return MLD_ERR_DISCONNECTED;
    case mld::ErrorCode::EmptySet: return MLD_ERR_EMPTY_SET;
    case mld::ErrorCode::DegeneratePair: return MLD_ERR_DEGENERATE_PAIR;
    case mld::ErrorCode::NotATree: return MLD_ERR_NOT_A_TREE;
    case mld::ErrorCode::IsAPath: return MLD_ERR_IS_A_PATH;
    case mld::ErrorCode::IsP2: return MLD_ERR_IS_P2;
    case mld::ErrorCode::NotMld: return MLD_ERR_NOT_MLD;
    case mld::ErrorCode::PreconditionC4C6: return MLD_ERR_PRECONDITION_C4C6;
    case mld::ErrorCode::PreconditionGirth: return MLD_ERR_PRECONDITION_GIRTH;
    case mld::ErrorCode::TwoPendants: return MLD_ERR_TWO_PENDANTS;
    case mld::ErrorCode::AmbiguousPath: return MLD_ERR_AMBIGUOUS_PATH;
    case mld::ErrorCode::Timeout: return MLD_ERR_TIMEOUT;
    case mld::ErrorCode::OutOfRange: return MLD_ERR_OUT_OF_RANGE;
    case mld::ErrorCode::GiveUp: return MLD_ERR_GIVE_UP;
    case mld::ErrorCode::ParseError: return MLD_ERR_PARSE;
    case mld::ErrorCode::IoError: return MLD_ERR_IO;
    case mld::ErrorCode::InvalidArgument: return MLD_ERR_INVALID_ARGUMENT;
    case mld::ErrorCode::Internal: return MLD_ERR_INTERNAL;
  }
  return MLD_ERR_INTERNAL;
}

// Runs `body`, routing library errors into the status/last-error contract.
template <typename Fn>
mld_status guarded(Fn&& body) {
  try {
    body();
    g_last_error.clear();
    return MLD_OK;
  } catch (const mld::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MLD_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return MLD_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

void require(bool condition, const char* message) {
  if (!condition) {
    throw mld::Error(mld::ErrorCode::InvalidArgument, message);
  }
}

mld::SolveOptions options_for(double budget_seconds) {
  mld::SolveOptions options;
  if (budget_seconds > 0.0) options.budget_seconds = budget_seconds;
  return options;
}

nlohmann::json members_json(const mld::VertexSet& s) {
  return nlohmann::json(s.members());
}

nlohmann::json invariant_result_json(const mld::InvariantResult& res) {
  return nlohmann::json{{"value", res.value},
                        {"witness", members_json(res.witness)},
                        {"seconds", res.elapsed_seconds}};
}

nlohmann::json characterization_json(const mld::CharacterizationVerdict& v) {
  return nlohmann::json{{"flags", v.flags}, {"all_equal", v.all_equal}};
}

nlohmann::json outcome_json(const char* name,
                            const mld::TransformOutcome& outcome) {
  return nlohmann::json{{"transform", name},
                        {"input_set", members_json(outcome.input_set)},
                        {"output_set", members_json(outcome.output_set)},
                        {"certified", outcome.certified},
                        {"size_limit", outcome.size_limit},
                        {"size_bound_ok", outcome.size_bound_ok}};
}

mld::VertexSet set_from_array(const mld::Graph& g, const int* set,
                              int set_len) {
  require(set != nullptr || set_len == 0, "set pointer is null");
  mld::VertexSet out(g.order());
  for (int i = 0; i < set_len; ++i) out.insert(set[i]);
  return out;
}

nlohmann::json parse_json_object(const char* text, const char* what) {
  require(text != nullptr, "JSON text pointer is null");
  nlohmann::json doc =
      nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw mld::Error(mld::ErrorCode::ParseError,
                     std::string(what) + " must be a JSON object");
  }
  return doc;
}

int field_int(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer()) {
    throw mld::Error(mld::ErrorCode::ParseError,
                     std::string("missing integer field \"") + key + "\"");
  }
  return doc[key].get<int>();
}

double field_double(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number()) {
    throw mld::Error(mld::ErrorCode::ParseError,
                     std::string("missing numeric field \"") + key + "\"");
  }
  return doc[key].get<double>();
}

std::uint64_t field_seed(const nlohmann::json& doc) {
  if (!doc.contains("seed") || !doc["seed"].is_number_unsigned()) {
    throw mld::Error(mld::ErrorCode::ParseError,
                     "missing unsigned integer field \"seed\"");
  }
  return doc["seed"].get<std::uint64_t>();
}

std::string field_string(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_string()) {
    throw mld::Error(mld::ErrorCode::ParseError,
                     std::string("missing string field \"") + key + "\"");
  }
  return doc[key].get<std::string>();
}

}  // namespace

extern "C" {

const char* mld_status_name(mld_status status) {
  switch (status) {
    case MLD_OK: return "ok";
    case MLD_ERR_TOO_SMALL: return "too_small";
    case MLD_ERR_VERTEX_OUT_OF_RANGE: return "vertex_out_of_range";
    case MLD_ERR_LOOP_EDGE: return "loop_edge";
    case MLD_ERR_DISCONNECTED: return "disconnected";
    case MLD_ERR_EMPTY_SET: return "empty_set";
    case MLD_ERR_DEGENERATE_PAIR: return "degenerate_pair";
    case MLD_ERR_NOT_A_TREE: return "not_a_tree";
    case MLD_ERR_IS_A_PATH: return "is_a_path";
    case MLD_ERR_IS_P2: return "is_p2";
    case MLD_ERR_NOT_MLD: return "not_mld";
    case MLD_ERR_PRECONDITION_C4C6: return "precondition_c4c6";
    case MLD_ERR_PRECONDITION_GIRTH: return "precondition_girth";
    case MLD_ERR_TWO_PENDANTS: return "two_pendants";
    case MLD_ERR_AMBIGUOUS_PATH: return "ambiguous_path";
    case MLD_ERR_TIMEOUT: return "timeout";
    case MLD_ERR_OUT_OF_RANGE: return "out_of_range";
    case MLD_ERR_GIVE_UP: return "give_up";
    case MLD_ERR_PARSE: return "parse_error";
    case MLD_ERR_IO: return "io_error";
    case MLD_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case MLD_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* mld_last_error(void) { return g_last_error.c_str(); }

void mld_string_free(char* s) { std::free(s); }

mld_status mld_graph_parse(const char* text, mld_graph** out) {
  return guarded([&]() {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new mld_graph{mld::parse_edge_list(text)};
  });
}

mld_status mld_graph_load(const char* path, mld_graph** out) {
  return guarded([&]() {
    require(path != nullptr && out != nullptr, "null argument");
    *out = new mld_graph{mld::read_edge_list_file(path)};
  });
}

mld_status mld_graph_build(int n, const int* edges_uv, int m,
                           mld_graph** out) {
  return guarded([&]() {
    require(out != nullptr, "null output argument");
    require(edges_uv != nullptr || m == 0, "null edge array");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m > 0 ? m : 0));
    for (int i = 0; i < m; ++i) {
      edges.emplace_back(edges_uv[2 * i], edges_uv[2 * i + 1]);
    }
    *out = new mld_graph{mld::Graph::build(n, edges)};
  });
}

void mld_graph_free(mld_graph* g) { delete g; }

int mld_graph_order(const mld_graph* g) {
  return g == nullptr ? 0 : g->graph.order();
}

int mld_graph_edge_count(const mld_graph* g) {
  return g == nullptr ? 0 : g->graph.edge_count();
}

int mld_graph_girth(const mld_graph* g) {
  if (g == nullptr) return 0;
  const mld::Girth girth = mld::girth(g->graph);
  return girth.length.value_or(0);
}

int mld_graph_is_tree(const mld_graph* g) {
  return g != nullptr && mld::is_tree(g->graph) ? 1 : 0;
}

int mld_graph_has_c4_or_c6(const mld_graph* g) {
  return g != nullptr && mld::has_c4_or_c6_subgraph(g->graph) ? 1 : 0;
}

mld_status mld_graph_format(const mld_graph* g, char** out_text) {
  return guarded([&]() {
    require(g != nullptr && out_text != nullptr, "null argument");
    *out_text = copy_string(mld::format_edge_list(g->graph));
  });
}

mld_status mld_solve(const mld_graph* g, const char* invariant,
                     double budget_seconds, int* value_out, int* witness_out,
                     int* witness_len_out) {
  return guarded([&]() {
    require(g != nullptr && invariant != nullptr, "null argument");
    const mld::Invariant which = mld::invariant_from_name(invariant);
    const mld::InvariantResult res =
        mld::solve(g->graph, which, options_for(budget_seconds));
    if (value_out != nullptr) *value_out = res.value;
    const std::vector<int> members = res.witness.members();
    if (witness_out != nullptr) {
      for (std::size_t i = 0; i < members.size(); ++i) {
        witness_out[i] = members[i];
      }
    }
    if (witness_len_out != nullptr) {
      *witness_len_out = static_cast<int>(members.size());
    }
  });
}

mld_status mld_compute_json(const mld_graph* g, double budget_seconds,
                            char** json_out) {
  return guarded([&]() {
    require(g != nullptr && json_out != nullptr, "null argument");
    const mld::LabeledGraph lg{g->graph, {}, "graph"};
    const mld::GraphReport report =
        mld::analyze_graph(lg, options_for(budget_seconds));
    *json_out = copy_string(mld::report_to_json(report));
  });
}

mld_status mld_tree_json(const mld_graph* g, int with_solver_check,
                         double budget_seconds, char** json_out) {
  return guarded([&]() {
    require(g != nullptr && json_out != nullptr, "null argument");
    const mld::Graph& graph = g->graph;
    const mld::TreeProfile profile = mld::tree_profile(graph);

    nlohmann::json j;
    j["n"] = graph.order();
    j["m"] = graph.edge_count();
    j["is_path"] = profile.is_path;
    j["leaves"] = members_json(profile.leaves);
    j["supports"] = members_json(profile.supports);
    j["strong_supports"] = members_json(profile.strong_supports);
    j["ell"] = profile.ell;
    j["ell_prime"] = profile.ell_prime;
    j["majors"] = members_json(profile.majors);
    j["exterior_majors"] = members_json(profile.exterior_majors);
    nlohmann::json terminals = nlohmann::json::object();
    for (const auto& [major, list] : profile.terminal_map) {
      terminals[std::to_string(major)] = list;
    }
    j["terminal_map"] = terminals;

    j["gamma_formula"] = mld::gamma_tree(graph);
    j["gammaM_formula"] = mld::gamma_m_tree(graph);
    const mld::DimTreeResult dim = mld::dim_tree(graph);
    j["dim_formula"] = nlohmann::json{{"value", dim.value},
                                      {"witness", members_json(dim.witness)}};

    if (profile.is_path) {
      j["dim_plus_gamma_characterization"] = nullptr;
    } else {
      j["dim_plus_gamma_characterization"] =
          characterization_json(mld::characterize_dim_plus_gamma(graph));
    }
    if (graph.order() == 2) {
      j["leaf_count_characterization"] = nullptr;
    } else {
      j["leaf_count_characterization"] =
          characterization_json(mld::characterize_leaf_count(graph));
    }

    if (with_solver_check != 0) {
      const mld::SolveOptions options = options_for(budget_seconds);
      const mld::InvariantResult gamma =
          mld::solve(graph, mld::Invariant::Gamma, options);
      const mld::InvariantResult gamma_m =
          mld::solve(graph, mld::Invariant::GammaM, options);
      const mld::InvariantResult dim_solved =
          mld::solve(graph, mld::Invariant::Dim, options);
      const bool agree = gamma.value == j["gamma_formula"].get<int>() &&
                         gamma_m.value == j["gammaM_formula"].get<int>() &&
                         dim_solved.value == dim.value;
      j["solver_check"] =
          nlohmann::json{{"gamma", invariant_result_json(gamma)},
                         {"gammaM", invariant_result_json(gamma_m)},
                         {"dim", invariant_result_json(dim_solved)},
                         {"agree", agree}};
    } else {
      j["solver_check"] = nullptr;
    }

    *json_out = copy_string(j.dump());
  });
}

mld_status mld_transform_json(const mld_graph* g, const char* which,
                              const int* set, int set_len,
                              double budget_seconds, char** json_out) {
  return guarded([&]() {
    require(g != nullptr && which != nullptr && json_out != nullptr,
            "null argument");
    const mld::Graph& graph = g->graph;
    const std::string name = which;
    const mld::SolveOptions options = options_for(budget_seconds);

    nlohmann::json j;
    if (name == "union") {
      const mld::UnionRepairResult res = mld::union_repair(graph, options);
      j = outcome_json("union", res.outcome);
      j["mld"] = invariant_result_json(res.mld);
      j["dominating"] = invariant_result_json(res.dominating);
      j["repairs"] = members_json(res.repairs);
    } else if (name == "pi" || name == "bars") {
      mld::VertexSet input =
          set_len < 0
              ? mld::solve(graph, mld::Invariant::GammaM, options).witness
              : set_from_array(graph, set, set_len);
      const mld::TransformOutcome outcome = name == "pi"
                                                ? mld::ld_closure(graph, input)
                                                : mld::pendant_swap(graph, input);
      j = outcome_json(name.c_str(), outcome);
      j["solved_input"] = set_len < 0;
    } else {
      throw mld::Error(mld::ErrorCode::InvalidArgument,
                       "transform must be \"pi\", \"bars\" or \"union\"");
    }
    *json_out = copy_string(j.dump());
  });
}

mld_status mld_generate_json(const char* spec_json, char** json_out) {
  return guarded([&]() {
    require(json_out != nullptr, "null output argument");
    const nlohmann::json spec = parse_json_object(spec_json, "generator spec");
    const std::string family = field_string(spec, "family");

    const mld::LabeledGraph lg = [&]() -> mld::LabeledGraph {
      if (family == "gs") return mld::gen_gs(field_int(spec, "s"));
      if (family == "comb") return mld::gen_comb(field_int(spec, "t"));
      if (family == "path") return mld::gen_path(field_int(spec, "n"));
      if (family == "star") return mld::gen_star(field_int(spec, "k"));
      if (family == "spider") {
        return mld::gen_spider(field_int(spec, "legs"),
                               field_int(spec, "leg_len"));
      }
      if (family == "double_star") {
        return mld::gen_double_star(field_int(spec, "a"),
                                    field_int(spec, "b"));
      }
      if (family == "prufer") {
        return mld::gen_random_tree(field_int(spec, "n"), field_seed(spec));
      }
      if (family == "gnp") {
        return mld::gen_random_connected(field_int(spec, "n"),
                                         field_double(spec, "edge_prob"),
                                         field_seed(spec));
      }
      if (family == "constrained") {
        const std::string constraint = field_string(spec, "constraint");
        mld::ConstraintKind kind;
        if (constraint == "c4c6_free") {
          kind = mld::ConstraintKind::C4C6Free;
        } else if (constraint == "girth5") {
          kind = mld::ConstraintKind::Girth5;
        } else {
          throw mld::Error(mld::ErrorCode::InvalidArgument,
                           "constraint must be \"c4c6_free\" or \"girth5\"");
        }
        return mld::gen_random_constrained(field_int(spec, "n"),
                                           field_int(spec, "edges"), kind,
                                           field_seed(spec));
      }
      throw mld::Error(mld::ErrorCode::InvalidArgument,
                       "unknown generator family \"" + family + "\"");
    }();

    nlohmann::json j;
    j["id"] = lg.id;
    j["n"] = lg.graph.order();
    j["m"] = lg.graph.edge_count();
    j["edge_list"] = mld::format_edge_list(lg.graph);
    j["labels"] = lg.labels;
    *json_out = copy_string(j.dump());
  });
}

mld_status mld_verify_json(const char* spec_json, double budget_seconds,
                           int jobs, char** jsonl_out, int* fatal_out,
                           int* conjecture_out, int* timeout_out) {
  return guarded([&]() {
    require(spec_json != nullptr && jsonl_out != nullptr, "null argument");
    const mld::Corpus corpus = mld::build_corpus_from_json(spec_json);
    const mld::CorpusRunResult run =
        mld::run_corpus(corpus, options_for(budget_seconds), jobs);
    *jsonl_out = copy_string(mld::reports_to_jsonl(run.reports));
    if (fatal_out != nullptr) *fatal_out = run.fatal_violations;
    if (conjecture_out != nullptr) *conjecture_out = run.conjecture_violations;
    if (timeout_out != nullptr) *timeout_out = run.timeouts;
  });
}

mld_status mld_search_json(const char* goal_json, char** json_out) {
  return guarded([&]() {
    require(json_out != nullptr, "null output argument");
    const nlohmann::json spec = parse_json_object(goal_json, "search goal");
    const std::string goal_name = field_string(spec, "goal");

    mld::SearchGoal goal;
    if (goal_name == "psi-eq-2gm") {
      goal.kind = mld::GoalKind::PsiEqualsTwiceGammaM;
    } else if (goal_name == "psi-eq-gm-plus-g") {
      goal.kind = mld::GoalKind::PsiEqualsGammaMPlusGamma;
    } else if (goal_name == "ratio-gl-gm") {
      goal.kind = mld::GoalKind::RatioGammaLOverGammaM;
      goal.threshold = field_double(spec, "threshold");
    } else {
      throw mld::Error(mld::ErrorCode::InvalidArgument,
                       "goal must be \"psi-eq-2gm\", \"psi-eq-gm-plus-g\" or "
                       "\"ratio-gl-gm\"");
    }

    const int n_max = field_int(spec, "n_max");
    const std::uint64_t seed = field_seed(spec);
    const long budget_graphs = field_int(spec, "budget_graphs");
    mld::SolveOptions options;
    if (spec.contains("budget_seconds") &&
        spec["budget_seconds"].is_number()) {
      options.budget_seconds = spec["budget_seconds"].get<double>();
    }

    const mld::SearchResult result =
        mld::witness_search(goal, n_max, budget_graphs, seed, options);

    nlohmann::json j;
    j["goal"] = goal_name;
    if (goal.kind == mld::GoalKind::RatioGammaLOverGammaM) {
      j["threshold"] = goal.threshold;
    }
    j["n_max"] = n_max;
    j["seed"] = seed;
    j["budget_graphs"] = budget_graphs;
    j["graphs_examined"] = result.graphs_examined;
    j["elapsed_seconds"] = result.elapsed_seconds;
    if (result.hit.has_value()) {
      nlohmann::json edges = nlohmann::json::array();
      for (const auto& [u, v] : result.hit->edges) {
        edges.push_back(nlohmann::json::array({u, v}));
      }
      j["hit"] = nlohmann::json{{"n", result.hit->n},
                                {"edges", edges},
                                {"gamma", result.hit->gamma},
                                {"dim", result.hit->dim},
                                {"gammaM", result.hit->gamma_m},
                                {"gammaL", result.hit->gamma_l},
                                {"psi", result.hit->psi}};
    } else {
      j["hit"] = nullptr;
    }
    *json_out = copy_string(j.dump());
  });
}

}  // extern "C"
