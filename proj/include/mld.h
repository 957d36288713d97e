/* Copyright 2026 The mld Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the mld library: exact metric-location-domination
 * invariants of small connected graphs.
 *
 * Conventions:
 *   - Every fallible call returns an mld_status; MLD_OK is 0.
 *   - On failure, mld_last_error() returns a thread-local message with
 *     detail (line numbers for parse errors, and so on).
 *   - Strings returned through char** out-parameters are heap-allocated;
 *     release them with mld_string_free().
 *   - Graph handles are opaque; release them with mld_graph_free().
 *   - Structured results (reports, profiles, transforms, searches) are
 *     returned as JSON text; the schema is documented in the README.
 */

#ifndef MLD_H_
#define MLD_H_

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mld_graph mld_graph;

typedef enum mld_status {
  MLD_OK = 0,
  MLD_ERR_TOO_SMALL,
  MLD_ERR_VERTEX_OUT_OF_RANGE,
  MLD_ERR_LOOP_EDGE,
  MLD_ERR_DISCONNECTED,
  MLD_ERR_EMPTY_SET,
  MLD_ERR_DEGENERATE_PAIR,
  MLD_ERR_NOT_A_TREE,
  MLD_ERR_IS_A_PATH,
  MLD_ERR_IS_P2,
  MLD_ERR_NOT_MLD,
  MLD_ERR_PRECONDITION_C4C6,
  MLD_ERR_PRECONDITION_GIRTH,
  MLD_ERR_TWO_PENDANTS,
  MLD_ERR_AMBIGUOUS_PATH,
  MLD_ERR_TIMEOUT,
  MLD_ERR_OUT_OF_RANGE,
  MLD_ERR_GIVE_UP,
  MLD_ERR_PARSE,
  MLD_ERR_IO,
  MLD_ERR_INVALID_ARGUMENT,
  MLD_ERR_INTERNAL
} mld_status;

/* Stable name for a status code, e.g. "timeout". Never NULL. */
const char* mld_status_name(mld_status status);

/* Thread-local message describing the most recent failure in this thread.
 * Empty string when the last call succeeded. */
const char* mld_last_error(void);

void mld_string_free(char* s);

/* ---- graph construction -------------------------------------------- */

/* Text in edge-list format: "n m" header then m lines "u v"; '#' comments. */
mld_status mld_graph_parse(const char* text, mld_graph** out);
mld_status mld_graph_load(const char* path, mld_graph** out);
/* edges_uv holds m pairs: u0 v0 u1 v1 ... */
mld_status mld_graph_build(int n, const int* edges_uv, int m, mld_graph** out);
void mld_graph_free(mld_graph* g);

int mld_graph_order(const mld_graph* g);
int mld_graph_edge_count(const mld_graph* g);
/* Girth; 0 means acyclic. */
int mld_graph_girth(const mld_graph* g);
int mld_graph_is_tree(const mld_graph* g);
int mld_graph_has_c4_or_c6(const mld_graph* g);
mld_status mld_graph_format(const mld_graph* g, char** out_text);

/* ---- solving -------------------------------------------------------- */

/* invariant: "gamma", "dim", "gammaM", "gammaL" or "psi".
 * witness_out must hold at least mld_graph_order(g) ints. A zero or negative
 * budget means the default (60 s per invariant). */
mld_status mld_solve(const mld_graph* g, const char* invariant,
                     double budget_seconds, int* value_out, int* witness_out,
                     int* witness_len_out);

/* All five invariants, inequality chains, and diagnostic suites as one JSON
 * report object. */
mld_status mld_compute_json(const mld_graph* g, double budget_seconds,
                            char** json_out);

/* Tree profile, closed-form values, characterizations; optional solver
 * cross-check. */
mld_status mld_tree_json(const mld_graph* g, int with_solver_check,
                         double budget_seconds, char** json_out);

/* which: "pi" (locating-dominating closure), "bars" (pendant swap) or
 * "union" (union repair). set/set_len selects the input set; pass set_len < 0
 * to use the solved minimum MLD-set ("union" always solves internally). */
mld_status mld_transform_json(const mld_graph* g, const char* which,
                              const int* set, int set_len,
                              double budget_seconds, char** json_out);

/* ---- generation ----------------------------------------------------- */

/* spec examples:
 *   {"family":"gs","s":1}            {"family":"comb","t":3}
 *   {"family":"path","n":6}          {"family":"star","k":4}
 *   {"family":"spider","legs":3,"leg_len":2}
 *   {"family":"double_star","a":2,"b":2}
 *   {"family":"prufer","n":10,"seed":4}
 *   {"family":"gnp","n":8,"edge_prob":0.3,"seed":5}
 *   {"family":"constrained","n":10,"edges":12,"constraint":"girth5","seed":3}
 * Returns {"id":..., "n":..., "m":..., "edge_list":..., "labels":{...}}. */
mld_status mld_generate_json(const char* spec_json, char** json_out);

/* ---- verification ---------------------------------------------------- */

/* Runs the corpus described by spec_json (see README) and returns one JSON
 * report per line. fatal_out/conjecture_out/timeout_out may be NULL. */
mld_status mld_verify_json(const char* spec_json, double budget_seconds,
                           int jobs, char** jsonl_out, int* fatal_out,
                           int* conjecture_out, int* timeout_out);

/* goal structure: {"goal":"psi-eq-2gm"|"psi-eq-gm-plus-g"|"ratio-gl-gm",
 *   "threshold":1.5, "n_max":6, "seed":2, "budget_graphs":2000}. */
mld_status mld_search_json(const char* goal_json, char** json_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MLD_H_ */
