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

#include <cstring>
#include <string>
#include <vector>

#include "mld.h"

namespace {

using nlohmann::json;

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out = s;
  mld_string_free(s);
  return out;
}

struct Handle {
  mld_graph* g = nullptr;
  ~Handle() { mld_graph_free(g); }
};

Handle parse(const std::string& text) {
  Handle h;
  REQUIRE(mld_graph_parse(text.c_str(), &h.g) == MLD_OK);
  return h;
}

constexpr const char* kP6 = "6 5\n0 1\n1 2\n2 3\n3 4\n4 5\n";

}  // namespace

TEST_CASE("graph lifecycle and accessors") {
  Handle h = parse(kP6);
  CHECK(mld_graph_order(h.g) == 6);
  CHECK(mld_graph_edge_count(h.g) == 5);
  CHECK(mld_graph_girth(h.g) == 0);  // acyclic sentinel
  CHECK(mld_graph_is_tree(h.g) == 1);
  CHECK(mld_graph_has_c4_or_c6(h.g) == 0);

  char* formatted = nullptr;
  REQUIRE(mld_graph_format(h.g, &formatted) == MLD_OK);
  Handle again = parse(take(formatted));
  CHECK(mld_graph_order(again.g) == 6);

  const int edges[] = {0, 1, 1, 2, 2, 0};
  Handle built;
  REQUIRE(mld_graph_build(3, edges, 3, &built.g) == MLD_OK);
  CHECK(mld_graph_girth(built.g) == 3);
}

TEST_CASE("status codes and last-error text") {
  mld_graph* g = nullptr;
  CHECK(mld_graph_parse("4 2\n0 1\n2 3\n", &g) == MLD_ERR_DISCONNECTED);
  CHECK(g == nullptr);
  CHECK(std::strlen(mld_last_error()) > 0);

  CHECK(mld_graph_parse("not a graph", &g) == MLD_ERR_PARSE);
  CHECK(mld_graph_parse("2 1\n1 1\n", &g) == MLD_ERR_LOOP_EDGE);
  CHECK(mld_graph_parse("2 1\n0 9\n", &g) == MLD_ERR_VERTEX_OUT_OF_RANGE);
  CHECK(mld_graph_load("/definitely/missing.el", &g) == MLD_ERR_IO);
  CHECK(mld_graph_parse(nullptr, &g) == MLD_ERR_INVALID_ARGUMENT);

  CHECK(std::strcmp(mld_status_name(MLD_OK), "ok") == 0);
  CHECK(std::strlen(mld_status_name(MLD_ERR_TIMEOUT)) > 0);
}

TEST_CASE("solving an invariant returns value plus witness") {
  Handle h = parse(kP6);
  int value = -1;
  int witness[6];
  int len = -1;
  REQUIRE(mld_solve(h.g, "gamma", 0.0, &value, witness, &len) == MLD_OK);
  CHECK(value == 2);
  REQUIRE(len == 2);
  CHECK(witness[0] == 1);
  CHECK(witness[1] == 4);

  CHECK(mld_solve(h.g, "psi", 0.0, &value, witness, &len) == MLD_OK);
  CHECK(value == 2);

  CHECK(mld_solve(h.g, "nope", 0.0, &value, witness, &len) ==
        MLD_ERR_INVALID_ARGUMENT);
}

TEST_CASE("compute JSON carries the full report") {
  Handle h = parse(kP6);
  char* out = nullptr;
  REQUIRE(mld_compute_json(h.g, 0.0, &out) == MLD_OK);
  const json report = json::parse(take(out));
  CHECK(report["status"] == "ok");
  CHECK(report["invariants"]["gammaM"]["value"] == 2);
  CHECK(report["invariants"]["gammaL"]["value"] == 3);
  CHECK(report["chains"].size() == 9);
  CHECK(report["fatal_violation"] == false);
}

TEST_CASE("tree JSON exposes profile, formulas, and solver check") {
  Handle h = parse(kP6);
  char* out = nullptr;
  REQUIRE(mld_tree_json(h.g, 1, 0.0, &out) == MLD_OK);
  const json t = json::parse(take(out));
  CHECK(t["is_path"] == true);
  CHECK(t["ell"] == 2);
  CHECK(t["gamma_formula"] == 2);
  CHECK(t["gammaM_formula"] == 2);
  CHECK(t["dim_formula"]["value"] == 1);
  CHECK(t["solver_check"]["agree"] == true);

  Handle c5 = parse("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
  char* unused = nullptr;
  CHECK(mld_tree_json(c5.g, 0, 0.0, &unused) == MLD_ERR_NOT_A_TREE);
}

TEST_CASE("transform JSON for explicit and solved input sets") {
  Handle h = parse("4 3\n0 1\n1 2\n2 3\n");
  const int set[] = {0, 3};
  char* out = nullptr;
  REQUIRE(mld_transform_json(h.g, "pi", set, 2, 0.0, &out) == MLD_OK);
  const json pi = json::parse(take(out));
  CHECK(pi["transform"] == "pi");
  CHECK(pi["solved_input"] == false);
  CHECK(pi["certified"] == true);
  CHECK(pi["output_set"] == json::array({0, 1, 2, 3}));

  Handle p6 = parse(kP6);
  REQUIRE(mld_transform_json(p6.g, "bars", nullptr, -1, 0.0, &out) == MLD_OK);
  const json bars = json::parse(take(out));
  CHECK(bars["solved_input"] == true);
  CHECK(bars["input_set"] == json::array({1, 4}));
  CHECK(bars["output_set"] == json::array({0, 5}));

  REQUIRE(mld_transform_json(p6.g, "union", nullptr, -1, 0.0, &out) == MLD_OK);
  const json u = json::parse(take(out));
  CHECK(u["certified"] == true);
  CHECK(u["size_bound_ok"] == true);
  CHECK(u.contains("repairs"));

  CHECK(mld_transform_json(p6.g, "nope", nullptr, -1, 0.0, &out) ==
        MLD_ERR_INVALID_ARGUMENT);
  const int bad[] = {0, 2};
  CHECK(mld_transform_json(p6.g, "bars", bad, 2, 0.0, &out) ==
        MLD_ERR_NOT_MLD);
}

TEST_CASE("generator JSON produces a parsable edge list") {
  char* out = nullptr;
  REQUIRE(mld_generate_json(R"({"family":"comb","t":3})", &out) == MLD_OK);
  const json g = json::parse(take(out));
  CHECK(g["id"] == "comb_3");
  CHECK(g["n"] == 6);
  Handle h = parse(g["edge_list"].get<std::string>());
  CHECK(mld_graph_order(h.g) == 6);
  CHECK(g["labels"]["a_1"] == 0);

  CHECK(mld_generate_json(R"({"family":"nope"})", &out) ==
        MLD_ERR_INVALID_ARGUMENT);
  CHECK(mld_generate_json("{bad", &out) == MLD_ERR_PARSE);
  // Random families refuse to run without an explicit seed; the missing
  // field is flagged as a malformed generator spec.
  CHECK(mld_generate_json(R"({"family":"gnp","n":8,"edge_prob":0.4})", &out) ==
        MLD_ERR_PARSE);
}

TEST_CASE("verify JSON aggregates a small corpus") {
  char* jsonl = nullptr;
  int fatal = -1, conjecture = -1, timeouts = -1;
  REQUIRE(mld_verify_json(
              R"({"items":[{"family":"paths","min":2,"max":6},
                           {"family":"star","k":3}]})",
              0.0, 2, &jsonl, &fatal, &conjecture, &timeouts) == MLD_OK);
  const std::string text = take(jsonl);
  CHECK(fatal == 0);
  CHECK(conjecture == 0);
  CHECK(timeouts == 0);
  int lines = 0;
  for (char ch : text) lines += ch == '\n';
  CHECK(lines == 6);
  const json first = json::parse(text.substr(0, text.find('\n')));
  CHECK(first["graph_id"] == "path_2");
}

TEST_CASE("search JSON round-trips goals") {
  char* out = nullptr;
  REQUIRE(mld_search_json(
              R"({"goal":"psi-eq-2gm","n_max":5,"seed":1,"budget_graphs":200})",
              &out) == MLD_OK);
  const json r = json::parse(take(out));
  CHECK(r["goal"] == "psi-eq-2gm");
  REQUIRE_FALSE(r["hit"].is_null());
  CHECK(r["hit"]["psi"] == 2 * r["hit"]["gammaM"].get<int>());

  CHECK(mld_search_json(R"({"goal":"nope","n_max":5,"seed":1})", &out) ==
        MLD_ERR_INVALID_ARGUMENT);
}
