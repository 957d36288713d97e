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

// Command-line front end. Talks to the library exclusively through the C
// API (mld.h); all structured data arrives as JSON text and is rendered
// here.
//
// Exit codes: 0 success / no fatal violation; 1 usage, parse, or input
// error; 2 theorem violation; 3 solver timeout.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mld.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;
constexpr int kExitTimeout = 3;

int exit_for(mld_status status) {
  return status == MLD_ERR_TIMEOUT ? kExitTimeout : kExitUsage;
}

int report_error(mld_status status) {
  std::cerr << "error (" << mld_status_name(status)
            << "): " << mld_last_error() << "\n";
  return exit_for(status);
}

// Takes ownership of a C-API string.
std::string take_string(char* s) {
  std::string out = s == nullptr ? "" : s;
  mld_string_free(s);
  return out;
}

std::map<int, std::string> reverse_labels(const json& labels) {
  std::map<int, std::string> names;
  if (labels.is_object()) {
    for (const auto& [role, index] : labels.items()) {
      if (index.is_number_integer()) names[index.get<int>()] = role;
    }
  }
  return names;
}

std::string render_set(const json& members,
                       const std::map<int, std::string>& names) {
  std::string out = "{";
  bool first = true;
  for (const json& v : members) {
    if (!first) out += ",";
    first = false;
    const int idx = v.get<int>();
    auto it = names.find(idx);
    out += it != names.end() ? it->second : std::to_string(idx);
  }
  out += "}";
  return out;
}

// Loads the label sidecar next to an edge-list file, if present:
// "<input>.labels.json", overridable with --labels.
std::map<int, std::string> sidecar_labels(const std::string& input_path,
                                          const std::string& labels_path) {
  std::string path = labels_path;
  if (path.empty()) {
    const std::string guess = input_path + ".labels.json";
    if (std::filesystem::exists(guess)) path = guess;
  }
  if (path.empty()) return {};
  std::ifstream in(path);
  if (!in) {
    std::cerr << "warning: could not read labels file " << path << "\n";
    return {};
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const json doc = json::parse(buffer.str(), nullptr, false);
  if (doc.is_discarded()) {
    std::cerr << "warning: labels file " << path << " is not valid JSON\n";
    return {};
  }
  return reverse_labels(doc);
}

struct GraphHandle {
  mld_graph* g = nullptr;
  ~GraphHandle() { mld_graph_free(g); }
};

// ---- compute --------------------------------------------------------------

int print_compute_report(const json& report,
                         const std::map<int, std::string>& names) {
  std::cout << "graph: n=" << report["n"].get<int>()
            << " m=" << report["m"].get<int>();
  if (report["girth"].is_null()) {
    std::cout << " acyclic";
  } else {
    std::cout << " girth=" << report["girth"].get<int>();
  }
  std::cout << (report["tree"].get<bool>() ? " tree" : "")
            << (report["c4c6_free"].get<bool>() ? " c4c6-free" : "") << "\n";

  const std::string status = report["status"].get<std::string>();
  if (status != "ok") {
    std::cout << "status: " << status << "\n";
    return status.rfind("timeout", 0) == 0 ? kExitTimeout : kExitUsage;
  }

  for (const char* name : {"gamma", "dim", "gammaM", "gammaL", "psi"}) {
    const json& inv = report["invariants"][name];
    std::cout << "  " << name << " = " << inv["value"].get<int>()
              << "  witness " << render_set(inv["witness"], names) << "\n";
  }

  bool any_fatal = false;
  for (const json& chain : report["chains"]) {
    const bool holds = chain["holds"].get<bool>();
    const bool advisory = chain["advisory"].get<bool>();
    std::cout << "  chain " << chain["id"].get<std::string>() << ": "
              << (holds ? "holds" : (advisory ? "VIOLATED (conjecture)"
                                              : "VIOLATED"));
    std::cout << "  [";
    bool first = true;
    for (const json& pair : chain["values"]) {
      if (!first) std::cout << ", ";
      first = false;
      std::cout << pair[0].get<std::string>() << "=" << pair[1].get<int>();
    }
    std::cout << "]\n";
    if (!holds && !advisory) any_fatal = true;
  }

  for (const json& suite : report["suites"]) {
    std::cout << "  suite " << suite["name"].get<std::string>() << ": ";
    if (suite["skipped"].get<bool>()) {
      std::cout << "skipped\n";
      continue;
    }
    if (suite["ok"].get<bool>()) {
      std::cout << "ok\n";
      continue;
    }
    any_fatal = true;
    std::cout << "FAILED\n";
    for (const json& failure : suite["failures"]) {
      std::cout << "    - " << failure.get<std::string>() << "\n";
    }
  }

  std::cout << "elapsed: " << report["elapsed_ms"].get<double>() << " ms\n";
  return any_fatal ? kExitViolation : kExitOk;
}

int run_compute(const std::string& input, const std::string& labels_path,
                double budget, bool json_mode) {
  GraphHandle h;
  if (mld_status s = mld_graph_load(input.c_str(), &h.g); s != MLD_OK) {
    return report_error(s);
  }
  char* out = nullptr;
  if (mld_status s = mld_compute_json(h.g, budget, &out); s != MLD_OK) {
    return report_error(s);
  }
  const std::string text = take_string(out);
  if (json_mode) {
    std::cout << text << "\n";
    const json report = json::parse(text);
    if (report["status"].get<std::string>() != "ok") return kExitTimeout;
    return report["fatal_violation"].get<bool>() ? kExitViolation : kExitOk;
  }
  return print_compute_report(json::parse(text),
                              sidecar_labels(input, labels_path));
}

// ---- tree -----------------------------------------------------------------

int run_tree(const std::string& input, const std::string& labels_path,
             bool check, double budget, bool json_mode) {
  GraphHandle h;
  if (mld_status s = mld_graph_load(input.c_str(), &h.g); s != MLD_OK) {
    return report_error(s);
  }
  char* out = nullptr;
  if (mld_status s = mld_tree_json(h.g, check ? 1 : 0, budget, &out);
      s != MLD_OK) {
    return report_error(s);
  }
  const std::string text = take_string(out);
  if (json_mode) {
    std::cout << text << "\n";
    return kExitOk;
  }

  const json t = json::parse(text);
  const auto names = sidecar_labels(input, labels_path);
  std::cout << "tree: n=" << t["n"].get<int>() << " m=" << t["m"].get<int>()
            << (t["is_path"].get<bool>() ? " path" : "") << "\n"
            << "  leaves " << render_set(t["leaves"], names) << "  supports "
            << render_set(t["supports"], names) << "  strong supports "
            << render_set(t["strong_supports"], names) << "\n"
            << "  majors " << render_set(t["majors"], names)
            << "  exterior majors " << render_set(t["exterior_majors"], names)
            << "\n"
            << "  gamma = " << t["gamma_formula"].get<int>()
            << "  gammaM = " << t["gammaM_formula"].get<int>()
            << "  dim = " << t["dim_formula"]["value"].get<int>()
            << "  dim witness "
            << render_set(t["dim_formula"]["witness"], names) << "\n";

  auto print_characterization = [](const char* name, const json& v) {
    std::cout << "  " << name << ": ";
    if (v.is_null()) {
      std::cout << "not applicable\n";
      return;
    }
    std::cout << (v["all_equal"].get<bool>() ? "equivalent" : "DISAGREE")
              << " [";
    bool first = true;
    for (const json& f : v["flags"]) {
      if (!first) std::cout << " ";
      first = false;
      std::cout << (f.get<bool>() ? "true" : "false");
    }
    std::cout << "]\n";
  };
  print_characterization("gammaM == dim + gamma conditions",
                         t["dim_plus_gamma_characterization"]);
  print_characterization("gammaM == leaf count conditions",
                         t["leaf_count_characterization"]);

  if (!t["solver_check"].is_null()) {
    const json& sc = t["solver_check"];
    std::cout << "  solver check: gamma=" << sc["gamma"]["value"].get<int>()
              << " gammaM=" << sc["gammaM"]["value"].get<int>()
              << " dim=" << sc["dim"]["value"].get<int>() << " -> "
              << (sc["agree"].get<bool>() ? "formulas agree" : "MISMATCH")
              << "\n";
    if (!sc["agree"].get<bool>()) return kExitViolation;
  }
  return kExitOk;
}

// ---- transform ------------------------------------------------------------

int run_transform(const std::string& input, const std::string& which,
                  const std::string& set_spec, const std::string& labels_path,
                  double budget, bool json_mode) {
  GraphHandle h;
  if (mld_status s = mld_graph_load(input.c_str(), &h.g); s != MLD_OK) {
    return report_error(s);
  }

  std::vector<int> set;
  int set_len = -1;
  if (set_spec != "solve") {
    std::stringstream ss(set_spec);
    std::string token;
    while (std::getline(ss, token, ',')) {
      try {
        set.push_back(std::stoi(token));
      } catch (const std::exception&) {
        std::cerr << "error: --set expects \"solve\" or a comma-separated "
                     "vertex list, got \""
                  << set_spec << "\"\n";
        return kExitUsage;
      }
    }
    set_len = static_cast<int>(set.size());
  }

  char* out = nullptr;
  if (mld_status s = mld_transform_json(h.g, which.c_str(), set.data(),
                                        set_len, budget, &out);
      s != MLD_OK) {
    return report_error(s);
  }
  const std::string text = take_string(out);
  if (json_mode) {
    std::cout << text << "\n";
    return kExitOk;
  }

  const json t = json::parse(text);
  const auto names = sidecar_labels(input, labels_path);
  std::cout << "transform " << t["transform"].get<std::string>() << "\n"
            << "  input set  " << render_set(t["input_set"], names) << "\n"
            << "  output set " << render_set(t["output_set"], names) << "\n"
            << "  certified: " << (t["certified"].get<bool>() ? "yes" : "NO")
            << "\n"
            << "  size bound: |output| "
            << (t["size_bound_ok"].get<bool>() ? "<= " : "EXCEEDS ")
            << t["size_limit"].get<int>() << "\n";
  if (t.contains("repairs")) {
    std::cout << "  repairs " << render_set(t["repairs"], names) << "\n";
  }
  return t["certified"].get<bool>() ? kExitOk : kExitViolation;
}

// ---- generate ---------------------------------------------------------------

int run_generate(const std::string& family, std::optional<int> param,
                 const json& extra, const std::string& out_path,
                 const std::string& labels_out, bool json_mode) {
  json spec = extra;
  spec["family"] = family;

  // The single positional parameter serves the one-knob families.
  if (param.has_value()) {
    if (family == "gs") {
      spec["s"] = *param;
    } else if (family == "comb") {
      spec["t"] = *param;
    } else if (family == "path" || family == "prufer" || family == "gnp" ||
               family == "constrained") {
      spec["n"] = *param;
    } else if (family == "star") {
      spec["k"] = *param;
    } else {
      std::cerr << "error: family " << family
                << " takes flags, not a positional size\n";
      return kExitUsage;
    }
  }

  char* out = nullptr;
  if (mld_status s = mld_generate_json(spec.dump().c_str(), &out);
      s != MLD_OK) {
    return report_error(s);
  }
  const std::string text = take_string(out);
  const json g = json::parse(text);

  if (json_mode && out_path.empty()) {
    std::cout << text << "\n";
    return kExitOk;
  }

  if (out_path.empty()) {
    std::cout << "# " << g["id"].get<std::string>() << "\n"
              << g["edge_list"].get<std::string>();
    return kExitOk;
  }

  std::ofstream el(out_path);
  if (!el) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kExitUsage;
  }
  el << g["edge_list"].get<std::string>();
  el.close();

  const std::string labels_path =
      labels_out.empty() ? out_path + ".labels.json" : labels_out;
  std::ofstream lf(labels_path);
  if (!lf) {
    std::cerr << "error: cannot write " << labels_path << "\n";
    return kExitUsage;
  }
  lf << g["labels"].dump(2) << "\n";
  lf.close();

  std::cout << "wrote " << g["id"].get<std::string>() << ": " << out_path
            << " (n=" << g["n"].get<int>() << " m=" << g["m"].get<int>()
            << ") and " << labels_path << "\n";
  return kExitOk;
}

// ---- verify -----------------------------------------------------------------

int run_verify(const std::string& corpus_file, int trees, int graphs,
               int c4c6free, int girth5, int paths_max, int stars_max,
               int nmax, std::optional<std::uint64_t> seed, double budget,
               int jobs, const std::string& out_path, bool json_mode) {
  std::string spec_text;
  if (!corpus_file.empty()) {
    std::ifstream in(corpus_file);
    if (!in) {
      std::cerr << "error: cannot read corpus file " << corpus_file << "\n";
      return kExitUsage;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    spec_text = buffer.str();
  } else {
    json items = json::array();
    if (paths_max > 0) {
      items.push_back({{"family", "paths"}, {"min", 2}, {"max", paths_max}});
    }
    if (stars_max > 0) {
      items.push_back({{"family", "stars"}, {"min", 1}, {"max", stars_max}});
    }
    const bool randomized = trees > 0 || graphs > 0 || c4c6free > 0 ||
                            girth5 > 0;
    if (randomized && !seed.has_value()) {
      std::cerr << "error: --seed is required with randomized corpora\n";
      return kExitUsage;
    }
    const std::uint64_t base = seed.value_or(0);
    if (trees > 0) {
      items.push_back({{"family", "prufer"},
                       {"count", trees},
                       {"n_min", 4},
                       {"n_max", nmax},
                       {"seed", base}});
    }
    if (graphs > 0) {
      items.push_back({{"family", "gnp"},
                       {"count", graphs},
                       {"n_min", 4},
                       {"n_max", nmax},
                       {"seed", base + 1}});
    }
    if (c4c6free > 0) {
      items.push_back({{"family", "c4c6_free"},
                       {"count", c4c6free},
                       {"n_min", 4},
                       {"n_max", nmax},
                       {"seed", base + 2}});
    }
    if (girth5 > 0) {
      items.push_back({{"family", "girth5"},
                       {"count", girth5},
                       {"n_min", 4},
                       {"n_max", nmax},
                       {"seed", base + 3}});
    }
    if (items.empty()) {
      std::cerr << "error: empty corpus; pass --file or at least one of "
                   "--paths/--stars/--trees/--graphs/--c4c6free/--girth5\n";
      return kExitUsage;
    }
    spec_text = json{{"items", items}}.dump();
  }

  char* jsonl = nullptr;
  int fatal = 0, conjecture = 0, timeouts = 0;
  if (mld_status s = mld_verify_json(spec_text.c_str(), budget, jobs, &jsonl,
                                     &fatal, &conjecture, &timeouts);
      s != MLD_OK) {
    return report_error(s);
  }
  const std::string reports = take_string(jsonl);

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kExitUsage;
    }
    out << reports;
  }

  if (json_mode) {
    std::cout << reports;
  } else {
    long count = 0;
    std::stringstream ss(reports);
    std::string line;
    while (std::getline(ss, line)) {
      if (line.empty()) continue;
      ++count;
      const json r = json::parse(line);
      if (r["fatal_violation"].get<bool>() ||
          r["conjecture_violation"].get<bool>() ||
          r["status"].get<std::string>() != "ok") {
        std::cout << "  " << r["graph_id"].get<std::string>() << ": "
                  << r["status"].get<std::string>();
        for (const json& chain : r["chains"]) {
          if (!chain["holds"].get<bool>()) {
            std::cout << " chain " << chain["id"].get<std::string>()
                      << " violated"
                      << (chain["advisory"].get<bool>() ? " (conjecture)"
                                                        : "");
          }
        }
        for (const json& suite : r["suites"]) {
          if (!suite["skipped"].get<bool>() && !suite["ok"].get<bool>()) {
            std::cout << " suite " << suite["name"].get<std::string>()
                      << " failed";
          }
        }
        std::cout << "\n";
      }
    }
    std::cout << "verified " << count << " graphs: " << fatal
              << " fatal violations, " << conjecture
              << " conjecture violations, " << timeouts << " timeouts\n";
  }
  return fatal > 0 ? kExitViolation : kExitOk;
}

// ---- search -----------------------------------------------------------------

int run_search(const std::string& goal, double threshold, int nmax,
               std::uint64_t seed, long budget_graphs, double budget,
               bool json_mode) {
  json spec{{"goal", goal},
            {"n_max", nmax},
            {"seed", seed},
            {"budget_graphs", budget_graphs}};
  if (goal == "ratio-gl-gm") spec["threshold"] = threshold;
  if (budget > 0) spec["budget_seconds"] = budget;

  char* out = nullptr;
  if (mld_status s = mld_search_json(spec.dump().c_str(), &out);
      s != MLD_OK) {
    return report_error(s);
  }
  const std::string text = take_string(out);
  if (json_mode) {
    std::cout << text << "\n";
    return kExitOk;
  }

  const json r = json::parse(text);
  std::cout << "goal: " << r["goal"].get<std::string>();
  if (r.contains("threshold")) {
    std::cout << " (threshold " << r["threshold"].get<double>() << ")";
  }
  std::cout << "\nexamined " << r["graphs_examined"].get<long>()
            << " graphs in " << r["elapsed_seconds"].get<double>() << " s\n";
  if (r["hit"].is_null()) {
    std::cout << "no witness found within the budget\n";
    return kExitOk;
  }
  const json& hit = r["hit"];
  std::cout << "found: n=" << hit["n"].get<int>() << " edges";
  for (const json& e : hit["edges"]) {
    std::cout << " " << e[0].get<int>() << "-" << e[1].get<int>();
  }
  std::cout << "\n  gamma=" << hit["gamma"].get<int>()
            << " dim=" << hit["dim"].get<int>()
            << " gammaM=" << hit["gammaM"].get<int>()
            << " gammaL=" << hit["gammaL"].get<int>()
            << " psi=" << hit["psi"].get<int>() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact metric-location-domination invariants of small connected "
      "graphs"};
  app.require_subcommand(1);
  int rc = kExitOk;

  // compute
  auto* compute = app.add_subcommand(
      "compute", "solve all five invariants and run the inequality chains");
  std::string c_input, c_labels;
  double c_budget = 0.0;
  bool c_json = false;
  compute->add_option("input", c_input, "edge-list file")->required();
  compute->add_option("--labels", c_labels, "label sidecar JSON");
  compute->add_option("--budget", c_budget, "seconds per invariant");
  compute->add_flag("--json", c_json, "emit the JSON report");
  compute->callback(
      [&]() { rc = run_compute(c_input, c_labels, c_budget, c_json); });

  // tree
  auto* tree = app.add_subcommand(
      "tree", "tree profile, closed-form values, and characterizations");
  std::string t_input, t_labels;
  double t_budget = 0.0;
  bool t_json = false, t_check = false;
  tree->add_option("input", t_input, "edge-list file (must be a tree)")
      ->required();
  tree->add_option("--labels", t_labels, "label sidecar JSON");
  tree->add_option("--budget", t_budget, "seconds per invariant");
  tree->add_flag("--check", t_check, "cross-check formulas with the solver");
  tree->add_flag("--json", t_json, "emit the JSON report");
  tree->callback([&]() {
    rc = run_tree(t_input, t_labels, t_check, t_budget, t_json);
  });

  // transform
  auto* transform = app.add_subcommand(
      "transform", "apply a certified set transformation");
  std::string x_input, x_which, x_set = "solve", x_labels;
  double x_budget = 0.0;
  bool x_json = false;
  transform->add_option("input", x_input, "edge-list file")->required();
  transform
      ->add_option("which", x_which,
                   "pi (LD closure), bars (pendant swap) or union (repair)")
      ->required()
      ->check(CLI::IsMember({"pi", "bars", "union"}));
  transform->add_option(
      "--set", x_set, "comma-separated input set, or \"solve\" (default)");
  transform->add_option("--labels", x_labels, "label sidecar JSON");
  transform->add_option("--budget", x_budget, "seconds per invariant");
  transform->add_flag("--json", x_json, "emit the JSON outcome");
  transform->callback([&]() {
    rc = run_transform(x_input, x_which, x_set, x_labels, x_budget, x_json);
  });

  // generate
  auto* generate = app.add_subcommand(
      "generate", "write a family instance as edge list + label sidecar");
  std::string g_family, g_out, g_labels_out, g_constraint;
  std::optional<int> g_param;
  int g_n = 0, g_k = 0, g_legs = 0, g_leg_len = 0, g_a = 0, g_b = 0,
      g_edges = 0;
  double g_p = 0.0;
  std::optional<std::uint64_t> g_seed;
  bool g_json = false, g_random = false;
  generate
      ->add_option("family", g_family,
                   "gs | comb | path | star | spider | double_star | prufer "
                   "(alias: tree) | gnp | constrained")
      ->required();
  generate->add_option("param", g_param,
                       "size parameter (s, t, n or k depending on family)");
  generate->add_option("-n,--n", g_n, "vertex count (random families)");
  generate->add_option("-k,--k", g_k, "leaf count (star)");
  generate->add_option("--legs", g_legs, "leg count (spider)");
  generate->add_option("--leg-len", g_leg_len, "leg length (spider)");
  generate->add_option("--a", g_a, "first center leaf count (double_star)");
  generate->add_option("--b", g_b, "second center leaf count (double_star)");
  generate->add_option("--p", g_p, "edge probability (gnp)");
  generate->add_option("--edges", g_edges, "target edge count (constrained)");
  generate->add_option("--constraint", g_constraint,
                       "c4c6_free | girth5 (constrained)");
  generate->add_option("--seed", g_seed, "random seed (random families)");
  generate->add_flag("--random", g_random,
                     "accepted for readability with the tree alias");
  generate->add_option("-o,--out", g_out, "output edge-list path");
  generate->add_option("--labels-out", g_labels_out,
                       "label sidecar path (default <out>.labels.json)");
  generate->add_flag("--json", g_json, "print the generator JSON instead");
  generate->callback([&]() {
    std::string family = g_family == "tree" ? "prufer" : g_family;
    json extra = json::object();
    const bool randomized =
        family == "prufer" || family == "gnp" || family == "constrained";
    if (randomized) {
      if (!g_seed.has_value()) {
        std::cerr << "error: --seed is required for random families\n";
        rc = kExitUsage;
        return;
      }
      extra["seed"] = *g_seed;
      if (g_n > 0) extra["n"] = g_n;
    }
    if (family == "gnp") extra["edge_prob"] = g_p;
    if (family == "constrained") {
      extra["edges"] = g_edges;
      extra["constraint"] = g_constraint;
    }
    if (family == "star" && g_k > 0) extra["k"] = g_k;
    if (family == "spider") {
      extra["legs"] = g_legs;
      extra["leg_len"] = g_leg_len;
    }
    if (family == "double_star") {
      extra["a"] = g_a;
      extra["b"] = g_b;
    }
    rc = run_generate(family, g_param, extra, g_out, g_labels_out, g_json);
  });

  // verify
  auto* verify = app.add_subcommand(
      "verify", "run theorem suites over a corpus; exit 2 on any violation");
  std::string v_file, v_out;
  int v_trees = 0, v_graphs = 0, v_c4c6 = 0, v_girth5 = 0, v_paths = 0,
      v_stars = 0, v_nmax = 10, v_jobs = 1;
  std::optional<std::uint64_t> v_seed;
  double v_budget = 0.0;
  bool v_json = false;
  verify->add_option("--file", v_file, "corpus spec JSON file");
  verify->add_option("--paths", v_paths, "include paths P_2..P_<max>");
  verify->add_option("--stars", v_stars, "include stars K_{1,1}..K_{1,<max>}");
  verify->add_option("--trees", v_trees, "random trees to include");
  verify->add_option("--graphs", v_graphs, "random connected graphs");
  verify->add_option("--c4c6free", v_c4c6, "random 4-/6-cycle-free graphs");
  verify->add_option("--girth5", v_girth5, "random girth->=5 graphs");
  verify->add_option("--nmax", v_nmax, "max order for random members");
  verify->add_option("--seed", v_seed, "base seed for random members");
  verify->add_option("--budget", v_budget, "seconds per invariant");
  verify->add_option("--jobs", v_jobs, "parallel workers");
  verify->add_option("--out", v_out, "write the JSON-lines report here");
  verify->add_flag("--json", v_json, "stream the JSON-lines report");
  verify->callback([&]() {
    rc = run_verify(v_file, v_trees, v_graphs, v_c4c6, v_girth5, v_paths,
                    v_stars, v_nmax, v_seed, v_budget, v_jobs, v_out, v_json);
  });

  // search
  auto* search = app.add_subcommand(
      "search", "stream graphs through the solver until a goal is hit");
  std::string s_goal;
  double s_threshold = 1.0, s_budget = 0.0;
  int s_nmax = 7;
  std::optional<std::uint64_t> s_seed;
  long s_budget_graphs = 2000;
  bool s_json = false;
  search
      ->add_option("--goal", s_goal,
                   "psi-eq-2gm | psi-eq-gm-plus-g | ratio-gl-gm")
      ->required()
      ->check(CLI::IsMember({"psi-eq-2gm", "psi-eq-gm-plus-g",
                             "ratio-gl-gm"}));
  search->add_option("--threshold", s_threshold,
                     "ratio threshold (ratio-gl-gm)");
  search->add_option("--nmax", s_nmax, "max graph order (<= 10)");
  search->add_option("--seed", s_seed, "random seed")->required();
  search->add_option("--budget-graphs", s_budget_graphs,
                     "graphs to examine before giving up");
  search->add_option("--budget", s_budget, "solver seconds per invariant");
  search->add_flag("--json", s_json, "emit the JSON result");
  search->callback([&]() {
    rc = run_search(s_goal, s_threshold, s_nmax, *s_seed, s_budget_graphs,
                    s_budget, s_json);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  return rc;
}
