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

#include <map>
#include <string>

#include "mld/graph.hpp"

namespace mld {

// Edge-list format: first data line "n m", then m lines "u v" (0-based).
// '#' starts a comment anywhere on a line; blank lines are skipped.
// Parse errors carry 1-based line numbers.
Graph parse_edge_list(const std::string& text);
Graph read_edge_list_file(const std::string& path);

// Canonical form: "n m" header, edges sorted with u < v, one per line.
std::string format_edge_list(const Graph& g);

// Label sidecar: one flat JSON object {"role": index, ...}.
std::string labels_to_json(const std::map<std::string, int>& labels);
std::map<std::string, int> parse_labels_json(const std::string& text);
std::map<std::string, int> read_labels_file(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace mld
