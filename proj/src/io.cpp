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

#include "mld/io.hpp"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mld/error.hpp"

namespace mld {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ": " + what);
}

// Strips comments and reports whether anything meaningful remains.
std::string strip_line(const std::string& raw) {
  std::string line = raw;
  if (const auto hash = line.find('#'); hash != std::string::npos) {
    line.erase(hash);
  }
  return line;
}

bool read_two_ints(const std::string& line, int& a, int& b) {
  std::istringstream is(line);
  if (!(is >> a >> b)) return false;
  std::string rest;
  if (is >> rest) return false;  // trailing junk
  return true;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  int n = -1;
  int m = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_line(raw);
    int a = 0;
    int b = 0;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!read_two_ints(line, a, b)) {
      parse_fail(line_no, "expected two integers, got '" + line + "'");
    }
    if (n < 0) {
      if (a < 0 || b < 0) parse_fail(line_no, "negative counts in header");
      n = a;
      m = b;
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    if (static_cast<int>(edges.size()) == m) {
      parse_fail(line_no, "more than the declared " + std::to_string(m) +
                              " edges");
    }
    edges.emplace_back(a, b);
  }
  if (n < 0) {
    throw Error(ErrorCode::ParseError, "no header line 'n m' found");
  }
  if (static_cast<int>(edges.size()) != m) {
    throw Error(ErrorCode::ParseError,
                "declared " + std::to_string(m) + " edges but found " +
                    std::to_string(edges.size()));
  }
  return Graph::build(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
  return parse_edge_list(read_text_file(path));
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) {
    os << u << ' ' << v << '\n';
  }
  return os.str();
}

std::string labels_to_json(const std::map<std::string, int>& labels) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [name, vertex] : labels) j[name] = vertex;
  return j.dump(2) + "\n";
}

std::map<std::string, int> parse_labels_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError,
                std::string("label JSON is malformed: ") + e.what());
  }
  if (!j.is_object()) {
    throw Error(ErrorCode::ParseError, "label JSON must be a flat object");
  }
  std::map<std::string, int> labels;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number_integer()) {
      throw Error(ErrorCode::ParseError,
                  "label '" + key + "' must map to an integer vertex");
    }
    labels[key] = value.get<int>();
  }
  return labels;
}

std::map<std::string, int> read_labels_file(const std::string& path) {
  return parse_labels_json(read_text_file(path));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open '" + path + "' for reading");
  }
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) {
    throw Error(ErrorCode::IoError, "read failure on '" + path + "'");
  }
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  }
  out << content;
  if (!out) {
    throw Error(ErrorCode::IoError, "write failure on '" + path + "'");
  }
}

}  // namespace mld
