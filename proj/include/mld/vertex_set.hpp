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
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace mld {

// Subset of the vertex range [0, universe). Bitset-backed value type.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);

  static VertexSet of(int universe, std::initializer_list<int> members);
  static VertexSet from_members(int universe, std::span<const int> members);
  static VertexSet full(int universe);

  int universe() const { return universe_; }
  int size() const;
  bool empty() const { return size() == 0; }
  bool contains(int v) const;

  void insert(int v);
  void erase(int v);
  void clear();

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  // Ascending member list.
  std::vector<int> members() const;

  std::string to_string() const;  // e.g. "{0,2,5}"

 private:
  void check_range(int v) const;

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Orders sets by their ascending member sequences (shortlex is NOT used:
// {0,5} < {1,2} because the sequences compare elementwise).
bool lex_less(const VertexSet& a, const VertexSet& b);

}  // namespace mld
