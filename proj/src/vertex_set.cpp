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

#include "mld/vertex_set.hpp"

#include <bit>
#include <sstream>

#include "mld/error.hpp"

namespace mld {

namespace {
constexpr int kWordBits = 64;
}  // namespace

VertexSet::VertexSet(int universe) : universe_(universe) {
  if (universe < 0) {
    throw Error(ErrorCode::OutOfRange, "vertex set universe must be >= 0");
  }
  words_.assign((static_cast<std::size_t>(universe) + kWordBits - 1) / kWordBits, 0);
}

VertexSet VertexSet::of(int universe, std::initializer_list<int> members) {
  VertexSet s(universe);
  for (int v : members) s.insert(v);
  return s;
}

VertexSet VertexSet::from_members(int universe, std::span<const int> members) {
  VertexSet s(universe);
  for (int v : members) s.insert(v);
  return s;
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (int v = 0; v < universe; ++v) s.insert(v);
  return s;
}

void VertexSet::check_range(int v) const {
  if (v < 0 || v >= universe_) {
    throw Error(ErrorCode::VertexOutOfRange,
                "vertex " + std::to_string(v) + " outside universe [0, " +
                    std::to_string(universe_) + ")");
  }
}

int VertexSet::size() const {
  int total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

bool VertexSet::contains(int v) const {
  if (v < 0 || v >= universe_) return false;
  return (words_[static_cast<std::size_t>(v) / kWordBits] >>
          (static_cast<std::size_t>(v) % kWordBits)) & 1u;
}

void VertexSet::insert(int v) {
  check_range(v);
  words_[static_cast<std::size_t>(v) / kWordBits] |=
      std::uint64_t{1} << (static_cast<std::size_t>(v) % kWordBits);
}

void VertexSet::erase(int v) {
  check_range(v);
  words_[static_cast<std::size_t>(v) / kWordBits] &=
      ~(std::uint64_t{1} << (static_cast<std::size_t>(v) % kWordBits));
}

void VertexSet::clear() {
  for (auto& w : words_) w = 0;
}

namespace {
void require_same_universe(const VertexSet& a, const VertexSet& b) {
  if (a.universe() != b.universe()) {
    throw Error(ErrorCode::InvalidArgument,
                "vertex sets over different universes");
  }
}
}  // namespace

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  require_same_universe(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  require_same_universe(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  require_same_universe(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

bool VertexSet::operator==(const VertexSet& other) const {
  return universe_ == other.universe_ && words_ == other.words_;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  require_same_universe(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      int bit = std::countr_zero(w);
      out.push_back(static_cast<int>(i) * kWordBits + bit);
      w &= w - 1;
    }
  }
  return out;
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : members()) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  std::vector<int> ma = a.members(), mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(),
                                      mb.end());
}

}  // namespace mld
