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

#include <optional>
#include <stdexcept>
#include <string>

namespace mld {

enum class ErrorCode {
  TooSmall,         // graph or set below the minimum size for the operation
  VertexOutOfRange, // edge endpoint or set member outside [0, n)
  LoopEdge,         // self-loop in an edge list
  Disconnected,     // input graph is not connected
  EmptySet,         // predicate called with an empty vertex set
  DegeneratePair,   // doubly-resolving query with u == v or x == y
  NotATree,         // tree-only operation on a graph with a cycle
  IsAPath,          // operation defined only for non-path trees
  IsP2,             // operation excludes the two-vertex path
  NotMld,           // transform input set is not metric-locating-dominating
  PreconditionC4C6, // transform requires a graph with no 4- or 6-cycle subgraph
  PreconditionGirth,// transform requires girth >= 5 (or an acyclic graph)
  TwoPendants,      // internal: a set member with two pendant neighbors outside
                    // the set cannot occur once the resolving check has passed
  AmbiguousPath,    // unused: ld_closure keeps every interior pair instead of
                    // rejecting ambiguity; kept so status codes stay stable
  Timeout,          // solver budget exhausted; payload carries an upper bound
  OutOfRange,       // parameter outside the supported range
  GiveUp,           // randomized generator exceeded its retry allowance
  ParseError,       // malformed edge list / label / corpus input
  IoError,          // file could not be read or written
  InvalidArgument,  // bad argument combination
  Internal,         // invariant breach inside the library
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  Error(ErrorCode code, const std::string& message, int payload)
      : std::runtime_error(message), code_(code), payload_(payload) {}

  ErrorCode code() const noexcept { return code_; }
  // For Timeout this is the best feasible-set size known when the budget ran out.
  std::optional<int> payload() const noexcept { return payload_; }

 private:
  ErrorCode code_;
  std::optional<int> payload_;
};

}  // namespace mld
