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

#include "mld/error.hpp"

namespace mld {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::TooSmall: return "too_small";
    case ErrorCode::VertexOutOfRange: return "vertex_out_of_range";
    case ErrorCode::LoopEdge: return "loop_edge";
    case ErrorCode::Disconnected: return "disconnected";
    case ErrorCode::EmptySet: return "empty_set";
    case ErrorCode::DegeneratePair: return "degenerate_pair";
    case ErrorCode::NotATree: return "not_a_tree";
    case ErrorCode::IsAPath: return "is_a_path";
    case ErrorCode::IsP2: return "is_p2";
    case ErrorCode::NotMld: return "not_mld";
    case ErrorCode::PreconditionC4C6: return "precondition_c4c6";
    case ErrorCode::PreconditionGirth: return "precondition_girth";
    case ErrorCode::TwoPendants: return "two_pendants";
    case ErrorCode::AmbiguousPath: return "ambiguous_path";
    case ErrorCode::Timeout: return "timeout";
    case ErrorCode::OutOfRange: return "out_of_range";
    case ErrorCode::GiveUp: return "give_up";
    case ErrorCode::ParseError: return "parse_error";
    case ErrorCode::IoError: return "io_error";
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace mld
