// Copyright 2026 The pgstlab Authors
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

#include "pgstlab/error.hpp"

namespace pgstlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_order: return "invalid-order";
    case ErrorKind::invalid_connection_set: return "invalid-connection-set";
    case ErrorKind::invalid_divisor: return "invalid-divisor";
    case ErrorKind::incompatible_order: return "incompatible-order";
    case ErrorKind::non_disjoint: return "non-disjoint";
    case ErrorKind::no_antipode: return "no-antipode";
    case ErrorKind::unsupported_order: return "unsupported-order";
    case ErrorKind::invalid_factorization: return "invalid-factorization";
    case ErrorKind::vertex_out_of_range: return "vertex-out-of-range";
    case ErrorKind::inconsistent_query: return "inconsistent-query";
    case ErrorKind::invalid_grid: return "invalid-grid";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::parse: return "parse";
    case ErrorKind::not_certified: return "not-certified";
  }
  return "unknown";
}

}  // namespace pgstlab
