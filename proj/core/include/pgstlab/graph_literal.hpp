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

#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pgstlab/graph.hpp"

namespace pgstlab {

// Grammar (whitespace-insensitive):
//   expr := cycle(n)
//         | circulant(n [; s1, s2, ...])
//         | gcd(n [; d1, d2, ...])
//         | union(expr, expr)
//         | complement(expr)
//         | product(expr, expr, ...)

struct ParsedGraph {
  std::variant<CirculantGraph, CompositeGraph> value;
  /// Remarks about degenerate inputs (e.g. an empty divisor set).
  std::vector<std::string> notes;

  bool is_product() const { return std::holds_alternative<CompositeGraph>(value); }
  const CirculantGraph& circulant() const;
  /// Circulants are returned as one-factor products.
  CompositeGraph composite() const;
  std::int64_t order() const;
};

ParsedGraph parse_graph(std::string_view literal);

/// Canonical literal: `circulant(n; s1,s2,...)` or `product(...)` thereof.
std::string format_graph(const CirculantGraph& g);
std::string format_graph(const CompositeGraph& g);
std::string format_graph(const ParsedGraph& g);

}  // namespace pgstlab
