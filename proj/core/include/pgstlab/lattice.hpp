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

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "pgstlab/numeric.hpp"

namespace pgstlab {

using RealMatrix = std::vector<std::vector<HighReal>>;

/// Row basis after LLL reduction, with the unimodular transform that maps
/// original rows to reduced ones: reduced = transform * original.
struct ReducedBasis {
  RealMatrix rows;
  std::vector<std::vector<BigInt>> transform;
};

/// LLL reduction of a full-rank square row basis (Lovasz parameter delta).
ReducedBasis lll_reduce(RealMatrix basis, double delta = 0.99);

/// Visits every lattice vector within `radius` of `target`, passing its
/// integer coordinates with respect to `basis.rows`. Stops early when the
/// visitor returns false or after `node_budget` tree nodes; returns false
/// if the budget ran out.
bool enumerate_close_vectors(const ReducedBasis& basis, std::span<const HighReal> target,
                             double radius, std::size_t node_budget,
                             const std::function<bool(std::span<const std::int64_t>)>& visit);

}  // namespace pgstlab
