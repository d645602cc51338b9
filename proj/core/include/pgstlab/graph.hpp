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

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pgstlab {

using Vertex = std::int64_t;

/// Symmetric subset of Z_n \ {0}, kept sorted and duplicate-free so that
/// two sets compare equal exactly when they contain the same residues.
class ConnectionSet {
 public:
  /// Throws Error(invalid_connection_set) on 0, out-of-range or asymmetric
  /// elements; duplicates and ordering are normalized away.
  ConnectionSet(std::int64_t n, std::vector<std::int64_t> elements);

  std::int64_t order() const noexcept { return n_; }
  std::span<const std::int64_t> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  bool contains(std::int64_t residue) const;

  friend bool operator==(const ConnectionSet&, const ConnectionSet&) = default;

 private:
  std::int64_t n_;
  std::vector<std::int64_t> elements_;
};

/// Proper divisors of n (each d | n with 1 <= d < n), sorted.
class DivisorSet {
 public:
  DivisorSet(std::int64_t n, std::vector<std::int64_t> divisors);

  std::int64_t order() const noexcept { return n_; }
  std::span<const std::int64_t> divisors() const noexcept { return divisors_; }
  bool empty() const noexcept { return divisors_.empty(); }
  bool contains(std::int64_t d) const;

  friend bool operator==(const DivisorSet&, const DivisorSet&) = default;

 private:
  std::int64_t n_;
  std::vector<std::int64_t> divisors_;
};

/// Cay(Z_n, S). Vertices are the residues 0..n-1.
class CirculantGraph {
 public:
  explicit CirculantGraph(ConnectionSet connection)
      : connection_(std::move(connection)) {}

  std::int64_t order() const noexcept { return connection_.order(); }
  std::size_t degree() const noexcept { return connection_.size(); }
  const ConnectionSet& connection() const noexcept { return connection_; }

  bool adjacent(Vertex a, Vertex b) const;

  friend bool operator==(const CirculantGraph&, const CirculantGraph&) = default;

 private:
  ConnectionSet connection_;
};

/// Cartesian product G_1 x ... x G_r of circulant factors. Vertices are
/// tuples (v_1, ..., v_r); the flat index is mixed-radix with the first
/// factor most significant.
class CompositeGraph {
 public:
  struct Factor {
    CirculantGraph graph;
    bool complemented = false;  // factor was written as complement(...)

    friend bool operator==(const Factor&, const Factor&) = default;
  };

  explicit CompositeGraph(std::vector<Factor> factors);

  std::span<const Factor> factors() const noexcept { return factors_; }
  std::size_t factor_count() const noexcept { return factors_.size(); }
  std::int64_t order() const noexcept { return order_; }
  std::size_t degree() const noexcept;

  std::vector<Vertex> tuple_of(Vertex flat) const;
  Vertex index_of(std::span<const Vertex> tuple) const;

  friend bool operator==(const CompositeGraph&, const CompositeGraph&) = default;

 private:
  std::vector<Factor> factors_;
  std::int64_t order_;
};

/// Cartesian product, flattening nested products into one factor list.
CompositeGraph cartesian_product(const CompositeGraph& a, const CompositeGraph& b);

CirculantGraph make_cycle(std::int64_t n);
CirculantGraph make_circulant(std::int64_t n, std::vector<std::int64_t> elements);

/// S_n(D): residues x with gcd(x, n) in D.
ConnectionSet gcd_set(const DivisorSet& divisors);
CirculantGraph make_gcd_graph(const DivisorSet& divisors);

/// Edge-disjoint union on a common vertex set.
CirculantGraph union_graphs(const CirculantGraph& a, const CirculantGraph& b);
CirculantGraph complement_graph(const CirculantGraph& g);

/// True iff S is a union of whole gcd classes {x : gcd(x, n) = d}.
bool is_gcd_set(const ConnectionSet& s);

/// The divisor set D with S = S_n(D); throws Error(precondition) when S is
/// not a gcd-set.
DivisorSet gcd_divisors(const ConnectionSet& s);

/// (u, u + n/2 mod n); odd n has no antipode.
std::pair<Vertex, Vertex> antipodal_pair(std::int64_t n, Vertex u);

std::vector<std::int64_t> proper_divisors(std::int64_t n);

}  // namespace pgstlab
