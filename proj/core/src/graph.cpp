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

#include "pgstlab/graph.hpp"

#include <algorithm>
#include <numeric>

#include "pgstlab/error.hpp"

namespace pgstlab {
namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

void normalize(std::vector<std::int64_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

ConnectionSet::ConnectionSet(std::int64_t n, std::vector<std::int64_t> elements)
    : n_(n), elements_(std::move(elements)) {
  if (n < 1) {
    throw Error(ErrorKind::invalid_order,
                "circulant order must be positive, got " + std::to_string(n));
  }
  normalize(elements_);
  for (const std::int64_t s : elements_) {
    if (s <= 0 || s >= n) {
      throw Error(ErrorKind::invalid_connection_set,
                  "connection element " + std::to_string(s) +
                      " outside 1.." + std::to_string(n - 1));
    }
  }
  for (const std::int64_t s : elements_) {
    if (!contains(n - s)) {
      throw Error(ErrorKind::invalid_connection_set,
                  "connection set is not symmetric: " + std::to_string(s) +
                      " present but " + std::to_string(n - s) + " missing");
    }
  }
}

bool ConnectionSet::contains(std::int64_t residue) const {
  return std::binary_search(elements_.begin(), elements_.end(), residue);
}

DivisorSet::DivisorSet(std::int64_t n, std::vector<std::int64_t> divisors)
    : n_(n), divisors_(std::move(divisors)) {
  if (n < 1) {
    throw Error(ErrorKind::invalid_order,
                "modulus must be positive, got " + std::to_string(n));
  }
  normalize(divisors_);
  for (const std::int64_t d : divisors_) {
    if (d < 1 || d >= n || n % d != 0) {
      throw Error(ErrorKind::invalid_divisor,
                  std::to_string(d) + " is not a proper divisor of " +
                      std::to_string(n));
    }
  }
}

bool DivisorSet::contains(std::int64_t d) const {
  return std::binary_search(divisors_.begin(), divisors_.end(), d);
}

bool CirculantGraph::adjacent(Vertex a, Vertex b) const {
  return connection_.contains(mod(a - b, order()));
}

CompositeGraph::CompositeGraph(std::vector<Factor> factors)
    : factors_(std::move(factors)), order_(1) {
  if (factors_.empty()) {
    throw Error(ErrorKind::invalid_argument,
                "a product needs at least one factor");
  }
  for (const auto& f : factors_) order_ *= f.graph.order();
}

std::size_t CompositeGraph::degree() const noexcept {
  std::size_t d = 0;
  for (const auto& f : factors_) d += f.graph.degree();
  return d;
}

std::vector<Vertex> CompositeGraph::tuple_of(Vertex flat) const {
  if (flat < 0 || flat >= order_) {
    throw Error(ErrorKind::vertex_out_of_range,
                "vertex " + std::to_string(flat) + " outside 0.." +
                    std::to_string(order_ - 1));
  }
  std::vector<Vertex> tuple(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    const std::int64_t n = factors_[i].graph.order();
    tuple[i] = flat % n;
    flat /= n;
  }
  return tuple;
}

Vertex CompositeGraph::index_of(std::span<const Vertex> tuple) const {
  if (tuple.size() != factors_.size()) {
    throw Error(ErrorKind::vertex_out_of_range,
                "vertex tuple has " + std::to_string(tuple.size()) +
                    " coordinates, product has " +
                    std::to_string(factors_.size()) + " factors");
  }
  Vertex flat = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    const std::int64_t n = factors_[i].graph.order();
    if (tuple[i] < 0 || tuple[i] >= n) {
      throw Error(ErrorKind::vertex_out_of_range,
                  "vertex coordinate " + std::to_string(tuple[i]) +
                      " outside 0.." + std::to_string(n - 1));
    }
    flat = flat * n + tuple[i];
  }
  return flat;
}

CompositeGraph cartesian_product(const CompositeGraph& a, const CompositeGraph& b) {
  std::vector<CompositeGraph::Factor> factors(a.factors().begin(), a.factors().end());
  factors.insert(factors.end(), b.factors().begin(), b.factors().end());
  return CompositeGraph(std::move(factors));
}

CirculantGraph make_cycle(std::int64_t n) {
  if (n < 3) {
    throw Error(ErrorKind::invalid_order,
                "a cycle needs at least 3 vertices, got " + std::to_string(n));
  }
  return CirculantGraph(ConnectionSet(n, {1, n - 1}));
}

CirculantGraph make_circulant(std::int64_t n, std::vector<std::int64_t> elements) {
  return CirculantGraph(ConnectionSet(n, std::move(elements)));
}

ConnectionSet gcd_set(const DivisorSet& divisors) {
  const std::int64_t n = divisors.order();
  std::vector<std::int64_t> elements;
  for (std::int64_t x = 1; x < n; ++x) {
    if (divisors.contains(std::gcd(x, n))) elements.push_back(x);
  }
  return ConnectionSet(n, std::move(elements));
}

CirculantGraph make_gcd_graph(const DivisorSet& divisors) {
  return CirculantGraph(gcd_set(divisors));
}

CirculantGraph union_graphs(const CirculantGraph& a, const CirculantGraph& b) {
  if (a.order() != b.order()) {
    throw Error(ErrorKind::incompatible_order,
                "cannot unite circulants of orders " + std::to_string(a.order()) +
                    " and " + std::to_string(b.order()));
  }
  std::vector<std::int64_t> merged;
  const auto sa = a.connection().elements();
  const auto sb = b.connection().elements();
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                        std::back_inserter(merged));
  if (!merged.empty()) {
    throw Error(ErrorKind::non_disjoint,
                "connection sets overlap at " + std::to_string(merged.front()));
  }
  std::merge(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(merged));
  return CirculantGraph(ConnectionSet(a.order(), std::move(merged)));
}

CirculantGraph complement_graph(const CirculantGraph& g) {
  const std::int64_t n = g.order();
  std::vector<std::int64_t> elements;
  for (std::int64_t x = 1; x < n; ++x) {
    if (!g.connection().contains(x)) elements.push_back(x);
  }
  return CirculantGraph(ConnectionSet(n, std::move(elements)));
}

bool is_gcd_set(const ConnectionSet& s) {
  const std::int64_t n = s.order();
  // Each gcd class must be entirely inside or entirely outside S.
  std::vector<int> state(static_cast<std::size_t>(n) + 1, -1);
  for (std::int64_t x = 1; x < n; ++x) {
    const auto d = static_cast<std::size_t>(std::gcd(x, n));
    const int inside = s.contains(x) ? 1 : 0;
    if (state[d] == -1) {
      state[d] = inside;
    } else if (state[d] != inside) {
      return false;
    }
  }
  return true;
}

DivisorSet gcd_divisors(const ConnectionSet& s) {
  if (!is_gcd_set(s)) {
    throw Error(ErrorKind::precondition, "connection set is not a gcd-set");
  }
  std::vector<std::int64_t> divisors;
  for (const std::int64_t x : s.elements()) divisors.push_back(std::gcd(x, s.order()));
  return DivisorSet(s.order(), std::move(divisors));
}

std::pair<Vertex, Vertex> antipodal_pair(std::int64_t n, Vertex u) {
  if (n < 1 || n % 2 != 0) {
    throw Error(ErrorKind::no_antipode,
                "order " + std::to_string(n) + " is odd: no antipodal vertex");
  }
  if (u < 0 || u >= n) {
    throw Error(ErrorKind::vertex_out_of_range,
                "vertex " + std::to_string(u) + " outside 0.." + std::to_string(n - 1));
  }
  return {u, (u + n / 2) % n};
}

std::vector<std::int64_t> proper_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

}  // namespace pgstlab
