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

#include "pgstlab/lattice.hpp"

#include <cmath>
#include <string>

#include "pgstlab/error.hpp"

namespace pgstlab {
namespace {

HighReal dot(const std::vector<HighReal>& a, const std::vector<HighReal>& b) {
  HighReal s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

struct GramSchmidt {
  RealMatrix star;
  std::vector<HighReal> norms;  // |b*_i|^2
  RealMatrix mu;
};

GramSchmidt gram_schmidt(const RealMatrix& b) {
  const std::size_t d = b.size();
  GramSchmidt g{b, std::vector<HighReal>(d), RealMatrix(d, std::vector<HighReal>(d))};
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      g.mu[i][j] = dot(b[i], g.star[j]) / g.norms[j];
      for (std::size_t k = 0; k < b[i].size(); ++k) g.star[i][k] -= g.mu[i][j] * g.star[j][k];
    }
    g.norms[i] = dot(g.star[i], g.star[i]);
    if (g.norms[i] == 0) throw Error(ErrorKind::invalid_argument, "lattice basis is singular");
  }
  return g;
}

}  // namespace

ReducedBasis lll_reduce(RealMatrix basis, double delta) {
  const std::size_t d = basis.size();
  for (const auto& row : basis) {
    if (row.size() != d) {
      throw Error(ErrorKind::invalid_argument, "LLL expects a square basis");
    }
  }
  ReducedBasis out{std::move(basis), std::vector<std::vector<BigInt>>(d, std::vector<BigInt>(d))};
  for (std::size_t i = 0; i < d; ++i) out.transform[i][i] = 1;
  if (d < 2) return out;

  auto& b = out.rows;
  auto& u = out.transform;
  GramSchmidt g = gram_schmidt(b);
  const HighReal half("0.5");
  const HighReal lovasz(delta);

  auto size_reduce = [&](std::size_t k, std::size_t j) {
    if (boost::multiprecision::abs(g.mu[k][j]) <= half) return;
    const HighReal r = boost::multiprecision::round(g.mu[k][j]);
    const BigInt ri = round_to_bigint(r);
    for (std::size_t c = 0; c < d; ++c) {
      b[k][c] -= r * b[j][c];
      u[k][c] -= ri * u[j][c];
    }
    g.mu[k][j] -= r;
    for (std::size_t i = 0; i < j; ++i) g.mu[k][i] -= r * g.mu[j][i];
  };

  std::size_t k = 1;
  std::size_t guard = 0;
  while (k < d) {
    if (++guard > 100000 * d) {
      throw Error(ErrorKind::invalid_argument, "LLL did not converge");
    }
    size_reduce(k, k - 1);
    const HighReal m = g.mu[k][k - 1];
    if (g.norms[k] < (lovasz - m * m) * g.norms[k - 1]) {
      std::swap(b[k], b[k - 1]);
      std::swap(u[k], u[k - 1]);
      g = gram_schmidt(b);
      k = std::max<std::size_t>(k - 1, 1);
    } else {
      for (std::size_t j = k - 1; j-- > 0;) size_reduce(k, j);
      ++k;
    }
  }
  return out;
}

bool enumerate_close_vectors(const ReducedBasis& basis, std::span<const HighReal> target,
                             double radius, std::size_t node_budget,
                             const std::function<bool(std::span<const std::int64_t>)>& visit) {
  const std::size_t d = basis.rows.size();
  if (target.size() != d) {
    throw Error(ErrorKind::invalid_argument, "target dimension does not match the lattice");
  }
  const GramSchmidt g = gram_schmidt(basis.rows);

  // After reduction the Gram-Schmidt data is well conditioned, so the tree
  // search runs in doubles; callers re-verify every candidate exactly.
  std::vector<double> norms(d);
  std::vector<std::vector<double>> mu(d, std::vector<double>(d));
  std::vector<double> tau(d);
  const std::vector<HighReal> t(target.begin(), target.end());
  for (std::size_t i = 0; i < d; ++i) {
    norms[i] = static_cast<double>(g.norms[i]);
    for (std::size_t j = 0; j < i; ++j) mu[i][j] = static_cast<double>(g.mu[i][j]);
    tau[i] = static_cast<double>(dot(t, g.star[i]) / g.norms[i]);
  }

  std::vector<std::int64_t> x(d);
  std::vector<double> partial(d + 1, 0.0);  // squared distance of levels > i
  const double r2 = radius * radius;
  std::size_t nodes = 0;
  bool stopped = false;

  // Distance from the target: sum_i (x_i + sum_{j>i} x_j mu_ji - tau_i)^2 B_i.
  std::function<void(std::size_t)> descend = [&](std::size_t level) {
    double shift = -tau[level];
    for (std::size_t j = level + 1; j < d; ++j) shift += static_cast<double>(x[j]) * mu[j][level];
    const double center = -shift;
    const double budget = r2 - partial[level + 1];
    if (budget < 0) return;
    const double half_width = std::sqrt(budget / norms[level]);
    const auto lo = static_cast<std::int64_t>(std::ceil(center - half_width));
    const auto hi = static_cast<std::int64_t>(std::floor(center + half_width));
    for (std::int64_t xi = lo; xi <= hi && !stopped; ++xi) {
      if (++nodes > node_budget) {
        stopped = true;
        return;
      }
      x[level] = xi;
      const double diff = static_cast<double>(xi) - center;
      partial[level] = partial[level + 1] + diff * diff * norms[level];
      if (level == 0) {
        if (!visit(x)) stopped = true;
      } else {
        descend(level - 1);
      }
    }
  };
  if (d > 0) descend(d - 1);
  return nodes <= node_budget;
}

}  // namespace pgstlab
