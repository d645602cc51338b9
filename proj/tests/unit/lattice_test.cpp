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
#include <random>
#include <set>

#include <gtest/gtest.h>

namespace pgstlab {
namespace {

RealMatrix random_basis(std::size_t d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-50, 50);
  RealMatrix b(d, std::vector<HighReal>(d));
  for (;;) {
    for (auto& row : b) {
      for (auto& x : row) x = entry(rng);
    }
    // Reject singular draws by checking the Gram-Schmidt lengths below.
    bool singular = false;
    std::vector<std::vector<double>> q;
    for (const auto& row : b) {
      std::vector<double> v(row.size());
      for (std::size_t i = 0; i < row.size(); ++i) v[i] = static_cast<double>(row[i]);
      for (const auto& u : q) {
        double dot = 0.0;
        double norm = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) {
          dot += v[i] * u[i];
          norm += u[i] * u[i];
        }
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= dot / norm * u[i];
      }
      double len = 0.0;
      for (double x : v) len += x * x;
      if (len < 1e-6) singular = true;
      q.push_back(v);
    }
    if (!singular) return b;
  }
}

double dot(const std::vector<HighReal>& a, const std::vector<HighReal>& b) {
  HighReal s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return static_cast<double>(s);
}

TEST(Lll, ReducedRowsAreTransformOfOriginal) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t d = 2 + trial % 4;
    const RealMatrix original = random_basis(d, rng);
    const ReducedBasis r = lll_reduce(original);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        HighReal x = 0;
        for (std::size_t k = 0; k < d; ++k) x += HighReal(r.transform[i][k]) * original[k][j];
        EXPECT_NEAR(static_cast<double>(x - r.rows[i][j]), 0.0, 1e-20);
      }
    }
  }
}

TEST(Lll, LovaszAndSizeConditions) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t d = 3 + trial % 3;
    const ReducedBasis r = lll_reduce(random_basis(d, rng));
    // Gram-Schmidt in doubles on the reduced rows.
    std::vector<std::vector<double>> star;
    std::vector<double> norms;
    std::vector<std::vector<double>> mu(d, std::vector<double>(d, 0.0));
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<double> v(d);
      for (std::size_t k = 0; k < d; ++k) v[k] = static_cast<double>(r.rows[i][k]);
      for (std::size_t j = 0; j < i; ++j) {
        double p = 0.0;
        for (std::size_t k = 0; k < d; ++k) p += static_cast<double>(r.rows[i][k]) * star[j][k];
        mu[i][j] = p / norms[j];
        for (std::size_t k = 0; k < d; ++k) v[k] -= mu[i][j] * star[j][k];
      }
      double n2 = 0.0;
      for (double x : v) n2 += x * x;
      star.push_back(v);
      norms.push_back(n2);
    }
    for (std::size_t i = 1; i < d; ++i) {
      for (std::size_t j = 0; j < i; ++j) EXPECT_LE(std::abs(mu[i][j]), 0.5 + 1e-9);
      EXPECT_GE(norms[i], (0.99 - mu[i][i - 1] * mu[i][i - 1]) * norms[i - 1] * (1 - 1e-9));
    }
  }
}

TEST(Lll, FindsShortVectorOfKnapsackLattice) {
  // Rows (1,0,a), (0,1,b), (0,0,N) with a*x + b*y = 0 mod N having a short
  // solution (3, -2) when a = 2, b = 3.
  RealMatrix b{{1, 0, 2000}, {0, 1, 3000}, {0, 0, 1000003}};
  const ReducedBasis r = lll_reduce(b);
  EXPECT_LE(dot(r.rows[0], r.rows[0]), 13.0 + 1e-9);
}

TEST(Enumerate, MatchesBruteForceBall) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> shift(-3.0, 3.0);
  for (int trial = 0; trial < 8; ++trial) {
    const std::size_t d = 2 + trial % 2;
    const ReducedBasis r = lll_reduce(random_basis(d, rng));
    std::vector<HighReal> target(d);
    for (auto& x : target) x = shift(rng) * 10;
    const double radius = 40.0;

    std::set<std::vector<std::int64_t>> found;
    EXPECT_TRUE(enumerate_close_vectors(r, target, radius, 10'000'000,
                                        [&](std::span<const std::int64_t> x) {
                                          found.emplace(x.begin(), x.end());
                                          return true;
                                        }));
    // The reduced rows are short, so the ball only holds small coordinates.
    std::set<std::vector<std::int64_t>> expect;
    const int box = 12;
    std::vector<std::int64_t> x(d, -box);
    for (;;) {
      double dist = 0.0;
      for (std::size_t j = 0; j < d; ++j) {
        HighReal c = -target[j];
        for (std::size_t i = 0; i < d; ++i) c += HighReal(x[i]) * r.rows[i][j];
        dist += static_cast<double>(c * c);
      }
      if (dist <= radius * radius) expect.insert(x);
      std::size_t k = 0;
      while (k < d && x[k] == box) x[k++] = -box;
      if (k == d) break;
      ++x[k];
    }
    EXPECT_EQ(found, expect);
  }
}

TEST(Enumerate, BudgetAndEarlyStop) {
  RealMatrix b{{1, 0}, {0, 1}};
  const ReducedBasis r = lll_reduce(b);
  const std::vector<HighReal> origin{0, 0};
  EXPECT_FALSE(enumerate_close_vectors(r, origin, 100.0, 10,
                                       [](std::span<const std::int64_t>) { return true; }));
  int visits = 0;
  enumerate_close_vectors(r, origin, 100.0, 1'000'000, [&](std::span<const std::int64_t>) {
    return ++visits < 3;
  });
  EXPECT_EQ(visits, 3);
}

}  // namespace
}  // namespace pgstlab
