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

// Dense reference computations, deliberately independent of the character
// sums in the library: adjacency matrices are built edge by edge and
// exponentiated numerically.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "pgstlab/graph.hpp"

namespace pgstlab::testing {

inline Eigen::MatrixXd dense_adjacency(const CirculantGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index u = 0; u < n; ++u) {
    for (const auto s : g.connection().elements()) a(u, (u + s) % n) = 1.0;
  }
  return a;
}

// Adjacency of G_1 x G_2 x ...: A_1 (x) I + I (x) A_2 + ..., first factor
// most significant.
inline Eigen::MatrixXd dense_adjacency(const CompositeGraph& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(1, 1);
  for (const auto& f : g.factors()) {
    const Eigen::MatrixXd b = dense_adjacency(f.graph);
    const Eigen::Index p = a.rows();
    const Eigen::Index q = b.rows();
    Eigen::MatrixXd next = Eigen::MatrixXd::Zero(p * q, p * q);
    for (Eigen::Index i = 0; i < p; ++i) {
      for (Eigen::Index j = 0; j < p; ++j) {
        if (a(i, j) != 0.0) next.block(i * q, j * q, q, q) += a(i, j) * Eigen::MatrixXd::Identity(q, q);
      }
      next.block(i * q, i * q, q, q) += b;
    }
    a = next;
  }
  return a;
}

// exp(-i t A) through the symmetric eigen-decomposition.
inline Eigen::MatrixXcd dense_propagator(const Eigen::MatrixXd& a, double t) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  const Eigen::MatrixXd& v = solver.eigenvectors();
  Eigen::VectorXcd phases(a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    phases(i) = std::exp(std::complex<double>(0.0, -t * solver.eigenvalues()(i)));
  }
  return v.cast<std::complex<double>>() * phases.asDiagonal() * v.transpose().cast<std::complex<double>>();
}

// exp(-i t A) by scaling and squaring a truncated Taylor series; a second
// route that shares nothing with the eigen-solver.
inline Eigen::MatrixXcd taylor_propagator(const Eigen::MatrixXd& a, double t) {
  const Eigen::MatrixXcd m = std::complex<double>(0.0, -t) * a.cast<std::complex<double>>();
  const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  while (norm / std::ldexp(1.0, squarings) > 0.25) ++squarings;
  const Eigen::MatrixXcd scaled = m / std::ldexp(1.0, squarings);
  Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(a.rows(), a.cols());
  Eigen::MatrixXcd term = result;
  for (int k = 1; k <= 24; ++k) {
    term = term * scaled / static_cast<double>(k);
    result += term;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

inline bool integral_by_eigensolver(const CirculantGraph& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense_adjacency(g), Eigen::EigenvaluesOnly);
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double x = solver.eigenvalues()(i);
    if (std::abs(x - std::round(x)) > 1e-8) return false;
  }
  return true;
}

// A symmetric subset of Z_n \ {0}, each pair {s, n-s} kept with probability 1/2.
inline std::vector<std::int64_t> random_symmetric_set(std::int64_t n, std::mt19937_64& rng) {
  std::vector<std::int64_t> s;
  for (std::int64_t x = 1; 2 * x <= n; ++x) {
    if (rng() & 1U) {
      s.push_back(x);
      if (x != n - x) s.push_back(n - x);
    }
  }
  return s;
}

// Every symmetric subset of Z_n \ {0}; the bits of `mask` pick the pairs.
inline std::vector<std::int64_t> symmetric_set_from_mask(std::int64_t n, std::uint64_t mask) {
  std::vector<std::int64_t> s;
  for (std::int64_t x = 1; 2 * x <= n; ++x) {
    if (mask >> (x - 1) & 1U) {
      s.push_back(x);
      if (x != n - x) s.push_back(n - x);
    }
  }
  return s;
}

}  // namespace pgstlab::testing
