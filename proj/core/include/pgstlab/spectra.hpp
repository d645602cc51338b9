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
#include <utility>
#include <vector>

#include "pgstlab/cyclotomic.hpp"
#include "pgstlab/graph.hpp"
#include "pgstlab/numeric.hpp"

namespace pgstlab {

/// Eigenvalues of a circulant, indexed by character l: the eigenvector of
/// values[l] is (1, w^l, ..., w^(l(n-1))) for every connection set.
struct Spectrum {
  std::int64_t n = 0;
  std::vector<double> values;
  bool integral = false;
};

/// lambda_l = sum_{s in S} cos(2 pi l s / n). The integrality flag is
/// decided exactly through the gcd-set criterion.
Spectrum eigenvalues(const CirculantGraph& g);

/// Spectrum of the complement of a regular graph with the given spectrum:
/// n - 1 - lambda_0 on the trivial character, -1 - lambda_l elsewhere.
Spectrum complement_spectrum(const Spectrum& spectrum);

/// Character sums evaluated in HighReal, for phase reductions at large t.
std::vector<HighReal> precise_eigenvalues(const CirculantGraph& g);
std::vector<HighReal> precise_complement(std::span<const HighReal> values);

/// lambda_l as sum_{s in S} w_n^{l s} in Z[w_n].
CyclotomicInteger exact_eigenvalue(std::int64_t n, std::int64_t l, const ConnectionSet& s);

/// Every exact eigenvalue reduces to a rational integer. Cost grows like
/// n^2 phi(n); meant for desk-scale orders.
bool is_integral(const CirculantGraph& g);

struct IndependenceCertificate {
  std::int64_t n = 0;
  std::vector<std::int64_t> indices;
  /// Row r holds the power-basis coordinates of lambda_{indices[r]}.
  std::vector<std::vector<BigInt>> coordinates;
  std::int64_t rank = 0;
  bool independent = false;
};

/// Exact rank of integer matrix rows by fraction-free (Bareiss) elimination.
std::int64_t exact_rank(std::vector<std::vector<BigInt>> rows);

/// Certifies that lambda_0, ..., lambda_{n/4 - 1} of C_n are linearly
/// independent over Q. Only n = 2^k with k >= 3 is supported.
IndependenceCertificate rational_independence(std::int64_t n);

struct EigenRelation {
  /// (character index, integer coefficient), indices ascending, merged.
  std::vector<std::pair<std::int64_t, std::int64_t>> terms;
  /// sum of coefficient * lambda_index, evaluated exactly.
  CyclotomicInteger residual;
};

/// Integer relations among the eigenvalues of C_{m p} obtained by
/// multiplying 1 + 2 sum_r cos(2 pi r / p) = 0 by lambda_1 and by lambda_2.
///
/// `shift_one` is lambda_1 + sum_r (lambda_{mr+1} + lambda_{mr-1}),
/// `shift_two` the same with offsets 2, and `obstruction` their difference:
/// a relation whose coefficients sum to zero while the index-weighted sum is
/// odd, which rules out every time sequence that aligns all antipodal phases.
struct DependencyWitness {
  std::int64_t m = 0;
  std::int64_t p = 0;
  std::int64_t n = 0;
  EigenRelation shift_one;
  EigenRelation shift_two;
  EigenRelation obstruction;
  /// The obstruction coefficients also annihilate the complement spectrum
  /// (exactly when the trivial character does not occur, i.e. m >= 3).
  bool complement_valid = false;
  CyclotomicInteger complement_residual;

  bool valid() const {
    return shift_one.residual.is_zero() && shift_two.residual.is_zero() &&
           obstruction.residual.is_zero();
  }
};

bool is_prime(std::int64_t p);

/// Requires p an odd prime and m >= 2 even.
DependencyWitness dependency_witness(std::int64_t m, std::int64_t p);

}  // namespace pgstlab
