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

#include "pgstlab/spectra.hpp"

#include <map>
#include <numbers>
#include <string>

#include "pgstlab/error.hpp"

namespace pgstlab {
namespace {

std::vector<double> cosine_table(std::int64_t n) {
  std::vector<double> table(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k) {
    table[static_cast<std::size_t>(k)] = unit_root(k, n).real();
  }
  return table;
}

std::size_t product_mod(std::int64_t a, std::int64_t b, std::int64_t n) {
  return static_cast<std::size_t>(((a % n) * (b % n)) % n);
}

std::vector<std::pair<std::int64_t, std::int64_t>> merge_terms(
    const std::map<std::int64_t, std::int64_t>& terms) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& [index, coefficient] : terms) {
    if (coefficient != 0) out.emplace_back(index, coefficient);
  }
  return out;
}

EigenRelation evaluate_relation(const std::map<std::int64_t, std::int64_t>& terms,
                                std::int64_t n, const ConnectionSet& s) {
  EigenRelation relation{merge_terms(terms), CyclotomicInteger(n)};
  for (const auto& [index, coefficient] : relation.terms) {
    relation.residual += exact_eigenvalue(n, index, s) * BigInt(coefficient);
  }
  return relation;
}

}  // namespace

Spectrum eigenvalues(const CirculantGraph& g) {
  const std::int64_t n = g.order();
  const auto table = cosine_table(n);
  Spectrum spectrum{n, std::vector<double>(static_cast<std::size_t>(n), 0.0),
                    is_gcd_set(g.connection())};
  for (std::int64_t l = 0; l < n; ++l) {
    double sum = 0.0;
    for (const std::int64_t s : g.connection().elements()) sum += table[product_mod(l, s, n)];
    spectrum.values[static_cast<std::size_t>(l)] = sum;
  }
  return spectrum;
}

Spectrum complement_spectrum(const Spectrum& spectrum) {
  Spectrum out = spectrum;
  if (out.values.empty()) return out;
  out.values[0] = static_cast<double>(spectrum.n) - 1.0 - spectrum.values[0];
  for (std::size_t l = 1; l < out.values.size(); ++l) out.values[l] = -1.0 - spectrum.values[l];
  return out;
}

std::vector<HighReal> precise_eigenvalues(const CirculantGraph& g) {
  const std::int64_t n = g.order();
  std::vector<HighReal> table(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k) {
    table[static_cast<std::size_t>(k)] = boost::multiprecision::cos(
        HighReal(2) * high_pi() * HighReal(std::min(k, n - k)) / HighReal(n));
  }
  std::vector<HighReal> values(static_cast<std::size_t>(n));
  for (std::int64_t l = 0; l < n; ++l) {
    HighReal sum = 0;
    for (const std::int64_t s : g.connection().elements()) sum += table[product_mod(l, s, n)];
    values[static_cast<std::size_t>(l)] = sum;
  }
  return values;
}

std::vector<HighReal> precise_complement(std::span<const HighReal> values) {
  std::vector<HighReal> out(values.begin(), values.end());
  if (out.empty()) return out;
  out[0] = HighReal(static_cast<std::int64_t>(values.size()) - 1) - values[0];
  for (std::size_t l = 1; l < out.size(); ++l) out[l] = HighReal(-1) - values[l];
  return out;
}

CyclotomicInteger exact_eigenvalue(std::int64_t n, std::int64_t l, const ConnectionSet& s) {
  if (s.order() != n) {
    throw Error(ErrorKind::incompatible_order,
                "connection set has order " + std::to_string(s.order()) + ", expected " +
                    std::to_string(n));
  }
  const std::int64_t lr = ((l % n) + n) % n;
  std::vector<BigInt> powers(static_cast<std::size_t>(n));
  for (const std::int64_t x : s.elements()) powers[product_mod(lr, x, n)] += 1;
  return CyclotomicInteger::from_powers(n, powers);
}

bool is_integral(const CirculantGraph& g) {
  const std::int64_t n = g.order();
  // lambda_l = lambda_{n-l}, so half the characters suffice.
  for (std::int64_t l = 0; l <= n / 2; ++l) {
    if (!exact_eigenvalue(n, l, g.connection()).is_rational_integer()) return false;
  }
  return true;
}

std::int64_t exact_rank(std::vector<std::vector<BigInt>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  BigInt previous = 1;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        rows[i][j] = (rows[rank][col] * rows[i][j] - rows[i][col] * rows[rank][j]) / previous;
      }
      rows[i][col] = 0;
    }
    previous = rows[rank][col];
    ++rank;
  }
  return static_cast<std::int64_t>(rank);
}

IndependenceCertificate rational_independence(std::int64_t n) {
  if (n < 8 || (n & (n - 1)) != 0) {
    throw Error(ErrorKind::unsupported_order,
                "independence certificates exist only for n = 2^k with k >= 3, got " +
                    std::to_string(n));
  }
  const ConnectionSet cycle(n, {1, n - 1});
  IndependenceCertificate cert;
  cert.n = n;
  for (std::int64_t l = 0; l < n / 4; ++l) {
    cert.indices.push_back(l);
    const auto value = exact_eigenvalue(n, l, cycle);
    cert.coordinates.emplace_back(value.coefficients().begin(), value.coefficients().end());
  }
  cert.rank = exact_rank(cert.coordinates);
  cert.independent = cert.rank == static_cast<std::int64_t>(cert.indices.size());
  return cert;
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

DependencyWitness dependency_witness(std::int64_t m, std::int64_t p) {
  if (p < 3 || !is_prime(p)) {
    throw Error(ErrorKind::invalid_factorization,
                std::to_string(p) + " is not an odd prime");
  }
  if (m < 2 || m % 2 != 0) {
    throw Error(ErrorKind::invalid_factorization,
                "cofactor m must be even and at least 2, got " + std::to_string(m));
  }
  const std::int64_t n = m * p;
  auto idx = [n](std::int64_t k) { return ((k % n) + n) % n; };

  std::map<std::int64_t, std::int64_t> one{{1, 1}};
  std::map<std::int64_t, std::int64_t> two{{2, 1}};
  for (std::int64_t r = 1; r <= (p - 1) / 2; ++r) {
    one[idx(m * r + 1)] += 1;
    one[idx(m * r - 1)] += 1;
    two[idx(m * r + 2)] += 1;
    two[idx(m * r - 2)] += 1;
  }
  std::map<std::int64_t, std::int64_t> difference = two;
  for (const auto& [index, coefficient] : one) difference[index] -= coefficient;

  const ConnectionSet cycle(n, {1, n - 1});
  DependencyWitness w{m,
                      p,
                      n,
                      evaluate_relation(one, n, cycle),
                      evaluate_relation(two, n, cycle),
                      evaluate_relation(difference, n, cycle),
                      false,
                      CyclotomicInteger(n)};

  const ConnectionSet complement = complement_graph(CirculantGraph(cycle)).connection();
  w.complement_residual = evaluate_relation(difference, n, complement).residual;
  w.complement_valid = w.complement_residual.is_zero();
  return w;
}

}  // namespace pgstlab
