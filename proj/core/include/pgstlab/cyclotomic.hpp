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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "pgstlab/numeric.hpp"

namespace pgstlab {

/// Dense integer polynomial, coefficient i multiplies x^i. Trailing zeros
/// are trimmed so the zero polynomial is the empty vector.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  /// -1 for the zero polynomial.
  std::int64_t degree() const noexcept {
    return static_cast<std::int64_t>(coefficients_.size()) - 1;
  }
  std::span<const BigInt> coefficients() const noexcept { return coefficients_; }
  const BigInt& leading() const { return coefficients_.back(); }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<BigInt> coefficients_;
};

/// Quotient of a by a monic divisor b; throws unless the division is exact.
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);

/// Phi_n, obtained from x^n - 1 by dividing out Phi_d for every proper
/// divisor d of n.
IntPolynomial cyclotomic_poly(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);

/// Element of Z[w_n], w_n = exp(2 pi i / n), stored in the power basis
/// 1, w, ..., w^(phi(n)-1). Reduction modulo the monic Phi_n keeps the
/// representation integral and canonical.
class CyclotomicInteger {
 public:
  /// The zero element of Z[w_n].
  explicit CyclotomicInteger(std::int64_t conductor);

  static CyclotomicInteger constant(std::int64_t conductor, const BigInt& value);
  /// w_n^k for any integer k.
  static CyclotomicInteger root_power(std::int64_t conductor, std::int64_t k);
  /// Reduce sum_k c_k w^k for an arbitrary-length coefficient list.
  static CyclotomicInteger from_powers(std::int64_t conductor,
                                       std::span<const BigInt> power_coefficients);

  std::int64_t conductor() const noexcept { return n_; }
  std::span<const BigInt> coefficients() const noexcept { return coefficients_; }

  bool is_zero() const;
  /// True when the element lies in Z (only the constant coordinate is set).
  bool is_rational_integer() const;

  std::complex<double> evaluate() const;

  CyclotomicInteger& operator+=(const CyclotomicInteger& other);
  CyclotomicInteger& operator-=(const CyclotomicInteger& other);
  CyclotomicInteger& operator*=(const BigInt& scalar);

  friend CyclotomicInteger operator+(CyclotomicInteger a, const CyclotomicInteger& b) {
    return a += b;
  }
  friend CyclotomicInteger operator-(CyclotomicInteger a, const CyclotomicInteger& b) {
    return a -= b;
  }
  friend CyclotomicInteger operator*(CyclotomicInteger a, const BigInt& s) { return a *= s; }
  friend CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b);
  friend bool operator==(const CyclotomicInteger&, const CyclotomicInteger&) = default;

 private:
  CyclotomicInteger(std::int64_t conductor, std::vector<BigInt> coefficients);
  void require_same_conductor(const CyclotomicInteger& other) const;

  std::int64_t n_;
  std::vector<BigInt> coefficients_;
};

}  // namespace pgstlab
