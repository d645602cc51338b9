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

#include "pgstlab/cyclotomic.hpp"

#include <numbers>
#include <string>

#include "pgstlab/error.hpp"

namespace pgstlab {
namespace {

void trim(std::vector<BigInt>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

std::int64_t mobius(std::int64_t n) {
  int sign = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

// Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}; multiplications first so every
// division by x^d - 1 is exact. Independent of the recursive definition.
std::vector<BigInt> cyclotomic_by_mobius(std::int64_t n) {
  std::vector<BigInt> poly{1};
  std::vector<std::int64_t> divide_by;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const std::int64_t mu = mobius(n / d);
    if (mu == 1) {
      // poly *= x^d - 1
      std::vector<BigInt> next(poly.size() + static_cast<std::size_t>(d));
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + static_cast<std::size_t>(d)] += poly[i];
        next[i] -= poly[i];
      }
      poly = std::move(next);
    } else if (mu == -1) {
      divide_by.push_back(d);
    }
  }
  for (const std::int64_t d : divide_by) {
    // poly /= x^d - 1, synthetic division from the top.
    const auto du = static_cast<std::size_t>(d);
    std::vector<BigInt> quotient(poly.size() - du);
    for (std::size_t k = poly.size(); k-- > du;) {
      const BigInt q = poly[k];
      quotient[k - du] = q;
      poly[k - du] += q;
      poly[k] = 0;
    }
    poly = std::move(quotient);
  }
  trim(poly);
  return poly;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim(coefficients_);
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.coefficients_.empty() || b.coefficients_.empty()) return IntPolynomial();
  std::vector<BigInt> out(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      out[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.degree() < 0 || b.leading() != 1) {
    throw Error(ErrorKind::invalid_argument, "divisor must be monic");
  }
  std::vector<BigInt> rem(a.coefficients().begin(), a.coefficients().end());
  const auto db = static_cast<std::size_t>(b.degree());
  if (rem.size() < db + 1) {
    if (!rem.empty()) throw Error(ErrorKind::invalid_argument, "division is not exact");
    return IntPolynomial();
  }
  std::vector<BigInt> quotient(rem.size() - db);
  for (std::size_t k = rem.size(); k-- > db;) {
    const BigInt q = rem[k];
    if (q == 0) continue;
    quotient[k - db] = q;
    for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] -= q * b.coefficients()[i];
  }
  trim(rem);
  if (!rem.empty()) throw Error(ErrorKind::invalid_argument, "division is not exact");
  return IntPolynomial(std::move(quotient));
}

IntPolynomial cyclotomic_poly(std::int64_t n) {
  if (n < 1) {
    throw Error(ErrorKind::invalid_argument,
                "cyclotomic polynomial needs n >= 1, got " + std::to_string(n));
  }
  std::vector<BigInt> xn1(static_cast<std::size_t>(n) + 1);
  xn1.front() = -1;
  xn1.back() = 1;
  IntPolynomial divisor(std::vector<BigInt>{1});
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d == 0) divisor = divisor * cyclotomic_poly(d);
  }
  return divide_exact(IntPolynomial(std::move(xn1)), divisor);
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

CyclotomicInteger::CyclotomicInteger(std::int64_t conductor)
    : CyclotomicInteger(conductor, {}) {}

CyclotomicInteger::CyclotomicInteger(std::int64_t conductor, std::vector<BigInt> coefficients)
    : n_(conductor), coefficients_(std::move(coefficients)) {
  if (conductor < 1) {
    throw Error(ErrorKind::invalid_argument,
                "conductor must be positive, got " + std::to_string(conductor));
  }
  coefficients_.resize(static_cast<std::size_t>(euler_phi(conductor)));
}

CyclotomicInteger CyclotomicInteger::constant(std::int64_t conductor, const BigInt& value) {
  CyclotomicInteger out(conductor);
  out.coefficients_.front() = value;
  return out;
}

CyclotomicInteger CyclotomicInteger::root_power(std::int64_t conductor, std::int64_t k) {
  if (conductor < 1) return CyclotomicInteger(conductor);  // throws
  const std::int64_t r = ((k % conductor) + conductor) % conductor;
  std::vector<BigInt> powers(static_cast<std::size_t>(r) + 1);
  powers.back() = 1;
  return from_powers(conductor, powers);
}

CyclotomicInteger CyclotomicInteger::from_powers(std::int64_t conductor,
                                                 std::span<const BigInt> power_coefficients) {
  if (conductor < 1) return CyclotomicInteger(conductor);  // throws
  const auto modulus = cyclotomic_by_mobius(conductor);
  const std::size_t phi = modulus.size() - 1;
  std::vector<BigInt> c(power_coefficients.begin(), power_coefficients.end());
  for (std::size_t k = c.size(); k-- > phi;) {
    if (c[k] == 0) continue;
    const BigInt top = c[k];
    for (std::size_t i = 0; i <= phi; ++i) c[k - phi + i] -= top * modulus[i];
  }
  c.resize(phi);
  return CyclotomicInteger(conductor, std::move(c));
}

bool CyclotomicInteger::is_zero() const {
  for (const auto& c : coefficients_) {
    if (c != 0) return false;
  }
  return true;
}

bool CyclotomicInteger::is_rational_integer() const {
  for (std::size_t i = 1; i < coefficients_.size(); ++i) {
    if (coefficients_[i] != 0) return false;
  }
  return true;
}

std::complex<double> CyclotomicInteger::evaluate() const {
  std::complex<double> sum = 0.0;
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    if (coefficients_[k] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) /
                         static_cast<double>(n_);
    sum += coefficients_[k].convert_to<double>() * std::polar(1.0, angle);
  }
  return sum;
}

void CyclotomicInteger::require_same_conductor(const CyclotomicInteger& other) const {
  if (other.n_ != n_) {
    throw Error(ErrorKind::invalid_argument,
                "cyclotomic conductors differ: " + std::to_string(n_) + " vs " +
                    std::to_string(other.n_));
  }
}

CyclotomicInteger& CyclotomicInteger::operator+=(const CyclotomicInteger& other) {
  require_same_conductor(other);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
  return *this;
}

CyclotomicInteger& CyclotomicInteger::operator-=(const CyclotomicInteger& other) {
  require_same_conductor(other);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] -= other.coefficients_[i];
  return *this;
}

CyclotomicInteger& CyclotomicInteger::operator*=(const BigInt& scalar) {
  for (auto& c : coefficients_) c *= scalar;
  return *this;
}

CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b) {
  a.require_same_conductor(b);
  std::vector<BigInt> product(a.coefficients_.size() * 2);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    if (a.coefficients_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      product[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return CyclotomicInteger::from_powers(a.n_, product);
}

}  // namespace pgstlab
