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

#include "pgstlab/numeric.hpp"

#include <numbers>

#include <boost/math/constants/constants.hpp>

namespace pgstlab {

const HighReal& high_pi() {
  static const HighReal pi = boost::math::constants::pi<HighReal>();
  return pi;
}

BigInt round_to_bigint(const HighReal& x) {
  return static_cast<BigInt>(boost::multiprecision::round(x));
}

HighReal centered_fraction(const HighReal& x) {
  return x - boost::multiprecision::round(x);
}

DoubleDouble DoubleDouble::from(const HighReal& x) {
  DoubleDouble dd;
  dd.hi = static_cast<double>(x);
  dd.lo = static_cast<double>(x - HighReal(dd.hi));
  return dd;
}

std::complex<double> unit_root(std::int64_t k, std::int64_t n) {
  k %= n;
  if (k < 0) k += n;
  if (2 * k > n) return std::conj(unit_root(n - k, n));
  // 2 pi k / n = quadrant * pi/2 + (pi/2) * r / n with 0 <= r < n.
  const std::int64_t quadrant = (4 * k) / n;
  const std::int64_t r = 4 * k - quadrant * n;
  const double half_pi = std::numbers::pi / 2;
  double c;
  double s;
  if (2 * r == n) {
    c = s = std::cos(std::numbers::pi / 4);
  } else if (2 * r < n) {
    const double phi = half_pi * static_cast<double>(r) / static_cast<double>(n);
    c = std::cos(phi);
    s = std::sin(phi);
  } else {
    const double phi = half_pi * static_cast<double>(n - r) / static_cast<double>(n);
    c = std::sin(phi);
    s = std::cos(phi);
  }
  if (quadrant == 0) return {c, s};
  if (quadrant == 1) return {-s, c};
  return {-c, -s};  // k = n/2
}

double reduce_angle(double radians) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::remainder(radians, two_pi);
  if (r <= -std::numbers::pi) r += two_pi;
  return r;
}

std::string to_decimal(const BigInt& value) { return value.str(); }

}  // namespace pgstlab
