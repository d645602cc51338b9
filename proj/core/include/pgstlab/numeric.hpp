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

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace pgstlab {

using BigInt = boost::multiprecision::mpz_int;

/// 100 decimal digits (334 bits). Enough headroom for q * lambda with q
/// beyond 10^40 while keeping ~60 digits of fractional part.
using HighReal = boost::multiprecision::mpfr_float_100;

const HighReal& high_pi();

/// Nearest integer to x, ties away from zero.
BigInt round_to_bigint(const HighReal& x);

/// x minus its nearest integer, in [-1/2, 1/2].
HighReal centered_fraction(const HighReal& x);

/// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2.
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;

  static DoubleDouble from(const HighReal& x);
};

/// Fractional part of q * x, centered into [-1/2, 1/2]. Exact product
/// splitting keeps the result accurate to ~1e-16 absolute for |q| < 2^53.
inline double centered_turns(std::int64_t q, const DoubleDouble& x) {
  const double qd = static_cast<double>(q);
  const double prod = qd * x.hi;
  const double err = std::fma(qd, x.hi, -prod);
  double frac = prod - std::nearbyint(prod);
  frac += err + qd * x.lo;
  return frac - std::nearbyint(frac);
}

/// exp(2 pi i k / n), reduced to the first octant so that the values at
/// multiples of pi/2 come out exact and conjugate pairs match bit for bit.
std::complex<double> unit_root(std::int64_t k, std::int64_t n);

/// Reduce an angle to (-pi, pi].
double reduce_angle(double radians);

std::string to_decimal(const BigInt& value);

}  // namespace pgstlab
