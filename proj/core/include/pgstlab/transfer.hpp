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
#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "pgstlab/graph.hpp"
#include "pgstlab/numeric.hpp"
#include "pgstlab/spectra.hpp"

namespace pgstlab {

/// Evolution time: either a plain double, or exactly 2*pi*q for integer q.
/// The second form keeps phases exact for arbitrarily large q.
class EvolutionTime {
 public:
  static EvolutionTime at(double t) { return EvolutionTime(t); }
  static EvolutionTime two_pi_multiple(BigInt q) { return EvolutionTime(std::move(q)); }

  bool is_two_pi_multiple() const noexcept { return std::holds_alternative<BigInt>(repr_); }
  /// Nearest double to t.
  double value() const;
  const BigInt& multiple() const;

  friend bool operator==(const EvolutionTime&, const EvolutionTime&) = default;

 private:
  explicit EvolutionTime(double t) : repr_(t) {}
  explicit EvolutionTime(BigInt q) : repr_(std::move(q)) {}

  std::variant<double, BigInt> repr_;
};

struct TransferResult {
  std::complex<double> amplitude;
  double fidelity = 0.0;  // |amplitude|
  double phase = 0.0;     // arg(amplitude)

  static TransferResult from(std::complex<double> amplitude);
};

struct AmplitudeQuery {
  CirculantGraph graph;
  Vertex u = 0;
  Vertex v = 0;
  EvolutionTime t = EvolutionTime::at(0.0);
};

/// Closed-form evaluator of H(t) = exp(-itA) for one circulant:
///   H(t)_{u,v} = (1/n) sum_l exp(-i lambda_l t) w^{l (u - v)}.
/// High-precision eigenvalues are built lazily, the first time a time is
/// large enough to need them (|t| * max|lambda| > 2^40, or any 2*pi*q time).
class Propagator {
 public:
  explicit Propagator(const CirculantGraph& g);

  std::int64_t order() const noexcept { return spectrum_.n; }
  const Spectrum& spectrum() const noexcept { return spectrum_; }

  /// Same eigenvectors, complement eigenvalues.
  Propagator complement() const;

  std::complex<double> amplitude(Vertex u, Vertex v, const EvolutionTime& t) const;

  /// lambda_l * t reduced to (-pi, pi].
  double phase(std::size_t l, const EvolutionTime& t) const;

  std::span<const HighReal> precise_eigenvalues() const;
  std::span<const DoubleDouble> split_eigenvalues() const;

 private:
  struct Precise;
  Propagator(Spectrum spectrum, std::shared_ptr<Precise> precise);
  void check_vertex(Vertex x) const;

  Spectrum spectrum_;
  double max_abs_ = 0.0;
  std::shared_ptr<Precise> precise_;
};

TransferResult amplitude(const AmplitudeQuery& q);

/// Entry of the transition matrix of a Cartesian product: the product of
/// the factor entries.
TransferResult amplitude(const CompositeGraph& g, std::span<const Vertex> u,
                         std::span<const Vertex> v, const EvolutionTime& t);

/// All queries must share one time; returns the product of the amplitudes.
TransferResult product_amplitude(std::span<const AmplitudeQuery> queries);

/// Amplitude on the complement of q.graph, via the complement spectrum.
TransferResult complement_amplitude(const AmplitudeQuery& q);

/// |H(t)_{0,0}| = 1 within this tolerance means H(t) is a phase times I.
inline constexpr double kPeriodicityTolerance = 1e-9;

bool periodicity_check(const CirculantGraph& g, const EvolutionTime& t);

struct FidelityCurve {
  double start = 0.0;
  double stop = 0.0;
  double step = 0.0;
  std::vector<double> fidelities;  // sample i is at start + i * step
  std::size_t argmax_index = 0;
  double argmax_time = 0.0;
  double max_fidelity = 0.0;

  double time_at(std::size_t i) const { return start + static_cast<double>(i) * step; }
};

/// Grid search of |H(t)_{u,v}| on start, start + step, ... <= stop. The
/// grid is split across `threads` workers; results do not depend on the
/// worker count and ties resolve to the earliest time.
FidelityCurve fidelity_scan(const CirculantGraph& g, Vertex u, Vertex v, double start,
                            double stop, double step, unsigned threads = 1);

/// One factor of a product query: graph and vertex pair.
struct FactorQuery {
  CirculantGraph graph;
  Vertex u = 0;
  Vertex v = 0;
};

struct PeriodHit {
  std::int64_t q = 0;
  double fidelity = 0.0;
};

/// Smallest q in [1, q_max] with prod_i |H_i(2 pi q)_{u_i, v_i}| >= target.
std::optional<PeriodHit> first_period_multiple(std::span<const FactorQuery> factors,
                                               double target, std::int64_t q_max,
                                               unsigned threads = 1);

}  // namespace pgstlab
