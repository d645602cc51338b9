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

#include "pgstlab/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>

#include "first_hit.hpp"
#include "pgstlab/error.hpp"

namespace pgstlab {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kExtendedThreshold = 1099511627776.0;  // 2^40
constexpr std::int64_t kSplitLimit = std::int64_t{1} << 31;

std::vector<std::complex<double>> roots_of_unity(std::int64_t n) {
  std::vector<std::complex<double>> roots(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k) roots[static_cast<std::size_t>(k)] = unit_root(k, n);
  return roots;
}

// 2 pi * turns, with turns in [-1/2, 1/2], mapped into (-pi, pi].
double turns_to_angle(double turns) {
  const double angle = kTwoPi * turns;
  return angle <= -std::numbers::pi ? std::numbers::pi : angle;
}

std::int64_t wrap(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

unsigned worker_count(unsigned requested, std::size_t work) {
  const unsigned t = std::max(1u, requested);
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(work, 1)));
}

}  // namespace

double EvolutionTime::value() const {
  if (const auto* t = std::get_if<double>(&repr_)) return *t;
  return kTwoPi * std::get<BigInt>(repr_).convert_to<double>();
}

const BigInt& EvolutionTime::multiple() const {
  if (const auto* q = std::get_if<BigInt>(&repr_)) return *q;
  throw Error(ErrorKind::invalid_argument, "time is not an exact multiple of 2*pi");
}

TransferResult TransferResult::from(std::complex<double> amplitude) {
  return {amplitude, std::abs(amplitude), std::arg(amplitude)};
}

struct Propagator::Precise {
  std::once_flag once;
  std::function<std::vector<HighReal>()> make;
  std::vector<HighReal> values;
  std::vector<DoubleDouble> split;

  void ensure() {
    std::call_once(once, [this] {
      values = make();
      split.reserve(values.size());
      for (const auto& v : values) split.push_back(DoubleDouble::from(v));
    });
  }
};

Propagator::Propagator(const CirculantGraph& g)
    : Propagator(eigenvalues(g), std::make_shared<Precise>()) {
  precise_->make = [g] { return pgstlab::precise_eigenvalues(g); };
}

Propagator::Propagator(Spectrum spectrum, std::shared_ptr<Precise> precise)
    : spectrum_(std::move(spectrum)), precise_(std::move(precise)) {
  for (const double v : spectrum_.values) max_abs_ = std::max(max_abs_, std::abs(v));
}

Propagator Propagator::complement() const {
  auto precise = std::make_shared<Precise>();
  precise->make = [base = precise_] {
    base->ensure();
    return precise_complement(base->values);
  };
  return Propagator(complement_spectrum(spectrum_), std::move(precise));
}

std::span<const HighReal> Propagator::precise_eigenvalues() const {
  precise_->ensure();
  return precise_->values;
}

std::span<const DoubleDouble> Propagator::split_eigenvalues() const {
  precise_->ensure();
  return precise_->split;
}

void Propagator::check_vertex(Vertex x) const {
  if (x < 0 || x >= order()) {
    throw Error(ErrorKind::vertex_out_of_range,
                "vertex " + std::to_string(x) + " outside 0.." + std::to_string(order() - 1));
  }
}

double Propagator::phase(std::size_t l, const EvolutionTime& t) const {
  if (!t.is_two_pi_multiple()) {
    const double time = t.value();
    if (std::abs(time) * max_abs_ <= kExtendedThreshold) {
      return reduce_angle(spectrum_.values[l] * time);
    }
    precise_->ensure();
    const HighReal turns = precise_->values[l] * HighReal(time) / (HighReal(2) * high_pi());
    return turns_to_angle(static_cast<double>(centered_fraction(turns)));
  }
  const BigInt& q = t.multiple();
  precise_->ensure();
  if (q < kSplitLimit && q > -kSplitLimit) {
    return turns_to_angle(centered_turns(q.convert_to<std::int64_t>(), precise_->split[l]));
  }
  return turns_to_angle(
      static_cast<double>(centered_fraction(HighReal(q) * precise_->values[l])));
}

std::complex<double> Propagator::amplitude(Vertex u, Vertex v, const EvolutionTime& t) const {
  check_vertex(u);
  check_vertex(v);
  const std::int64_t n = order();
  const auto roots = roots_of_unity(n);
  const std::int64_t d = wrap(u - v, n);
  std::complex<double> sum = 0.0;
  for (std::int64_t l = 0; l < n; ++l) {
    const double phi = phase(static_cast<std::size_t>(l), t);
    sum += std::polar(1.0, -phi) * roots[static_cast<std::size_t>(wrap(l * d, n))];
  }
  return sum / static_cast<double>(n);
}

TransferResult amplitude(const AmplitudeQuery& q) {
  return TransferResult::from(Propagator(q.graph).amplitude(q.u, q.v, q.t));
}

TransferResult amplitude(const CompositeGraph& g, std::span<const Vertex> u,
                         std::span<const Vertex> v, const EvolutionTime& t) {
  // index_of validates arity and ranges.
  (void)g.index_of(u);
  (void)g.index_of(v);
  std::complex<double> product = 1.0;
  for (std::size_t i = 0; i < g.factor_count(); ++i) {
    product *= Propagator(g.factors()[i].graph).amplitude(u[i], v[i], t);
  }
  return TransferResult::from(product);
}

TransferResult product_amplitude(std::span<const AmplitudeQuery> queries) {
  if (queries.empty()) {
    throw Error(ErrorKind::invalid_argument, "product query needs at least one factor");
  }
  std::complex<double> product = 1.0;
  for (const auto& q : queries) {
    if (!(q.t == queries.front().t)) {
      throw Error(ErrorKind::inconsistent_query, "product factors are queried at different times");
    }
    product *= Propagator(q.graph).amplitude(q.u, q.v, q.t);
  }
  return TransferResult::from(product);
}

TransferResult complement_amplitude(const AmplitudeQuery& q) {
  return TransferResult::from(Propagator(q.graph).complement().amplitude(q.u, q.v, q.t));
}

bool periodicity_check(const CirculantGraph& g, const EvolutionTime& t) {
  // Vertex-transitive: the return amplitude is the same at every vertex.
  const double fidelity = std::abs(Propagator(g).amplitude(0, 0, t));
  return fidelity >= 1.0 - kPeriodicityTolerance;
}

FidelityCurve fidelity_scan(const CirculantGraph& g, Vertex u, Vertex v, double start,
                            double stop, double step, unsigned threads) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw Error(ErrorKind::invalid_grid, "scan step must be positive");
  }
  if (!(stop > start) || !std::isfinite(start) || !std::isfinite(stop)) {
    throw Error(ErrorKind::invalid_grid, "scan range must satisfy start < stop");
  }
  const Propagator propagator(g);
  const std::int64_t n = propagator.order();
  if (u < 0 || u >= n || v < 0 || v >= n) {
    throw Error(ErrorKind::vertex_out_of_range,
                "scan vertices must lie in 0.." + std::to_string(n - 1));
  }

  FidelityCurve curve;
  curve.start = start;
  curve.stop = stop;
  curve.step = step;
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  curve.fidelities.resize(count);

  // Everything a sample needs, hoisted out of the grid loop.
  const auto roots = roots_of_unity(n);
  const std::int64_t d = wrap(u - v, n);
  std::vector<std::complex<double>> weights(static_cast<std::size_t>(n));
  for (std::int64_t l = 0; l < n; ++l) {
    weights[static_cast<std::size_t>(l)] =
        roots[static_cast<std::size_t>(wrap(l * d, n))] / static_cast<double>(n);
  }
  const auto& lambda = propagator.spectrum().values;

  auto fill = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const double t = curve.time_at(i);
      std::complex<double> sum = 0.0;
      for (std::size_t l = 0; l < weights.size(); ++l) {
        sum += std::polar(1.0, -lambda[l] * t) * weights[l];
      }
      curve.fidelities[i] = std::abs(sum);
    }
  };

  const unsigned workers = worker_count(threads, count);
  if (workers == 1) {
    fill(0, count);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(count, w * chunk);
      const std::size_t end = std::min(count, begin + chunk);
      pool.emplace_back(fill, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  for (std::size_t i = 0; i < count; ++i) {
    if (curve.fidelities[i] > curve.max_fidelity || i == 0) {
      curve.max_fidelity = curve.fidelities[i];
      curve.argmax_index = i;
    }
  }
  curve.argmax_time = curve.time_at(curve.argmax_index);
  return curve;
}

namespace {

struct PhaseGroup {
  DoubleDouble lambda;
  std::complex<double> weight;
};

// Characters sharing an eigenvalue share a phase at every time; fold
// their eigenvector weights together so each distinct eigenvalue costs
// one rotation per time step.
std::vector<PhaseGroup> phase_groups(const FactorQuery& f) {
  const Propagator p(f.graph);
  const std::int64_t n = p.order();
  if (f.u < 0 || f.u >= n || f.v < 0 || f.v >= n) {
    throw Error(ErrorKind::vertex_out_of_range,
                "vertex pair outside 0.." + std::to_string(n - 1));
  }
  const auto precise = p.precise_eigenvalues();
  const auto split = p.split_eigenvalues();
  const auto roots = roots_of_unity(n);
  const std::int64_t d = wrap(f.u - f.v, n);

  std::vector<std::size_t> order(static_cast<std::size_t>(n));
  for (std::size_t l = 0; l < order.size(); ++l) order[l] = l;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return precise[a] < precise[b]; });

  const HighReal same = HighReal("1e-60");
  std::vector<PhaseGroup> groups;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::size_t l = order[i];
    const auto w = roots[static_cast<std::size_t>(wrap(static_cast<std::int64_t>(l) * d, n))] /
                   static_cast<double>(n);
    if (i > 0 && boost::multiprecision::abs(precise[l] - precise[order[i - 1]]) < same) {
      groups.back().weight += w;
    } else {
      groups.push_back({split[l], w});
    }
  }
  return groups;
}

}  // namespace

std::optional<PeriodHit> first_period_multiple(std::span<const FactorQuery> factors,
                                               double target, std::int64_t q_max,
                                               unsigned threads) {
  if (factors.empty()) {
    throw Error(ErrorKind::invalid_argument, "period search needs at least one factor");
  }
  if (q_max < 1) {
    throw Error(ErrorKind::invalid_argument, "q_max must be at least 1");
  }
  if (q_max >= kSplitLimit) {
    throw Error(ErrorKind::invalid_argument, "q_max must stay below 2^31 for a direct scan");
  }
  std::vector<std::vector<PhaseGroup>> groups;
  for (const auto& f : factors) groups.push_back(phase_groups(f));

  auto fidelity_at = [&](std::int64_t q) {
    double product = 1.0;
    for (const auto& factor : groups) {
      std::complex<double> sum = 0.0;
      for (const auto& g : factor) {
        sum += std::polar(1.0, -kTwoPi * centered_turns(q, g.lambda)) * g.weight;
      }
      product *= std::abs(sum);
    }
    return product;
  };

  return detail::first_hit(q_max, threads, [&](std::int64_t q) -> std::optional<PeriodHit> {
    const double f = fidelity_at(q);
    if (f >= target) return PeriodHit{q, f};
    return std::nullopt;
  });
}

}  // namespace pgstlab
