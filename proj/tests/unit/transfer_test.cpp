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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "pgstlab/error.hpp"

namespace pgstlab {
namespace {

constexpr double kPi = std::numbers::pi;

TransferResult at(const CirculantGraph& g, Vertex u, Vertex v, double t) {
  return amplitude(AmplitudeQuery{g, u, v, EvolutionTime::at(t)});
}

TEST(Amplitude, CycleOfFourPerfectTransfer) {
  const auto r = at(make_cycle(4), 0, 2, kPi / 2);
  EXPECT_NEAR(r.fidelity, 1.0, 1e-12);
  EXPECT_NEAR(r.amplitude.real(), -1.0, 1e-12);
  EXPECT_NEAR(r.amplitude.imag(), 0.0, 1e-12);
}

TEST(Amplitude, TimeZeroIsIdentity) {
  const auto g = make_cycle(7);
  EXPECT_NEAR(at(g, 3, 3, 0.0).fidelity, 1.0, 1e-15);
  EXPECT_NEAR(at(g, 3, 4, 0.0).fidelity, 0.0, 1e-15);
}

TEST(Amplitude, MatchesDenseOracles) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> time(0.0, 50.0);
  for (int trial = 0; trial < 60; ++trial) {
    const std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 11);
    const auto g = make_circulant(n, testing::random_symmetric_set(n, rng));
    const double t = time(rng);
    const auto a = testing::dense_adjacency(g);
    const auto h = testing::dense_propagator(a, t);
    const auto taylor = testing::taylor_propagator(a, t);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        const auto z = at(g, u, v, t).amplitude;
        EXPECT_LT(std::abs(z - h(u, v)), 1e-8);
        EXPECT_LT(std::abs(z - taylor(u, v)), 1e-8);
      }
    }
  }
}

TEST(Amplitude, UnitaryRows) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> time(-100.0, 100.0);
  for (int trial = 0; trial < 40; ++trial) {
    const std::int64_t n = 3 + static_cast<std::int64_t>(rng() % 15);
    const auto g = make_circulant(n, testing::random_symmetric_set(n, rng));
    const double t = time(rng);
    double norm = 0.0;
    for (Vertex v = 0; v < n; ++v) norm += std::norm(at(g, 0, v, t).amplitude);
    EXPECT_NEAR(norm, 1.0, 1e-10);
  }
}

TEST(Amplitude, SymmetryShiftAndReversal) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> time(0.0, 30.0);
  for (int trial = 0; trial < 40; ++trial) {
    const std::int64_t n = 3 + static_cast<std::int64_t>(rng() % 15);
    const auto g = make_circulant(n, testing::random_symmetric_set(n, rng));
    const double t = time(rng);
    const Vertex u = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
    const Vertex v = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
    const Vertex c = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
    const auto z = at(g, u, v, t).amplitude;
    EXPECT_LT(std::abs(z - at(g, v, u, t).amplitude), 1e-12);
    EXPECT_LT(std::abs(z - at(g, (u + c) % n, (v + c) % n, t).amplitude), 1e-12);
    EXPECT_LT(std::abs(std::conj(z) - at(g, u, v, -t).amplitude), 1e-12);
  }
}

TEST(Amplitude, VertexRange) {
  try {
    at(make_cycle(8), 0, 9, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::vertex_out_of_range);
  }
}

TEST(Amplitude, TwoPiMultipleAgreesWithPlainTime) {
  const auto g = union_graphs(make_cycle(16), make_gcd_graph(DivisorSet(16, {4})));
  for (std::int64_t q : {1, 6, 77, 1000}) {
    const auto exact = amplitude(AmplitudeQuery{g, 0, 8, EvolutionTime::two_pi_multiple(BigInt(q))});
    const auto plain = at(g, 0, 8, 2.0 * kPi * static_cast<double>(q));
    EXPECT_LT(std::abs(exact.amplitude - plain.amplitude), 1e-9) << q;
  }
}

// Reference for huge q: phases reduced directly in 100-digit arithmetic.
TEST(Amplitude, HugeTwoPiMultiple) {
  const std::int64_t n = 16;
  const BigInt q("6098635048852366678123");
  std::complex<double> expect = 0.0;
  for (std::int64_t l = 0; l < n; ++l) {
    const HighReal lambda =
        2 * boost::multiprecision::cos(2 * high_pi() * l / HighReal(n));
    const HighReal turns = HighReal(q) * lambda;
    const HighReal frac = turns - boost::multiprecision::floor(turns);
    const double angle = -2.0 * kPi * static_cast<double>(frac);
    expect += std::polar(1.0, angle) * std::polar(1.0, 2.0 * kPi * static_cast<double>(l * 8 % n) / n) /
              static_cast<double>(n);
  }
  const auto got = amplitude(AmplitudeQuery{make_cycle(n), 0, 8, EvolutionTime::two_pi_multiple(q)});
  EXPECT_LT(std::abs(got.amplitude - expect), 1e-12);
}

TEST(Amplitude, LargePlainTimeUsesExtendedPrecision) {
  // t * max|lambda| > 2^40: compare against the 2 pi q form of the same time.
  const BigInt q(1LL << 40);
  const double t = 2.0 * kPi * std::ldexp(1.0, 40);
  const auto g = make_cycle(8);
  const auto exact = amplitude(AmplitudeQuery{g, 0, 4, EvolutionTime::two_pi_multiple(q)});
  // The double t differs from 2 pi 2^40 by at most half an ulp (~1e-4), so
  // the phases move by at most 2 * 1e-4.
  EXPECT_LT(std::abs(at(g, 0, 4, t).amplitude - exact.amplitude), 1e-3);
}

TEST(Union, SameFidelityOnTwoPiZ) {
  const auto c = make_cycle(8);
  const auto u = union_graphs(c, make_gcd_graph(DivisorSet(8, {2})));
  const auto cu = complement_graph(u);
  for (std::int64_t q : {1, 6, 100, 204}) {
    const auto t = EvolutionTime::two_pi_multiple(BigInt(q));
    const double f = amplitude(AmplitudeQuery{c, 0, 4, t}).fidelity;
    EXPECT_NEAR(amplitude(AmplitudeQuery{u, 0, 4, t}).fidelity, f, 1e-12);
    EXPECT_NEAR(amplitude(AmplitudeQuery{cu, 0, 4, t}).fidelity, f, 1e-9);
  }
}

TEST(Complement, MatchesComplementGraph) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const std::int64_t n = 3 + static_cast<std::int64_t>(rng() % 12);
    const auto g = make_circulant(n, testing::random_symmetric_set(n, rng));
    const double t = 0.37 * trial;
    const auto direct = at(complement_graph(g), 0, n / 2, t);
    const auto via = complement_amplitude(AmplitudeQuery{g, 0, n / 2, EvolutionTime::at(t)});
    EXPECT_LT(std::abs(direct.amplitude - via.amplitude), 1e-10);
  }
}

TEST(Complement, OfFourIsTwoEdges) {
  const auto r = complement_amplitude(AmplitudeQuery{make_cycle(4), 0, 2, EvolutionTime::at(kPi / 2)});
  EXPECT_NEAR(r.fidelity, 1.0, 1e-12);
}

TEST(Product, MultiplicativeAndMatchesDenseOracle) {
  const CompositeGraph g({{make_cycle(3), false}, {complement_graph(make_cycle(4)), true},
                          {make_cycle(5), false}});
  const auto a = testing::dense_adjacency(g);
  for (double t : {0.3, 1.7, 4.0}) {
    const auto h = testing::dense_propagator(a, t);
    for (Vertex x = 0; x < g.order(); x += 7) {
      for (Vertex y = 0; y < g.order(); y += 5) {
        const auto u = g.tuple_of(x);
        const auto v = g.tuple_of(y);
        const auto r = amplitude(g, u, v, EvolutionTime::at(t));
        EXPECT_LT(std::abs(r.amplitude - h(x, y)), 1e-10);
        double expect = 1.0;
        for (std::size_t i = 0; i < 3; ++i) {
          expect *= at(g.factors()[i].graph, u[i], v[i], t).fidelity;
        }
        EXPECT_NEAR(r.fidelity, expect, 1e-12);
      }
    }
  }
}

TEST(Product, QueriesMustShareTime) {
  std::vector<AmplitudeQuery> q{{make_cycle(8), 0, 4, EvolutionTime::at(1.0)},
                                {make_cycle(8), 0, 4, EvolutionTime::at(2.0)}};
  try {
    product_amplitude(q);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::inconsistent_query);
  }
  q[1].t = EvolutionTime::at(1.0);
  EXPECT_NEAR(product_amplitude(q).fidelity, std::pow(at(make_cycle(8), 0, 4, 1.0).fidelity, 2), 1e-12);
}

TEST(Periodicity, IntegralGraphsAtTwoPi) {
  const auto t = EvolutionTime::two_pi_multiple(BigInt(1));
  EXPECT_TRUE(periodicity_check(make_gcd_graph(DivisorSet(8, {1})), t));
  EXPECT_TRUE(periodicity_check(make_cycle(6), t));
  EXPECT_TRUE(periodicity_check(make_cycle(4), t));
  EXPECT_FALSE(periodicity_check(make_cycle(8), t));
}

TEST(Scan, CycleOfSixCeiling) {
  const auto curve = fidelity_scan(make_cycle(6), 0, 3, 0.0, 100.0, 1e-3);
  EXPECT_EQ(curve.fidelities.size(), 100001u);
  EXPECT_NEAR(curve.max_fidelity, std::sqrt(3.0) / 2.0, 1e-3);
  EXPECT_LE(curve.max_fidelity, std::sqrt(3.0) / 2.0 + 1e-12);
  // Antipodal entry of C_6: |2 sin t - sin 2t| / 3.
  for (std::size_t i : {0u, 1234u, 50000u, 99999u}) {
    const double t = curve.time_at(i);
    EXPECT_NEAR(curve.fidelities[i], std::abs(2.0 * std::sin(t) - std::sin(2.0 * t)) / 3.0, 1e-12);
  }
}

TEST(Scan, ThreadCountDoesNotMatter) {
  const auto g = union_graphs(make_cycle(12), make_gcd_graph(DivisorSet(12, {3})));
  const auto one = fidelity_scan(g, 0, 6, 0.0, 50.0, 1e-2, 1);
  const auto four = fidelity_scan(g, 0, 6, 0.0, 50.0, 1e-2, 4);
  EXPECT_EQ(one.fidelities, four.fidelities);
  EXPECT_EQ(one.argmax_index, four.argmax_index);
}

TEST(Scan, EarliestArgmaxAndGridErrors) {
  const auto curve = fidelity_scan(make_cycle(4), 0, 0, 0.0, 10.0, 0.5);
  EXPECT_EQ(curve.argmax_index, 0u);
  EXPECT_THROW(fidelity_scan(make_cycle(4), 0, 2, 0.0, 10.0, 0.0), Error);
  EXPECT_THROW(fidelity_scan(make_cycle(4), 0, 2, 5.0, 5.0, 0.1), Error);
  EXPECT_THROW(fidelity_scan(make_cycle(8), 0, 9, 0.0, 1.0, 0.1), Error);
}

TEST(PeriodSearch, CycleOfEightFirstHit) {
  const std::vector<FactorQuery> f{{make_cycle(8), 0, 4}};
  const auto hit = first_period_multiple(f, 0.99, 1000);
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->q, 6);
  EXPECT_NEAR(hit->fidelity, 0.99787, 1e-4);
  // Independent loop over plain times.
  for (std::int64_t q = 1; q < 6; ++q) {
    EXPECT_LT(at(make_cycle(8), 0, 4, 2.0 * kPi * static_cast<double>(q)).fidelity, 0.99);
  }
  EXPECT_FALSE(first_period_multiple(f, 0.99, 5));
}

TEST(PeriodSearch, DeterministicAcrossThreads) {
  const std::vector<FactorQuery> f{{make_cycle(16), 0, 8}, {complement_graph(make_cycle(16)), 0, 8}};
  const auto a = first_period_multiple(f, 0.95, 200000, 1);
  const auto b = first_period_multiple(f, 0.95, 200000, 3);
  ASSERT_TRUE(a && b);
  EXPECT_EQ(a->q, b->q);
}

}  // namespace
}  // namespace pgstlab
