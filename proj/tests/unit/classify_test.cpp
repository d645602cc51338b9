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

#include "pgstlab/classify.hpp"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "pgstlab/error.hpp"
#include "pgstlab/transfer.hpp"

namespace pgstlab {
namespace {

bool power_of_two(std::int64_t n) { return n > 0 && (n & (n - 1)) == 0; }

std::int64_t odd_prime(std::int64_t n) {
  while (n % 2 == 0) n /= 2;
  for (std::int64_t p = 3; p <= n; p += 2) {
    if (n % p == 0) return p;
  }
  return 0;
}

template <typename T>
const T& payload(const Verdict& v) {
  return std::get<T>(v.certificate);
}

TEST(ClassifyCycle, Examples) {
  const Verdict v8 = classify_cycle(8);
  EXPECT_EQ(v8.status, Status::pgst);
  EXPECT_EQ(v8.pair, VertexPair::scalar(0, 4));
  EXPECT_EQ(certificate_kind(v8.certificate), "time_construction");

  const Verdict v6 = classify_cycle(6);
  EXPECT_EQ(v6.status, Status::no_pgst);
  EXPECT_EQ(payload<DependencyWitness>(v6).m, 2);
  EXPECT_EQ(payload<DependencyWitness>(v6).p, 3);

  const Verdict v5 = classify_cycle(5);
  EXPECT_EQ(v5.status, Status::no_pgst);
  EXPECT_EQ(certificate_kind(v5.certificate), "parity_obstruction");
  EXPECT_FALSE(v5.pair);

  const Verdict v4 = classify_cycle(4);
  EXPECT_EQ(v4.status, Status::pst);
  EXPECT_EQ(payload<TimeConstruction>(v4).exact_time_over_pi, 0.5);

  EXPECT_THROW(classify_cycle(2), Error);
}

TEST(ClassifyCycle, SmallestOddPrimeWitness) {
  const Verdict v30 = classify_cycle(30);
  const auto& w = payload<DependencyWitness>(v30);
  EXPECT_EQ(w.p, 3);
  EXPECT_EQ(w.m, 10);
}

TEST(ClassifyCycle, PowersOfTwoExactly) {
  for (std::int64_t n = 3; n <= 128; ++n) {
    const Verdict v = classify_cycle(n);
    const bool transfer = v.status == Status::pgst || v.status == Status::pst;
    EXPECT_EQ(transfer, power_of_two(n)) << n;
    if (v.status == Status::no_pgst && n % 2 == 0) {
      EXPECT_TRUE(payload<DependencyWitness>(v).valid()) << n;
    }
  }
}

TEST(ClassifyComplement, Examples) {
  const Verdict v12 = classify_cycle_complement(12);
  EXPECT_EQ(v12.status, Status::no_pgst);
  EXPECT_EQ(payload<DependencyWitness>(v12).m, 4);
  EXPECT_EQ(payload<DependencyWitness>(v12).p, 3);
  EXPECT_TRUE(payload<DependencyWitness>(v12).complement_valid);

  EXPECT_EQ(classify_cycle_complement(10).status, Status::unknown);
  EXPECT_EQ(certificate_kind(classify_cycle_complement(10).certificate), "open_problem");
  EXPECT_EQ(classify_cycle_complement(16).status, Status::pgst);
  EXPECT_EQ(classify_cycle_complement(9).status, Status::no_pgst);

  const Verdict v4 = classify_cycle_complement(4);
  EXPECT_EQ(v4.status, Status::pst);
  EXPECT_FALSE(v4.notes.empty());
}

TEST(ClassifyComplement, GoldenTable) {
  for (std::int64_t n = 3; n <= 128; ++n) {
    const Status s = classify_cycle_complement(n).status;
    const std::int64_t p = odd_prime(n);
    if (n % 2 == 1) {
      EXPECT_EQ(s, Status::no_pgst) << n;
    } else if (power_of_two(n)) {
      EXPECT_TRUE(s == Status::pgst || (n == 4 && s == Status::pst)) << n;
    } else if (n == 2 * p) {
      EXPECT_EQ(s, Status::unknown) << n;
    } else {
      EXPECT_EQ(s, Status::no_pgst) << n;
    }
  }
}

TEST(ClassifyUnion, Examples) {
  EXPECT_EQ(classify_union(8, DivisorSet(8, {2})).status, Status::pgst);
  EXPECT_EQ(classify_union(8, DivisorSet(8, {2}), true).status, Status::pgst);
  try {
    classify_union(8, DivisorSet(8, {1, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::precondition);
  }
  EXPECT_EQ(classify_union(12, DivisorSet(12, {2})).status, Status::unknown);
  EXPECT_THROW(classify_union(8, DivisorSet(16, {2})), Error);
}

// The union and its complement use the cycle's construction verbatim.
TEST(ClassifyUnion, SameConstructionAsCycle) {
  ClassifyOptions o;
  o.epsilon = 1e-2;
  o.solve_up_to = BigInt(1'000'000);
  const Verdict va = classify_cycle(16, o);
  const Verdict vb = classify_union(16, DivisorSet(16, {2, 4}), false, o);
  const Verdict vc = classify_cycle_complement(16, o);
  const auto& a = payload<TimeConstruction>(va);
  const auto& b = payload<TimeConstruction>(vb);
  const auto& c = payload<TimeConstruction>(vc);
  ASSERT_TRUE(a.sample && b.sample && c.sample);
  EXPECT_EQ(a.sample->q, b.sample->q);
  EXPECT_EQ(a.sample->q, c.sample->q);
  EXPECT_EQ(a.order, b.order);
}

TEST(ClassifyProduct, Examples) {
  const CompositeGraph g1({{union_graphs(make_cycle(8), make_gcd_graph(DivisorSet(8, {2}))), false},
                           {complement_graph(make_cycle(8)), true}});
  const Verdict v1 = classify_product(g1);
  EXPECT_EQ(v1.status, Status::pgst);
  EXPECT_EQ(payload<TimeConstruction>(v1).moving_factors, 2);
  EXPECT_EQ(v1.pair, (VertexPair{{0, 0}, {4, 4}}));

  const CompositeGraph g2({{make_gcd_graph(DivisorSet(8, {1})), false}, {make_cycle(16), false}});
  const Verdict v2 = classify_product(g2);
  EXPECT_EQ(v2.status, Status::pgst);
  EXPECT_EQ(v2.pair, (VertexPair{{0, 0}, {0, 8}}));

  // C_5 is neither integral nor in a settled family.
  const CompositeGraph g3({{make_cycle(5), false}, {make_cycle(8), false}});
  EXPECT_EQ(classify_product(g3).status, Status::unknown);

  // Different powers of two share no sequence.
  const CompositeGraph g4({{make_cycle(8), false}, {make_cycle(16), false}});
  EXPECT_EQ(classify_product(g4).status, Status::unknown);
}

// C_6 has spectrum {2, 1, -1, -2, -1, 1}: integral, hence periodic at 2 pi.
TEST(ClassifyProduct, IntegralCycleFactorIsPeriodic) {
  const CompositeGraph g({{make_cycle(6), false}, {make_cycle(8), false}});
  EXPECT_EQ(classify_product(g).status, Status::pgst);
  EXPECT_TRUE(periodicity_check(make_cycle(6), EvolutionTime::two_pi_multiple(BigInt(1))));
}

TEST(ClassifyProduct, PairChecks) {
  const CompositeGraph g({{make_gcd_graph(DivisorSet(8, {1})), false}, {make_cycle(16), false}});
  EXPECT_EQ(classify_product(g, VertexPair{{3, 5}, {3, 13}}).status, Status::pgst);
  EXPECT_EQ(classify_product(g, VertexPair{{3, 5}, {4, 13}}).status, Status::unknown);
  EXPECT_EQ(classify_product(g, VertexPair{{0, 0}, {0, 3}}).status, Status::unknown);
  EXPECT_THROW(classify_product(g, VertexPair{{0}, {0}}), Error);
  EXPECT_THROW(classify_product(g, VertexPair{{0, 0}, {0, 0}}), Error);
  EXPECT_THROW(classify_product(g, VertexPair{{0, 0}, {0, 16}}), Error);
}

TEST(ClassifyLiteral, Recognition) {
  EXPECT_EQ(classify(parse_graph("cycle(16)")).status, Status::pgst);
  EXPECT_EQ(classify(parse_graph("circulant(16;1,15)")).status, Status::pgst);
  EXPECT_EQ(classify(parse_graph("complement(cycle(12))")).status, Status::no_pgst);
  EXPECT_EQ(classify(parse_graph("complement(cycle(10))")).status, Status::unknown);
  EXPECT_EQ(classify(parse_graph("union(cycle(8), gcd(8;2))")).status, Status::pgst);
  EXPECT_EQ(classify(parse_graph("complement(union(cycle(32), gcd(32;2,4)))")).status, Status::pgst);
  EXPECT_EQ(classify(parse_graph("union(cycle(12), gcd(12;2))")).status, Status::unknown);
  EXPECT_EQ(classify(parse_graph("gcd(8;1)")).status, Status::unknown);
  EXPECT_EQ(classify(parse_graph("circulant(8;2,6)")).status, Status::unknown);
  EXPECT_EQ(classify(parse_graph("product(cycle(5), cycle(8))")).status, Status::unknown);
  EXPECT_EQ(classify(parse_graph("product(gcd(8;1), cycle(16))")).status, Status::pgst);
}

TEST(ClassifyLiteral, PairsOnCycles) {
  const auto c = parse_graph("cycle(8)");
  EXPECT_EQ(classify(c, VertexPair::scalar(3, 7)).status, Status::pgst);
  EXPECT_EQ(classify(c, VertexPair::scalar(3, 7)).pair, VertexPair::scalar(3, 7));
  const Verdict off = classify(c, VertexPair::scalar(0, 3));
  EXPECT_EQ(off.status, Status::no_pgst);
  EXPECT_EQ(certificate_kind(off.certificate), "parity_obstruction");
  EXPECT_EQ(classify(parse_graph("union(cycle(8), gcd(8;2))"), VertexPair::scalar(0, 3)).status,
            Status::unknown);
  EXPECT_THROW(classify(c, VertexPair::scalar(2, 2)), Error);
  EXPECT_THROW(classify(c, VertexPair::scalar(0, 8)), Error);
}

TEST(Verdict, InvariantsHoldEverywhere) {
  std::vector<Verdict> all;
  for (std::int64_t n = 3; n <= 64; ++n) {
    all.push_back(classify_cycle(n));
    all.push_back(classify_cycle_complement(n));
  }
  for (const auto& v : all) {
    const std::string kind = certificate_kind(v.certificate);
    switch (v.status) {
      case Status::pst:
      case Status::pgst: EXPECT_EQ(kind, "time_construction"); break;
      case Status::no_pgst:
        EXPECT_TRUE(kind == "obstruction_witness" || kind == "parity_obstruction");
        break;
      case Status::unknown: EXPECT_EQ(kind, "open_problem"); break;
    }
    EXPECT_FALSE(v.citations.empty());
  }
  EXPECT_EQ(exit_code(Status::pst), 0);
  EXPECT_EQ(exit_code(Status::pgst), 0);
  EXPECT_EQ(exit_code(Status::no_pgst), 1);
  EXPECT_EQ(exit_code(Status::unknown), 2);
}

// Every PGST verdict up to n = 32, solved at eps = 1e-3, measures above 0.99.
TEST(Soundness, PgstVerdictsDeliver) {
  ClassifyOptions o;
  o.epsilon = 1e-3;
  o.solve_up_to = BigInt("1000000000000000000000000");
  std::vector<ParsedGraph> graphs;
  for (std::int64_t n : {8, 16, 32}) {
    graphs.push_back(parse_graph("cycle(" + std::to_string(n) + ")"));
    graphs.push_back(parse_graph("complement(cycle(" + std::to_string(n) + "))"));
    graphs.push_back(parse_graph("union(cycle(" + std::to_string(n) + "), gcd(" +
                                 std::to_string(n) + ";2))"));
  }
  for (const auto& g : graphs) {
    const Verdict v = classify(g, std::nullopt, o);
    ASSERT_EQ(v.status, Status::pgst);
    const auto& tc = payload<TimeConstruction>(v);
    ASSERT_TRUE(tc.sample);
    const auto t = tc.sample->time();
    const double f =
        amplitude(AmplitudeQuery{g.circulant(), v.pair->u[0], v.pair->v[0], t}).fidelity;
    EXPECT_GT(f, 0.99);
    EXPECT_GE(f, *tc.implied_fidelity() - 1e-12);
  }
}

// The certified obstruction is visible in the data: no scan time gets close.
TEST(Soundness, ObstructedCyclesStayBelowCeiling) {
  for (std::int64_t n : {6, 10, 12, 20}) {
    ASSERT_EQ(classify_cycle(n).status, Status::no_pgst);
    const auto curve = fidelity_scan(make_cycle(n), 0, n / 2, 0.0, 1000.0, 1e-3);
    EXPECT_LE(curve.max_fidelity, 0.999) << n;
  }
}

// Complement duality on 2 pi Z: same sequence, same fidelities.
TEST(Soundness, ComplementDuality) {
  ClassifyOptions o;
  o.epsilon = 1e-2;
  o.solve_up_to = BigInt(10'000'000);
  for (std::int64_t n : {8, 16}) {
    const Verdict va = classify_cycle(n, o);
    const Verdict vb = classify_cycle_complement(n, o);
    const auto& a = payload<TimeConstruction>(va);
    const auto& b = payload<TimeConstruction>(vb);
    ASSERT_TRUE(a.sample && b.sample);
    EXPECT_EQ(a.sample->q, b.sample->q);
    for (std::int64_t q = 1; q <= 200; ++q) {
      const auto t = EvolutionTime::two_pi_multiple(BigInt(q));
      const double fc = amplitude(AmplitudeQuery{make_cycle(n), 0, n / 2, t}).fidelity;
      const double fb =
          amplitude(AmplitudeQuery{complement_graph(make_cycle(n)), 0, n / 2, t}).fidelity;
      EXPECT_NEAR(fc, fb, 1e-9);
    }
  }
}

}  // namespace
}  // namespace pgstlab
