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
#include <sstream>

#include "pgstlab/error.hpp"
#include "pgstlab/transfer.hpp"

namespace pgstlab {
namespace {

std::string format_number(double x) {
  std::ostringstream out;
  out << x;
  return out.str();
}

bool is_power_of_two(std::int64_t n) { return n > 0 && (n & (n - 1)) == 0; }

std::int64_t smallest_odd_prime_factor(std::int64_t n) {
  while (n % 2 == 0) n /= 2;
  for (std::int64_t p = 3; p * p <= n; p += 2) {
    if (n % p == 0) return p;
  }
  return n > 1 ? n : 0;
}

void require_order(std::int64_t n) {
  if (n < 3) {
    throw Error(ErrorKind::invalid_order, "cycles need n >= 3, got " + std::to_string(n));
  }
}

TimeConstruction construction(std::int64_t n, const ClassifyOptions& options,
                              std::vector<std::string>& notes) {
  TimeConstruction tc;
  tc.order = n;
  tc.problem = pgst_targets(n, options.epsilon);
  if (options.solve_up_to) {
    tc.sample = solve(*tc.problem, *options.solve_up_to, options.strategy, options.threads);
    if (!tc.sample) {
      notes.push_back("no sample time with q <= " + to_decimal(*options.solve_up_to) +
                      " at epsilon " + format_number(options.epsilon));
    }
  }
  return tc;
}

Verdict parity_verdict(std::int64_t n, std::string reason) {
  Verdict v;
  v.status = Status::no_pgst;
  v.certificate = ParityObstruction{n, std::move(reason)};
  v.citations = {"antipodal-restriction"};
  return v;
}

Verdict unknown(std::string question, std::string citation) {
  Verdict v;
  v.status = Status::unknown;
  v.certificate = OpenProblem{std::move(question)};
  v.citations = {std::move(citation)};
  return v;
}

enum class Family { cycle, cycle_complement, union_graph, union_complement, other };

struct Recognized {
  Family family = Family::other;
  std::optional<DivisorSet> divisors;
};

// S = {1, n-1} together with a whole number of gcd classes.
std::optional<DivisorSet> union_divisors(const ConnectionSet& s) {
  const std::int64_t n = s.order();
  if (!s.contains(1) || !s.contains(n - 1)) return std::nullopt;
  std::vector<std::int64_t> rest;
  for (auto x : s.elements()) {
    if (x != 1 && x != n - 1) rest.push_back(x);
  }
  ConnectionSet r(n, std::move(rest));
  if (!is_gcd_set(r)) return std::nullopt;
  return gcd_divisors(r);
}

Recognized recognize(const CirculantGraph& g) {
  if (g.order() < 3) return {};
  if (auto d = union_divisors(g.connection())) {
    return {d->empty() ? Family::cycle : Family::union_graph, std::move(d)};
  }
  if (auto d = union_divisors(complement_graph(g).connection())) {
    return {d->empty() ? Family::cycle_complement : Family::union_complement, std::move(d)};
  }
  return {};
}

void check_vertex(std::int64_t n, Vertex x) {
  if (x < 0 || x >= n) {
    throw Error(ErrorKind::vertex_out_of_range,
                "vertex " + std::to_string(x) + " outside 0.." + std::to_string(n - 1));
  }
}

bool antipodal(std::int64_t n, Vertex u, Vertex v) {
  return n % 2 == 0 && ((v - u) % n + n) % n == n / 2;
}

}  // namespace

std::string to_string(Status status) {
  switch (status) {
    case Status::pst: return "PST";
    case Status::pgst: return "PGST";
    case Status::no_pgst: return "NoPGST";
    case Status::unknown: return "Unknown";
  }
  return "Unknown";
}

int exit_code(Status status) {
  switch (status) {
    case Status::pst:
    case Status::pgst: return 0;
    case Status::no_pgst: return 1;
    case Status::unknown: return 2;
  }
  return 2;
}

std::optional<double> TimeConstruction::implied_fidelity() const {
  if (exact_time_over_pi) return 1.0;
  if (!sample) return std::nullopt;
  const double one = 1.0 - 2.0 * std::numbers::pi * sample->worst_error;
  return std::pow(one, static_cast<double>(moving_factors));
}

std::string certificate_kind(const Certificate& c) {
  switch (c.index()) {
    case 0: return "time_construction";
    case 1: return "obstruction_witness";
    case 2: return "parity_obstruction";
    default: return "open_problem";
  }
}

Verdict classify_cycle(std::int64_t n, const ClassifyOptions& options) {
  require_order(n);
  if (n % 2 == 1) {
    return parity_verdict(n, "odd order: no vertex has an antipode, and transfer on a cycle "
                             "can only happen between antipodal vertices");
  }
  Verdict v;
  v.pair = VertexPair::scalar(0, n / 2);
  if (n == 4) {
    v.status = Status::pst;
    TimeConstruction tc;
    tc.order = 4;
    tc.exact_time_over_pi = 0.5;
    v.certificate = tc;
    v.citations = {"cycle-classification"};
    return v;
  }
  if (is_power_of_two(n)) {
    v.status = Status::pgst;
    v.certificate = construction(n, options, v.notes);
    v.citations = {"time-construction", "cycle-classification"};
    return v;
  }
  const std::int64_t p = smallest_odd_prime_factor(n);
  v.status = Status::no_pgst;
  v.certificate = dependency_witness(n / p, p);
  v.citations = {"eigenvalue-dependency", "cycle-classification"};
  return v;
}

Verdict classify_cycle_complement(std::int64_t n, const ClassifyOptions& options) {
  require_order(n);
  if (n % 2 == 1) {
    return parity_verdict(n, "odd order: the complement of an odd cycle has no antipodal "
                             "pair, and transfer can only happen between antipodal vertices");
  }
  Verdict v;
  v.pair = VertexPair::scalar(0, n / 2);
  if (n == 4) {
    // 2K_2: the antipodes form one K_2 component.
    const auto r = complement_amplitude(
        {make_cycle(4), 0, 2, EvolutionTime::at(std::numbers::pi / 2)});
    if (r.fidelity < 1.0 - 1e-12) {
      throw Error(ErrorKind::precondition, "complement of C_4 failed direct evaluation");
    }
    v.status = Status::pst;
    TimeConstruction tc;
    tc.order = 4;
    tc.exact_time_over_pi = 0.5;
    v.certificate = tc;
    v.citations = {"direct-evaluation"};
    v.notes.push_back(
        "the complement of C_4 is 2K_2 (disconnected); classified by direct evaluation at "
        "t = pi/2, outside the k >= 3 range of the union construction");
    return v;
  }
  if (is_power_of_two(n)) {
    v.status = Status::pgst;
    v.certificate = construction(n, options, v.notes);
    v.citations = {"time-construction", "union-construction"};
    return v;
  }
  const std::int64_t p = smallest_odd_prime_factor(n);
  if (n == 2 * p) {
    Verdict u = unknown("whether the complement of C_" + std::to_string(n) +
                            " (n = 2p, p an odd prime) has pretty good state transfer is open",
                        "open-complement-2p");
    u.pair = v.pair;
    return u;
  }
  DependencyWitness w = dependency_witness(n / p, p);
  if (!w.complement_valid) {
    throw Error(ErrorKind::precondition, "obstruction does not carry over to the complement");
  }
  v.status = Status::no_pgst;
  v.certificate = std::move(w);
  v.citations = {"complement-dependency"};
  return v;
}

Verdict classify_union(std::int64_t n, const DivisorSet& d, bool complement,
                       const ClassifyOptions& options) {
  require_order(n);
  if (d.order() != n) {
    throw Error(ErrorKind::incompatible_order, "divisor set belongs to order " +
                                                   std::to_string(d.order()) + ", not " +
                                                   std::to_string(n));
  }
  if (d.contains(1)) {
    throw Error(ErrorKind::precondition,
                "the divisor set must not contain 1 (G(n, D) would share edges with C_n)");
  }
  if (n >= 8 && is_power_of_two(n)) {
    Verdict v;
    v.status = Status::pgst;
    v.pair = VertexPair::scalar(0, n / 2);
    v.certificate = construction(n, options, v.notes);
    v.citations = {"time-construction", "union-construction"};
    return v;
  }
  Verdict v = unknown(std::string("the union ") + (complement ? "complement " : "") +
                          "construction is only settled for n = 2^k with k >= 3",
                      "open-other-circulants");
  if (n % 2 == 0) v.pair = VertexPair::scalar(0, n / 2);
  return v;
}

Verdict classify_product(const CompositeGraph& g, std::optional<VertexPair> pair,
                         const ClassifyOptions& options) {
  const auto factors = g.factors();
  if (pair) {
    if (pair->u.size() != factors.size() || pair->v.size() != factors.size()) {
      throw Error(ErrorKind::invalid_argument,
                  "pair tuples need one coordinate per factor (" +
                      std::to_string(factors.size()) + ")");
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
      check_vertex(factors[i].graph.order(), pair->u[i]);
      check_vertex(factors[i].graph.order(), pair->v[i]);
    }
    if (pair->u == pair->v) {
      throw Error(ErrorKind::invalid_argument, "transfer needs two distinct vertices");
    }
  }

  std::int64_t shared = 0;
  std::int64_t moving = 0;
  bool periodic_factor = false;
  VertexPair defaults;
  std::vector<bool> moves;
  for (const auto& f : factors) {
    const std::int64_t n = f.graph.order();
    const Recognized r = recognize(f.graph);
    const bool transfer = r.family != Family::other && n >= 8 && is_power_of_two(n);
    if (transfer) {
      if (shared != 0 && shared != n) {
        Verdict u = unknown("factors from different orders 2^k share no common time sequence",
                            "product-construction");
        u.pair = pair;
        return u;
      }
      shared = n;
      ++moving;
      defaults.u.push_back(0);
      defaults.v.push_back(n / 2);
    } else if (is_gcd_set(f.graph.connection())) {
      periodic_factor = true;
      defaults.u.push_back(0);
      defaults.v.push_back(0);
    } else {
      Verdict u = unknown("factor " + format_graph(f.graph) +
                              " is neither in a settled PGST family nor integral",
                          "product-construction");
      u.pair = pair;
      return u;
    }
    moves.push_back(transfer);
  }
  if (moving == 0) {
    Verdict u = unknown("every factor is integral; transfer in integral circulants is not "
                        "decided here",
                        "product-construction");
    u.pair = pair;
    return u;
  }
  if (pair) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const bool ok = moves[i] ? antipodal(factors[i].graph.order(), pair->u[i], pair->v[i])
                               : pair->u[i] == pair->v[i];
      if (!ok) {
        Verdict u = unknown("the pair is not antipodal on every transfer factor and fixed on "
                            "every periodic one",
                            "product-construction");
        u.pair = pair;
        return u;
      }
    }
  }
  Verdict v;
  v.status = Status::pgst;
  v.pair = pair ? *pair : defaults;
  TimeConstruction tc = construction(shared, options, v.notes);
  tc.moving_factors = moving;
  v.certificate = std::move(tc);
  v.citations = {"time-construction", "product-construction"};
  if (periodic_factor) v.citations.push_back("periodic-factor");
  return v;
}

Verdict classify(const ParsedGraph& g, std::optional<VertexPair> pair,
                 const ClassifyOptions& options) {
  Verdict v;
  if (g.is_product()) {
    v = classify_product(g.composite(), pair, options);
  } else {
    const CirculantGraph& c = g.circulant();
    const std::int64_t n = c.order();
    if (pair) {
      if (pair->u.size() != 1 || pair->v.size() != 1) {
        throw Error(ErrorKind::invalid_argument, "a circulant pair has one coordinate each");
      }
      check_vertex(n, pair->u[0]);
      check_vertex(n, pair->v[0]);
      if (pair->u[0] == pair->v[0]) {
        throw Error(ErrorKind::invalid_argument, "transfer needs two distinct vertices");
      }
    }
    const Recognized r = recognize(c);
    const bool cycle_like = r.family == Family::cycle || r.family == Family::cycle_complement;
    const bool off_antipode = pair && !antipodal(n, pair->u[0], pair->v[0]);
    if (off_antipode && cycle_like) {
      v = parity_verdict(n, "the pair is not antipodal; on cycles and their complements "
                            "transfer can only happen between antipodal vertices");
    } else if (off_antipode && r.family != Family::other) {
      v = unknown("the union construction only concerns antipodal pairs",
                  "union-construction");
    } else {
      switch (r.family) {
        case Family::cycle: v = classify_cycle(n, options); break;
        case Family::cycle_complement: v = classify_cycle_complement(n, options); break;
        case Family::union_graph: v = classify_union(n, *r.divisors, false, options); break;
        case Family::union_complement: v = classify_union(n, *r.divisors, true, options); break;
        case Family::other:
          v = unknown("only cycles, their unions with gcd graphs, the complements of both and "
                      "products are classified; other circulants are open",
                      "open-other-circulants");
          break;
      }
    }
    if (pair) v.pair = pair;
  }
  v.notes.insert(v.notes.begin(), g.notes.begin(), g.notes.end());
  return v;
}

}  // namespace pgstlab
