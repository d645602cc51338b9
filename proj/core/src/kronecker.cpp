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

#include "pgstlab/kronecker.hpp"

#include <cmath>
#include <numbers>

#include "first_hit.hpp"
#include "pgstlab/error.hpp"
#include "pgstlab/lattice.hpp"

namespace pgstlab {
namespace {

constexpr std::int64_t kDirectScanLimit = std::int64_t{1} << 40;

struct Evaluation {
  ApproxSolution solution;
  bool feasible = false;
};

Evaluation evaluate(const ApproxProblem& problem, const BigInt& q) {
  Evaluation e;
  e.solution.q = q;
  e.feasible = true;
  const HighReal qh(q);
  const HighReal eps(problem.epsilon());
  for (std::size_t j = 0; j < problem.size(); ++j) {
    const HighReal x = qh * problem.thetas()[j] - problem.alphas()[j];
    const HighReal nearest = boost::multiprecision::round(x);
    const HighReal err = boost::multiprecision::abs(x - nearest);
    e.solution.offsets.push_back(round_to_bigint(nearest));
    e.solution.errors.push_back(static_cast<double>(err));
    e.solution.worst_error = std::max(e.solution.worst_error, e.solution.errors.back());
    if (!(err < eps)) e.feasible = false;
  }
  return e;
}

std::optional<ApproxSolution> trivial_solution(const ApproxProblem& problem,
                                               const std::string& strategy) {
  ApproxSolution s = evaluate(problem, BigInt(1)).solution;
  s.strategy = strategy;
  return s;
}

}  // namespace

ApproxProblem::ApproxProblem(std::vector<HighReal> thetas, std::vector<HighReal> alphas,
                             double epsilon)
    : thetas_(std::move(thetas)), alphas_(std::move(alphas)), epsilon_(epsilon) {
  if (thetas_.size() != alphas_.size()) {
    throw Error(ErrorKind::invalid_argument, "thetas and alphas differ in length");
  }
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw Error(ErrorKind::invalid_argument, "epsilon must be positive");
  }
  for (const auto& a : alphas_) {
    if (a < 0 || a >= 1) throw Error(ErrorKind::invalid_argument, "alphas must lie in [0, 1)");
  }
}

ApproxProblem ApproxProblem::from_doubles(const std::vector<double>& thetas,
                                          const std::vector<double>& alphas, double epsilon) {
  return ApproxProblem(std::vector<HighReal>(thetas.begin(), thetas.end()),
                       std::vector<HighReal>(alphas.begin(), alphas.end()), epsilon);
}

ApproxProblem ApproxProblem::with_epsilon(double epsilon) const {
  return ApproxProblem(thetas_, alphas_, epsilon);
}

ApproxSolution evaluate_candidate(const ApproxProblem& problem, const BigInt& q) {
  return evaluate(problem, q).solution;
}

bool is_feasible(const ApproxProblem& problem, const ApproxSolution& candidate) {
  return candidate.q >= 1 && evaluate(problem, candidate.q).feasible;
}

std::optional<ApproxSolution> solve_bruteforce(const ApproxProblem& problem, std::int64_t q_max,
                                               unsigned threads) {
  if (q_max < 1) throw Error(ErrorKind::invalid_argument, "q_max must be at least 1");
  if (q_max > kDirectScanLimit) {
    throw Error(ErrorKind::invalid_argument, "q_max above 2^40 is out of reach for a direct scan");
  }
  if (problem.size() == 0) return trivial_solution(problem, "bruteforce");

  std::vector<DoubleDouble> thetas;
  std::vector<double> alphas;
  for (std::size_t j = 0; j < problem.size(); ++j) {
    thetas.push_back(DoubleDouble::from(problem.thetas()[j]));
    alphas.push_back(static_cast<double>(problem.alphas()[j]));
  }
  // The split product is accurate far below this slack; the exact
  // re-evaluation has the final word on every candidate.
  const double screen = problem.epsilon() + 1e-9;

  return detail::first_hit(q_max, threads, [&](std::int64_t q) -> std::optional<ApproxSolution> {
    for (std::size_t j = 0; j < thetas.size(); ++j) {
      double r = centered_turns(q, thetas[j]) - alphas[j];
      r -= std::nearbyint(r);
      if (std::abs(r) >= screen) return std::nullopt;
    }
    Evaluation e = evaluate(problem, BigInt(q));
    if (!e.feasible) return std::nullopt;
    e.solution.strategy = "bruteforce";
    return std::move(e.solution);
  });
}

std::optional<ApproxSolution> solve_lattice(const ApproxProblem& problem, const BigInt& q_bound,
                                            const LatticeOptions& options) {
  if (q_bound < 1) throw Error(ErrorKind::invalid_argument, "q_bound must be at least 1");
  if (problem.size() == 0) return trivial_solution(problem, "lattice");

  const std::size_t dims = problem.size();
  const std::size_t d = dims + 1;
  const HighReal inv_eps = HighReal(1) / HighReal(problem.epsilon());

  // A window [0, Q] holds about Q (2 eps)^L solutions; start a little below
  // the size where one is expected.
  const double expected_log2 =
      static_cast<double>(dims) * std::log2(1.0 / (2.0 * problem.epsilon())) - 4.0;
  BigInt window = 1;
  if (expected_log2 > 0) {
    window = round_to_bigint(boost::multiprecision::pow(HighReal(2), HighReal(expected_log2)));
  }
  if (window < 1) window = 1;
  if (window > q_bound) window = q_bound;

  // Coordinates: (q theta_j - p_j) / eps for each j, then 2q / Q. The box
  // |coordinate - target| <= 1 is exactly the feasible set with 0 <= q <= Q,
  // and the ball of radius sqrt(d) around the target contains that box.
  const double radius = std::sqrt(static_cast<double>(d)) * (1.0 + 1e-9);
  for (;;) {
    RealMatrix basis(d, std::vector<HighReal>(d));
    for (std::size_t j = 0; j < dims; ++j) {
      basis[0][j] = problem.thetas()[j] * inv_eps;
      basis[j + 1][j] = inv_eps;
    }
    basis[0][dims] = HighReal(2) / HighReal(window);
    std::vector<HighReal> target(d);
    for (std::size_t j = 0; j < dims; ++j) target[j] = problem.alphas()[j] * inv_eps;
    target[dims] = 1;

    std::optional<ApproxSolution> best;
    try {
      const ReducedBasis reduced = lll_reduce(std::move(basis));
      enumerate_close_vectors(reduced, target, radius, options.node_budget,
                              [&](std::span<const std::int64_t> x) {
                                BigInt q = 0;
                                for (std::size_t i = 0; i < d; ++i) {
                                  q += BigInt(x[i]) * reduced.transform[i][0];
                                }
                                if (q < 1 || q > q_bound) return true;
                                if (best && q >= best->q) return true;
                                Evaluation e = evaluate(problem, q);
                                if (e.feasible) best = std::move(e.solution);
                                return true;
                              });
    } catch (const Error&) {
      return std::nullopt;
    }
    if (best) {
      best->strategy = "lattice";
      return best;
    }
    if (window >= q_bound) return std::nullopt;
    BigInt next = round_to_bigint(HighReal(window) * HighReal(options.growth));
    window = next > window ? next : window + 1;
    if (window > q_bound) window = q_bound;
  }
}

std::optional<ApproxSolution> solve(const ApproxProblem& problem, const BigInt& q_max,
                                    SolveStrategy strategy, unsigned threads) {
  switch (strategy) {
    case SolveStrategy::bruteforce:
      if (q_max > kDirectScanLimit) {
        throw Error(ErrorKind::invalid_argument, "q_max above 2^40 needs the lattice strategy");
      }
      return solve_bruteforce(problem, q_max.convert_to<std::int64_t>(), threads);
    case SolveStrategy::lattice:
      return solve_lattice(problem, q_max);
    case SolveStrategy::automatic:
      break;
  }
  const BigInt direct = q_max < kBruteForceLimit ? q_max : BigInt(kBruteForceLimit);
  if (auto s = solve_bruteforce(problem, direct.convert_to<std::int64_t>(), threads)) return s;
  if (q_max <= kBruteForceLimit) return std::nullopt;
  return solve_lattice(problem, q_max);
}

std::string to_string(SolveStrategy strategy) {
  switch (strategy) {
    case SolveStrategy::automatic: return "auto";
    case SolveStrategy::bruteforce: return "bruteforce";
    case SolveStrategy::lattice: return "lattice";
  }
  return "auto";
}

SolveStrategy parse_strategy(const std::string& name) {
  if (name == "auto") return SolveStrategy::automatic;
  if (name == "bruteforce") return SolveStrategy::bruteforce;
  if (name == "lattice") return SolveStrategy::lattice;
  throw Error(ErrorKind::invalid_argument, "unknown strategy '" + name + "'");
}

ApproxProblem pgst_targets(std::int64_t n, double epsilon) {
  if (n < 8 || (n & (n - 1)) != 0) {
    throw Error(ErrorKind::unsupported_order,
                "time construction targets exist for n = 2^k with k >= 3, got " +
                    std::to_string(n));
  }
  std::vector<HighReal> thetas;
  std::vector<HighReal> alphas;
  for (std::int64_t l = 1; l < n / 4; ++l) {
    thetas.push_back(HighReal(2) *
                     boost::multiprecision::cos(HighReal(2) * high_pi() * HighReal(l) / HighReal(n)));
    alphas.push_back(l % 2 == 1 ? HighReal("0.5") : HighReal(0));
  }
  return ApproxProblem(std::move(thetas), std::move(alphas), epsilon);
}

PhaseReport phase_report(std::int64_t n, const EvolutionTime& t) {
  if (n % 2 != 0) {
    throw Error(ErrorKind::no_antipode,
                "phase reports need an even cycle, got n = " + std::to_string(n));
  }
  const Propagator cycle(make_cycle(n));
  PhaseReport report;
  report.n = n;
  // Measured against the trivial character, whose phase is the global one
  // (and vanishes on 2 pi Z).
  const double reference = cycle.phase(0, t);
  for (std::int64_t l = 0; l < n; ++l) {
    const double parity = (l % 2 == 0) ? 0.0 : std::numbers::pi;
    double r = reduce_angle(cycle.phase(static_cast<std::size_t>(l), t) + parity - reference);
    if (std::abs(r) < 1e-60) r = 0.0;  // below the extended working precision
    report.residuals.push_back(r);
    report.worst = std::max(report.worst, std::abs(r));
  }
  report.fidelity_bound = 1.0 - report.worst;
  return report;
}

}  // namespace pgstlab
