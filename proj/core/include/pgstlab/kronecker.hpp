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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgstlab/numeric.hpp"
#include "pgstlab/transfer.hpp"

namespace pgstlab {

/// Find q with |q theta_j - p_j - alpha_j| < epsilon for every j.
class ApproxProblem {
 public:
  ApproxProblem(std::vector<HighReal> thetas, std::vector<HighReal> alphas, double epsilon);

  static ApproxProblem from_doubles(const std::vector<double>& thetas,
                                    const std::vector<double>& alphas, double epsilon);

  std::size_t size() const noexcept { return thetas_.size(); }
  const std::vector<HighReal>& thetas() const noexcept { return thetas_; }
  const std::vector<HighReal>& alphas() const noexcept { return alphas_; }
  double epsilon() const noexcept { return epsilon_; }

  ApproxProblem with_epsilon(double epsilon) const;

 private:
  std::vector<HighReal> thetas_;
  std::vector<HighReal> alphas_;
  double epsilon_;
};

struct ApproxSolution {
  BigInt q;
  std::vector<BigInt> offsets;  // nearest integers p_j to q theta_j - alpha_j
  std::vector<double> errors;   // |q theta_j - p_j - alpha_j|
  double worst_error = 0.0;
  std::string strategy;

  /// t = 2 pi q.
  EvolutionTime time() const { return EvolutionTime::two_pi_multiple(q); }
};

/// Offsets and errors of a candidate q, computed in HighReal.
ApproxSolution evaluate_candidate(const ApproxProblem& problem, const BigInt& q);
bool is_feasible(const ApproxProblem& problem, const ApproxSolution& candidate);

/// Smallest q in [1, q_max] meeting every coordinate tolerance.
std::optional<ApproxSolution> solve_bruteforce(const ApproxProblem& problem, std::int64_t q_max,
                                               unsigned threads = 1);

struct LatticeOptions {
  std::size_t node_budget = 4'000'000;
  /// Ratio between successive search windows [0, Q].
  double growth = 2.0;
};

/// Proposes candidates from the closest vectors of the simultaneous
/// approximation lattice over growing windows q in [0, Q], Q <= q_bound.
/// Every returned solution is re-verified; minimality is not guaranteed.
std::optional<ApproxSolution> solve_lattice(const ApproxProblem& problem, const BigInt& q_bound,
                                            const LatticeOptions& options = {});

enum class SolveStrategy { automatic, bruteforce, lattice };

/// Default cut-over: direct scans up to this q_max, lattice above it.
inline constexpr std::int64_t kBruteForceLimit = 10'000'000;

std::optional<ApproxSolution> solve(const ApproxProblem& problem, const BigInt& q_max,
                                    SolveStrategy strategy, unsigned threads = 1);

std::string to_string(SolveStrategy strategy);
SolveStrategy parse_strategy(const std::string& name);

/// Targets whose solutions give near-antipodal transfer on C_n at t = 2 pi q:
/// thetas lambda_1..lambda_{n/4-1}, alphas 1/2 on odd and 0 on even indices.
/// Requires n = 2^k, k >= 3 (C_4 already has perfect transfer).
ApproxProblem pgst_targets(std::int64_t n, double epsilon);

/// Antipodal phase residuals on C_n: character l contributes
/// lambda_l t + l pi, reduced to (-pi, pi].
struct PhaseReport {
  std::int64_t n = 0;
  std::vector<double> residuals;
  double worst = 0.0;
  double fidelity_bound = 0.0;  // 1 - worst
};

PhaseReport phase_report(std::int64_t n, const EvolutionTime& t);

}  // namespace pgstlab
