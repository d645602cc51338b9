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
#include <variant>
#include <vector>

#include "pgstlab/graph.hpp"
#include "pgstlab/graph_literal.hpp"
#include "pgstlab/kronecker.hpp"
#include "pgstlab/spectra.hpp"

namespace pgstlab {

enum class Status { pst, pgst, no_pgst, unknown };

std::string to_string(Status status);

/// Exit code convention of the command line: 0 transfer, 1 ruled out,
/// 2 undecided.
int exit_code(Status status);

/// A vertex pair of a circulant (one coordinate each) or of a product
/// (one coordinate per factor).
struct VertexPair {
  std::vector<Vertex> u;
  std::vector<Vertex> v;

  static VertexPair scalar(Vertex a, Vertex b) { return {{a}, {b}}; }
  friend bool operator==(const VertexPair&, const VertexPair&) = default;
};

/// PGST along t = 2 pi q for the q solving `problem` (the targets of C_order),
/// or PST at an exact time.
struct TimeConstruction {
  std::int64_t order = 0;
  std::optional<ApproxProblem> problem;
  std::optional<ApproxSolution> sample;
  /// Set for perfect transfer, in units of pi (1/2 means t = pi/2).
  std::optional<double> exact_time_over_pi;
  /// Number of factors whose error adds up in a product; 1 for circulants.
  std::int64_t moving_factors = 1;

  /// Lower bound on the fidelity at the sample time implied by its worst
  /// coordinate error: (1 - 2 pi w)^moving_factors.
  std::optional<double> implied_fidelity() const;
};

struct ParityObstruction {
  std::int64_t n = 0;
  std::string reason;
};

struct OpenProblem {
  std::string question;
};

using Certificate =
    std::variant<TimeConstruction, DependencyWitness, ParityObstruction, OpenProblem>;

std::string certificate_kind(const Certificate& c);

struct Verdict {
  Status status = Status::unknown;
  std::optional<VertexPair> pair;
  Certificate certificate = OpenProblem{};
  std::vector<std::string> citations;
  std::vector<std::string> notes;
};

struct ClassifyOptions {
  double epsilon = 1e-3;
  /// When set, time constructions carry a sample solution searched up to
  /// this q (missing samples are reported in the notes).
  std::optional<BigInt> solve_up_to;
  SolveStrategy strategy = SolveStrategy::automatic;
  unsigned threads = 1;
};

Verdict classify_cycle(std::int64_t n, const ClassifyOptions& options = {});
Verdict classify_cycle_complement(std::int64_t n, const ClassifyOptions& options = {});
/// C_n together with G(n, D), and (complement = true) its complement.
Verdict classify_union(std::int64_t n, const DivisorSet& d, bool complement = false,
                       const ClassifyOptions& options = {});
/// `pair` defaults to the antipodal tuple on transfer factors and the
/// diagonal on periodic ones.
Verdict classify_product(const CompositeGraph& g, std::optional<VertexPair> pair = std::nullopt,
                         const ClassifyOptions& options = {});

/// Structural recognition of the families above (cycles, unions with gcd
/// graphs, their complements, products), restricted to `pair` if given.
/// Anything else is Unknown.
Verdict classify(const ParsedGraph& g, std::optional<VertexPair> pair = std::nullopt,
                 const ClassifyOptions& options = {});

}  // namespace pgstlab
