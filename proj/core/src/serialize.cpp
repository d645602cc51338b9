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

#include "pgstlab/serialize.hpp"

#include <cstdio>
#include <limits>

namespace pgstlab {

nlohmann::json big_to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() &&
      x <= std::numeric_limits<std::int64_t>::max()) {
    return x.convert_to<std::int64_t>();
  }
  return to_decimal(x);
}

void to_json(nlohmann::json& j, const Spectrum& s) {
  j = {{"n", s.n}, {"values", s.values}, {"integral", s.integral}};
}

void to_json(nlohmann::json& j, const CyclotomicInteger& x) {
  auto coords = nlohmann::json::array();
  for (const auto& c : x.coefficients()) coords.push_back(to_decimal(c));
  j = {{"conductor", x.conductor()}, {"coefficients", coords}, {"zero", x.is_zero()}};
}

void to_json(nlohmann::json& j, const TransferResult& r) {
  j = {{"re", r.amplitude.real()},
       {"im", r.amplitude.imag()},
       {"fidelity", r.fidelity},
       {"phase", r.phase}};
}

void to_json(nlohmann::json& j, const ApproxProblem& p) {
  std::vector<double> thetas;
  std::vector<double> alphas;
  for (const auto& x : p.thetas()) thetas.push_back(static_cast<double>(x));
  for (const auto& x : p.alphas()) alphas.push_back(static_cast<double>(x));
  j = {{"thetas", thetas}, {"alphas", alphas}, {"epsilon", p.epsilon()}};
}

void to_json(nlohmann::json& j, const ApproxSolution& s) {
  auto offsets = nlohmann::json::array();
  for (const auto& p : s.offsets) offsets.push_back(big_to_json(p));
  j = {{"q", big_to_json(s.q)},
       {"t", s.time().value()},
       {"offsets", offsets},
       {"per_coordinate_errors", s.errors},
       {"worst_error", s.worst_error},
       {"strategy", s.strategy}};
}

void to_json(nlohmann::json& j, const PhaseReport& r) {
  j = {{"n", r.n},
       {"residuals", r.residuals},
       {"worst", r.worst},
       {"fidelity_bound", r.fidelity_bound}};
}

void to_json(nlohmann::json& j, const IndependenceCertificate& c) {
  auto rows = nlohmann::json::array();
  for (const auto& row : c.coordinates) {
    auto r = nlohmann::json::array();
    for (const auto& x : row) r.push_back(big_to_json(x));
    rows.push_back(std::move(r));
  }
  j = {{"n", c.n},
       {"indices", c.indices},
       {"coordinates", rows},
       {"rank", c.rank},
       {"independent", c.independent}};
}

void to_json(nlohmann::json& j, const EigenRelation& r) {
  auto terms = nlohmann::json::array();
  for (const auto& [index, coeff] : r.terms) terms.push_back({index, coeff});
  j = {{"terms", terms}, {"residual", r.residual}};
}

void to_json(nlohmann::json& j, const DependencyWitness& w) {
  j = {{"m", w.m},
       {"p", w.p},
       {"n", w.n},
       {"shift_one", w.shift_one},
       {"shift_two", w.shift_two},
       {"obstruction", w.obstruction},
       {"complement_valid", w.complement_valid},
       {"complement_residual", w.complement_residual},
       {"valid", w.valid()}};
}

void to_json(nlohmann::json& j, const TimeConstruction& tc) {
  j = {{"order", tc.order}, {"moving_factors", tc.moving_factors}};
  if (tc.exact_time_over_pi) {
    j["exact_time_over_pi"] = *tc.exact_time_over_pi;
  } else {
    j["sequence"] = "t = 2 pi q";
  }
  j["problem"] = tc.problem ? nlohmann::json(*tc.problem) : nlohmann::json();
  j["sample"] = tc.sample ? nlohmann::json(*tc.sample) : nlohmann::json();
  const auto bound = tc.implied_fidelity();
  j["implied_fidelity"] = bound ? nlohmann::json(*bound) : nlohmann::json();
}

void to_json(nlohmann::json& j, const VertexPair& p) {
  if (p.u.size() == 1 && p.v.size() == 1) {
    j = {p.u[0], p.v[0]};
  } else {
    j = {p.u, p.v};
  }
}

void to_json(nlohmann::json& j, const Verdict& v) {
  nlohmann::json payload = std::visit(
      [](const auto& c) -> nlohmann::json {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, ParityObstruction>) {
          return {{"n", c.n}, {"reason", c.reason}};
        } else if constexpr (std::is_same_v<T, OpenProblem>) {
          return {{"question", c.question}};
        } else {
          return c;
        }
      },
      v.certificate);
  j = {{"status", to_string(v.status)},
       {"pair", v.pair ? nlohmann::json(*v.pair) : nlohmann::json()},
       {"certificate", {{"kind", certificate_kind(v.certificate)}, {"payload", payload}}},
       {"citations", v.citations},
       {"notes", v.notes}};
}

std::string format_exact(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_curve_csv(std::ostream& out, const FidelityCurve& curve) {
  out << "t,fidelity\n";
  for (std::size_t i = 0; i < curve.fidelities.size(); ++i) {
    out << format_exact(curve.time_at(i)) << ',' << format_exact(curve.fidelities[i]) << '\n';
  }
}

}  // namespace pgstlab
