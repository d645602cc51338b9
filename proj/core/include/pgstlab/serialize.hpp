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

#include <ostream>

#include <json.hpp>

#include "pgstlab/classify.hpp"
#include "pgstlab/cyclotomic.hpp"
#include "pgstlab/kronecker.hpp"
#include "pgstlab/spectra.hpp"
#include "pgstlab/transfer.hpp"

// JSON mappings, picked up by nlohmann::json through ADL. Big integers are
// written as JSON integers while they fit in 64 bits and as decimal strings
// beyond that; cyclotomic coordinates are always strings.
namespace pgstlab {

nlohmann::json big_to_json(const BigInt& x);

void to_json(nlohmann::json& j, const Spectrum& s);
void to_json(nlohmann::json& j, const CyclotomicInteger& x);
void to_json(nlohmann::json& j, const TransferResult& r);
void to_json(nlohmann::json& j, const ApproxProblem& p);
void to_json(nlohmann::json& j, const ApproxSolution& s);
void to_json(nlohmann::json& j, const PhaseReport& r);
void to_json(nlohmann::json& j, const IndependenceCertificate& c);
void to_json(nlohmann::json& j, const EigenRelation& r);
void to_json(nlohmann::json& j, const DependencyWitness& w);
void to_json(nlohmann::json& j, const TimeConstruction& tc);
void to_json(nlohmann::json& j, const VertexPair& p);
void to_json(nlohmann::json& j, const Verdict& v);

/// `t,fidelity` rows with 17 significant digits.
void write_curve_csv(std::ostream& out, const FidelityCurve& curve);

/// printf-style %.17g, the format of every machine-readable float outside JSON.
std::string format_exact(double x);

}  // namespace pgstlab
