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

#include "pgstlab/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <random>
#include <regex>

#include <CLI11.hpp>

#include "pgstlab/classify.hpp"
#include "pgstlab/error.hpp"
#include "pgstlab/graph_literal.hpp"
#include "pgstlab/kronecker.hpp"
#include "pgstlab/serialize.hpp"
#include "pgstlab/spectra.hpp"
#include "pgstlab/transfer.hpp"

namespace pgstlab {
namespace {

using nlohmann::json;

enum class Format { json, csv, table };

struct Settings {
  std::string format = "json";
  double epsilon = 1e-3;
  std::string q_max = "1e7";
  double step = 1e-3;
  double start = 0.0;
  double stop = 1000.0;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string strategy = "auto";
  bool verify = false;

  Format output() const {
    if (format == "csv") return Format::csv;
    if (format == "table") return Format::table;
    return Format::json;
  }
};

// Integers, optionally in the form "<digits>e<digits>" (1e7 is ten million).
BigInt parse_count(const std::string& text) {
  static const std::regex pattern(R"(^(\d+)(?:[eE](\d+))?$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    throw Error(ErrorKind::invalid_argument, "expected a non-negative integer, got '" + text + "'");
  }
  BigInt value(m[1].str());
  if (m[2].matched) {
    const int exponent = std::stoi(m[2].str());
    if (exponent > 400) throw Error(ErrorKind::invalid_argument, "exponent too large in " + text);
    for (int i = 0; i < exponent; ++i) value *= 10;
  }
  return value;
}

// "3" names a circulant vertex, "0,4" a product vertex.
std::vector<Vertex> parse_vertex(const std::string& text) {
  std::vector<Vertex> coords;
  std::size_t begin = 0;
  for (;;) {
    const std::size_t end = text.find(',', begin);
    const std::string part = text.substr(begin, end == std::string::npos ? end : end - begin);
    Vertex x = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), x);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw Error(ErrorKind::invalid_argument, "bad vertex '" + text + "'");
    }
    coords.push_back(x);
    if (end == std::string::npos) break;
    begin = end + 1;
  }
  return coords;
}

std::string fmt6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string join_vertex(const std::vector<Vertex>& coords) {
  std::string s;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coords[i]);
  }
  return coords.size() == 1 ? s : "(" + s + ")";
}

std::string pair_text(const std::optional<VertexPair>& p) {
  if (!p) return "-";
  return join_vertex(p->u) + " -> " + join_vertex(p->v);
}

std::optional<VertexPair> parse_pair(const std::string& u, const std::string& v) {
  if (u.empty() && v.empty()) return std::nullopt;
  if (u.empty() || v.empty()) {
    throw Error(ErrorKind::invalid_argument, "give both vertices of the pair or neither");
  }
  return VertexPair{parse_vertex(u), parse_vertex(v)};
}

double measure(const ParsedGraph& g, const VertexPair& pair, const EvolutionTime& t) {
  if (g.is_product()) return amplitude(g.composite(), pair.u, pair.v, t).fidelity;
  return amplitude(AmplitudeQuery{g.circulant(), pair.u.at(0), pair.v.at(0), t}).fidelity;
}

std::vector<FactorQuery> factor_queries(const ParsedGraph& g, const VertexPair& pair) {
  const CompositeGraph c = g.composite();
  std::vector<FactorQuery> out;
  for (std::size_t i = 0; i < c.factor_count(); ++i) {
    out.push_back({c.factors()[i].graph, pair.u.at(i), pair.v.at(i)});
  }
  return out;
}

// The pair moved by a vertex translation, one shift per coordinate.
VertexPair translate(const ParsedGraph& g, const VertexPair& pair, std::mt19937_64& rng) {
  const CompositeGraph c = g.composite();
  VertexPair moved = pair;
  for (std::size_t i = 0; i < c.factor_count(); ++i) {
    const std::int64_t n = c.factors()[i].graph.order();
    const auto shift = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n));
    moved.u[i] = (pair.u[i] + shift) % n;
    moved.v[i] = (pair.v[i] + shift) % n;
  }
  return moved;
}

std::optional<EvolutionTime> certificate_time(const TimeConstruction& tc) {
  if (tc.exact_time_over_pi) return EvolutionTime::at(std::numbers::pi * *tc.exact_time_over_pi);
  if (tc.sample) return tc.sample->time();
  return std::nullopt;
}

void write_rows(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows,
                Format format) {
  if (format == Format::csv) {
    out << "key,value\n";
    for (const auto& [k, v] : rows) out << k << ',' << v << '\n';
    return;
  }
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.first.size());
  for (const auto& [k, v] : rows) {
    out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  }
}

// ---------------------------------------------------------------------------

int cmd_spectrum(const Settings& s, const std::string& literal, std::ostream& out) {
  const ParsedGraph g = parse_graph(literal);
  const CompositeGraph parts = g.composite();
  std::vector<Spectrum> spectra;
  for (const auto& f : parts.factors()) spectra.push_back(eigenvalues(f.graph));

  switch (s.output()) {
    case Format::json: {
      json j;
      if (g.is_product()) {
        j = {{"factors", spectra}};
      } else {
        j = spectra.front();
      }
      j["graph"] = format_graph(g);
      j["notes"] = g.notes;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << (g.is_product() ? "factor,l,lambda\n" : "l,lambda\n");
      for (std::size_t f = 0; f < spectra.size(); ++f) {
        for (std::size_t l = 0; l < spectra[f].values.size(); ++l) {
          if (g.is_product()) out << f << ',';
          out << l << ',' << format_exact(spectra[f].values[l]) << '\n';
        }
      }
      break;
    case Format::table:
      out << "graph     " << format_graph(g) << '\n';
      for (std::size_t f = 0; f < spectra.size(); ++f) {
        if (g.is_product()) out << "factor " << f << '\n';
        out << "integral  " << (spectra[f].integral ? "yes" : "no") << '\n';
        for (std::size_t l = 0; l < spectra[f].values.size(); ++l) {
          out << "  lambda_" << l << " = " << fmt6(spectra[f].values[l]) << '\n';
        }
      }
      for (const auto& note : g.notes) out << "note      " << note << '\n';
      break;
  }
  return 0;
}

int cmd_classify(const Settings& s, const std::string& literal, const std::string& u,
                 const std::string& v, std::ostream& out) {
  const ParsedGraph g = parse_graph(literal);
  ClassifyOptions options;
  options.epsilon = s.epsilon;
  options.strategy = parse_strategy(s.strategy);
  options.threads = s.threads;
  options.solve_up_to = parse_count(s.q_max);
  const Verdict verdict = classify(g, parse_pair(u, v), options);
  int code = exit_code(verdict.status);

  json j = verdict;
  j["graph"] = format_graph(g);
  std::vector<std::pair<std::string, std::string>> rows = {
      {"graph", format_graph(g)},
      {"status", to_string(verdict.status)},
      {"pair", pair_text(verdict.pair)},
      {"certificate", certificate_kind(verdict.certificate)},
  };
  if (const auto* tc = std::get_if<TimeConstruction>(&verdict.certificate)) {
    if (tc->exact_time_over_pi) {
      rows.emplace_back("time", "pi * " + fmt6(*tc->exact_time_over_pi));
    } else if (tc->sample) {
      rows.emplace_back("sample q", to_decimal(tc->sample->q));
      rows.emplace_back("implied fidelity", fmt6(*tc->implied_fidelity()));
    }
  }

  if (s.verify && (verdict.status == Status::pgst || verdict.status == Status::pst)) {
    const auto& tc = std::get<TimeConstruction>(verdict.certificate);
    const auto t = certificate_time(tc);
    json check;
    if (!t) {
      check = {{"checked", false}, {"reason", "no sample time within q_max"}};
      rows.emplace_back("verify", "skipped (no sample time within q_max)");
    } else {
      const double bound = *tc.implied_fidelity() - 1e-9;
      std::mt19937_64 rng(s.seed);
      std::vector<VertexPair> pairs = {*verdict.pair};
      for (int i = 0; i < 3; ++i) pairs.push_back(translate(g, *verdict.pair, rng));
      bool ok = true;
      json measurements = json::array();
      for (const auto& p : pairs) {
        const double f = measure(g, p, *t);
        ok = ok && f >= bound;
        measurements.push_back({{"pair", p}, {"fidelity", f}});
      }
      check = {{"checked", true}, {"t", t->value()},      {"bound", bound},
               {"ok", ok},        {"measurements", measurements}};
      rows.emplace_back("verify", std::string(ok ? "ok" : "FAILED") + " (fidelity " +
                                      fmt6(measurements[0]["fidelity"].get<double>()) +
                                      " >= " + fmt6(bound) + ")");
      if (!ok) code = kExitVerifyFailed;
    }
    j["verify"] = check;
  }
  for (const auto& c : verdict.citations) rows.emplace_back("citation", c);
  for (const auto& n : verdict.notes) rows.emplace_back("note", n);

  if (s.output() == Format::json) {
    out << j.dump(2) << '\n';
  } else {
    write_rows(out, rows, s.output());
  }
  return code;
}

int cmd_find_time(const Settings& s, const std::string& literal, const std::string& u,
                  const std::string& v, std::optional<double> target, std::ostream& out,
                  std::ostream& err) {
  const ParsedGraph g = parse_graph(literal);
  const Verdict verdict = classify(g, parse_pair(u, v));
  if (verdict.status != Status::pgst && verdict.status != Status::pst) {
    err << "error: not-certified: " << format_graph(g) << " is classified "
        << to_string(verdict.status) << "; run `pgstlab classify` for the certificate\n";
    return kExitError;
  }
  if (target && !(*target > 0.0 && *target <= 1.0)) {
    throw Error(ErrorKind::invalid_argument, "target fidelity must lie in (0, 1]");
  }
  const auto& tc = std::get<TimeConstruction>(verdict.certificate);
  const VertexPair pair = *verdict.pair;
  json j = {{"graph", format_graph(g)}, {"pair", pair}};
  std::vector<std::pair<std::string, std::string>> rows = {{"graph", format_graph(g)},
                                                           {"pair", pair_text(pair)}};

  if (tc.exact_time_over_pi) {
    const auto t = *certificate_time(tc);
    const double f = measure(g, pair, t);
    j.update({{"found", true},
              {"exact", true},
              {"t", t.value()},
              {"t_over_pi", *tc.exact_time_over_pi},
              {"fidelity", f}});
    rows.insert(rows.end(), {{"found", "yes (perfect transfer)"},
                             {"t", "pi * " + fmt6(*tc.exact_time_over_pi)},
                             {"fidelity", fmt6(f)}});
  } else {
    const BigInt q_max = parse_count(s.q_max);
    if (q_max < 1) throw Error(ErrorKind::invalid_argument, "q_max must be at least 1");
    const SolveStrategy strategy = parse_strategy(s.strategy);
    const auto r = static_cast<double>(tc.moving_factors);
    const double epsilon =
        target ? std::max((1.0 - *target) / (2.0 * std::numbers::pi * r), 1e-300) : s.epsilon;
    const ApproxProblem problem = pgst_targets(tc.order, epsilon);

    std::optional<BigInt> q;
    std::string used;
    if (target) {
      const std::vector<FactorQuery> factors = factor_queries(g, pair);
      if (strategy != SolveStrategy::lattice) {
        const BigInt direct = q_max < kBruteForceLimit ? q_max : BigInt(kBruteForceLimit);
        if (strategy == SolveStrategy::bruteforce && q_max > kBruteForceLimit) {
          throw Error(ErrorKind::invalid_argument, "q_max above 1e7 needs the lattice strategy");
        }
        if (auto hit = first_period_multiple(factors, *target, direct.convert_to<std::int64_t>(),
                                             s.threads)) {
          q = BigInt(hit->q);
          used = "bruteforce";
        }
      }
      if (!q && (strategy == SolveStrategy::lattice ||
                 (strategy == SolveStrategy::automatic && q_max > kBruteForceLimit))) {
        if (auto sol = solve_lattice(problem, q_max)) {
          if (measure(g, pair, sol->time()) >= *target) {
            q = sol->q;
            used = "lattice";
          }
        }
      }
    } else if (auto sol = solve(problem, q_max, strategy, s.threads)) {
      q = sol->q;
      used = sol->strategy;
    }

    if (!q) {
      j.update({{"found", false}, {"q_max", big_to_json(q_max)}, {"epsilon", epsilon}});
      if (target) j["target"] = *target;
      rows.insert(rows.end(), {{"found", "no"}, {"q_max", to_decimal(q_max)}});
      if (s.output() == Format::json) {
        out << j.dump(2) << '\n';
      } else {
        write_rows(out, rows, s.output());
      }
      return 1;
    }
    ApproxSolution report = evaluate_candidate(problem, *q);
    report.strategy = used;
    const EvolutionTime t = report.time();
    const double f = measure(g, pair, t);
    const PhaseReport phases = phase_report(tc.order, t);
    j.update(json(report));
    j.update({{"found", true},
              {"fidelity", f},
              {"residuals", phases.residuals},
              {"worst_residual", phases.worst},
              {"fidelity_bound", std::pow(phases.fidelity_bound, r)}});
    if (target) j["target"] = *target;
    // With a target the direct scan decides by measured fidelity; epsilon
    // is only the criterion when the coordinate problem was solved.
    if (!target || used == "lattice") j["epsilon"] = epsilon;
    rows.insert(rows.end(), {{"found", "yes"},
                             {"q", to_decimal(report.q)},
                             {"t", "2 pi * " + to_decimal(report.q) + " = " + fmt6(t.value())},
                             {"worst_error", fmt6(report.worst_error)},
                             {"worst_residual", fmt6(phases.worst)},
                             {"fidelity", fmt6(f)},
                             {"strategy", used}});
  }

  if (s.output() == Format::json) {
    out << j.dump(2) << '\n';
  } else {
    write_rows(out, rows, s.output());
  }
  return 0;
}

int cmd_scan(const Settings& s, const std::string& literal, const std::string& u,
             const std::string& v, const std::string& output, std::ostream& out,
             std::ostream& err) {
  const ParsedGraph g = parse_graph(literal);
  if (g.is_product()) {
    throw Error(ErrorKind::invalid_argument, "scan works on a single circulant");
  }
  const auto pu = parse_vertex(u);
  const auto pv = parse_vertex(v);
  if (pu.size() != 1 || pv.size() != 1) {
    throw Error(ErrorKind::invalid_argument, "scan takes scalar vertices");
  }
  const FidelityCurve curve =
      fidelity_scan(g.circulant(), pu[0], pv[0], s.start, s.stop, s.step, s.threads);

  const json summary = {{"graph", format_graph(g)},
                        {"pair", {pu[0], pv[0]}},
                        {"samples", curve.fidelities.size()},
                        {"max_fidelity", curve.max_fidelity},
                        {"argmax_time", curve.argmax_time}};
  const std::string line = "max_fidelity=" + format_exact(curve.max_fidelity) +
                           " argmax_t=" + format_exact(curve.argmax_time) +
                           " samples=" + std::to_string(curve.fidelities.size());
  if (output.empty()) {
    write_curve_csv(out, curve);
    err << line << '\n';
    return 0;
  }
  std::ofstream file(output);
  if (!file) throw Error(ErrorKind::invalid_argument, "cannot write " + output);
  write_curve_csv(file, curve);
  switch (s.output()) {
    case Format::json: out << summary.dump(2) << '\n'; break;
    case Format::csv: out << "max_fidelity,argmax_time,samples\n"
                          << format_exact(curve.max_fidelity) << ','
                          << format_exact(curve.argmax_time) << ','
                          << curve.fidelities.size() << '\n';
      break;
    case Format::table: out << line << '\n'; break;
  }
  return 0;
}

int cmd_certify(const Settings& s, const std::string& kind, const std::optional<std::int64_t>& n,
                const std::optional<std::int64_t>& m, const std::optional<std::int64_t>& p,
                std::ostream& out) {
  json j;
  std::vector<std::pair<std::string, std::string>> rows;
  bool holds = false;
  if (kind == "independence") {
    if (!n) throw Error(ErrorKind::invalid_argument, "certify independence needs an order N");
    const IndependenceCertificate c = rational_independence(*n);
    holds = c.independent;
    j = c;
    rows = {{"n", std::to_string(c.n)},
            {"vectors", std::to_string(c.indices.size())},
            {"rank", std::to_string(c.rank)},
            {"independent", c.independent ? "yes" : "no"}};
  } else {
    if (!m || !p) throw Error(ErrorKind::invalid_argument, "certify dependency needs --m and --p");
    const DependencyWitness w = dependency_witness(*m, *p);
    holds = w.valid();
    j = w;
    rows = {{"n", std::to_string(w.n)},
            {"m", std::to_string(w.m)},
            {"p", std::to_string(w.p)},
            {"residual_zero", w.valid() ? "yes" : "no"},
            {"complement_valid", w.complement_valid ? "yes" : "no"}};
    std::string terms;
    for (const auto& [index, coeff] : w.obstruction.terms) {
      terms += (terms.empty() ? "" : " ") + std::to_string(coeff) + "*l" + std::to_string(index);
    }
    rows.emplace_back("obstruction", terms);
  }
  if (s.output() == Format::json) {
    out << j.dump(2) << '\n';
  } else {
    write_rows(out, rows, s.output());
  }
  return holds ? 0 : 1;
}

int cmd_amplitude(const Settings& s, const std::string& literal, const std::string& u,
                  const std::string& v, const std::optional<double>& t_value,
                  const std::string& q_text, std::ostream& out) {
  const ParsedGraph g = parse_graph(literal);
  if (t_value.has_value() == !q_text.empty()) {
    throw Error(ErrorKind::invalid_argument, "give exactly one of a time t or --q");
  }
  const EvolutionTime t =
      q_text.empty() ? EvolutionTime::at(*t_value) : EvolutionTime::two_pi_multiple(parse_count(q_text));
  const auto pu = parse_vertex(u);
  const auto pv = parse_vertex(v);
  TransferResult r;
  if (g.is_product()) {
    r = amplitude(g.composite(), pu, pv, t);
  } else {
    if (pu.size() != 1 || pv.size() != 1) {
      throw Error(ErrorKind::invalid_argument, "a circulant vertex is a single residue");
    }
    r = amplitude(AmplitudeQuery{g.circulant(), pu[0], pv[0], t});
  }
  switch (s.output()) {
    case Format::json: {
      json j = r;
      j["graph"] = format_graph(g);
      j["t"] = t.value();
      if (t.is_two_pi_multiple()) j["q"] = big_to_json(t.multiple());
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "re,im,fidelity,phase\n"
          << format_exact(r.amplitude.real()) << ',' << format_exact(r.amplitude.imag()) << ','
          << format_exact(r.fidelity) << ',' << format_exact(r.phase) << '\n';
      break;
    case Format::table:
      write_rows(out,
                 {{"amplitude", fmt6(r.amplitude.real()) + (r.amplitude.imag() < 0 ? " - " : " + ") +
                                    fmt6(std::abs(r.amplitude.imag())) + "i"},
                  {"fidelity", fmt6(r.fidelity)},
                  {"phase", fmt6(r.phase)}},
                 Format::table);
      break;
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum state transfer on circulant graphs", "pgstlab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.allow_config_extras(CLI::config_extras_mode::error);

  Settings s;
  app.set_config("--config", "", "key=value file with defaults (env PGSTLAB_CONFIG)")
      ->envname("PGSTLAB_CONFIG");
  app.add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  app.add_flag("--verify", s.verify, "Re-measure fidelity at certificate times");
  app.add_option("--threads", s.threads, "Worker threads")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();
  app.add_option("--epsilon", s.epsilon, "Coordinate tolerance of the time construction")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--q-max,--q_max", s.q_max, "Largest q searched (integers or 1e7 style)")
      ->capture_default_str();
  app.add_option("--strategy", s.strategy, "Solver strategy")
      ->check(CLI::IsMember({"auto", "bruteforce", "lattice"}))
      ->capture_default_str();
  app.add_option("--step", s.step, "Scan step")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--start", s.start, "Scan start")->check(CLI::NonNegativeNumber)->capture_default_str();
  app.add_option("--stop", s.stop, "Scan stop")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--seed", s.seed, "Seed for the sampled pairs checked by --verify")
      ->capture_default_str();

  std::string literal;
  std::string u;
  std::string v;

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues and integrality");
  spectrum->add_option("graph", literal, "Graph literal")->required();

  auto* classify_cmd = app.add_subcommand("classify", "PGST verdict with certificate");
  classify_cmd->add_option("graph", literal, "Graph literal")->required();
  classify_cmd->add_option("u", u, "First vertex (e.g. 0 or 0,0)");
  classify_cmd->add_option("v", v, "Second vertex");

  std::optional<double> target;
  auto* find_time = app.add_subcommand("find-time", "Constructive transfer time t = 2 pi q");
  find_time->add_option("graph", literal, "Graph literal")->required();
  find_time->add_option("u", u, "First vertex");
  find_time->add_option("v", v, "Second vertex");
  find_time->add_option("--target", target, "Fidelity to reach (otherwise --epsilon applies)");

  std::string output;
  auto* scan = app.add_subcommand("scan", "Fidelity on a time grid, as CSV");
  scan->add_option("graph", literal, "Graph literal")->required();
  scan->add_option("u", u, "Source vertex")->required();
  scan->add_option("v", v, "Target vertex")->required();
  scan->add_option("--output,-o", output, "Write the CSV here instead of stdout");

  std::string kind;
  std::optional<std::int64_t> order;
  std::optional<std::int64_t> m;
  std::optional<std::int64_t> p;
  auto* certify = app.add_subcommand("certify", "Exact eigenvalue certificates");
  certify->add_option("kind", kind, "independence or dependency")
      ->required()
      ->check(CLI::IsMember({"independence", "dependency"}));
  certify->add_option("n", order, "Order for independence");
  certify->add_option("--m", m, "Even cofactor for dependency");
  certify->add_option("--p", p, "Odd prime for dependency");

  std::optional<double> t_value;
  std::string q_text;
  auto* amplitude_cmd = app.add_subcommand("amplitude", "Transfer amplitude H(t)_{u,v}");
  amplitude_cmd->add_option("graph", literal, "Graph literal")->required();
  amplitude_cmd->add_option("u", u, "Source vertex")->required();
  amplitude_cmd->add_option("v", v, "Target vertex")->required();
  amplitude_cmd->add_option("t", t_value, "Time");
  amplitude_cmd->add_option("--q", q_text, "Use t = 2 pi q exactly");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    if (*spectrum) return cmd_spectrum(s, literal, out);
    if (*classify_cmd) return cmd_classify(s, literal, u, v, out);
    if (*find_time) return cmd_find_time(s, literal, u, v, target, out, err);
    if (*scan) return cmd_scan(s, literal, u, v, output, out, err);
    if (*certify) return cmd_certify(s, kind, order, m, p, out);
    if (*amplitude_cmd) return cmd_amplitude(s, literal, u, v, t_value, q_text, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace pgstlab
