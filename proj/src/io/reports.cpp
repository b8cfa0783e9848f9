// Copyright 2026 The nisq Authors
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

#include "nisq/io/reports.hpp"

#include <ostream>

#include <fmt/format.h>

#include "nisq/common/errors.hpp"
#include "nisq/io/circuit_file.hpp"

namespace nisq {
namespace {

constexpr int kCliffordCacheVersion = 1;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

nlohmann::json matrix_rows(const RMatrix& m) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  }
  return out;
}

nlohmann::json vector_json(const Eigen::Vector4d& v) { return {v(0), v(1), v(2), v(3)}; }

std::string insertion_name(NoiseInsertion i) {
  switch (i) {
    case NoiseInsertion::PerClifford: return "per_clifford";
    case NoiseInsertion::PerElementaryGate: return "per_gate";
    case NoiseInsertion::PerCnot: return "per_cnot";
  }
  return "unknown";
}

nlohmann::json fit_json(const std::optional<DecayFit>& fit) {
  if (!fit) return nullptr;
  return {{"A0", fit->A0}, {"B0", fit->B0}, {"p", fit->p}, {"r", fit->r}, {"residual", fit->residual}};
}

nlohmann::json rb_config_json(const RBConfig& config) {
  nlohmann::json noise = nullptr;
  if (config.channel) {
    noise = {{"type", "channel"}, {"kraus_operators", config.channel->kraus().size()}};
  } else if (config.pauli) {
    noise = {{"type", "pauli"}, {"rate", config.pauli->rate}, {"weights", config.pauli->weights}};
  }
  return {{"n_qubits", config.n_qubits},
          {"lengths", config.lengths},
          {"sequences_per_length", config.sequences_per_length},
          {"shots", config.shots},
          {"noise", noise},
          {"insertion", insertion_name(config.insertion)},
          {"readout_flip", config.readout_flip},
          {"seed", config.seed}};
}

nlohmann::json rb_points(const RBResult& result) {
  nlohmann::json per_m = nlohmann::json::array();
  for (const auto& p : result.points) {
    per_m.push_back({{"m", p.m}, {"mean_survival", p.mean_survival}, {"stderr", p.stderr_survival}});
  }
  return per_m;
}

}  // namespace

std::string format_number(double value) { return fmt::format("{}", value); }

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
  out << kScanCsvHeader << '\n';
  for (const auto& r : rows) {
    out << csv_field(r.circuit_id) << ',' << csv_field(r.family) << ',' << r.n << ',' << r.d << ',' << r.area
        << ',' << format_number(r.p) << ',' << format_number(r.success_prob) << ',' << format_number(r.ci_low)
        << ',' << format_number(r.ci_high) << ',' << r.method << ',' << r.criterion << ','
        << format_number(r.threshold) << '\n';
  }
}

void write_tolerable_csv(std::ostream& out, const std::vector<TolerableRow>& rows) {
  out << kTolerableCsvHeader << '\n';
  for (const auto& r : rows) {
    out << csv_field(r.circuit_id) << ',' << csv_field(r.family) << ',' << r.n << ',' << r.d << ',' << r.area
        << ',' << format_number(r.p_star) << ',' << format_number(r.bound) << '\n';
  }
}

nlohmann::json scan_json(const std::vector<ScanRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    out.push_back({{"circuit_id", r.circuit_id}, {"family", r.family}, {"n", r.n}, {"d", r.d},
                   {"area", r.area}, {"p", r.p}, {"success_prob", r.success_prob}, {"ci_low", r.ci_low},
                   {"ci_high", r.ci_high}, {"method", r.method}, {"criterion", r.criterion},
                   {"threshold", r.threshold}});
  }
  return out;
}

nlohmann::json tolerable_json(const std::vector<TolerableRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    out.push_back({{"circuit_id", r.circuit_id}, {"family", r.family}, {"n", r.n}, {"d", r.d},
                   {"area", r.area}, {"p_star", r.p_star}, {"bound", r.bound}});
  }
  return out;
}

nlohmann::json rb_report(const RBConfig& config, const RBResult& result) {
  return {{"config", rb_config_json(config)},
          {"per_m", rb_points(result)},
          {"fit", fit_json(result.fit)},
          {"mean_cnots_per_clifford", result.mean_cnots_per_clifford}};
}

nlohmann::json interleaved_rb_report(const RBConfig& config, const InterleavedRBResult& result) {
  return {{"config", rb_config_json(config)},
          {"reference", {{"per_m", rb_points(result.reference)}, {"fit", fit_json(result.reference.fit)}}},
          {"interleaved", {{"per_m", rb_points(result.interleaved)}, {"fit", fit_json(result.interleaved.fit)}}},
          {"decay_ratio", result.decay_ratio},
          {"gate_error", result.gate_error}};
}

nlohmann::json gst_report(const GSTEstimate& estimate) {
  nlohmann::json gates = nlohmann::json::object();
  for (const auto& [name, ptm] : estimate.gates) gates[name] = matrix_rows(ptm);
  return {{"fiducials",
           {{"preparation", estimate.fiducials.preparation}, {"measurement", estimate.fiducials.measurement}}},
          {"gram_condition_number", estimate.gram_condition_number},
          {"gates", gates},
          {"spam", {{"rho", vector_json(estimate.rho)}, {"effect", vector_json(estimate.effect)}}},
          {"diagnostics", {{"min_choi_eigenvalue", estimate.min_choi_eigenvalue}}}};
}

nlohmann::json clifford_group_to_json(const CliffordGroup& group) {
  nlohmann::json elements = nlohmann::json::array();
  for (const auto& e : group.elements()) {
    nlohmann::json ops = nlohmann::json::array();
    for (const auto& op : e.decomposition) {
      nlohmann::json qubits = nlohmann::json::array();
      for (int q : op.qubits()) qubits.push_back(q);
      ops.push_back({{"gate", op.gate.name()}, {"qubits", qubits}});
    }
    elements.push_back(std::move(ops));
  }
  return {{"version", kCliffordCacheVersion}, {"n_qubits", group.n_qubits()}, {"elements", elements}};
}

CliffordGroup clifford_group_from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.value("version", 0) != kCliffordCacheVersion) {
    throw ValidationError("Clifford group cache: unsupported or missing version");
  }
  const int n = j.at("n_qubits").get<int>();
  std::vector<std::vector<Operation>> decompositions;
  for (const auto& ops : j.at("elements")) {
    // Reuse the circuit-file parser for each element as a one-operation-per-layer circuit.
    nlohmann::json layers = nlohmann::json::array();
    for (const auto& op : ops) layers.push_back(nlohmann::json::array({op}));
    const Circuit c = circuit_from_json({{"version", kCircuitFileVersion}, {"n_qubits", n}, {"layers", layers}});
    std::vector<Operation> list;
    for (const auto& layer : c.layers()) list.push_back(layer.front());
    decompositions.push_back(std::move(list));
  }
  return CliffordGroup::from_decompositions(n, decompositions);
}

}  // namespace nisq
