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

#include "nisq/io/circuit_file.hpp"

#include <fstream>
#include <sstream>

#include "nisq/common/errors.hpp"

namespace nisq {
namespace {

bool is_rotation(GateKind k) { return k == GateKind::Rx || k == GateKind::Ry || k == GateKind::Rz; }

std::string location(std::string_view text, std::size_t byte) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

Operation parse_operation(const nlohmann::json& j, std::size_t layer, std::size_t index) {
  const std::string where = "layer " + std::to_string(layer) + ", operation " + std::to_string(index);
  if (!j.is_object()) throw ValidationError(where + ": expected an object");
  if (!j.contains("gate") || !j["gate"].is_string()) throw ValidationError(where + ": missing gate name");
  const std::string name = j["gate"].get<std::string>();
  const auto kind = parse_gate_kind(name);
  if (!kind) throw ValidationError(where + ": unknown gate '" + name + "'");
  if (!j.contains("qubits") || !j["qubits"].is_array()) throw ValidationError(where + ": missing qubits for " + name);

  std::vector<double> params;
  if (j.contains("params")) {
    if (!j["params"].is_array()) throw ValidationError(where + ": params must be a list");
    for (const auto& v : j["params"]) {
      if (!v.is_number()) throw ValidationError(where + ": params must be numbers");
      params.push_back(v.get<double>());
    }
  }
  const std::size_t expected = is_rotation(*kind) ? 1 : 0;
  if (params.size() != expected) {
    throw ValidationError(where + ": gate " + name + " takes " + std::to_string(expected) + " parameter(s)");
  }
  const Gate gate(*kind, expected == 1 ? params[0] : 0.0);

  std::vector<int> qubits;
  for (const auto& v : j["qubits"]) {
    if (!v.is_number_integer()) throw ValidationError(where + ": qubit indices must be integers");
    qubits.push_back(v.get<int>());
  }
  if (qubits.size() != static_cast<std::size_t>(gate.arity())) {
    throw ValidationError(where + ": gate " + name + " acts on " + std::to_string(gate.arity()) + " qubit(s)");
  }
  return gate.arity() == 1 ? Operation(gate, qubits[0]) : Operation(gate, qubits[0], qubits[1]);
}

}  // namespace

Circuit circuit_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("circuit file: expected a JSON object");
  if (!j.contains("version") || !j["version"].is_number_integer()) {
    throw ValidationError("circuit file: missing integer version");
  }
  if (j["version"].get<int>() != kCircuitFileVersion) {
    throw ValidationError("circuit file: unsupported version " + std::to_string(j["version"].get<int>()));
  }
  if (!j.contains("n_qubits") || !j["n_qubits"].is_number_integer()) {
    throw ValidationError("circuit file: missing integer n_qubits");
  }
  Circuit circuit(j["n_qubits"].get<int>());
  if (!j.contains("layers") || !j["layers"].is_array()) throw ValidationError("circuit file: missing layers list");
  std::size_t l = 0;
  for (const auto& layer_json : j["layers"]) {
    if (!layer_json.is_array()) throw ValidationError("circuit file: layer " + std::to_string(l) + " must be a list");
    Layer layer;
    std::size_t k = 0;
    for (const auto& op : layer_json) layer.push_back(parse_operation(op, l, k++));
    circuit.add_layer(std::move(layer));
    ++l;
  }
  return circuit;
}

Circuit parse_circuit(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is one past the offending character.
    throw ValidationError("circuit file: parse error at " + location(text, e.byte == 0 ? 0 : e.byte - 1) + ": " +
                          e.what());
  }
  return circuit_from_json(j);
}

nlohmann::json circuit_to_json(const Circuit& circuit) {
  nlohmann::json layers = nlohmann::json::array();
  for (const auto& layer : circuit.layers()) {
    nlohmann::json ops = nlohmann::json::array();
    for (const auto& op : layer) {
      nlohmann::json o;
      o["gate"] = op.gate.name();
      nlohmann::json qubits = nlohmann::json::array();
      for (int q : op.qubits()) qubits.push_back(q);
      o["qubits"] = qubits;
      if (is_rotation(op.gate.kind())) o["params"] = nlohmann::json::array({op.gate.angle()});
      ops.push_back(std::move(o));
    }
    layers.push_back(std::move(ops));
  }
  nlohmann::json j;
  j["version"] = kCircuitFileVersion;
  j["n_qubits"] = circuit.n_qubits();
  j["layers"] = std::move(layers);
  return j;
}

std::string serialize_circuit(const Circuit& circuit) { return circuit_to_json(circuit).dump(2) + "\n"; }

Circuit load_circuit(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open circuit file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_circuit(buffer.str());
}

void save_circuit(const std::filesystem::path& path, const Circuit& circuit) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write circuit file " + path.string());
  out << serialize_circuit(circuit);
}

}  // namespace nisq
