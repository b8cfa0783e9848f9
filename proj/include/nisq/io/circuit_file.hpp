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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "nisq/sim/circuit.hpp"

namespace nisq {

inline constexpr int kCircuitFileVersion = 1;

/// JSON circuit format:
///   {"version": 1, "n_qubits": 2,
///    "layers": [[{"gate": "h", "qubits": [0]}, {"gate": "x", "qubits": [1]}],
///               [{"gate": "cx", "qubits": [0, 1]}]]}
/// Rotation gates carry "params": [angle] in radians.
Circuit parse_circuit(std::string_view text);
Circuit circuit_from_json(const nlohmann::json& j);
nlohmann::json circuit_to_json(const Circuit& circuit);
/// Canonical text form; parse_circuit(serialize_circuit(c)) == c.
std::string serialize_circuit(const Circuit& circuit);

Circuit load_circuit(const std::filesystem::path& path);
void save_circuit(const std::filesystem::path& path, const Circuit& circuit);

}  // namespace nisq
