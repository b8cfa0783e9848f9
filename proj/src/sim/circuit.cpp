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

#include "nisq/sim/circuit.hpp"

#include <string>

#include "nisq/common/errors.hpp"

namespace nisq {

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > 30) {
    throw ValidationError("circuit qubit count must be in [1, 30], got " + std::to_string(n_qubits));
  }
}

void validate_layer(const Layer& layer, int n_qubits) {
  std::vector<bool> used(static_cast<std::size_t>(n_qubits), false);
  for (const auto& op : layer) {
    for (int q : op.qubits()) {
      if (q < 0 || q >= n_qubits) {
        throw ValidationError("gate '" + std::string(op.gate.name()) + "' targets qubit " +
                              std::to_string(q) + " outside [0, " + std::to_string(n_qubits) + ")");
      }
      if (used[static_cast<std::size_t>(q)]) {
        throw ValidationError("gate '" + std::string(op.gate.name()) + "' reuses qubit " +
                              std::to_string(q) + " within one layer");
      }
      used[static_cast<std::size_t>(q)] = true;
    }
  }
}

void Circuit::add_layer(Layer layer) {
  validate_layer(layer, n_qubits_);
  layers_.push_back(std::move(layer));
}

std::size_t Circuit::gate_count() const noexcept {
  std::size_t n = 0;
  for (const auto& layer : layers_) n += layer.size();
  return n;
}

std::size_t Circuit::count(GateKind kind) const noexcept {
  std::size_t n = 0;
  for (const auto& layer : layers_) {
    for (const auto& op : layer) n += op.gate.kind() == kind ? 1 : 0;
  }
  return n;
}

Circuit Circuit::then(const Circuit& next) const {
  if (next.n_qubits_ != n_qubits_) {
    throw ValidationError("cannot concatenate circuits with different qubit counts");
  }
  Circuit out = *this;
  out.layers_.insert(out.layers_.end(), next.layers_.begin(), next.layers_.end());
  return out;
}

}  // namespace nisq
