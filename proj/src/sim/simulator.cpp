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

#include "nisq/sim/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "nisq/common/errors.hpp"

namespace nisq {

void validate_faults(const Circuit& circuit, const FaultSet& faults) {
  std::set<SpaceTimeLocation> seen;
  for (const auto& f : faults) {
    const auto& loc = f.location;
    if (loc.qubit < 0 || loc.qubit >= circuit.n_qubits() || loc.layer < 0 ||
        loc.layer >= circuit.depth()) {
      throw ValidationError("fault location (qubit " + std::to_string(loc.qubit) + ", layer " +
                            std::to_string(loc.layer) + ") is outside the circuit");
    }
    if (!seen.insert(loc).second) {
      throw ValidationError("two faults share location (qubit " + std::to_string(loc.qubit) +
                            ", layer " + std::to_string(loc.layer) + ")");
    }
  }
}

void run_layers(StateVector& state, const Circuit& circuit, int first_layer, int last_layer,
                const FaultSet* faults) {
  if (state.n_qubits() != circuit.n_qubits()) throw ValidationError("state/circuit qubit mismatch");
  std::vector<const Fault*> pending;
  if (faults != nullptr) {
    pending.reserve(faults->size());
    for (const auto& f : *faults) {
      if (f.location.layer >= first_layer && f.location.layer < last_layer) pending.push_back(&f);
    }
    std::stable_sort(pending.begin(), pending.end(), [](const Fault* a, const Fault* b) {
      return a->location.layer < b->location.layer;
    });
  }
  std::size_t next = 0;
  for (int l = first_layer; l < last_layer; ++l) {
    state.apply(circuit.layer(l));
    for (; next < pending.size() && pending[next]->location.layer == l; ++next) {
      const int q = pending[next]->location.qubit;
      state.apply(pauli_gate(pending[next]->pauli), std::span<const int>(&q, 1));
    }
    if (std::abs(state.norm_squared() - 1.0) > 1e-10) {
      throw NumericalError("state norm drifted after layer " + std::to_string(l));
    }
  }
}

StateVector run_circuit(const Circuit& circuit, const StateVector& initial, const FaultSet* faults) {
  if (faults != nullptr) validate_faults(circuit, *faults);
  StateVector state = initial;
  run_layers(state, circuit, 0, circuit.depth(), faults);
  return state;
}

StateVector run_circuit(const Circuit& circuit, std::string_view initial, const FaultSet* faults) {
  if (static_cast<int>(initial.size()) != circuit.n_qubits()) {
    throw ValidationError("initial bitstring length must equal the qubit count");
  }
  return run_circuit(circuit, StateVector::basis(initial), faults);
}

}  // namespace nisq
