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

#include <string_view>

#include "nisq/sim/circuit.hpp"
#include "nisq/sim/fault.hpp"
#include "nisq/sim/state_vector.hpp"

namespace nisq {

/// Throws ValidationError unless every fault sits at a distinct, in-range
/// (qubit, layer) location of `circuit`.
void validate_faults(const Circuit& circuit, const FaultSet& faults);

/// Applies layers [first_layer, last_layer) to `state`. Faults assigned to a
/// layer are applied as extra Pauli gates right after it. The norm is checked
/// (not renormalized) after every layer.
void run_layers(StateVector& state, const Circuit& circuit, int first_layer, int last_layer,
                const FaultSet* faults = nullptr);

/// Simulates `circuit` from the basis state `initial` with optional faults.
StateVector run_circuit(const Circuit& circuit, std::string_view initial,
                        const FaultSet* faults = nullptr);
StateVector run_circuit(const Circuit& circuit, const StateVector& initial,
                        const FaultSet* faults = nullptr);

}  // namespace nisq
