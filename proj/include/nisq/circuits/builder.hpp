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

#include <span>
#include <vector>

#include "nisq/sim/circuit.hpp"

namespace nisq {

/// Appends gates in program order and places each one in the earliest layer
/// after the last gate touching any of its qubits. barrier() aligns every
/// qubit to a fresh layer boundary.
///
/// Composite helpers expand into the supported gate set. Controlled phases
/// and Toffolis are exact up to a global phase.
class CircuitBuilder {
 public:
  explicit CircuitBuilder(int n_qubits);

  CircuitBuilder& add(Gate g, int q);
  CircuitBuilder& add(Gate g, int q0, int q1);
  CircuitBuilder& barrier();

  CircuitBuilder& h(int q) { return add(Gate::h(), q); }
  CircuitBuilder& x(int q) { return add(Gate::x(), q); }
  CircuitBuilder& cx(int control, int target) { return add(Gate::cx(), control, target); }

  /// CZ as H(t) CX(c, t) H(t).
  CircuitBuilder& cz(int a, int b);
  /// diag(1, 1, 1, e^{i lambda}) as Rz(l/2) on both, CX, Rz(-l/2), CX.
  CircuitBuilder& cphase(double lambda, int control, int target);
  /// Three alternating CNOTs.
  CircuitBuilder& swap(int a, int b);
  /// Standard 6-CNOT, 7-T decomposition; T^dagger is Rz(-pi/4).
  CircuitBuilder& toffoli(int c0, int c1, int target);
  /// Multi-controlled Z on all listed qubits (symmetric in its qubits).
  /// Two qubits: CZ. Three: H-conjugated Toffoli. More: phase polynomial
  /// sum over non-empty subsets of parity phases (-1)^{|S|-1} pi / 2^{k-1},
  /// each realized by a CNOT ladder, one Rz and the ladder reversed.
  CircuitBuilder& mcz(std::span<const int> qubits);

  int n_qubits() const noexcept { return n_qubits_; }
  Circuit build() const;

 private:
  int n_qubits_;
  std::vector<Layer> layers_;
  std::vector<int> next_free_;
};

}  // namespace nisq
