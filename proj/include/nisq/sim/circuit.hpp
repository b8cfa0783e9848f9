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

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "nisq/sim/gate.hpp"

namespace nisq {

/// One gate applied to an ordered list of target qubits.
struct Operation {
  Gate gate;
  std::array<int, 2> targets{0, 0};

  Operation(Gate g, int q0) : gate(g), targets{q0, q0} {}
  Operation(Gate g, int q0, int q1) : gate(g), targets{q0, q1} {}

  std::span<const int> qubits() const noexcept {
    return {targets.data(), static_cast<std::size_t>(gate.arity())};
  }

  friend bool operator==(const Operation&, const Operation&) = default;
};

using Layer = std::vector<Operation>;

/// Layered circuit on a fixed number of qubits. Layers are kept exactly as
/// given: depth is the number of layers, never a recomputed schedule.
class Circuit {
 public:
  explicit Circuit(int n_qubits);

  /// Appends a layer after checking target ranges and disjointness.
  void add_layer(Layer layer);

  int n_qubits() const noexcept { return n_qubits_; }
  int depth() const noexcept { return static_cast<int>(layers_.size()); }
  long long area() const noexcept { return static_cast<long long>(n_qubits_) * depth(); }
  std::size_t gate_count() const noexcept;
  std::size_t count(GateKind kind) const noexcept;

  const std::vector<Layer>& layers() const noexcept { return layers_; }
  const Layer& layer(int index) const { return layers_.at(static_cast<std::size_t>(index)); }

  /// This circuit followed by `next` (same qubit count), layer lists concatenated.
  Circuit then(const Circuit& next) const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int n_qubits_;
  std::vector<Layer> layers_;
};

/// Throws ValidationError if `layer` is not valid for an n-qubit circuit.
void validate_layer(const Layer& layer, int n_qubits);

}  // namespace nisq
