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

#include "nisq/circuits/builder.hpp"

#include <bit>

#include <algorithm>
#include <numbers>

#include "nisq/common/errors.hpp"

namespace nisq {

CircuitBuilder::CircuitBuilder(int n_qubits)
    : n_qubits_(n_qubits), next_free_(static_cast<std::size_t>(n_qubits), 0) {
  if (n_qubits < 1) throw ValidationError("builder needs at least one qubit");
}

CircuitBuilder& CircuitBuilder::add(Gate g, int q) {
  if (g.arity() != 1) throw ValidationError("two-qubit gate given one target");
  if (q < 0 || q >= n_qubits_) throw ValidationError("qubit index out of range");
  const int l = next_free_[static_cast<std::size_t>(q)];
  if (l >= static_cast<int>(layers_.size())) layers_.resize(static_cast<std::size_t>(l) + 1);
  layers_[static_cast<std::size_t>(l)].emplace_back(g, q);
  next_free_[static_cast<std::size_t>(q)] = l + 1;
  return *this;
}

CircuitBuilder& CircuitBuilder::add(Gate g, int q0, int q1) {
  if (g.arity() != 2) throw ValidationError("one-qubit gate given two targets");
  if (q0 < 0 || q0 >= n_qubits_ || q1 < 0 || q1 >= n_qubits_ || q0 == q1) {
    throw ValidationError("invalid two-qubit targets");
  }
  const int l = std::max(next_free_[static_cast<std::size_t>(q0)], next_free_[static_cast<std::size_t>(q1)]);
  if (l >= static_cast<int>(layers_.size())) layers_.resize(static_cast<std::size_t>(l) + 1);
  layers_[static_cast<std::size_t>(l)].emplace_back(g, q0, q1);
  next_free_[static_cast<std::size_t>(q0)] = next_free_[static_cast<std::size_t>(q1)] = l + 1;
  return *this;
}

CircuitBuilder& CircuitBuilder::barrier() {
  const int top = *std::max_element(next_free_.begin(), next_free_.end());
  std::fill(next_free_.begin(), next_free_.end(), top);
  return *this;
}

CircuitBuilder& CircuitBuilder::cz(int a, int b) {
  h(b);
  cx(a, b);
  return h(b);
}

CircuitBuilder& CircuitBuilder::cphase(double lambda, int control, int target) {
  add(Gate::rz(lambda / 2.0), control);
  add(Gate::rz(lambda / 2.0), target);
  cx(control, target);
  add(Gate::rz(-lambda / 2.0), target);
  return cx(control, target);
}

CircuitBuilder& CircuitBuilder::swap(int a, int b) {
  cx(a, b);
  cx(b, a);
  return cx(a, b);
}

CircuitBuilder& CircuitBuilder::toffoli(int c0, int c1, int target) {
  const Gate tdg = Gate::rz(-std::numbers::pi / 4.0);
  h(target);
  cx(c1, target);
  add(tdg, target);
  cx(c0, target);
  add(Gate::t(), target);
  cx(c1, target);
  add(tdg, target);
  cx(c0, target);
  add(Gate::t(), c1);
  add(Gate::t(), target);
  h(target);
  cx(c0, c1);
  add(Gate::t(), c0);
  add(tdg, c1);
  return cx(c0, c1);
}

CircuitBuilder& CircuitBuilder::mcz(std::span<const int> qubits) {
  const std::size_t k = qubits.size();
  if (k < 2) throw ValidationError("multi-controlled Z needs at least two qubits");
  if (k == 2) return cz(qubits[0], qubits[1]);
  if (k == 3) {
    h(qubits[2]);
    toffoli(qubits[0], qubits[1], qubits[2]);
    return h(qubits[2]);
  }
  // x_1 ... x_k = 2^{1-k} sum_{S != {}} (-1)^{|S|-1} parity_S(x). Terms whose
  // highest member is qubits[j] are visited in Gray-code order, so each step
  // changes the parity held on qubits[j] with a single CNOT.
  const double scale = std::numbers::pi / static_cast<double>(std::size_t{1} << (k - 1));
  for (std::size_t j = 0; j < k; ++j) {
    const int target = qubits[j];
    std::size_t prev = 0;
    for (std::size_t step = 0; step < (std::size_t{1} << j); ++step) {
      const std::size_t gray = step ^ (step >> 1);
      if (step > 0) cx(qubits[static_cast<std::size_t>(std::countr_zero(gray ^ prev))], target);
      prev = gray;
      const double sign = (std::popcount(gray) % 2 == 0) ? 1.0 : -1.0;
      // e^{i phi x} = e^{i phi/2} Rz(phi)
      add(Gate::rz(sign * scale), target);
    }
    if (prev != 0) cx(qubits[static_cast<std::size_t>(std::countr_zero(prev))], target);
  }
  return *this;
}

Circuit CircuitBuilder::build() const {
  Circuit c(n_qubits_);
  for (const auto& layer : layers_) c.add_layer(layer);
  return c;
}

}  // namespace nisq
