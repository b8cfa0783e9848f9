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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nisq/common/random.hpp"
#include "nisq/sim/circuit.hpp"
#include "nisq/sim/gate.hpp"

namespace nisq {

/// Basis index of an n-bit string. Character 0 is qubit 0, which is the most
/// significant bit: "01" -> 1.
std::uint64_t bits_to_index(std::string_view bits);
std::string index_to_bits(std::uint64_t index, int n_qubits);

/// Pure state of n qubits as 2^n complex amplitudes, qubit 0 most significant.
class StateVector {
 public:
  /// |0...0>
  explicit StateVector(int n_qubits);

  static StateVector basis(std::string_view bits);
  static StateVector basis(int n_qubits, std::uint64_t index);
  /// Takes amplitudes as given; throws if the length is not a power of two or
  /// the norm deviates from 1 by more than 1e-10.
  static StateVector from_amplitudes(std::vector<Complex> amplitudes);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }
  const std::vector<Complex>& amplitudes() const noexcept { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_[i]; }

  /// Applies `gate` to `targets` with strided kernels over the amplitude array.
  void apply(const Gate& gate, std::span<const int> targets);
  void apply(const Operation& op) { apply(op.gate, op.qubits()); }
  void apply(const Layer& layer);

  double norm_squared() const noexcept;

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  StateVector(int n_qubits, std::vector<Complex> amplitudes)
      : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

  void apply_1q(const Gate& gate, int q);
  void apply_2q(const Gate& gate, int q0, int q1);

  int n_qubits_;
  std::vector<Complex> amplitudes_;
};

/// Functional form of StateVector::apply.
StateVector apply_gate(StateVector state, const Gate& gate, std::span<const int> targets);

/// Probability of every basis outcome, indexed by basis index.
class OutcomeDistribution {
 public:
  OutcomeDistribution(int n_qubits, std::vector<double> probabilities);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t size() const noexcept { return probabilities_.size(); }
  const std::vector<double>& probabilities() const noexcept { return probabilities_; }
  double operator[](std::size_t index) const { return probabilities_[index]; }
  double probability(std::string_view bits) const;
  /// Probability that `qubit` reads 1.
  double marginal_one(int qubit) const;

 private:
  int n_qubits_;
  std::vector<double> probabilities_;
};

OutcomeDistribution measure_distribution(const StateVector& state);

/// Full measurement: draws an outcome index and returns it with the collapsed
/// basis state.
std::pair<std::uint64_t, StateVector> sample_measurement(const StateVector& state, Rng& rng);

/// |<target|actual>|^2
double state_fidelity(const StateVector& target, const StateVector& actual);

}  // namespace nisq
