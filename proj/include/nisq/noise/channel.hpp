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
#include <vector>

#include "nisq/noise/density_matrix.hpp"
#include "nisq/noise/pauli_model.hpp"
#include "nisq/sim/circuit.hpp"
#include "nisq/sim/gate.hpp"

namespace nisq {

using RMatrix = Eigen::MatrixXd;

/// Completely positive trace-preserving map in Kraus form.
///
/// Construction checks sum_j A_j^dagger A_j = 1 to within 1e-8. Kraus lists
/// longer than 4^n are compressed through the Choi matrix, so a channel never
/// carries more than 4^n operators.
class QuantumChannel {
 public:
  QuantumChannel(int n_qubits, std::vector<CMatrix> kraus);

  static QuantumChannel identity(int n_qubits);
  static QuantumChannel unitary(const CMatrix& u);
  static QuantumChannel unitary(const Gate& gate) { return unitary(gate.matrix()); }

  int n_qubits() const noexcept { return n_qubits_; }
  Eigen::Index dimension() const noexcept { return Eigen::Index{1} << n_qubits_; }
  const std::vector<CMatrix>& kraus() const noexcept { return kraus_; }

 private:
  int n_qubits_;
  std::vector<CMatrix> kraus_;
};

/// n-qubit Pauli string for `index` in base 4, qubit 0 the most significant
/// digit, digits 0..3 = I, X, Y, Z.
CMatrix pauli_string(std::size_t index, int n_qubits);

/// Lambda(rho) = (1 - p) rho + p 1/2^n, p in [0, 1]. Kraus form: identity
/// with weight 1 - p (4^n - 1)/4^n and every non-identity Pauli string with
/// weight p/4^n.
QuantumChannel depolarizing_channel(int n_qubits, double p);

/// Single-qubit Pauli error: nothing with probability 1 - p, otherwise X, Y,
/// Z with probabilities p*w. Uniform weights give the Kraus list
/// {sqrt(1-p) 1, sqrt(p/3) X, sqrt(p/3) Y, sqrt(p/3) Z}.
QuantumChannel pauli_error_channel(double p, std::array<double, 3> weights = {1.0 / 3.0, 1.0 / 3.0,
                                                                            1.0 / 3.0});

DensityMatrix apply_channel(const DensityMatrix& rho, const QuantumChannel& channel);

/// second o first
QuantumChannel compose(const QuantumChannel& second, const QuantumChannel& first);

/// Channel acting on `targets` of an n-qubit register.
QuantumChannel embed_channel(const QuantumChannel& channel, std::span<const int> targets,
                             int n_qubits);

/// Choi matrix sum_{ab} |a><b| (x) E(|a><b|); trace equals 2^n.
CMatrix choi_matrix(const QuantumChannel& channel);

/// Pauli transfer matrix R_ij = Tr(P_i E(P_j)) / 2^n. Guarded to n <= 3.
RMatrix channel_to_ptm(const QuantumChannel& channel);

/// (E_U)^-1 o E: undoes the ideal unitary after the noisy channel.
QuantumChannel error_operator(const CMatrix& ideal, const QuantumChannel& noisy);
QuantumChannel error_operator(const Gate& ideal, const QuantumChannel& noisy);

/// r = 1 - Fbar with Fbar = (Tr(R)/2^n + 1)/(2^n + 1).
double average_error_rate(const QuantumChannel& error);
double average_error_rate(const RMatrix& ptm);

/// Exact density-matrix evolution of `circuit` under a Pauli fault model:
/// after each layer, a Pauli error channel acts on every location of that layer.
DensityMatrix evolve_density(const Circuit& circuit, const DensityMatrix& initial,
                             const PauliFaultModel& model);

}  // namespace nisq
