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
#include <string_view>

#include "nisq/sim/gate.hpp"
#include "nisq/sim/state_vector.hpp"

namespace nisq {

/// Largest qubit count accepted by dense density-matrix and superoperator code.
inline constexpr int kMaxDensityQubits = 3;

/// Mixed state of up to three qubits, same bit ordering as StateVector.
class DensityMatrix {
 public:
  /// Validates hermiticity, unit trace and positivity to within 1e-10.
  DensityMatrix(int n_qubits, CMatrix matrix);

  static DensityMatrix from_pure(const StateVector& state);
  static DensityMatrix basis(std::string_view bits);
  static DensityMatrix maximally_mixed(int n_qubits);

  int n_qubits() const noexcept { return n_qubits_; }
  Eigen::Index dimension() const noexcept { return matrix_.rows(); }
  const CMatrix& matrix() const noexcept { return matrix_; }

  /// <psi| rho |psi>
  double expectation(const StateVector& psi) const;
  double probability(std::uint64_t basis_index) const;

 private:
  struct Unchecked {};
  DensityMatrix(int n_qubits, CMatrix matrix, Unchecked)
      : n_qubits_(n_qubits), matrix_(std::move(matrix)) {}
  friend class QuantumChannel;
  friend DensityMatrix apply_unitary(const DensityMatrix&, const CMatrix&);

  int n_qubits_;
  CMatrix matrix_;
};

void check_density_qubits(int n_qubits);

/// Full 2^n x 2^n operator for `op` acting on `targets` (identity elsewhere).
CMatrix embed_operator(const CMatrix& op, std::span<const int> targets, int n_qubits);

/// U rho U^dagger
DensityMatrix apply_unitary(const DensityMatrix& rho, const CMatrix& unitary);

}  // namespace nisq
