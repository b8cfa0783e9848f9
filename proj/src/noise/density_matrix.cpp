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

#include "nisq/noise/density_matrix.hpp"

#include <string>

#include "nisq/common/errors.hpp"

namespace nisq {

void check_density_qubits(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxDensityQubits) {
    throw ValidationError("density-matrix operations support 1.." +
                          std::to_string(kMaxDensityQubits) + " qubits, got " +
                          std::to_string(n_qubits));
  }
}

DensityMatrix::DensityMatrix(int n_qubits, CMatrix matrix)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)) {
  check_density_qubits(n_qubits);
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  if (matrix_.rows() != dim || matrix_.cols() != dim) {
    throw ValidationError("density matrix has the wrong dimension");
  }
  if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
    throw ValidationError("density matrix is not self-adjoint");
  }
  if (std::abs(matrix_.trace() - Complex{1.0, 0.0}) > 1e-10) {
    throw ValidationError("density matrix trace differs from 1");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(matrix_, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -1e-10) {
    throw ValidationError("density matrix has a negative eigenvalue");
  }
}

DensityMatrix DensityMatrix::from_pure(const StateVector& state) {
  check_density_qubits(state.n_qubits());
  const auto& a = state.amplitudes();
  const CVector v = Eigen::Map<const CVector>(a.data(), static_cast<Eigen::Index>(a.size()));
  return DensityMatrix(state.n_qubits(), v * v.adjoint(), Unchecked{});
}

DensityMatrix DensityMatrix::basis(std::string_view bits) {
  return from_pure(StateVector::basis(bits));
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
  check_density_qubits(n_qubits);
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  return DensityMatrix(n_qubits, CMatrix::Identity(dim, dim) / static_cast<double>(dim), Unchecked{});
}

double DensityMatrix::expectation(const StateVector& psi) const {
  if (static_cast<Eigen::Index>(psi.dimension()) != dimension()) {
    throw ValidationError("state dimension mismatch");
  }
  const auto& a = psi.amplitudes();
  const CVector v = Eigen::Map<const CVector>(a.data(), static_cast<Eigen::Index>(a.size()));
  return (v.adjoint() * matrix_ * v)(0, 0).real();
}

double DensityMatrix::probability(std::uint64_t basis_index) const {
  return matrix_(static_cast<Eigen::Index>(basis_index), static_cast<Eigen::Index>(basis_index))
      .real();
}

CMatrix embed_operator(const CMatrix& op, std::span<const int> targets, int n_qubits) {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  const int k = static_cast<int>(targets.size());
  if (op.rows() != (Eigen::Index{1} << k)) throw ValidationError("operator/target arity mismatch");
  CMatrix full = CMatrix::Zero(dim, dim);
  // local index bit (k-1-j) corresponds to targets[j]
  const auto local = [&](Eigen::Index idx) {
    Eigen::Index l = 0;
    for (int j = 0; j < k; ++j) {
      l = (l << 1) | ((idx >> (n_qubits - 1 - targets[static_cast<std::size_t>(j)])) & 1);
    }
    return l;
  };
  Eigen::Index target_mask = 0;
  for (int q : targets) target_mask |= Eigen::Index{1} << (n_qubits - 1 - q);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      if ((r & ~target_mask) != (c & ~target_mask)) continue;
      full(r, c) = op(local(r), local(c));
    }
  }
  return full;
}

DensityMatrix apply_unitary(const DensityMatrix& rho, const CMatrix& unitary) {
  if (unitary.rows() != rho.dimension()) throw ValidationError("unitary dimension mismatch");
  return DensityMatrix(rho.n_qubits(), unitary * rho.matrix() * unitary.adjoint(),
                       DensityMatrix::Unchecked{});
}

}  // namespace nisq
