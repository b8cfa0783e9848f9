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

#include "nisq/noise/channel.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "nisq/common/errors.hpp"

namespace nisq {
namespace {

CMatrix single_pauli(int digit) {
  const Complex i{0.0, 1.0};
  CMatrix m(2, 2);
  switch (digit) {
    case 0:
      m << 1.0, 0.0, 0.0, 1.0;
      break;
    case 1:
      m << 0.0, 1.0, 1.0, 0.0;
      break;
    case 2:
      m << 0.0, -i, i, 0.0;
      break;
    default:
      m << 1.0, 0.0, 0.0, -1.0;
      break;
  }
  return m;
}

CMatrix completeness(const std::vector<CMatrix>& kraus, Eigen::Index dim) {
  CMatrix sum = CMatrix::Zero(dim, dim);
  for (const auto& a : kraus) sum += a.adjoint() * a;
  return sum;
}

// Kraus operators from the eigen-decomposition of the Choi matrix, dropping
// numerically zero eigenvalues.
std::vector<CMatrix> kraus_from_choi(const CMatrix& choi, Eigen::Index dim) {
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(choi);
  std::vector<CMatrix> out;
  for (Eigen::Index k = eig.eigenvalues().size() - 1; k >= 0; --k) {
    const double lambda = eig.eigenvalues()(k);
    if (lambda <= 1e-14) continue;
    const CVector v = eig.eigenvectors().col(k) * std::sqrt(lambda);
    out.emplace_back(Eigen::Map<const CMatrix>(v.data(), dim, dim));
  }
  if (out.empty()) throw NumericalError("channel has an all-zero Choi matrix");
  return out;
}

CMatrix choi_from_kraus(const std::vector<CMatrix>& kraus, Eigen::Index dim) {
  CMatrix choi = CMatrix::Zero(dim * dim, dim * dim);
  for (const auto& a : kraus) {
    const Eigen::Map<const CVector> v(a.data(), dim * dim);
    choi += v * v.adjoint();
  }
  return choi;
}

}  // namespace

QuantumChannel::QuantumChannel(int n_qubits, std::vector<CMatrix> kraus)
    : n_qubits_(n_qubits), kraus_(std::move(kraus)) {
  check_density_qubits(n_qubits);
  const Eigen::Index dim = dimension();
  if (kraus_.empty()) throw ValidationError("channel needs at least one Kraus operator");
  for (const auto& a : kraus_) {
    if (a.rows() != dim || a.cols() != dim) throw ValidationError("Kraus operator dimension mismatch");
  }
  const double defect = (completeness(kraus_, dim) - CMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
  if (defect > 1e-8) {
    throw ValidationError("Kraus operators are not trace preserving (defect " +
                          std::to_string(defect) + ")");
  }
  if (kraus_.size() > static_cast<std::size_t>(dim * dim)) {
    kraus_ = kraus_from_choi(choi_from_kraus(kraus_, dim), dim);
  }
}

QuantumChannel QuantumChannel::identity(int n_qubits) {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  return QuantumChannel(n_qubits, {CMatrix::Identity(dim, dim)});
}

QuantumChannel QuantumChannel::unitary(const CMatrix& u) {
  const Eigen::Index dim = u.rows();
  if (dim < 2 || (dim & (dim - 1)) != 0 || u.cols() != dim) {
    throw ValidationError("unitary must be square with power-of-two dimension");
  }
  return QuantumChannel(std::countr_zero(static_cast<unsigned long>(dim)), {u});
}

CMatrix pauli_string(std::size_t index, int n_qubits) {
  CMatrix out = CMatrix::Identity(1, 1);
  for (int q = 0; q < n_qubits; ++q) {
    const int digit = static_cast<int>((index >> (2 * (n_qubits - 1 - q))) & 3U);
    out = tensor_product(out, single_pauli(digit));
  }
  return out;
}

QuantumChannel depolarizing_channel(int n_qubits, double p) {
  check_density_qubits(n_qubits);
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ValidationError("depolarizing parameter must be in [0, 1], got " + std::to_string(p));
  }
  const std::size_t terms = std::size_t{1} << (2 * n_qubits);
  const double dim_sq = static_cast<double>(terms);
  std::vector<CMatrix> kraus;
  kraus.push_back(std::sqrt(1.0 - p * (dim_sq - 1.0) / dim_sq) * pauli_string(0, n_qubits));
  if (p > 0.0) {
    const double w = std::sqrt(p / dim_sq);
    for (std::size_t k = 1; k < terms; ++k) kraus.push_back(w * pauli_string(k, n_qubits));
  }
  return QuantumChannel(n_qubits, std::move(kraus));
}

QuantumChannel pauli_error_channel(double p, std::array<double, 3> weights) {
  PauliFaultModel model{p, weights, LocationPolicy::AllQubitsEveryLayer};
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("Pauli error probability must be in [0, 1]");
  model.rate = 0.0;
  model.validate();  // weights only
  std::vector<CMatrix> kraus{std::sqrt(1.0 - p) * single_pauli(0)};
  for (int k = 0; k < 3; ++k) {
    if (p * weights[static_cast<std::size_t>(k)] > 0.0) {
      kraus.push_back(std::sqrt(p * weights[static_cast<std::size_t>(k)]) * single_pauli(k + 1));
    }
  }
  return QuantumChannel(1, std::move(kraus));
}

DensityMatrix apply_channel(const DensityMatrix& rho, const QuantumChannel& channel) {
  if (rho.n_qubits() != channel.n_qubits()) throw ValidationError("channel/state dimension mismatch");
  CMatrix out = CMatrix::Zero(rho.dimension(), rho.dimension());
  for (const auto& a : channel.kraus()) out += a * rho.matrix() * a.adjoint();
  // Re-hermitize rounding noise only; trace and positivity are checked.
  out = 0.5 * (out + out.adjoint()).eval();
  return DensityMatrix(rho.n_qubits(), std::move(out));
}

QuantumChannel compose(const QuantumChannel& second, const QuantumChannel& first) {
  if (second.n_qubits() != first.n_qubits()) throw ValidationError("channel dimension mismatch");
  std::vector<CMatrix> kraus;
  kraus.reserve(second.kraus().size() * first.kraus().size());
  for (const auto& b : second.kraus()) {
    for (const auto& a : first.kraus()) kraus.push_back(b * a);
  }
  return QuantumChannel(first.n_qubits(), std::move(kraus));
}

QuantumChannel embed_channel(const QuantumChannel& channel, std::span<const int> targets,
                             int n_qubits) {
  if (static_cast<int>(targets.size()) != channel.n_qubits()) {
    throw ValidationError("channel/target arity mismatch");
  }
  std::vector<CMatrix> kraus;
  for (const auto& a : channel.kraus()) kraus.push_back(embed_operator(a, targets, n_qubits));
  return QuantumChannel(n_qubits, std::move(kraus));
}

CMatrix choi_matrix(const QuantumChannel& channel) {
  return choi_from_kraus(channel.kraus(), channel.dimension());
}

RMatrix channel_to_ptm(const QuantumChannel& channel) {
  const int n = channel.n_qubits();
  if (n > kMaxDensityQubits) throw ValidationError("PTM dimension guard: n must be <= 3");
  const std::size_t terms = std::size_t{1} << (2 * n);
  const double dim = static_cast<double>(channel.dimension());
  std::vector<CMatrix> paulis;
  paulis.reserve(terms);
  for (std::size_t k = 0; k < terms; ++k) paulis.push_back(pauli_string(k, n));
  RMatrix ptm(static_cast<Eigen::Index>(terms), static_cast<Eigen::Index>(terms));
  for (std::size_t j = 0; j < terms; ++j) {
    CMatrix image = CMatrix::Zero(channel.dimension(), channel.dimension());
    for (const auto& a : channel.kraus()) image += a * paulis[j] * a.adjoint();
    for (std::size_t i = 0; i < terms; ++i) {
      ptm(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          (paulis[i] * image).trace().real() / dim;
    }
  }
  return ptm;
}

QuantumChannel error_operator(const CMatrix& ideal, const QuantumChannel& noisy) {
  if (ideal.rows() != noisy.dimension() || ideal.cols() != noisy.dimension()) {
    throw ValidationError("ideal unitary and noisy channel dimensions differ");
  }
  if (!is_unitary(ideal, 1e-10)) throw ValidationError("ideal operation is not unitary");
  std::vector<CMatrix> kraus;
  for (const auto& a : noisy.kraus()) kraus.push_back(ideal.adjoint() * a);
  return QuantumChannel(noisy.n_qubits(), std::move(kraus));
}

QuantumChannel error_operator(const Gate& ideal, const QuantumChannel& noisy) {
  return error_operator(ideal.matrix(), noisy);
}

double average_error_rate(const RMatrix& ptm) {
  const Eigen::Index terms = ptm.rows();
  if (terms < 4 || ptm.cols() != terms) throw ValidationError("PTM must be square with 4^n rows");
  RMatrix first_row = RMatrix::Zero(1, terms);
  first_row(0, 0) = 1.0;
  if ((ptm.row(0) - first_row).cwiseAbs().maxCoeff() > 1e-8) {
    throw ValidationError("error channel is not trace preserving");
  }
  const double dim = std::sqrt(static_cast<double>(terms));
  const double avg_fidelity = (ptm.trace() / dim + 1.0) / (dim + 1.0);
  return 1.0 - avg_fidelity;
}

double average_error_rate(const QuantumChannel& error) {
  return average_error_rate(channel_to_ptm(error));
}

DensityMatrix evolve_density(const Circuit& circuit, const DensityMatrix& initial,
                             const PauliFaultModel& model) {
  model.validate();
  if (initial.n_qubits() != circuit.n_qubits()) throw ValidationError("state/circuit qubit mismatch");
  const int n = circuit.n_qubits();
  const QuantumChannel local = pauli_error_channel(model.rate, model.weights);
  std::vector<QuantumChannel> per_qubit;
  for (int q = 0; q < n; ++q) per_qubit.push_back(embed_channel(local, std::span<const int>(&q, 1), n));

  DensityMatrix rho = initial;
  const auto locations = enumerate_locations(circuit, model);
  std::size_t next = 0;
  for (int l = 0; l < circuit.depth(); ++l) {
    for (const auto& op : circuit.layer(l)) {
      rho = apply_unitary(rho, embed_operator(op.gate.matrix(), op.qubits(), n));
    }
    for (; next < locations.size() && locations[next].layer == l; ++next) {
      rho = apply_channel(rho, per_qubit[static_cast<std::size_t>(locations[next].qubit)]);
    }
  }
  return rho;
}

}  // namespace nisq
