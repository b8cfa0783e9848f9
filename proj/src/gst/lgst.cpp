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

#include "nisq/gst/lgst.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "nisq/common/errors.hpp"
#include "nisq/common/random.hpp"

namespace nisq {
namespace {

constexpr double kMaxGramCondition = 1e4;

Gate fixed_gate(const std::string& name) {
  const auto kind = parse_gate_kind(name);
  if (!kind || *kind == GateKind::Rx || *kind == GateKind::Ry || *kind == GateKind::Rz) {
    throw ValidationError("gate set names must be fixed single-qubit gates: '" + name + "'");
  }
  const Gate g(*kind);
  if (g.arity() != 1) throw ValidationError("gate set gates act on one qubit: " + name);
  return g;
}

CMatrix sequence_unitary_1q(const GateSequence& seq) {
  CMatrix u = CMatrix::Identity(2, 2);
  for (const auto& name : seq) u = fixed_gate(name).matrix() * u;
  return u;
}

RMatrix evolve_ptm(const std::map<std::string, RMatrix>& ptms, const GateSequence& seq,
                   const std::string& context) {
  RMatrix total = RMatrix::Identity(4, 4);
  for (const auto& name : seq) {
    auto it = ptms.find(name);
    if (it == ptms.end()) throw ValidationError(context + ": unknown gate '" + name + "'");
    total = it->second * total;
  }
  return total;
}

double condition_number(const RMatrix& m) {
  Eigen::JacobiSVD<RMatrix> svd(m);
  const auto& s = svd.singularValues();
  if (s(s.size() - 1) <= 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / s(s.size() - 1);
}

DensityMatrix run_sequence(const GateSet& gs, const GateSequence& seq, DensityMatrix rho) {
  for (const auto& name : seq) rho = apply_channel(rho, gs.gate(name));
  return rho;
}

double outcome_zero(const GateSet& gs, const DensityMatrix& rho) {
  return std::clamp((gs.effect0 * rho.matrix()).trace().real(), 0.0, 1.0);
}

void check_fiducials(const FiducialSet& f) {
  if (f.preparation.size() != 4 || f.measurement.size() != 4) {
    throw ValidationError("single-qubit LGST needs 4 preparation and 4 measurement fiducials");
  }
  if (!f.preparation.front().empty() || !f.measurement.front().empty()) {
    throw ValidationError("the first preparation and measurement fiducials must be empty");
  }
}

}  // namespace

const QuantumChannel& GateSet::gate(const std::string& name) const {
  auto it = gates.find(name);
  if (it == gates.end()) throw ValidationError("gate set has no gate '" + name + "'");
  return it->second;
}

void GateSet::validate() const {
  if (rho0.n_qubits() != 1) throw ValidationError("gate set preparation must be one qubit");
  for (const auto& [name, g] : gates) {
    if (g.n_qubits() != 1) throw ValidationError("gate set gates act on one qubit: " + name);
  }
  if (effect0.rows() != 2 || effect0.cols() != 2 || !effect0.isApprox(effect0.adjoint(), 1e-10)) {
    throw ValidationError("measurement effect must be a self-adjoint 2x2 matrix");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(effect0);
  if (es.eigenvalues().minCoeff() < -1e-10 || es.eigenvalues().maxCoeff() > 1.0 + 1e-10) {
    throw ValidationError("measurement effect eigenvalues must lie in [0, 1]");
  }
}

GateSet ideal_gate_set(const std::vector<std::string>& names) {
  GateSet gs;
  for (const auto& name : names) gs.gates.emplace(name, QuantumChannel::unitary(fixed_gate(name)));
  return gs;
}

GateSet depolarized_gate_set(double p, const std::vector<std::string>& names) {
  const QuantumChannel noise = depolarizing_channel(1, p);
  GateSet gs;
  for (const auto& name : names) {
    gs.gates.emplace(name, compose(noise, QuantumChannel::unitary(fixed_gate(name))));
  }
  return gs;
}

double sequence_probability(const GateSet& gateset, const GateSequence& sequence) {
  return outcome_zero(gateset, run_sequence(gateset, sequence, gateset.rho0));
}

FiducialSet default_fiducials() {
  return FiducialSet{
      .preparation = {{}, {"h"}, {"h", "s"}, {"h", "s", "s"}},
      .measurement = {{}, {"h"}, {"s", "s", "s", "h"}, {"s", "s", "h"}},
  };
}

GSTData collect_gst_data(const GateSet& gateset, const FiducialSet& fiducials, int shots,
                         std::uint64_t seed) {
  gateset.validate();
  check_fiducials(fiducials);
  if (shots < 0) throw ValidationError("shots must be non-negative");
  for (const auto* list : {&fiducials.preparation, &fiducials.measurement}) {
    for (const auto& seq : *list) {
      for (const auto& name : seq) {
        if (!gateset.gates.contains(name)) throw ValidationError("fiducial gate '" + name + "' missing from gate set");
      }
    }
  }

  std::vector<DensityMatrix> prepared;
  for (const auto& f : fiducials.preparation) prepared.push_back(run_sequence(gateset, f, gateset.rho0));

  std::uint64_t circuit = 0;
  auto measure_matrix = [&](const QuantumChannel* middle) {
    RMatrix m(4, 4);
    for (Eigen::Index j = 0; j < 4; ++j) {
      DensityMatrix rho = prepared[static_cast<std::size_t>(j)];
      if (middle != nullptr) rho = apply_channel(rho, *middle);
      for (Eigen::Index i = 0; i < 4; ++i) {
        const double p = outcome_zero(gateset, run_sequence(gateset, fiducials.measurement[static_cast<std::size_t>(i)], rho));
        Rng rng = make_rng(seed, circuit++);
        if (shots == 0) {
          m(i, j) = p;
        } else {
          int hits = 0;
          for (int s = 0; s < shots; ++s) hits += uniform01(rng) < p ? 1 : 0;
          m(i, j) = static_cast<double>(hits) / shots;
        }
      }
    }
    return m;
  };

  GSTData data;
  data.fiducials = fiducials;
  data.shots = shots;
  data.empty = measure_matrix(nullptr);
  for (const auto& [name, channel] : gateset.gates) data.gates.emplace(name, measure_matrix(&channel));
  return data;
}

Eigen::Vector4d pauli_vector(const CMatrix& op) {
  Eigen::Vector4d v;
  for (int a = 0; a < 4; ++a) v(a) = (pauli_string(static_cast<std::size_t>(a), 1) * op).trace().real() / std::sqrt(2.0);
  return v;
}

double ptm_min_choi_eigenvalue(const RMatrix& ptm) {
  if (ptm.rows() != 4 || ptm.cols() != 4) throw ValidationError("expected a 4x4 PTM");
  CMatrix choi = CMatrix::Zero(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const CMatrix pj = pauli_string(static_cast<std::size_t>(j), 1);
      const CMatrix pi = pauli_string(static_cast<std::size_t>(i), 1);
      choi += ptm(i, j) * tensor_product(pj.transpose(), pi);
    }
  }
  choi /= 4.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(choi);
  return es.eigenvalues().minCoeff();
}

GSTEstimate lgst(const GSTData& data) {
  check_fiducials(data.fiducials);
  if (data.empty.rows() != 4 || data.empty.cols() != 4) throw ValidationError("expected 4x4 GST data matrices");
  GSTEstimate est;
  est.fiducials = data.fiducials;
  est.gram = data.empty;
  est.gram_condition_number = condition_number(data.empty);
  if (!(est.gram_condition_number < kMaxGramCondition)) {
    throw NumericalError("fiducials not informationally complete: Gram matrix condition number " +
                         std::to_string(est.gram_condition_number));
  }

  RMatrix t(4, 4);
  const CMatrix zero = CMatrix{{1.0, 0.0}, {0.0, 0.0}};
  for (std::size_t j = 0; j < 4; ++j) {
    const CMatrix u = sequence_unitary_1q(data.fiducials.preparation[j]);
    t.col(static_cast<Eigen::Index>(j)) = pauli_vector(u * zero * u.adjoint());
  }
  const RMatrix t_inv = t.inverse();
  const RMatrix m_inv = data.empty.inverse();

  est.min_choi_eigenvalue = std::numeric_limits<double>::infinity();
  for (const auto& [name, mk] : data.gates) {
    if (mk.rows() != 4 || mk.cols() != 4) throw ValidationError("expected 4x4 GST data matrices");
    RMatrix g = t * m_inv * mk * t_inv;
    est.min_choi_eigenvalue = std::min(est.min_choi_eigenvalue, ptm_min_choi_eigenvalue(g));
    est.gates.emplace(name, std::move(g));
  }
  // With empty fiducials at index 0, the bare preparation is prep column 0 and
  // the bare effect is measurement row 0.
  est.rho = t.col(0);
  est.effect = (data.empty.row(0) * t_inv).transpose();
  return est;
}

double predict_probability(const GSTEstimate& estimate, const GateSequence& sequence) {
  const RMatrix g = evolve_ptm(estimate.gates, sequence, "predict_probability");
  return estimate.effect.dot(g * estimate.rho);
}

GSTEstimate gauge_transform(const GSTEstimate& estimate, const RMatrix& b) {
  if (b.rows() != 4 || b.cols() != 4) throw ValidationError("gauge transform must be 4x4");
  Eigen::FullPivLU<RMatrix> lu(b);
  if (!lu.isInvertible()) throw ValidationError("gauge transform must be invertible");
  const RMatrix b_inv = lu.inverse();
  GSTEstimate out = estimate;
  for (auto& [name, g] : out.gates) g = b * g * b_inv;
  out.rho = b * estimate.rho;
  out.effect = (estimate.effect.transpose() * b_inv).transpose();
  return out;
}

}  // namespace nisq
