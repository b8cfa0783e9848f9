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
#include <map>
#include <string>
#include <vector>

#include "nisq/noise/channel.hpp"
#include "nisq/noise/density_matrix.hpp"

namespace nisq {

using GateSequence = std::vector<std::string>;

/// Single-qubit gates, a preparation and a two-outcome measurement {E0, 1 - E0}.
struct GateSet {
  std::map<std::string, QuantumChannel> gates;
  DensityMatrix rho0 = DensityMatrix::basis("0");
  CMatrix effect0 = CMatrix{{1.0, 0.0}, {0.0, 0.0}};

  const QuantumChannel& gate(const std::string& name) const;
  void validate() const;
};

/// Ideal gates for fixed-angle gate names such as "h", "s", "x", "t".
GateSet ideal_gate_set(const std::vector<std::string>& names = {"h", "s", "x"});
/// Every gate followed by a depolarizing channel of strength p.
GateSet depolarized_gate_set(double p, const std::vector<std::string>& names = {"h", "s", "x"});

/// Pr(outcome 0) after running `sequence` on rho0, by density-matrix evolution.
double sequence_probability(const GateSet& gateset, const GateSequence& sequence);

struct FiducialSet {
  /// Applied after preparation. The first entry must be empty.
  std::vector<GateSequence> preparation;
  /// Applied before measurement. The first entry must be empty.
  std::vector<GateSequence> measurement;
};

/// Preparations {}, (h), (h,s), (h,s,s) give |0>, |+>, |+i>, |->. The
/// measurement fiducials are their inverses, so the measured effects are the
/// same four states.
FiducialSet default_fiducials();

struct GSTData {
  FiducialSet fiducials;
  /// M_empty(i, j) = Pr(0 | prep j, meas i).
  RMatrix empty;
  /// M_k(i, j) = Pr(0 | prep j, gate k, meas i).
  std::map<std::string, RMatrix> gates;
  int shots = 0;
};

/// shots = 0 gives exact probabilities. Each circuit draws from its own stream
/// derived from `seed` and the circuit index.
GSTData collect_gst_data(const GateSet& gateset, const FiducialSet& fiducials, int shots,
                         std::uint64_t seed);

/// PTMs and SPAM vectors in the normalized Pauli basis (I, X, Y, Z)/sqrt(2).
struct GSTEstimate {
  FiducialSet fiducials;
  std::map<std::string, RMatrix> gates;
  Eigen::Vector4d rho;
  Eigen::Vector4d effect;
  RMatrix gram;
  double gram_condition_number = 0.0;
  /// Smallest eigenvalue of any estimated gate's trace-normalized Choi matrix.
  double min_choi_eigenvalue = 0.0;
};

/// Linear inversion in the frame of the ideal preparation fiducials:
/// G_k = T M_empty^-1 M_k T^-1.
GSTEstimate lgst(const GSTData& data);

double predict_probability(const GSTEstimate& estimate, const GateSequence& sequence);

/// G -> B G B^-1, rho -> B rho, E -> E B^-1.
GSTEstimate gauge_transform(const GSTEstimate& estimate, const RMatrix& b);

/// Smallest eigenvalue of the trace-normalized Choi matrix of a 1-qubit PTM.
double ptm_min_choi_eigenvalue(const RMatrix& ptm);

/// Normalized Pauli vector of a single-qubit operator: Tr(P_a X)/sqrt(2).
Eigen::Vector4d pauli_vector(const CMatrix& op);

}  // namespace nisq
