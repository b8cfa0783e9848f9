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

#include "nisq/noise/pauli_model.hpp"

#include <cmath>
#include <string>

#include "nisq/common/errors.hpp"

namespace nisq {

PauliFaultModel PauliFaultModel::depolarizing(double rate, LocationPolicy policy) {
  PauliFaultModel m{rate, {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}, policy};
  m.validate();
  return m;
}

PauliFaultModel PauliFaultModel::dephasing(double rate, LocationPolicy policy) {
  PauliFaultModel m{rate, {0.0, 0.0, 1.0}, policy};
  m.validate();
  return m;
}

PauliFaultModel PauliFaultModel::with_rate(double p) const {
  PauliFaultModel m = *this;
  m.rate = p;
  m.validate();
  return m;
}

void PauliFaultModel::validate() const {
  if (!(rate >= 0.0 && rate <= 0.75)) {
    throw ValidationError("Pauli error rate must be in [0, 0.75], got " + std::to_string(rate));
  }
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw ValidationError("Pauli weights must be non-negative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw ValidationError("Pauli weights must sum to 1");
}

std::vector<SpaceTimeLocation> enumerate_locations(const Circuit& circuit,
                                                   const PauliFaultModel& model) {
  std::vector<SpaceTimeLocation> out;
  for (int l = 0; l < circuit.depth(); ++l) {
    if (model.policy == LocationPolicy::AllQubitsEveryLayer) {
      for (int q = 0; q < circuit.n_qubits(); ++q) out.push_back({q, l});
    } else {
      for (const auto& op : circuit.layer(l)) {
        for (int q : op.qubits()) out.push_back({q, l});
      }
    }
  }
  return out;
}

FaultSet sample_fault_set(std::span<const SpaceTimeLocation> locations,
                          const PauliFaultModel& model, Rng& rng) {
  FaultSet faults;
  if (model.rate <= 0.0) return faults;
  const double cut_x = model.rate * model.weights[0];
  const double cut_y = cut_x + model.rate * model.weights[1];
  for (const auto& loc : locations) {
    const double u = uniform01(rng);
    if (u >= model.rate) continue;
    Pauli p = Pauli::Z;
    if (u < cut_x) {
      p = Pauli::X;
    } else if (u < cut_y) {
      p = Pauli::Y;
    }
    // Zero-weight Paulis never occur even when rounding puts u on a boundary.
    while (model.weight(p) == 0.0) p = static_cast<Pauli>((static_cast<int>(p) + 1) % 3);
    faults.push_back({loc, p});
  }
  return faults;
}

}  // namespace nisq
