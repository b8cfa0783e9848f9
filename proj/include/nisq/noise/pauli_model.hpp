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
#include <span>
#include <vector>

#include "nisq/common/random.hpp"
#include "nisq/sim/circuit.hpp"
#include "nisq/sim/fault.hpp"

namespace nisq {

enum class LocationPolicy {
  /// One location per (qubit, layer): n * d locations.
  AllQubitsEveryLayer,
  /// One location per (gate, target qubit) pair.
  ActiveQubitsOnly,
};

/// Independent Pauli faults: each location is hit with probability `rate`, and
/// a hit is X, Y or Z according to `weights`.
struct PauliFaultModel {
  double rate = 0.0;
  std::array<double, 3> weights{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  LocationPolicy policy = LocationPolicy::AllQubitsEveryLayer;

  static PauliFaultModel depolarizing(double rate,
                                      LocationPolicy policy = LocationPolicy::AllQubitsEveryLayer);
  static PauliFaultModel dephasing(double rate,
                                   LocationPolicy policy = LocationPolicy::AllQubitsEveryLayer);

  double weight(Pauli p) const noexcept { return weights[static_cast<std::size_t>(p)]; }
  PauliFaultModel with_rate(double p) const;

  /// Throws ValidationError unless rate is in [0, 0.75] and the weights form
  /// a probability vector.
  void validate() const;
};

std::vector<SpaceTimeLocation> enumerate_locations(const Circuit& circuit,
                                                   const PauliFaultModel& model);

FaultSet sample_fault_set(std::span<const SpaceTimeLocation> locations,
                          const PauliFaultModel& model, Rng& rng);

}  // namespace nisq
