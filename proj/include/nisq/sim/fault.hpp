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

#include <vector>

#include "nisq/sim/gate.hpp"

namespace nisq {

enum class Pauli { X, Y, Z };

inline constexpr Pauli kPaulis[] = {Pauli::X, Pauli::Y, Pauli::Z};

constexpr Gate pauli_gate(Pauli p) noexcept {
  switch (p) {
    case Pauli::X:
      return Gate::x();
    case Pauli::Y:
      return Gate::y();
    case Pauli::Z:
      break;
  }
  return Gate::z();
}

constexpr char pauli_char(Pauli p) noexcept {
  return p == Pauli::X ? 'X' : (p == Pauli::Y ? 'Y' : 'Z');
}

/// A (qubit, layer) slot. A fault at layer l acts right after layer l.
struct SpaceTimeLocation {
  int qubit = 0;
  int layer = 0;
  friend auto operator<=>(const SpaceTimeLocation&, const SpaceTimeLocation&) = default;
};

struct Fault {
  SpaceTimeLocation location;
  Pauli pauli = Pauli::X;
  friend bool operator==(const Fault&, const Fault&) = default;
};

/// Faults at distinct locations.
using FaultSet = std::vector<Fault>;

}  // namespace nisq
