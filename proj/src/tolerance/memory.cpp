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

#include "nisq/tolerance/memory.hpp"

#include <cmath>

#include "nisq/common/errors.hpp"

namespace nisq {

std::optional<Representation> parse_representation(std::string_view name) noexcept {
  if (name == "statevector" || name == "sv") return Representation::StateVector;
  if (name == "density" || name == "density_matrix" || name == "dm") return Representation::DensityMatrix;
  return std::nullopt;
}

double memory_estimate(int n_qubits, Representation repr, int bytes_per_amplitude) {
  if (n_qubits < 1) throw ValidationError("qubit count must be at least 1");
  if (bytes_per_amplitude != 8 && bytes_per_amplitude != 16) {
    throw ValidationError("bytes per amplitude must be 8 or 16");
  }
  const int exponent = repr == Representation::StateVector ? n_qubits : 2 * n_qubits;
  return std::ldexp(static_cast<double>(bytes_per_amplitude), exponent);
}

}  // namespace nisq
