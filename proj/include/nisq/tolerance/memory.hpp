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

#include <optional>
#include <string_view>

namespace nisq {

enum class Representation { StateVector, DensityMatrix };

std::optional<Representation> parse_representation(std::string_view name) noexcept;

/// Bytes needed to hold an n-qubit state: 2^n amplitudes for a state vector,
/// 2^(2n) for a density matrix, each `bytes_per_amplitude` (8 or 16) wide.
/// Returned as a double because 2^(2n) overflows 64-bit integers past n = 31.
double memory_estimate(int n_qubits, Representation repr, int bytes_per_amplitude);

inline constexpr double kBytesPerPetabyte = 1e15;

}  // namespace nisq
