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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nisq/sim/circuit.hpp"

namespace nisq {

enum class Family { BV, Grover, QFT, HLF, Adder, RYRZ };

std::string_view family_name(Family f) noexcept;
std::optional<Family> parse_family(std::string_view name) noexcept;

/// Symmetric binary matrix defining an HLF instance, row-major n x n.
struct QuadraticForm {
  int n = 0;
  std::vector<std::uint8_t> entries;

  std::uint8_t operator()(int i, int j) const {
    return entries[static_cast<std::size_t>(i * n + j)];
  }
  bool symmetric() const;
};

/// Bernstein-Vazirani on |s| data qubits plus one ancilla (last qubit):
/// H on data and X on the ancilla, H on the ancilla, one CNOT per set bit,
/// then H on every qubit. Noiseless readout is s followed by a 1 on the ancilla.
Circuit gen_bv(std::string_view hidden);

/// Textbook QFT (qubit 0 most significant): H and controlled-phase cascade
/// per qubit, then the reversing swap network.
Circuit gen_qft(int n);

/// Grover search: H layer, then `iterations` rounds of phase oracle and
/// diffusion. Multi-controlled Z is decomposed via CircuitBuilder::mcz.
Circuit gen_grover(int n, std::string_view marked, int iterations);
/// floor(pi/4 * sqrt(2^n)), at least 1.
int optimal_grover_iterations(int n);

/// Hidden linear function: H layer, CZ per off-diagonal 1 (i < j), S per
/// diagonal 1, H layer.
Circuit gen_hlf(const QuadraticForm& form);

/// Register layout of the ripple-carry adder: qubit 0 carry-in ancilla,
/// then a (LSB first), then b (LSB first), then the carry-out qubit.
struct AdderLayout {
  int width = 0;

  int n_qubits() const noexcept { return 2 * width + 2; }
  int carry_in() const noexcept { return 0; }
  int a(int i) const noexcept { return 1 + i; }
  int b(int i) const noexcept { return 1 + width + i; }
  int carry_out() const noexcept { return 1 + 2 * width; }

  /// Basis bitstring holding operands a and b with clear ancillas.
  std::string encode(std::uint64_t a_value, std::uint64_t b_value) const;
  /// (b register, carry-out) read as a (width+1)-bit integer.
  std::uint64_t decode_sum(std::string_view bits) const;
  std::uint64_t decode_a(std::string_view bits) const;
};

/// Cuccaro ripple-carry adder (MAJ / UMA blocks) computing b <- a + b with
/// the carry into the carry-out qubit; Toffolis decomposed.
Circuit gen_adder(int width);

/// Hardware-efficient ansatz: Ry and Rz layers on every qubit, then `layers`
/// repetitions of a linear CNOT chain followed by Ry and Rz layers. Angles are
/// consumed in order, 2 n (layers + 1) of them.
Circuit gen_ryrz(int n, int layers, const std::vector<double>& angles);

/// A generated instance with the data needed to score it.
struct BenchmarkInstance {
  std::string id;
  Family family = Family::BV;
  Circuit circuit{1};
  std::string initial;
  /// Set for single-outcome families (BV, adder).
  std::optional<std::string> expected_outcome;
};

/// Parameters for a single deterministic instance drawn from `seed`.
BenchmarkInstance make_instance(Family family, int n_qubits, std::uint64_t seed);

/// Smallest and largest qubit counts make_instance accepts per family.
int family_min_qubits(Family family) noexcept;
bool family_accepts(Family family, int n_qubits) noexcept;

}  // namespace nisq
