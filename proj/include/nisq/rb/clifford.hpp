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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nisq/common/random.hpp"
#include "nisq/sim/circuit.hpp"
#include "nisq/sim/gate.hpp"

namespace nisq {

/// |Clif_n| = 2^(2n) 2^(n^2) prod_{j=1..n} (2^(2j) - 1), exactly.
boost::multiprecision::cpp_int clifford_group_size(int n);

/// Multiplies by a phase so the first non-zero entry (row-major) is real and
/// positive. Two unitaries equal up to global phase canonicalize to the same
/// matrix.
CMatrix canonicalize_phase(const CMatrix& u);

/// True if u maps every Pauli string to +/- a Pauli string under conjugation.
bool is_clifford(const CMatrix& u, double tol = 1e-9);

struct CliffordElement {
  std::size_t index = 0;
  /// Phase-canonical unitary.
  CMatrix unitary;
  /// Gates over {H, S, CX} in application order; empty for the identity.
  std::vector<Operation> decomposition;
  int cnot_count = 0;
};

/// The full 1- or 2-qubit Clifford group, materialized.
///
/// Built by a shortest-path closure from the identity over the generators
/// {H, S} (one qubit) or {H(x)1, 1(x)H, S(x)1, 1(x)S, CX} (two qubits), with
/// cost ordered by (CNOT count, gate count). Every element therefore carries a
/// decomposition with the fewest CNOTs reachable, and among those the fewest
/// gates. Element 0 is the identity.
class CliffordGroup {
 public:
  static CliffordGroup build(int n_qubits);
  /// Rebuilds a group from stored decompositions (see the group cache format).
  static CliffordGroup from_decompositions(int n_qubits,
                                           const std::vector<std::vector<Operation>>& decompositions);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const CliffordElement& operator[](std::size_t i) const { return elements_.at(i); }
  const std::vector<CliffordElement>& elements() const noexcept { return elements_; }

  /// Index of the element equal to u up to global phase.
  std::optional<std::size_t> find(const CMatrix& u) const;
  /// Index of (second * first), i.e. first applied, then second.
  std::size_t compose(std::size_t second, std::size_t first) const;
  std::size_t inverse(std::size_t index) const;
  /// Mean CNOT count over all elements.
  double mean_cnot_count() const;

 private:
  static std::string key(const CMatrix& canonical);
  void add(CMatrix canonical, std::vector<Operation> decomposition);

  int n_qubits_ = 1;
  std::vector<CliffordElement> elements_;
  std::unordered_map<std::string, std::size_t> lookup_;
};

/// Group element whose unitary is the inverse of `element` up to phase.
/// Throws NumericalError if it is missing.
const CliffordElement& clifford_inverse(const CliffordElement& element, const CliffordGroup& group);

/// Unitary of a gate sequence on n qubits, gates applied in order.
CMatrix sequence_unitary(const std::vector<Operation>& ops, int n_qubits);

struct RBSequence {
  /// m random elements followed by the recovery element.
  std::vector<std::size_t> cliffords;
  /// Decompositions expanded into gates.
  Circuit circuit{1};
};

/// m uniformly drawn elements and the element inverting their product.
/// With `interleaved`, that element follows every random one.
RBSequence generate_rb_sequence(int m, const CliffordGroup& group, Rng& rng,
                                std::optional<std::size_t> interleaved = std::nullopt);

}  // namespace nisq
