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

#include "nisq/sim/state_vector.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "nisq/common/errors.hpp"

namespace nisq {

std::uint64_t bits_to_index(std::string_view bits) {
  if (bits.empty() || bits.size() > 62) throw ValidationError("bitstring length must be in [1, 62]");
  std::uint64_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw ValidationError("bitstring may only contain '0' and '1': '" + std::string(bits) + "'");
    }
    index = (index << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return index;
}

std::string index_to_bits(std::uint64_t index, int n_qubits) {
  std::string out(static_cast<std::size_t>(n_qubits), '0');
  for (int q = 0; q < n_qubits; ++q) {
    if ((index >> (n_qubits - 1 - q)) & 1U) out[static_cast<std::size_t>(q)] = '1';
  }
  return out;
}

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > 30) throw ValidationError("state qubit count must be in [1, 30]");
  amplitudes_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
  amplitudes_[0] = 1.0;
}

StateVector StateVector::basis(std::string_view bits) {
  return basis(static_cast<int>(bits.size()), bits_to_index(bits));
}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  if (index >= s.dimension()) throw ValidationError("basis index out of range");
  s.amplitudes_[0] = 0.0;
  s.amplitudes_[index] = 1.0;
  return s;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
  const std::size_t dim = amplitudes.size();
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw ValidationError("amplitude vector length must be a power of two >= 2");
  }
  const int n = std::countr_zero(dim);
  StateVector s(n, std::move(amplitudes));
  if (std::abs(s.norm_squared() - 1.0) > 1e-10) throw ValidationError("amplitudes are not normalized");
  return s;
}

double StateVector::norm_squared() const noexcept {
  double s = 0.0;
  for (const auto& a : amplitudes_) s += std::norm(a);
  return s;
}

void StateVector::apply(const Gate& gate, std::span<const int> targets) {
  if (static_cast<int>(targets.size()) != gate.arity()) {
    throw ValidationError("gate '" + std::string(gate.name()) + "' expects " +
                          std::to_string(gate.arity()) + " target(s)");
  }
  for (int q : targets) {
    if (q < 0 || q >= n_qubits_) {
      throw ValidationError("target qubit " + std::to_string(q) + " out of range");
    }
  }
  if (gate.arity() == 1) {
    apply_1q(gate, targets[0]);
  } else {
    if (targets[0] == targets[1]) throw ValidationError("duplicate target qubits");
    apply_2q(gate, targets[0], targets[1]);
  }
}

void StateVector::apply(const Layer& layer) {
  for (const auto& op : layer) apply(op);
}

void StateVector::apply_1q(const Gate& gate, int q) {
  const std::size_t stride = std::size_t{1} << (n_qubits_ - 1 - q);
  const std::size_t dim = amplitudes_.size();
  Complex* a = amplitudes_.data();
  const auto for_pairs = [&](auto&& kernel) {
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
      for (std::size_t i = base; i < base + stride; ++i) kernel(a[i], a[i + stride]);
    }
  };
  const auto diagonal = [&](Complex d0, Complex d1) {
    for_pairs([&](Complex& lo, Complex& hi) {
      lo *= d0;
      hi *= d1;
    });
  };
  const Complex i{0.0, 1.0};
  switch (gate.kind()) {
    case GateKind::X:
      for_pairs([](Complex& lo, Complex& hi) { std::swap(lo, hi); });
      return;
    case GateKind::Y:
      for_pairs([&](Complex& lo, Complex& hi) {
        const Complex l = lo;
        lo = -i * hi;
        hi = i * l;
      });
      return;
    case GateKind::Z:
      for_pairs([](Complex&, Complex& hi) { hi = -hi; });
      return;
    case GateKind::S:
      for_pairs([&](Complex&, Complex& hi) { hi *= i; });
      return;
    case GateKind::Sdg:
      for_pairs([&](Complex&, Complex& hi) { hi *= -i; });
      return;
    case GateKind::T:
      for_pairs([t = std::polar(1.0, std::numbers::pi / 4.0)](Complex&, Complex& hi) { hi *= t; });
      return;
    case GateKind::Rz:
      diagonal(std::polar(1.0, -gate.angle() / 2.0), std::polar(1.0, gate.angle() / 2.0));
      return;
    default:
      break;
  }
  const CMatrix m = gate.matrix();
  const Complex m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
  for_pairs([&](Complex& lo, Complex& hi) {
    const Complex l = lo;
    lo = m00 * l + m01 * hi;
    hi = m10 * l + m11 * hi;
  });
}

void StateVector::apply_2q(const Gate& gate, int q0, int q1) {
  const std::size_t b0 = std::size_t{1} << (n_qubits_ - 1 - q0);
  const std::size_t b1 = std::size_t{1} << (n_qubits_ - 1 - q1);
  const std::size_t dim = amplitudes_.size();
  Complex* a = amplitudes_.data();
  if (gate.kind() == GateKind::CX) {
    for (std::size_t idx = 0; idx < dim; ++idx) {
      if ((idx & b0) && !(idx & b1)) std::swap(a[idx], a[idx | b1]);
    }
    return;
  }
  const CMatrix m = gate.matrix();
  for (std::size_t idx = 0; idx < dim; ++idx) {
    if (idx & (b0 | b1)) continue;
    const std::size_t slot[4] = {idx, idx | b1, idx | b0, idx | b0 | b1};
    Complex in[4], out[4];
    for (int k = 0; k < 4; ++k) in[k] = a[slot[k]];
    for (int r = 0; r < 4; ++r) {
      out[r] = 0.0;
      for (int c = 0; c < 4; ++c) out[r] += m(r, c) * in[c];
    }
    for (int k = 0; k < 4; ++k) a[slot[k]] = out[k];
  }
}

StateVector apply_gate(StateVector state, const Gate& gate, std::span<const int> targets) {
  state.apply(gate, targets);
  return state;
}

OutcomeDistribution::OutcomeDistribution(int n_qubits, std::vector<double> probabilities)
    : n_qubits_(n_qubits), probabilities_(std::move(probabilities)) {
  if (probabilities_.size() != (std::size_t{1} << n_qubits)) {
    throw ValidationError("distribution size does not match qubit count");
  }
}

double OutcomeDistribution::probability(std::string_view bits) const {
  if (static_cast<int>(bits.size()) != n_qubits_) throw ValidationError("bitstring length mismatch");
  return probabilities_[bits_to_index(bits)];
}

double OutcomeDistribution::marginal_one(int qubit) const {
  if (qubit < 0 || qubit >= n_qubits_) throw ValidationError("qubit out of range");
  const std::size_t bit = std::size_t{1} << (n_qubits_ - 1 - qubit);
  double p = 0.0;
  for (std::size_t i = 0; i < probabilities_.size(); ++i) {
    if (i & bit) p += probabilities_[i];
  }
  return p;
}

OutcomeDistribution measure_distribution(const StateVector& state) {
  std::vector<double> probs(state.dimension());
  for (std::size_t i = 0; i < probs.size(); ++i) probs[i] = std::norm(state[i]);
  return OutcomeDistribution(state.n_qubits(), std::move(probs));
}

std::pair<std::uint64_t, StateVector> sample_measurement(const StateVector& state, Rng& rng) {
  const double u = uniform01(rng);
  double cumulative = 0.0;
  std::uint64_t chosen = state.dimension() - 1;
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    cumulative += std::norm(state[i]);
    if (u < cumulative) {
      chosen = i;
      break;
    }
  }
  // Guard against rounding leaving u above the final cumulative sum.
  while (std::norm(state[chosen]) == 0.0 && chosen > 0) --chosen;
  return {chosen, StateVector::basis(state.n_qubits(), chosen)};
}

double state_fidelity(const StateVector& target, const StateVector& actual) {
  if (target.dimension() != actual.dimension()) throw ValidationError("state dimension mismatch");
  Complex overlap{0.0, 0.0};
  for (std::size_t i = 0; i < target.dimension(); ++i) overlap += std::conj(target[i]) * actual[i];
  return std::norm(overlap);
}

}  // namespace nisq
