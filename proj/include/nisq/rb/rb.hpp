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
#include <vector>

#include "nisq/common/parallel.hpp"
#include "nisq/noise/channel.hpp"
#include "nisq/noise/pauli_model.hpp"
#include "nisq/rb/clifford.hpp"
#include "nisq/rb/fit.hpp"

namespace nisq {

enum class NoiseInsertion {
  /// One noise application after each compiled Clifford.
  PerClifford,
  /// After every elementary gate of the decompositions.
  PerElementaryGate,
  /// After every CNOT only.
  PerCnot,
};

struct RBConfig {
  int n_qubits = 1;
  std::vector<int> lengths{1, 2, 3, 5, 7, 10, 15, 20, 30, 50};
  int sequences_per_length = 5;
  /// Measurements per sequence; 0 computes P(0...0) exactly.
  int shots = 0;
  /// n-qubit channel applied at each insertion point.
  std::optional<QuantumChannel> channel;
  /// Alternatively, independent Pauli faults on every qubit at each insertion
  /// point. With shots = 0 this is simulated as the equivalent channel.
  std::optional<PauliFaultModel> pauli;
  NoiseInsertion insertion = NoiseInsertion::PerClifford;
  /// Probability that each measured bit is flipped before readout.
  double readout_flip = 0.0;
  std::uint64_t seed = 0;
  Parallelism parallelism{};

  void validate() const;
};

struct RBPoint {
  int m = 0;
  double mean_survival = 0.0;
  double stderr_survival = 0.0;
  std::vector<double> survivals;
};

struct RBResult {
  int n_qubits = 1;
  std::vector<RBPoint> points;
  /// Mean CNOT count over every Clifford executed, recovery included.
  double mean_cnots_per_clifford = 0.0;
  std::optional<DecayFit> fit;
};

/// Target gate for interleaved RB.
struct InterleavedTarget {
  std::size_t element = 0;
  /// Noise following each target application; none means a perfect target.
  std::optional<QuantumChannel> noise;
};

/// Survival data for every (length, sequence). Sequence k of length index i
/// uses derive_seed(seed, i * 2^32 + k), so results do not depend on the
/// thread count.
RBResult run_rb(const RBConfig& config, const CliffordGroup& group,
                const std::optional<InterleavedTarget>& interleaved = std::nullopt);

/// Fits A0 (1-p)^m + B0 to the per-length means.
DecayFit fit_rb(const RBResult& result);

struct InterleavedRBResult {
  RBResult reference;
  RBResult interleaved;
  /// (1 - p_int) / (1 - p_ref)
  double decay_ratio = 1.0;
  /// (1 - 2^-n) (1 - decay_ratio)
  double gate_error = 0.0;
};

InterleavedRBResult run_interleaved_rb(const RBConfig& config, const CliffordGroup& group,
                                       const InterleavedTarget& target);

}  // namespace nisq
