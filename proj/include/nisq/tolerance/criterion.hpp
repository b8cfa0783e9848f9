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

#include "nisq/sim/state_vector.hpp"

namespace nisq {

enum class CriterionKind {
  CorrectOutcome,
  AcceptableSet,
  Fidelity,
  TotalVariation,
  HeavyOutput,
  CrossEntropy,
};

std::string_view criterion_name(CriterionKind kind) noexcept;
std::optional<CriterionKind> parse_criterion(std::string_view name) noexcept;

/// What counts as a successful run, and the threshold a score must reach.
///
/// Build with the factory functions; each one fills in only the data its kind
/// needs. All scores are linear in the outcome distribution except
/// total_variation.
class SuccessCriterion {
 public:
  /// Probability of one bitstring.
  static SuccessCriterion correct_outcome(std::string_view bits, double threshold = 0.66);
  /// Probability mass on a set of bitstrings.
  static SuccessCriterion acceptable_set(const std::vector<std::string>& bits,
                                         double threshold = 0.66);
  /// Mass on bitstrings within Hamming distance `radius` of `center`.
  static SuccessCriterion within_hamming(std::string_view center, int radius,
                                         double threshold = 0.66);
  /// |<target|psi>|^2; needs final states, not distributions.
  static SuccessCriterion fidelity(StateVector target, double threshold = 0.66);
  /// 1 - TVD(measured, reference).
  static SuccessCriterion total_variation(OutcomeDistribution reference, double threshold = 0.66);
  /// Mass on outcomes whose ideal probability is strictly above the ideal median.
  static SuccessCriterion heavy_output(const OutcomeDistribution& ideal, double threshold = 0.66);
  /// Linear cross-entropy fidelity 2^n sum_x p(x) p_ideal(x) - 1; threshold in [-1, 1].
  static SuccessCriterion cross_entropy(OutcomeDistribution ideal, double threshold = 0.66);

  CriterionKind kind() const noexcept { return kind_; }
  double threshold() const noexcept { return threshold_; }
  int n_qubits() const noexcept { return n_qubits_; }
  const std::vector<std::uint64_t>& outcomes() const noexcept { return outcomes_; }
  const std::optional<StateVector>& target_state() const noexcept { return target_; }
  const std::vector<double>& reference() const noexcept { return reference_; }

  SuccessCriterion with_threshold(double threshold) const;

  /// Score of a final pure state.
  double score(const StateVector& state) const;
  /// Score of an outcome distribution; throws for the fidelity kind.
  double score(const OutcomeDistribution& dist) const;

 private:
  SuccessCriterion(CriterionKind kind, double threshold, int n_qubits);
  void check_threshold() const;
  void check_size(int n_qubits) const;
  double score_probabilities(const std::vector<double>& probs) const;

  CriterionKind kind_;
  double threshold_;
  int n_qubits_;
  std::vector<std::uint64_t> outcomes_;  // target, acceptable or heavy set
  std::optional<StateVector> target_;
  std::vector<double> reference_;
};

struct SuccessScore {
  double score = 0.0;
  bool pass = false;
};

SuccessScore evaluate_success(const OutcomeDistribution& outcome, const SuccessCriterion& criterion);
SuccessScore evaluate_success(const StateVector& outcome, const SuccessCriterion& criterion);

}  // namespace nisq
