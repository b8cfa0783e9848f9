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

#include "nisq/tolerance/criterion.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <utility>

#include "nisq/common/errors.hpp"

namespace nisq {
namespace {

constexpr std::array<std::pair<std::string_view, CriterionKind>, 6> kKinds{{
    {"correct", CriterionKind::CorrectOutcome},
    {"acceptable", CriterionKind::AcceptableSet},
    {"fidelity", CriterionKind::Fidelity},
    {"tvd", CriterionKind::TotalVariation},
    {"heavy", CriterionKind::HeavyOutput},
    {"xeb", CriterionKind::CrossEntropy},
}};

}  // namespace

std::string_view criterion_name(CriterionKind kind) noexcept {
  for (const auto& [name, k] : kKinds) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<CriterionKind> parse_criterion(std::string_view name) noexcept {
  for (const auto& [n, k] : kKinds) {
    if (n == name) return k;
  }
  return std::nullopt;
}

SuccessCriterion::SuccessCriterion(CriterionKind kind, double threshold, int n_qubits)
    : kind_(kind), threshold_(threshold), n_qubits_(n_qubits) {
  check_threshold();
}

void SuccessCriterion::check_threshold() const {
  const double lo = kind_ == CriterionKind::CrossEntropy ? -1.0 : 0.0;
  if (!(threshold_ >= lo && threshold_ <= 1.0)) {
    throw ValidationError("success threshold out of range for criterion '" +
                          std::string(criterion_name(kind_)) + "'");
  }
}

SuccessCriterion SuccessCriterion::with_threshold(double threshold) const {
  SuccessCriterion c = *this;
  c.threshold_ = threshold;
  c.check_threshold();
  return c;
}

SuccessCriterion SuccessCriterion::correct_outcome(std::string_view bits, double threshold) {
  SuccessCriterion c(CriterionKind::CorrectOutcome, threshold, static_cast<int>(bits.size()));
  c.outcomes_.push_back(bits_to_index(bits));
  return c;
}

SuccessCriterion SuccessCriterion::acceptable_set(const std::vector<std::string>& bits,
                                                  double threshold) {
  if (bits.empty()) throw ValidationError("acceptable set must not be empty");
  SuccessCriterion c(CriterionKind::AcceptableSet, threshold, static_cast<int>(bits.front().size()));
  for (const auto& b : bits) {
    if (static_cast<int>(b.size()) != c.n_qubits_) {
      throw ValidationError("acceptable bitstrings must share one length");
    }
    c.outcomes_.push_back(bits_to_index(b));
  }
  std::sort(c.outcomes_.begin(), c.outcomes_.end());
  c.outcomes_.erase(std::unique(c.outcomes_.begin(), c.outcomes_.end()), c.outcomes_.end());
  return c;
}

SuccessCriterion SuccessCriterion::within_hamming(std::string_view center, int radius,
                                                  double threshold) {
  if (radius < 0) throw ValidationError("Hamming radius must be non-negative");
  SuccessCriterion c(CriterionKind::AcceptableSet, threshold, static_cast<int>(center.size()));
  const std::uint64_t mid = bits_to_index(center);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << c.n_qubits_); ++x) {
    if (std::popcount(x ^ mid) <= radius) c.outcomes_.push_back(x);
  }
  return c;
}

SuccessCriterion SuccessCriterion::fidelity(StateVector target, double threshold) {
  SuccessCriterion c(CriterionKind::Fidelity, threshold, target.n_qubits());
  c.target_ = std::move(target);
  return c;
}

SuccessCriterion SuccessCriterion::total_variation(OutcomeDistribution reference, double threshold) {
  SuccessCriterion c(CriterionKind::TotalVariation, threshold, reference.n_qubits());
  c.reference_ = reference.probabilities();
  return c;
}

SuccessCriterion SuccessCriterion::heavy_output(const OutcomeDistribution& ideal, double threshold) {
  SuccessCriterion c(CriterionKind::HeavyOutput, threshold, ideal.n_qubits());
  std::vector<double> sorted = ideal.probabilities();
  std::sort(sorted.begin(), sorted.end());
  const std::size_t m = sorted.size();
  const double median = (sorted[m / 2 - 1] + sorted[m / 2]) / 2.0;
  for (std::size_t x = 0; x < m; ++x) {
    if (ideal[x] > median) c.outcomes_.push_back(x);
  }
  c.reference_ = ideal.probabilities();
  return c;
}

SuccessCriterion SuccessCriterion::cross_entropy(OutcomeDistribution ideal, double threshold) {
  SuccessCriterion c(CriterionKind::CrossEntropy, threshold, ideal.n_qubits());
  c.reference_ = ideal.probabilities();
  return c;
}

void SuccessCriterion::check_size(int n_qubits) const {
  if (n_qubits != n_qubits_) {
    throw ValidationError("criterion expects " + std::to_string(n_qubits_) + " qubits, got " +
                          std::to_string(n_qubits));
  }
}

double SuccessCriterion::score_probabilities(const std::vector<double>& probs) const {
  switch (kind_) {
    case CriterionKind::CorrectOutcome:
    case CriterionKind::AcceptableSet:
    case CriterionKind::HeavyOutput: {
      double mass = 0.0;
      for (auto x : outcomes_) mass += probs[x];
      return mass;
    }
    case CriterionKind::TotalVariation: {
      double tvd = 0.0;
      for (std::size_t x = 0; x < probs.size(); ++x) tvd += std::abs(probs[x] - reference_[x]);
      return 1.0 - 0.5 * tvd;
    }
    case CriterionKind::CrossEntropy: {
      double overlap = 0.0;
      for (std::size_t x = 0; x < probs.size(); ++x) overlap += probs[x] * reference_[x];
      return std::ldexp(overlap, n_qubits_) - 1.0;
    }
    case CriterionKind::Fidelity:
      break;
  }
  throw ValidationError("fidelity criterion needs final states, not an outcome distribution");
}

double SuccessCriterion::score(const OutcomeDistribution& dist) const {
  check_size(dist.n_qubits());
  return score_probabilities(dist.probabilities());
}

double SuccessCriterion::score(const StateVector& state) const {
  check_size(state.n_qubits());
  switch (kind_) {
    case CriterionKind::CorrectOutcome:
      return std::norm(state[outcomes_.front()]);
    case CriterionKind::Fidelity:
      return state_fidelity(*target_, state);
    default:
      return score_probabilities(measure_distribution(state).probabilities());
  }
}

SuccessScore evaluate_success(const OutcomeDistribution& outcome, const SuccessCriterion& criterion) {
  const double s = criterion.score(outcome);
  return {s, s >= criterion.threshold()};
}

SuccessScore evaluate_success(const StateVector& outcome, const SuccessCriterion& criterion) {
  const double s = criterion.score(outcome);
  return {s, s >= criterion.threshold()};
}

}  // namespace nisq
