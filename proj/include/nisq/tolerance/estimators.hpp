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
#include <cstdint>
#include <string_view>
#include <vector>

#include "nisq/common/parallel.hpp"
#include "nisq/noise/pauli_model.hpp"
#include "nisq/sim/circuit.hpp"
#include "nisq/tolerance/criterion.hpp"

namespace nisq {

enum class EstimateMethod { Exhaustive, MonteCarlo };

std::string_view method_name(EstimateMethod m) noexcept;

inline constexpr double kZ95 = 1.959963984540054;
inline constexpr double kZ99 = 2.5758293035489004;

struct SuccessEstimate {
  double value = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  EstimateMethod method = EstimateMethod::Exhaustive;
  /// Fault samples for Monte Carlo, simulations run for exhaustive.
  std::size_t trials = 0;
  /// Standard error of the Monte Carlo mean; zero for exhaustive.
  double std_error = 0.0;
  /// Every Monte Carlo score was exactly 0 or 1.
  bool binary = false;
  /// Highest fault order enumerated by the exhaustive method.
  int order = 0;
  /// Probability of fault sets larger than `order`, left out of `value`.
  /// Scores lie in [0, 1] for pass-rate criteria, so this bounds the bias.
  double truncation = 0.0;

  /// Two-sided interval at normal quantile z: Wilson for binary pass/fail
  /// samples with non-zero variance, normal approximation otherwise.
  std::pair<double, double> interval(double z) const;
};

std::pair<double, double> wilson_interval(double successes, double trials, double z);

/// Criterion scores for every single Pauli fault: one ideal simulation plus
/// one per (location, Pauli). Independent of the error rate, so one table
/// serves every rate probed for a circuit. Higher orders are added on demand
/// by extend_fault_table.
struct SingleFaultTable {
  double ideal_score = 0.0;
  std::vector<SpaceTimeLocation> locations;
  /// scores[k][P] for locations[k] and P in {X, Y, Z}.
  std::vector<std::array<double, 3>> scores;
  /// higher_orders[j] = sum over all (j + 2)-fault configurations of
  /// prod w_P * score, with the weights in higher_order_weights.
  std::vector<double> higher_orders;
  std::array<double, 3> higher_order_weights{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  /// Faulty simulations run so far, plus one for the ideal run.
  std::size_t simulations = 0;

  int order() const noexcept { return 1 + static_cast<int>(higher_orders.size()); }
};

SingleFaultTable single_fault_scores(const Circuit& circuit, LocationPolicy policy,
                                     const SuccessCriterion& criterion, std::string_view initial,
                                     Parallelism par = {});

/// Adds every k-fault configuration for k up to `order`. Configurations are
/// enumerated in time order with the partially faulted state shared between
/// branches.
void extend_fault_table(SingleFaultTable& table, const Circuit& circuit, const SuccessCriterion& criterion,
                        std::string_view initial, int order, const std::array<double, 3>& weights,
                        Parallelism par = {});

/// Controls how many fault orders the exhaustive estimator enumerates.
struct ExhaustiveOptions {
  /// Stop at the first order whose neglected probability P(N > k) is at most this.
  double tail_tolerance = 1e-4;
  int max_order = 3;
  /// Upper limit on C(L, k) 3^k configurations for the highest order.
  double max_configurations = 2e6;
};

/// P(N > order) for N ~ Binomial(L, p).
double truncated_fault_mass(std::size_t locations, double p, int order);
/// C(L, k) 3^k.
double fault_configurations(std::size_t locations, int order);
/// Smallest order within budget whose tail meets the tolerance, else the
/// largest order within budget (at least 1).
int exhaustive_order(std::size_t locations, double p, const ExhaustiveOptions& options);

/// S(p) = (1-p)^L S0 + p (1-p)^(L-1) sum_loc sum_P w_P S_loc,P. With uniform
/// weights w_P = 1/3. Throws ValidationError when L p > 1.
SuccessEstimate first_order_success(const SingleFaultTable& table, const PauliFaultModel& model);

/// sum_k p^k (1-p)^(L-k) sum_{|C| = k} prod w_P S_C over every order in the
/// table. The neglected mass P(N > order) is reported in `truncation`.
/// Throws ValidationError when L p > 1.
SuccessEstimate exhaustive_success(const SingleFaultTable& table, const PauliFaultModel& model);

/// Enumerates fault configurations up to exhaustive_order(L, p, options).
SuccessEstimate success_probability_exhaustive(const Circuit& circuit, const PauliFaultModel& model,
                                               const SuccessCriterion& criterion,
                                               std::string_view initial, Parallelism par = {},
                                               const ExhaustiveOptions& options = {});

/// Mean criterion score over `trials` sampled fault sets. Trial i uses the
/// generator seeded by derive_seed(seed, i), and scores are reduced in trial
/// order, so the result does not depend on the thread count.
SuccessEstimate success_probability_mc(const Circuit& circuit, const PauliFaultModel& model,
                                       const SuccessCriterion& criterion, std::string_view initial,
                                       std::size_t trials, std::uint64_t seed,
                                       Parallelism par = {});

}  // namespace nisq
