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
#include <string>
#include <string_view>

#include "nisq/tolerance/estimators.hpp"

namespace nisq {

struct CircuitArea {
  int n = 0;
  int d = 0;
  long long area = 0;
};

CircuitArea circuit_area(const Circuit& circuit);

struct ErrorRateBounds {
  double area_bound = 0.0;  // 1 / (n d)
  double gate_bound = 0.0;  // 1 / G
};

/// Throws ValidationError for zero-depth circuits.
ErrorRateBounds error_rate_bounds(const Circuit& circuit);

struct ToleranceConfig {
  /// Rate at which success probability is reported alongside p*.
  double report_rate = 0.0015;
  double p_min = 1e-6;
  double p_max = 0.75;
  /// Bisection on log10(p) stops once hi / lo <= bracket_ratio.
  double bracket_ratio = 1.05;
  std::size_t mc_initial_trials = 10'000;
  std::size_t mc_max_trials = 1'000'000;
  std::uint64_t seed = 0;
  Parallelism parallelism{};
  LocationPolicy policy = LocationPolicy::AllQubitsEveryLayer;
  std::array<double, 3> weights{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  ExhaustiveOptions exhaustive{};
};

struct ToleranceResult {
  std::string circuit_id;
  int n = 0;
  int d = 0;
  long long area = 0;
  /// Largest probed rate whose success score still reaches the threshold.
  double p_star = 0.0;
  double bound_1_over_area = 0.0;
  double success_at_report_rate = 0.0;
  SuccessEstimate report_estimate;
  int probes = 0;
};

/// Success estimate at `model.rate`: exhaustive when L p <= 1 (extending
/// `table` to the order the rate needs), otherwise Monte Carlo starting at
/// mc_initial_trials and quadrupling while the 95% interval straddles the
/// criterion threshold.
SuccessEstimate estimate_success(const Circuit& circuit, const PauliFaultModel& model,
                                 const SuccessCriterion& criterion, std::string_view initial,
                                 SingleFaultTable& table, const ToleranceConfig& config,
                                 std::uint64_t probe_seed);

/// Largest p in [p_min, p_max] with S(p) >= threshold, by bisection on
/// log10(p). Returns p* = 0 when even p_min fails. Throws ValidationError if
/// the noiseless score is already below the threshold.
ToleranceResult tolerable_error_rate(const Circuit& circuit, const SuccessCriterion& criterion,
                                     std::string_view initial, const ToleranceConfig& config,
                                     std::string circuit_id = {});

}  // namespace nisq
