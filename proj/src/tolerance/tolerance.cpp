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

#include "nisq/tolerance/tolerance.hpp"

#include <cmath>

#include "nisq/common/errors.hpp"
#include "nisq/common/random.hpp"

namespace nisq {

CircuitArea circuit_area(const Circuit& circuit) {
  return {circuit.n_qubits(), circuit.depth(), circuit.area()};
}

ErrorRateBounds error_rate_bounds(const Circuit& circuit) {
  if (circuit.depth() == 0 || circuit.gate_count() == 0) {
    throw ValidationError("error-rate bounds need a circuit with at least one layer");
  }
  return {1.0 / static_cast<double>(circuit.area()), 1.0 / static_cast<double>(circuit.gate_count())};
}

SuccessEstimate estimate_success(const Circuit& circuit, const PauliFaultModel& model,
                                 const SuccessCriterion& criterion, std::string_view initial,
                                 SingleFaultTable& table, const ToleranceConfig& config,
                                 std::uint64_t probe_seed) {
  const std::size_t locations = table.locations.size();
  if (static_cast<double>(locations) * model.rate <= 1.0) {
    const int order = exhaustive_order(locations, model.rate, config.exhaustive);
    extend_fault_table(table, circuit, criterion, initial, order, model.weights, config.parallelism);
    return exhaustive_success(table, model);
  }

  std::size_t trials = config.mc_initial_trials;
  while (true) {
    SuccessEstimate est = success_probability_mc(circuit, model, criterion, initial, trials,
                                                 probe_seed, config.parallelism);
    const bool straddles = est.ci_low < criterion.threshold() && est.ci_high >= criterion.threshold();
    if (!straddles || trials >= config.mc_max_trials) return est;
    trials = std::min(trials * 4, config.mc_max_trials);
  }
}

ToleranceResult tolerable_error_rate(const Circuit& circuit, const SuccessCriterion& criterion,
                                     std::string_view initial, const ToleranceConfig& config,
                                     std::string circuit_id) {
  if (!(config.p_min > 0.0 && config.p_min < config.p_max && config.p_max <= 0.75)) {
    throw ValidationError("tolerance search needs 0 < p_min < p_max <= 0.75");
  }
  if (!(config.bracket_ratio > 1.0)) throw ValidationError("bracket ratio must exceed 1");

  SingleFaultTable table =
      single_fault_scores(circuit, config.policy, criterion, initial, config.parallelism);
  if (table.ideal_score < criterion.threshold()) {
    throw ValidationError("circuit fails even without noise (ideal score " +
                          std::to_string(table.ideal_score) + " < threshold " +
                          std::to_string(criterion.threshold()) + ")");
  }

  PauliFaultModel model{0.0, config.weights, config.policy};
  std::uint64_t probe = 0;
  const auto passes = [&](double p) {
    model.rate = p;
    const SuccessEstimate est = estimate_success(circuit, model, criterion, initial, table, config,
                                                 derive_seed(config.seed, probe++));
    return est.value >= criterion.threshold();
  };

  ToleranceResult result;
  result.circuit_id = std::move(circuit_id);
  const CircuitArea a = circuit_area(circuit);
  result.n = a.n;
  result.d = a.d;
  result.area = a.area;
  result.bound_1_over_area = a.area > 0 ? 1.0 / static_cast<double>(a.area) : 0.0;

  if (passes(config.p_max)) {
    result.p_star = config.p_max;
  } else if (!passes(config.p_min)) {
    result.p_star = 0.0;
  } else {
    double lo = config.p_min;
    double hi = config.p_max;
    while (hi / lo > config.bracket_ratio) {
      const double mid = std::sqrt(lo * hi);
      if (passes(mid)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    result.p_star = lo;
  }
  result.probes = static_cast<int>(probe);

  model.rate = config.report_rate;
  result.report_estimate = estimate_success(circuit, model, criterion, initial, table, config,
                                            derive_seed(config.seed, 0xFFFF'FFFFULL));
  result.success_at_report_rate = result.report_estimate.value;
  return result;
}

}  // namespace nisq
