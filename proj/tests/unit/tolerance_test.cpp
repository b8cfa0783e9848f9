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


#include <cmath>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "nisq/circuits/generators.hpp"
#include "nisq/common/errors.hpp"
#include "nisq/noise/pauli_model.hpp"
#include "nisq/sim/simulator.hpp"
#include "nisq/tolerance/estimators.hpp"
#include "nisq/tolerance/instance_criterion.hpp"
#include "nisq/tolerance/memory.hpp"
#include "nisq/tolerance/tolerance.hpp"

namespace nisq {
namespace {

Circuit x_circuit() {
  Circuit c(1);
  c.add_layer({Operation(Gate::x(), 0)});
  return c;
}

Circuit bell_example() {
  Circuit c(2);
  c.add_layer({Operation(Gate::h(), 0), Operation(Gate::x(), 1)});
  c.add_layer({Operation(Gate::cx(), 0, 1)});
  return c;
}

// Sum over all 4^L fault patterns of probability times score.
double brute_force_success(const Circuit& c, const PauliFaultModel& model, const SuccessCriterion& crit,
                           const std::string& initial) {
  const auto locs = enumerate_locations(c, model);
  std::size_t patterns = 1;
  for (std::size_t k = 0; k < locs.size(); ++k) patterns *= 4;
  double total = 0.0;
  for (std::size_t code = 0; code < patterns; ++code) {
    FaultSet faults;
    double weight = 1.0;
    std::size_t rest = code;
    for (const auto& loc : locs) {
      const std::size_t digit = rest % 4;
      rest /= 4;
      if (digit == 3) {
        weight *= 1.0 - model.rate;
      } else {
        weight *= model.rate * model.weights[digit];
        faults.push_back({loc, static_cast<Pauli>(digit)});
      }
    }
    total += weight * crit.score(run_circuit(c, initial, &faults));
  }
  return total;
}

TEST(Criterion, Scores) {
  const StateVector bv = run_circuit(gen_bv("101"), "0000");
  const auto correct = SuccessCriterion::correct_outcome("1011");
  EXPECT_NEAR(correct.score(bv), 1.0, 1e-12);
  EXPECT_TRUE(evaluate_success(bv, correct).pass);

  const OutcomeDistribution uniform(2, {0.25, 0.25, 0.25, 0.25});
  EXPECT_NEAR(SuccessCriterion::cross_entropy(uniform, 0.0).score(uniform), 0.0, 1e-12);
  EXPECT_NEAR(SuccessCriterion::total_variation(uniform).score(uniform), 1.0, 1e-12);

  const OutcomeDistribution skew(2, {0.4, 0.3, 0.2, 0.1});
  const auto heavy = SuccessCriterion::heavy_output(skew);
  EXPECT_NEAR(heavy.score(skew), 0.7, 1e-12);
  EXPECT_NEAR(SuccessCriterion::total_variation(skew).score(uniform), 1.0 - 0.2, 1e-12);
  EXPECT_NEAR(SuccessCriterion::acceptable_set({"00", "11"}).score(skew), 0.5, 1e-12);
  EXPECT_NEAR(SuccessCriterion::within_hamming("00", 1).score(skew), 0.9, 1e-12);
  EXPECT_THROW(SuccessCriterion::fidelity(bv).score(skew), ValidationError);
  EXPECT_THROW(SuccessCriterion::correct_outcome("10", 1.5), ValidationError);
  EXPECT_THROW(correct.score(skew), ValidationError);
}

TEST(Criterion, NoiseLowersPassRateScores) {
  const BenchmarkInstance inst = make_instance(Family::QFT, 3, 4);
  const StateVector ideal = run_circuit(inst.circuit, inst.initial);
  const OutcomeDistribution dist = measure_distribution(ideal);
  std::size_t top = 0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (dist[i] > dist[top]) top = i;
  }
  const std::vector<SuccessCriterion> crits{
      SuccessCriterion::correct_outcome(index_to_bits(top, 3), 0.0),
      SuccessCriterion::acceptable_set({index_to_bits(top, 3)}, 0.0),
      SuccessCriterion::fidelity(ideal, 0.0),
      SuccessCriterion::total_variation(dist, 0.0),
  };
  for (const auto& crit : crits) {
    const auto e = success_probability_mc(inst.circuit, PauliFaultModel::depolarizing(0.05), crit,
                                          inst.initial, 2000, 3);
    EXPECT_LE(e.value, crit.score(ideal) + 1e-12) << criterion_name(crit.kind());
  }
}

TEST(Exhaustive, SingleXGateClosedForm) {
  const auto crit = SuccessCriterion::correct_outcome("1");
  for (double p : {0.0, 0.0015, 0.3, 0.75}) {
    const auto e = success_probability_exhaustive(x_circuit(), PauliFaultModel::depolarizing(p), crit, "0");
    EXPECT_NEAR(e.value, 1.0 - 2.0 * p / 3.0, 1e-12) << p;
  }
  const auto e = success_probability_exhaustive(x_circuit(), PauliFaultModel::depolarizing(0.0015), crit, "0");
  EXPECT_NEAR(e.value, 0.9990, 5e-5);
}

TEST(Exhaustive, MatchesBruteForceEnumeration) {
  const Circuit c = bell_example();
  const StateVector ideal = run_circuit(c, "01");
  const std::vector<SuccessCriterion> crits{
      SuccessCriterion::correct_outcome("00"),
      SuccessCriterion::fidelity(ideal),
      SuccessCriterion::total_variation(measure_distribution(ideal)),
  };
  ExhaustiveOptions all;
  all.tail_tolerance = 0.0;
  all.max_order = 4;
  for (const auto& crit : crits) {
    for (const PauliFaultModel& model : {PauliFaultModel::depolarizing(0.2), PauliFaultModel::dephasing(0.1),
                                         PauliFaultModel{0.25, {0.6, 0.1, 0.3}}}) {
      const auto e = success_probability_exhaustive(c, model, crit, "01", {}, all);
      EXPECT_EQ(e.order, 4);
      EXPECT_NEAR(e.truncation, 0.0, 1e-15);
      EXPECT_NEAR(e.value, brute_force_success(c, model, crit, "01"), 1e-12) << criterion_name(crit.kind());
    }
  }
}

TEST(Exhaustive, FirstOrderFormula) {
  const Circuit c = bell_example();
  const auto crit = SuccessCriterion::correct_outcome("00");
  const auto table = single_fault_scores(c, LocationPolicy::AllQubitsEveryLayer, crit, "01");
  ASSERT_EQ(table.locations.size(), 4u);
  const double p = 0.01;
  double single = 0.0;
  for (const auto& s : table.scores) single += (s[0] + s[1] + s[2]) / 3.0;
  const double want = std::pow(1.0 - p, 4) * table.ideal_score + p * std::pow(1.0 - p, 3) * single;
  EXPECT_NEAR(first_order_success(table, PauliFaultModel::depolarizing(p)).value, want, 1e-15);
  EXPECT_THROW(first_order_success(table, PauliFaultModel::depolarizing(0.3)), ValidationError);
  EXPECT_NEAR(first_order_success(table, PauliFaultModel::depolarizing(0.0)).value, table.ideal_score, 0.0);
}

TEST(Exhaustive, OrderSelection) {
  EXPECT_NEAR(truncated_fault_mass(10, 0.0, 1), 0.0, 1e-15);
  // P(N > 1) for Binomial(2, p) is p^2.
  EXPECT_NEAR(truncated_fault_mass(2, 0.1, 1), 0.01, 1e-15);
  EXPECT_DOUBLE_EQ(fault_configurations(10, 2), 45.0 * 9.0);
  ExhaustiveOptions opts;
  EXPECT_EQ(exhaustive_order(100, 1e-5, opts), 1);
  EXPECT_GE(exhaustive_order(100, 3e-3, opts), 2);
  opts.max_configurations = 10.0;
  EXPECT_EQ(exhaustive_order(100, 3e-3, opts), 1);
}

TEST(Exhaustive, AgreesWithMonteCarloOnBv) {
  const Circuit c = gen_bv("11");
  const auto crit = SuccessCriterion::correct_outcome("111");
  const auto model = PauliFaultModel::depolarizing(0.001);
  const auto ex = success_probability_exhaustive(c, model, crit, "000");
  const auto mc = success_probability_mc(c, model, crit, "000", 1'000'000, 77);
  const auto [lo, hi] = mc.interval(kZ95);
  EXPECT_GE(ex.value, lo);
  EXPECT_LE(ex.value, hi);
}

TEST(MonteCarlo, SingleXGate) {
  const auto crit = SuccessCriterion::correct_outcome("1");
  const auto zero = success_probability_mc(x_circuit(), PauliFaultModel::depolarizing(0.0), crit, "0", 1000, 1);
  EXPECT_EQ(zero.value, 1.0);
  EXPECT_EQ(zero.ci_high - zero.ci_low, 0.0);
  const auto e = success_probability_mc(x_circuit(), PauliFaultModel::depolarizing(0.3), crit, "0", 100'000, 5);
  EXPECT_NEAR(e.value, 0.80, 0.004);
  EXPECT_TRUE(e.binary);
  EXPECT_LE(e.ci_low, 0.80);
  EXPECT_GE(e.ci_high, 0.80);
}

TEST(MonteCarlo, ThreadCountDoesNotChangeResult) {
  const BenchmarkInstance inst = make_instance(Family::QFT, 4, 9);
  const auto crit = criterion_for_instance(inst, std::nullopt, 0.66);
  const auto model = PauliFaultModel::depolarizing(0.02);
  const auto a = success_probability_mc(inst.circuit, model, crit, inst.initial, 5000, 12, {1});
  const auto b = success_probability_mc(inst.circuit, model, crit, inst.initial, 5000, 12, {8});
  const auto c = success_probability_mc(inst.circuit, model, crit, inst.initial, 5000, 12, {3});
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.value, c.value);
  EXPECT_EQ(a.std_error, b.std_error);
  const auto t1 = single_fault_scores(inst.circuit, LocationPolicy::AllQubitsEveryLayer, crit, inst.initial, {1});
  const auto t8 = single_fault_scores(inst.circuit, LocationPolicy::AllQubitsEveryLayer, crit, inst.initial, {8});
  EXPECT_EQ(t1.scores, t8.scores);
}

TEST(Tolerance, SingleXGateThreshold) {
  const auto crit = SuccessCriterion::correct_outcome("1", 0.66);
  ToleranceConfig cfg;
  const ToleranceResult r = tolerable_error_rate(x_circuit(), crit, "0", cfg, "x");
  EXPECT_NEAR(r.p_star, 0.51, 0.05 * 0.51);
  EXPECT_LE(r.p_star, 0.51);
  EXPECT_EQ(r.area, 1);

  const ToleranceResult strict = tolerable_error_rate(x_circuit(), crit.with_threshold(1.0), "0", cfg);
  EXPECT_EQ(strict.p_star, 0.0);
}

TEST(Tolerance, BvBelowInverseArea) {
  for (int n = 2; n <= 5; ++n) {
    const BenchmarkInstance inst = make_instance(Family::BV, n, 100 + n);
    const auto crit = criterion_for_instance(inst, std::nullopt, 0.66);
    ToleranceConfig cfg;
    cfg.seed = 1;
    const ToleranceResult r = tolerable_error_rate(inst.circuit, crit, inst.initial, cfg, inst.id);
    EXPECT_GT(r.p_star, 0.0);
    EXPECT_LE(r.p_star, r.bound_1_over_area) << inst.id;
  }
}

TEST(Tolerance, RejectsFailingIdealAndBadConfig) {
  const auto crit = SuccessCriterion::correct_outcome("0");
  EXPECT_THROW(tolerable_error_rate(x_circuit(), crit, "0", {}), ValidationError);
  ToleranceConfig bad;
  bad.p_max = 0.9;
  EXPECT_THROW(tolerable_error_rate(x_circuit(), SuccessCriterion::correct_outcome("1"), "0", bad),
               ValidationError);
}

TEST(Tolerance, AreaAndBounds) {
  const CircuitArea a = circuit_area(bell_example());
  EXPECT_EQ(a.n, 2);
  EXPECT_EQ(a.d, 2);
  EXPECT_EQ(a.area, 4);
  const ErrorRateBounds b = error_rate_bounds(bell_example());
  EXPECT_DOUBLE_EQ(b.area_bound, 0.25);
  EXPECT_DOUBLE_EQ(b.gate_bound, 1.0 / 3.0);
  const ErrorRateBounds one = error_rate_bounds(x_circuit());
  EXPECT_DOUBLE_EQ(one.area_bound, 1.0);
  EXPECT_DOUBLE_EQ(one.gate_bound, 1.0);
  EXPECT_THROW(error_rate_bounds(Circuit(2)), ValidationError);
  EXPECT_EQ(circuit_area(Circuit(3)).area, 0);
}

TEST(Memory, Estimates) {
  const double sv = memory_estimate(53, Representation::StateVector, 8) / kBytesPerPetabyte;
  const double dm = memory_estimate(53, Representation::DensityMatrix, 8) / kBytesPerPetabyte;
  EXPECT_NEAR(sv, 72.1, 0.05);
  EXPECT_NEAR(dm / 1e17, 6.49, 0.005);
  EXPECT_EQ(memory_estimate(1, Representation::StateVector, 16), 32.0);
  EXPECT_THROW(memory_estimate(53, Representation::StateVector, 4), ValidationError);
}

}  // namespace
}  // namespace nisq
