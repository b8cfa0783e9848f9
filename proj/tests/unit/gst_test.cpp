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
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "nisq/common/errors.hpp"
#include "nisq/gst/lgst.hpp"

namespace nisq {
namespace {

using Mat = Eigen::MatrixXcd;

// Pr(0) by explicit Kraus sums on 2x2 matrices.
double oracle_probability(const GateSet& gs, const GateSequence& seq) {
  Mat rho = gs.rho0.matrix();
  for (const auto& name : seq) {
    Mat next = Mat::Zero(2, 2);
    for (const auto& k : gs.gate(name).kraus()) next += k * rho * k.adjoint();
    rho = next;
  }
  return (gs.effect0 * rho).trace().real();
}

std::vector<GateSequence> random_sequences(int count, int max_length, std::uint64_t seed) {
  const std::vector<std::string> names{"h", "s", "x"};
  std::mt19937_64 rng(seed);
  std::vector<GateSequence> out;
  for (int i = 0; i < count; ++i) {
    GateSequence s(rng() % static_cast<std::uint64_t>(max_length + 1));
    for (auto& g : s) g = names[rng() % names.size()];
    out.push_back(std::move(s));
  }
  return out;
}

double max_prediction_error(const GSTEstimate& est, const GateSet& truth, const std::vector<GateSequence>& seqs) {
  double worst = 0.0;
  for (const auto& s : seqs) {
    worst = std::max(worst, std::abs(predict_probability(est, s) - oracle_probability(truth, s)));
  }
  return worst;
}

TEST(Fiducials, SpanTheBlochSphere) {
  const FiducialSet f = default_fiducials();
  ASSERT_EQ(f.preparation.size(), 4u);
  EXPECT_TRUE(f.preparation[0].empty());
  EXPECT_TRUE(f.measurement[0].empty());
  const GateSet ideal = ideal_gate_set();
  // |0>, |+>, |+i>, |->: Pr(0) = 1, 1/2, 1/2, 1/2.
  const std::vector<double> want{1.0, 0.5, 0.5, 0.5};
  for (std::size_t j = 0; j < 4; ++j) {
    EXPECT_NEAR(oracle_probability(ideal, f.preparation[j]), want[j], 1e-12);
  }
  const GSTEstimate est = lgst(collect_gst_data(ideal, f, 0, 1));
  EXPECT_LT(est.gram_condition_number, 50.0);
}

TEST(Lgst, IdealGateSetIsSelfConsistent) {
  const GateSet ideal = ideal_gate_set();
  const GSTData data = collect_gst_data(ideal, default_fiducials(), 0, 1);
  const GSTEstimate est = lgst(data);
  EXPECT_LT(max_prediction_error(est, ideal, random_sequences(100, 5, 3)), 1e-10);
  EXPECT_NEAR(predict_probability(est, {}), 1.0, 1e-12);
  EXPECT_NEAR(predict_probability(est, {"h", "h"}), 1.0, 1e-12);
}

TEST(Lgst, EmptyGateReproducesEmptyData) {
  GateSet gs = ideal_gate_set();
  gs.gates.emplace("i", QuantumChannel::identity(1));
  const GSTData data = collect_gst_data(gs, default_fiducials(), 0, 1);
  EXPECT_LT((data.gates.at("i") - data.empty).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Lgst, DepolarizedGatesExactData) {
  const GateSet truth = depolarized_gate_set(0.05);
  const GSTEstimate est = lgst(collect_gst_data(truth, default_fiducials(), 0, 1));
  EXPECT_LT(max_prediction_error(est, truth, random_sequences(1000, 10, 5)), 1e-8);
  EXPECT_NEAR(oracle_probability(truth, {"h"}), 0.5, 1e-12);
  EXPECT_NEAR(predict_probability(est, {"h"}), 0.5, 1e-10);
}

TEST(Lgst, DepolarizedGatesSampledData) {
  const GateSet truth = depolarized_gate_set(0.05);
  const GSTData data = collect_gst_data(truth, default_fiducials(), 100'000, 9);
  EXPECT_EQ(data.shots, 100'000);
  const GSTData exact = collect_gst_data(truth, default_fiducials(), 0, 9);
  // Binomial spread of a single entry is at most sqrt(0.25 / N).
  EXPECT_LT((data.empty - exact.empty).cwiseAbs().maxCoeff(), 5.0 * std::sqrt(0.25 / 1e5));
  for (const auto& [name, m] : data.gates) {
    EXPECT_LT((m - exact.gates.at(name)).cwiseAbs().maxCoeff(), 5.0 * std::sqrt(0.25 / 1e5)) << name;
  }
  // Gate estimation errors add up along a sequence; ten million shots keep
  // every length-10 prediction within 0.01.
  const GSTEstimate est = lgst(collect_gst_data(truth, default_fiducials(), 10'000'000, 9));
  EXPECT_LT(max_prediction_error(est, truth, random_sequences(1000, 10, 6)), 0.01);
}

TEST(Lgst, GaugeTransformLeavesPredictionsUnchanged) {
  const GSTEstimate est = lgst(collect_gst_data(depolarized_gate_set(0.05), default_fiducials(), 0, 1));
  const auto seqs = random_sequences(50, 8, 11);
  std::mt19937_64 rng(12);
  std::normal_distribution<double> g(0.0, 0.3);
  for (int trial = 0; trial < 10; ++trial) {
    RMatrix b = RMatrix::Identity(4, 4);
    for (Eigen::Index i = 0; i < 4; ++i) {
      for (Eigen::Index j = 0; j < 4; ++j) b(i, j) += g(rng);
    }
    const GSTEstimate moved = gauge_transform(est, b);
    for (const auto& s : seqs) {
      EXPECT_NEAR(predict_probability(moved, s), predict_probability(est, s), 1e-10);
    }
  }
}

TEST(Lgst, PreparationErrorIsAbsorbed) {
  GateSet truth = depolarized_gate_set(0.02);
  Mat rho{{0.98, 0.0}, {0.0, 0.02}};
  truth.rho0 = DensityMatrix(1, rho);
  const GSTEstimate est = lgst(collect_gst_data(truth, default_fiducials(), 0, 1));
  EXPECT_LT(max_prediction_error(est, truth, random_sequences(200, 10, 13)), 1e-8);
  EXPECT_NEAR(predict_probability(est, {}), 0.98, 1e-10);
}

TEST(Lgst, ChoiDiagnostic) {
  RMatrix id = RMatrix::Identity(4, 4);
  EXPECT_NEAR(ptm_min_choi_eigenvalue(id), 0.0, 1e-12);
  RMatrix full = RMatrix::Zero(4, 4);
  full(0, 0) = 1.0;
  EXPECT_NEAR(ptm_min_choi_eigenvalue(full), 0.25, 1e-12);
  RMatrix transpose = RMatrix::Identity(4, 4);
  transpose(2, 2) = -1.0;
  EXPECT_LT(ptm_min_choi_eigenvalue(transpose), -0.1);
}

TEST(Lgst, Validation) {
  const GSTEstimate est = lgst(collect_gst_data(ideal_gate_set(), default_fiducials(), 0, 1));
  EXPECT_THROW(predict_probability(est, {"t"}), ValidationError);
  EXPECT_THROW(ideal_gate_set({"rx"}), ValidationError);
  EXPECT_THROW(ideal_gate_set({"nope"}), ValidationError);
  FiducialSet degenerate = default_fiducials();
  degenerate.measurement = {{}, {}, {"x"}, {"x"}};
  EXPECT_THROW(lgst(collect_gst_data(ideal_gate_set(), degenerate, 0, 1)), NumericalError);
}

}  // namespace
}  // namespace nisq
