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
#include <vector>

#include <gtest/gtest.h>

#include "nisq/common/errors.hpp"
#include "nisq/noise/channel.hpp"
#include "nisq/rb/clifford.hpp"
#include "nisq/rb/fit.hpp"
#include "nisq/rb/rb.hpp"
#include "nisq/sim/simulator.hpp"
#include "oracles.hpp"

namespace nisq {
namespace {

const CliffordGroup& group(int n) {
  static const CliffordGroup one = CliffordGroup::build(1);
  static const CliffordGroup two = CliffordGroup::build(2);
  return n == 1 ? one : two;
}

TEST(CliffordGroup, SizeFormula) {
  EXPECT_EQ(clifford_group_size(1), 24);
  EXPECT_EQ(clifford_group_size(2), 11520);
  EXPECT_EQ(clifford_group_size(3), 92897280);
  EXPECT_EQ(group(1).size(), 24u);
  EXPECT_EQ(group(2).size(), 11520u);
  EXPECT_TRUE(group(1)[0].decomposition.empty());
}

TEST(CliffordGroup, ElementsAreDistinctCliffordsWithFaithfulDecompositions) {
  for (int n = 1; n <= 2; ++n) {
    const CliffordGroup& g = group(n);
    for (std::size_t i = 0; i < g.size(); i += (n == 1 ? 1 : 37)) {
      const CliffordElement& e = g[i];
      EXPECT_TRUE(is_clifford(e.unitary));
      Circuit c(n);
      for (const auto& op : e.decomposition) c.add_layer({op});
      EXPECT_LT(testing::distance_up_to_phase(testing::circuit_unitary(c), e.unitary), 1e-10);
      EXPECT_EQ(g.find(e.unitary), i);
      int cnots = 0;
      for (const auto& op : e.decomposition) cnots += op.gate.kind() == GateKind::CX;
      EXPECT_EQ(cnots, e.cnot_count);
    }
  }
  EXPECT_FALSE(is_clifford(Gate::t().matrix()));
}

TEST(CliffordGroup, ClosureAndInverses) {
  for (int n = 1; n <= 2; ++n) {
    const CliffordGroup& g = group(n);
    for (std::size_t a = 0; a < g.size(); a += (n == 1 ? 1 : 101)) {
      const std::size_t inv = g.inverse(a);
      EXPECT_EQ(g.compose(inv, a), 0u);
      EXPECT_EQ(g.compose(a, inv), 0u);
      for (std::size_t b = 0; b < g.size(); b += (n == 1 ? 5 : 997)) {
        const auto found = g.find(g[b].unitary * g[a].unitary);
        ASSERT_TRUE(found.has_value());
        EXPECT_EQ(*found, g.compose(b, a));
      }
    }
  }
}

TEST(CliffordGroup, MeanCnotCount) {
  EXPECT_DOUBLE_EQ(group(1).mean_cnot_count(), 0.0);
  const double mean = group(2).mean_cnot_count();
  EXPECT_DOUBLE_EQ(mean, 1.5);
  EXPECT_EQ(CliffordGroup::build(2).mean_cnot_count(), mean);
}

TEST(CliffordGroup, TwirlOfDephasingIsDepolarizing) {
  const QuantumChannel deph = pauli_error_channel(0.1, {0.0, 0.0, 1.0});
  const RMatrix r = channel_to_ptm(deph);
  RMatrix twirl = RMatrix::Zero(4, 4);
  for (const auto& e : group(1).elements()) {
    const RMatrix u = channel_to_ptm(QuantumChannel::unitary(e.unitary));
    twirl += u.transpose() * r * u;
  }
  twirl /= static_cast<double>(group(1).size());
  const double f = (twirl(1, 1) + twirl(2, 2) + twirl(3, 3)) / 3.0;
  RMatrix want = RMatrix::Identity(4, 4) * f;
  want(0, 0) = 1.0;
  EXPECT_LT((twirl - want).cwiseAbs().maxCoeff(), 1e-10);
  // Dephasing keeps Z and scales X, Y by 1 - 2q, so the average is 1 - 4q/3.
  EXPECT_NEAR(f, 1.0 - 4.0 * 0.1 / 3.0, 1e-12);
}

TEST(CliffordGroup, CanonicalPhase) {
  const CMatrix u = Gate::h().matrix();
  const CMatrix v = std::polar(1.0, 1.3) * u;
  EXPECT_LT((canonicalize_phase(u) - canonicalize_phase(v)).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_GT(canonicalize_phase(v)(0, 0).real(), 0.0);
}

TEST(RBSequence, SelfInverting) {
  for (int n = 1; n <= 2; ++n) {
    Rng rng(3);
    for (int m : {1, 4, 20}) {
      const RBSequence s = generate_rb_sequence(m, group(n), rng);
      EXPECT_EQ(s.cliffords.size(), static_cast<std::size_t>(m + 1));
      const StateVector out = run_circuit(s.circuit, std::string(static_cast<std::size_t>(n), '0'));
      EXPECT_NEAR(std::norm(out[0]), 1.0, 1e-9);
    }
    const RBSequence inter = generate_rb_sequence(3, group(n), rng, 1);
    EXPECT_EQ(inter.cliffords.size(), 7u);
    EXPECT_EQ(inter.cliffords[1], 1u);
    EXPECT_NEAR(std::norm(run_circuit(inter.circuit, std::string(static_cast<std::size_t>(n), '0'))[0]), 1.0,
                1e-9);
  }
}

TEST(Fit, RecoversSyntheticDecay) {
  const std::vector<double> m{1, 2, 3, 5, 8, 13, 21, 34, 55, 89};
  std::vector<double> y;
  for (double x : m) y.push_back(0.74 * std::pow(0.98, x) + 0.25);
  const DecayFit f = fit_rb(m, y, 1);
  EXPECT_NEAR(f.A0, 0.74, 1e-6);
  EXPECT_NEAR(f.B0, 0.25, 1e-6);
  EXPECT_NEAR(f.p, 0.02, 1e-6);
  EXPECT_NEAR(f.r, 0.01, 1e-6);

  const std::vector<double> flat(m.size(), 1.0);
  const DecayFit c = fit_rb(m, flat, 1);
  EXPECT_EQ(c.p, 0.0);
  EXPECT_EQ(c.r, 0.0);
  EXPECT_THROW(fit_rb(std::vector<double>{1, 2}, std::vector<double>{0.9, 0.8}, 1), ValidationError);
}

TEST(Fit, PerCnotError) {
  EXPECT_NEAR(per_cnot_error(0.01966, 1.485), 0.01966 / 1.485, 1e-15);
  EXPECT_NEAR(per_cnot_error(0.01966, 1.485), 0.0132, 5e-5);
  EXPECT_EQ(per_cnot_error(0.0, 1.5), 0.0);
}

TEST(RandomizedBenchmarking, NoiselessSurvivalIsOne) {
  RBConfig cfg;
  cfg.n_qubits = 2;
  cfg.lengths = {1, 3, 6};
  cfg.sequences_per_length = 3;
  const RBResult r = run_rb(cfg, group(2));
  for (const auto& pt : r.points) EXPECT_NEAR(pt.mean_survival, 1.0, 1e-9);
}

TEST(RandomizedBenchmarking, ExactDepolarizingDecay) {
  const double p = 0.02;
  RBConfig cfg;
  cfg.channel = depolarizing_channel(1, p);
  cfg.seed = 4;
  const RBResult r = run_rb(cfg, group(1));
  // Noise also follows the recovery element, hence the extra factor.
  for (const auto& pt : r.points) {
    EXPECT_NEAR(pt.mean_survival, 0.5 * std::pow(1.0 - p, pt.m + 1) + 0.5, 1e-9);
  }
  const DecayFit fit = fit_rb(r);
  EXPECT_NEAR(fit.p, p, 1e-6);
  EXPECT_NEAR(fit.r, p / 2.0, 1e-6);
}

TEST(RandomizedBenchmarking, TwoQubitRecovery) {
  RBConfig cfg;
  cfg.n_qubits = 2;
  cfg.channel = depolarizing_channel(2, 0.02);
  cfg.lengths = {1, 2, 5, 10, 20, 50, 100};
  cfg.sequences_per_length = 30;
  cfg.seed = 1;
  const RBResult r = run_rb(cfg, group(2));
  EXPECT_NEAR(fit_rb(r).r, 0.015, 0.05 * 0.015);
  EXPECT_GT(r.mean_cnots_per_clifford, 1.0);
}

TEST(RandomizedBenchmarking, PauliTrajectoriesAgreeWithExact) {
  RBConfig exact;
  exact.pauli = PauliFaultModel::depolarizing(0.03);
  exact.lengths = {1, 5, 20};
  exact.sequences_per_length = 4;
  exact.seed = 8;
  RBConfig sampled = exact;
  sampled.shots = 20000;
  const RBResult a = run_rb(exact, group(1));
  const RBResult b = run_rb(sampled, group(1));
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    for (std::size_t k = 0; k < a.points[i].survivals.size(); ++k) {
      const double s = a.points[i].survivals[k];
      const double sigma = std::sqrt(s * (1.0 - s) / sampled.shots) + 1e-9;
      EXPECT_NEAR(b.points[i].survivals[k], s, 5 * sigma);
    }
  }
}

TEST(RandomizedBenchmarking, ThreadCountDoesNotChangeResult) {
  RBConfig cfg;
  cfg.channel = depolarizing_channel(1, 0.05);
  cfg.shots = 500;
  cfg.seed = 21;
  RBConfig wide = cfg;
  wide.parallelism.threads = 8;
  const RBResult a = run_rb(cfg, group(1));
  const RBResult b = run_rb(wide, group(1));
  for (std::size_t i = 0; i < a.points.size(); ++i) EXPECT_EQ(a.points[i].survivals, b.points[i].survivals);
}

TEST(InterleavedRB, PerfectTargetHasNoError) {
  RBConfig cfg;
  cfg.channel = depolarizing_channel(1, 0.02);
  cfg.seed = 2;
  const auto r = run_interleaved_rb(cfg, group(1), {3, std::nullopt});
  EXPECT_NEAR(r.gate_error, 0.0, 1e-6);
}

TEST(InterleavedRB, DepolarizedTarget) {
  RBConfig cfg;
  cfg.channel = depolarizing_channel(1, 0.02);
  cfg.seed = 2;
  const auto r = run_interleaved_rb(cfg, group(1), {5, depolarizing_channel(1, 0.01)});
  EXPECT_NEAR(r.gate_error, 0.005, 0.1 * 0.005);
}

TEST(RandomizedBenchmarking, Validation) {
  RBConfig cfg;
  cfg.n_qubits = 3;
  EXPECT_THROW(cfg.validate(), ValidationError);
  cfg.n_qubits = 1;
  cfg.lengths = {};
  EXPECT_THROW(cfg.validate(), ValidationError);
  cfg.lengths = {1, 2};
  cfg.channel = depolarizing_channel(2, 0.1);
  EXPECT_THROW(cfg.validate(), ValidationError);
  RBConfig two;
  two.n_qubits = 2;
  EXPECT_THROW(run_rb(two, group(1)), ValidationError);
}

}  // namespace
}  // namespace nisq
