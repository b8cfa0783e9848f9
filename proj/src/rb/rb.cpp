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

#include "nisq/rb/rb.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "nisq/common/errors.hpp"
#include "nisq/common/random.hpp"
#include "nisq/noise/density_matrix.hpp"
#include "nisq/sim/state_vector.hpp"

namespace nisq {
namespace {

QuantumChannel pauli_model_channel(const PauliFaultModel& model, int n_qubits) {
  const QuantumChannel local = pauli_error_channel(model.rate, model.weights);
  QuantumChannel total = QuantumChannel::identity(n_qubits);
  for (int q = 0; q < n_qubits; ++q) {
    total = compose(embed_channel(local, std::span<const int>(&q, 1), n_qubits), total);
  }
  return total;
}

void apply_kraus(CMatrix& rho, const std::vector<CMatrix>& kraus) {
  CMatrix out = CMatrix::Zero(rho.rows(), rho.cols());
  for (const auto& a : kraus) out.noalias() += a * rho * a.adjoint();
  rho = std::move(out);
}

// Probability that every measured bit reads 0 after independent readout flips.
double observed_ground_probability(const std::vector<double>& diag, int n, double flip) {
  double p = 0.0;
  for (std::size_t x = 0; x < diag.size(); ++x) {
    const int ones = std::popcount(x);
    p += diag[x] * std::pow(flip, ones) * std::pow(1.0 - flip, n - ones);
  }
  return p;
}

class SequenceSimulator {
 public:
  SequenceSimulator(const RBConfig& config, const CliffordGroup& group,
                    const std::optional<InterleavedTarget>& target)
      : config_(config), group_(group), target_(target), n_(config.n_qubits) {
    if (config.channel) {
      noise_ = config.channel->kraus();
    } else if (config.pauli && config.shots == 0) {
      noise_ = pauli_model_channel(*config.pauli, n_).kraus();
    }
    if (target && target->noise) target_noise_ = target->noise->kraus();
    for (const auto& e : group.elements()) {
      std::vector<CMatrix> ops;
      for (const auto& op : e.decomposition) ops.push_back(embed_operator(op.gate.matrix(), op.qubits(), n_));
      gate_ops_.push_back(std::move(ops));
    }
  }

  double survival(const RBSequence& seq, Rng& rng) const {
    if (config_.pauli && !config_.channel && config_.shots > 0) return trajectory_survival(seq, rng);
    const Eigen::Index dim = Eigen::Index{1} << n_;
    CMatrix rho = CMatrix::Zero(dim, dim);
    rho(0, 0) = 1.0;
    for (std::size_t pos = 0; pos < seq.cliffords.size(); ++pos) {
      const std::size_t c = seq.cliffords[pos];
      if (is_target_slot(pos, seq.cliffords.size())) {
        rho = group_[c].unitary * rho * group_[c].unitary.adjoint();
        if (!target_noise_.empty()) apply_kraus(rho, target_noise_);
        continue;
      }
      if (config_.insertion == NoiseInsertion::PerClifford) {
        rho = group_[c].unitary * rho * group_[c].unitary.adjoint();
        if (!noise_.empty()) apply_kraus(rho, noise_);
        continue;
      }
      const auto& decomposition = group_[c].decomposition;
      for (std::size_t g = 0; g < decomposition.size(); ++g) {
        const CMatrix& u = gate_ops_[c][g];
        rho = u * rho * u.adjoint();
        if (!noise_.empty() && inserts_after(decomposition[g])) apply_kraus(rho, noise_);
      }
    }
    std::vector<double> diag(static_cast<std::size_t>(dim));
    for (Eigen::Index x = 0; x < dim; ++x) diag[static_cast<std::size_t>(x)] = rho(x, x).real();
    const double p0 = std::clamp(observed_ground_probability(diag, n_, config_.readout_flip), 0.0, 1.0);
    if (config_.shots == 0) return p0;
    int hits = 0;
    for (int s = 0; s < config_.shots; ++s) hits += uniform01(rng) < p0 ? 1 : 0;
    return static_cast<double>(hits) / config_.shots;
  }

 private:
  bool is_target_slot(std::size_t pos, std::size_t total) const {
    return target_.has_value() && pos + 1 < total && pos % 2 == 1;
  }

  bool inserts_after(const Operation& op) const {
    return config_.insertion == NoiseInsertion::PerElementaryGate || op.gate.kind() == GateKind::CX;
  }

  void pauli_faults(StateVector& s, Rng& rng) const {
    const PauliFaultModel& m = *config_.pauli;
    for (int q = 0; q < n_; ++q) {
      const double u = uniform01(rng);
      if (u >= m.rate) continue;
      const double w = u / m.rate;
      Pauli p = w < m.weights[0] ? Pauli::X : (w < m.weights[0] + m.weights[1] ? Pauli::Y : Pauli::Z);
      s.apply(pauli_gate(p), std::span<const int>(&q, 1));
    }
  }

  double trajectory_survival(const RBSequence& seq, Rng& rng) const {
    int hits = 0;
    for (int shot = 0; shot < config_.shots; ++shot) {
      StateVector s(n_);
      for (std::size_t pos = 0; pos < seq.cliffords.size(); ++pos) {
        const auto& decomposition = group_[seq.cliffords[pos]].decomposition;
        const bool target = is_target_slot(pos, seq.cliffords.size());
        for (const auto& op : decomposition) {
          s.apply(op);
          if (!target && config_.insertion != NoiseInsertion::PerClifford && inserts_after(op)) {
            pauli_faults(s, rng);
          }
        }
        if (!target && config_.insertion == NoiseInsertion::PerClifford) pauli_faults(s, rng);
      }
      auto [outcome, collapsed] = sample_measurement(s, rng);
      for (int q = 0; q < n_; ++q) {
        if (uniform01(rng) < config_.readout_flip) outcome ^= std::uint64_t{1} << q;
      }
      hits += outcome == 0 ? 1 : 0;
    }
    return static_cast<double>(hits) / config_.shots;
  }

  const RBConfig& config_;
  const CliffordGroup& group_;
  const std::optional<InterleavedTarget>& target_;
  int n_;
  std::vector<CMatrix> noise_;
  std::vector<CMatrix> target_noise_;
  std::vector<std::vector<CMatrix>> gate_ops_;
};

}  // namespace

void RBConfig::validate() const {
  if (n_qubits < 1 || n_qubits > 2) throw ValidationError("RB supports 1 or 2 qubits");
  if (lengths.empty()) throw ValidationError("RB needs at least one sequence length");
  for (int m : lengths) {
    if (m < 1) throw ValidationError("RB sequence lengths must be >= 1");
  }
  if (sequences_per_length < 1) throw ValidationError("RB needs at least one sequence per length");
  if (shots < 0) throw ValidationError("shots must be non-negative");
  if (channel && pauli) throw ValidationError("RB noise: give either a channel or a Pauli model, not both");
  if (channel && channel->n_qubits() != n_qubits) {
    throw ValidationError("RB noise channel acts on " + std::to_string(channel->n_qubits()) +
                          " qubits but the experiment uses " + std::to_string(n_qubits));
  }
  if (pauli) pauli->validate();
  if (!(readout_flip >= 0.0 && readout_flip <= 1.0)) throw ValidationError("readout flip must be in [0, 1]");
}

RBResult run_rb(const RBConfig& config, const CliffordGroup& group,
                const std::optional<InterleavedTarget>& interleaved) {
  config.validate();
  if (group.n_qubits() != config.n_qubits) throw ValidationError("Clifford group size does not match RB qubits");
  if (interleaved) {
    if (interleaved->element >= group.size()) throw ValidationError("interleaved element not in group");
    if (interleaved->noise && interleaved->noise->n_qubits() != config.n_qubits) {
      throw ValidationError("interleaved target noise dimension mismatch");
    }
  }
  const SequenceSimulator sim(config, group, interleaved);
  const std::size_t per_length = static_cast<std::size_t>(config.sequences_per_length);
  const std::size_t total = config.lengths.size() * per_length;
  std::vector<double> survival(total);
  std::vector<double> cnots(total);
  std::vector<double> cliffords(total);

  parallel_for(total, config.parallelism, [&](std::size_t begin, std::size_t end) {
    for (std::size_t slot = begin; slot < end; ++slot) {
      const std::size_t li = slot / per_length;
      const std::size_t k = slot % per_length;
      Rng rng = make_rng(config.seed, (static_cast<std::uint64_t>(li) << 32) | k);
      const RBSequence seq = generate_rb_sequence(config.lengths[li], group, rng,
                                                  interleaved ? std::optional(interleaved->element)
                                                              : std::nullopt);
      survival[slot] = sim.survival(seq, rng);
      double count = 0.0;
      for (std::size_t c : seq.cliffords) count += group[c].cnot_count;
      cnots[slot] = count;
      cliffords[slot] = static_cast<double>(seq.cliffords.size());
    }
  });

  RBResult result;
  result.n_qubits = config.n_qubits;
  for (std::size_t li = 0; li < config.lengths.size(); ++li) {
    RBPoint point;
    point.m = config.lengths[li];
    point.survivals.assign(survival.begin() + static_cast<std::ptrdiff_t>(li * per_length),
                           survival.begin() + static_cast<std::ptrdiff_t>((li + 1) * per_length));
    const double n = static_cast<double>(per_length);
    point.mean_survival = pairwise_sum(point.survivals) / n;
    double ss = 0.0;
    for (double v : point.survivals) ss += (v - point.mean_survival) * (v - point.mean_survival);
    point.stderr_survival = per_length > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0;
    result.points.push_back(std::move(point));
  }
  result.mean_cnots_per_clifford = pairwise_sum(cnots) / pairwise_sum(cliffords);
  return result;
}

DecayFit fit_rb(const RBResult& result) {
  std::vector<double> m, y;
  for (const auto& p : result.points) {
    m.push_back(p.m);
    y.push_back(p.mean_survival);
  }
  return fit_rb(m, y, result.n_qubits);
}

InterleavedRBResult run_interleaved_rb(const RBConfig& config, const CliffordGroup& group,
                                       const InterleavedTarget& target) {
  InterleavedRBResult out;
  out.reference = run_rb(config, group);
  out.reference.fit = fit_rb(out.reference);
  RBConfig shifted = config;
  shifted.seed = derive_seed(config.seed, 0x1A7E'41EAULL);
  out.interleaved = run_rb(shifted, group, target);
  out.interleaved.fit = fit_rb(out.interleaved);
  const double ref_decay = 1.0 - out.reference.fit->p;
  if (ref_decay <= 0.0) throw NumericalError("reference RB decay is zero; gate error undefined");
  out.decay_ratio = (1.0 - out.interleaved.fit->p) / ref_decay;
  out.gate_error = (1.0 - std::ldexp(1.0, -config.n_qubits)) * (1.0 - out.decay_ratio);
  return out;
}

}  // namespace nisq
