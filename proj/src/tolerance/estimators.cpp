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

#include "nisq/tolerance/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/special_functions/binomial.hpp>

#include "nisq/common/errors.hpp"
#include "nisq/common/random.hpp"
#include "nisq/sim/simulator.hpp"

namespace nisq {
namespace {

// Ideal states after every layer, so a faulty run can resume from the layer
// of its first fault. Skipped when it would exceed the memory budget.
class PrefixCache {
 public:
  PrefixCache(const Circuit& circuit, const StateVector& initial) : initial_(initial) {
    constexpr std::size_t kBudgetBytes = std::size_t{256} << 20;
    const std::size_t bytes =
        initial.dimension() * sizeof(Complex) * static_cast<std::size_t>(circuit.depth());
    if (bytes > kBudgetBytes) return;
    StateVector s = initial;
    for (int l = 0; l < circuit.depth(); ++l) {
      run_layers(s, circuit, l, l + 1);
      after_.push_back(s);
    }
  }

  bool enabled() const noexcept { return !after_.empty(); }
  // State after layers [0, layer] have run.
  const StateVector& after(int layer) const { return after_[static_cast<std::size_t>(layer)]; }
  const StateVector& initial() const noexcept { return initial_; }

 private:
  StateVector initial_;
  std::vector<StateVector> after_;
};

// Gate inverse up to a global phase (T^dagger is Rz(-pi/4) times a phase).
Gate inverse_up_to_phase(const Gate& g) {
  switch (g.kind()) {
    case GateKind::S: return Gate::sdg();
    case GateKind::Sdg: return Gate::s();
    case GateKind::T: return Gate::rz(-std::numbers::pi / 4.0);
    case GateKind::Rx: return Gate::rx(-g.angle());
    case GateKind::Ry: return Gate::ry(-g.angle());
    case GateKind::Rz: return Gate::rz(-g.angle());
    default: return g;
  }
}

// Scores faulty runs. For fidelity and single-outcome criteria the score is
// |<phi_l|psi>|^2, where phi_l is the target state propagated backwards to
// just after layer l, so a faulty run only needs simulating up to its last
// fault. Other criteria simulate to the end.
class FaultScorer {
 public:
  FaultScorer(const Circuit& circuit, const SuccessCriterion& criterion, std::string_view initial)
      : circuit_(circuit), criterion_(criterion), cache_(circuit, StateVector::basis(initial)) {
    StateVector ideal = cache_.initial();
    run_layers(ideal, circuit, 0, circuit.depth());
    ideal_score_ = criterion.score(ideal);

    std::optional<StateVector> target;
    if (criterion.kind() == CriterionKind::Fidelity) {
      target = criterion.target_state();
    } else if (criterion.kind() == CriterionKind::CorrectOutcome && criterion.outcomes().size() == 1) {
      target = StateVector::basis(circuit.n_qubits(), criterion.outcomes().front());
    }
    constexpr std::size_t kBudgetBytes = std::size_t{256} << 20;
    const std::size_t bytes = (std::size_t{1} << circuit.n_qubits()) * sizeof(Complex) *
                              static_cast<std::size_t>(circuit.depth() + 1);
    if (!target || !cache_.enabled() || bytes > kBudgetBytes) return;
    // targets_[l + 1] is the target seen just after layer l.
    targets_.resize(static_cast<std::size_t>(circuit.depth() + 1), *target);
    StateVector phi = *target;
    for (int l = circuit.depth() - 1; l >= 0; --l) {
      targets_[static_cast<std::size_t>(l + 1)] = phi;
      const Layer& layer = circuit.layer(l);
      for (auto it = layer.rbegin(); it != layer.rend(); ++it) phi.apply(inverse_up_to_phase(it->gate), it->qubits());
    }
    targets_[0] = phi;
  }

  double ideal_score() const noexcept { return ideal_score_; }

  // Ideal state after layers [0, layer]; layer -1 is the initial state.
  StateVector ideal_after(int layer) const {
    if (layer < 0) return cache_.initial();
    if (cache_.enabled()) return cache_.after(layer);
    StateVector s = cache_.initial();
    run_layers(s, circuit_, 0, layer + 1);
    return s;
  }

  // Score of a run whose state has been evolved through layer `layer`.
  double finish(StateVector state, int layer) const {
    if (!targets_.empty()) {
      const auto& a = targets_[static_cast<std::size_t>(layer + 1)].amplitudes();
      const auto& b = state.amplitudes();
      Complex overlap{0.0, 0.0};
      for (std::size_t i = 0; i < a.size(); ++i) overlap += std::conj(a[i]) * b[i];
      return std::norm(overlap);
    }
    run_layers(state, circuit_, layer + 1, circuit_.depth());
    return criterion_.score(state);
  }

  double score(const FaultSet& faults) const {
    if (faults.empty()) return ideal_score_;
    int first = circuit_.depth();
    int last = -1;
    for (const auto& f : faults) {
      first = std::min(first, f.location.layer);
      last = std::max(last, f.location.layer);
    }
    StateVector s = ideal_after(first);
    for (const auto& f : faults) {
      if (f.location.layer == first) {
        const int q = f.location.qubit;
        s.apply(pauli_gate(f.pauli), std::span<const int>(&q, 1));
      }
    }
    run_layers(s, circuit_, first + 1, last + 1, &faults);
    return finish(std::move(s), last);
  }

 private:
  const Circuit& circuit_;
  const SuccessCriterion& criterion_;
  PrefixCache cache_;
  double ideal_score_ = 0.0;
  std::vector<StateVector> targets_;
};

void check_initial(const Circuit& circuit, std::string_view initial) {
  if (static_cast<int>(initial.size()) != circuit.n_qubits()) {
    throw ValidationError("initial bitstring length must equal the qubit count");
  }
}

}  // namespace

std::string_view method_name(EstimateMethod m) noexcept {
  return m == EstimateMethod::Exhaustive ? "exhaustive" : "monte_carlo";
}

std::pair<double, double> wilson_interval(double successes, double trials, double z) {
  if (trials <= 0.0) return {0.0, 1.0};
  const double phat = successes / trials;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / trials;
  const double center = (phat + z2 / (2.0 * trials)) / denom;
  const double half = z * std::sqrt(phat * (1.0 - phat) / trials + z2 / (4.0 * trials * trials)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

std::pair<double, double> SuccessEstimate::interval(double z) const {
  if (method == EstimateMethod::Exhaustive || std_error == 0.0) return {value, value};
  if (binary) {
    auto [lo, hi] = wilson_interval(value * static_cast<double>(trials), static_cast<double>(trials), z);
    return {std::min(lo, value), std::max(hi, value)};
  }
  return {value - z * std_error, value + z * std_error};
}

SingleFaultTable single_fault_scores(const Circuit& circuit, LocationPolicy policy,
                                     const SuccessCriterion& criterion, std::string_view initial,
                                     Parallelism par) {
  check_initial(circuit, initial);
  PauliFaultModel model;
  model.policy = policy;
  SingleFaultTable table;
  table.locations = enumerate_locations(circuit, model);
  table.scores.resize(table.locations.size());

  const FaultScorer scorer(circuit, criterion, initial);
  table.ideal_score = scorer.ideal_score();

  parallel_for(table.locations.size(), par, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const SpaceTimeLocation& loc = table.locations[k];
      const StateVector before = scorer.ideal_after(loc.layer);
      for (Pauli p : kPaulis) {
        StateVector s = before;
        const int q = loc.qubit;
        s.apply(pauli_gate(p), std::span<const int>(&q, 1));
        table.scores[k][static_cast<std::size_t>(p)] = scorer.finish(std::move(s), loc.layer);
      }
    }
  });
  table.simulations = 3 * table.locations.size() + 1;
  return table;
}

namespace {

// Depth-first enumeration of fault configurations in time order. `state` has
// run layers [0, layer] and carries the faults chosen so far.
class OrderEnumerator {
 public:
  OrderEnumerator(const Circuit& circuit, const FaultScorer& scorer,
                  const std::vector<SpaceTimeLocation>& locations, const std::array<double, 3>& weights,
                  int order)
      : circuit_(circuit), scorer_(scorer), locations_(locations), weights_(weights), order_(order) {}

  // Weighted score sum over configurations whose first fault is locations[first].
  double from_first(std::size_t first, StateVector state_after_layer, std::size_t& sims) const {
    double sum = 0.0;
    for (Pauli p : kPaulis) {
      StateVector s = state_after_layer;
      apply_fault(s, locations_[first], p);
      sum += weights_[static_cast<std::size_t>(p)] *
             descend(2, s, locations_[first].layer, first + 1, sims);
    }
    return sum;
  }

 private:
  static void apply_fault(StateVector& s, const SpaceTimeLocation& loc, Pauli p) {
    const int q = loc.qubit;
    s.apply(pauli_gate(p), std::span<const int>(&q, 1));
  }

  double descend(int level, const StateVector& state, int layer, std::size_t next, std::size_t& sims) const {
    double sum = 0.0;
    StateVector cur = state;
    int cur_layer = layer;
    for (std::size_t j = next; j < locations_.size(); ++j) {
      const SpaceTimeLocation& loc = locations_[j];
      if (loc.layer > cur_layer) {
        run_layers(cur, circuit_, cur_layer + 1, loc.layer + 1);
        cur_layer = loc.layer;
      }
      for (Pauli p : kPaulis) {
        StateVector s = cur;
        apply_fault(s, loc, p);
        const double w = weights_[static_cast<std::size_t>(p)];
        if (level == order_) {
          ++sims;
          sum += w * scorer_.finish(std::move(s), loc.layer);
        } else {
          sum += w * descend(level + 1, s, loc.layer, j + 1, sims);
        }
      }
    }
    return sum;
  }

  const Circuit& circuit_;
  const FaultScorer& scorer_;
  const std::vector<SpaceTimeLocation>& locations_;
  std::array<double, 3> weights_;
  int order_;
};

}  // namespace

void extend_fault_table(SingleFaultTable& table, const Circuit& circuit, const SuccessCriterion& criterion,
                        std::string_view initial, int order, const std::array<double, 3>& weights,
                        Parallelism par) {
  check_initial(circuit, initial);
  if (order <= table.order()) {
    if (order > 1 && weights != table.higher_order_weights) {
      throw ValidationError("fault table was built for different Pauli weights");
    }
    return;
  }
  if (!table.higher_orders.empty() && weights != table.higher_order_weights) {
    throw ValidationError("fault table was built for different Pauli weights");
  }
  table.higher_order_weights = weights;
  const FaultScorer scorer(circuit, criterion, initial);
  const std::size_t count = table.locations.size();
  for (int k = table.order() + 1; k <= order; ++k) {
    const OrderEnumerator enumerator(circuit, scorer, table.locations, weights, k);
    std::vector<double> partial(count, 0.0);
    std::vector<std::size_t> sims(count, 0);
    parallel_for(count, par, [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        partial[i] = enumerator.from_first(i, scorer.ideal_after(table.locations[i].layer), sims[i]);
      }
    });
    table.higher_orders.push_back(pairwise_sum(partial));
    for (std::size_t n : sims) table.simulations += n;
  }
}

double fault_configurations(std::size_t locations, int order) {
  if (order < 0 || static_cast<std::size_t>(order) > locations) return 0.0;
  return boost::math::binomial_coefficient<double>(static_cast<unsigned>(locations),
                                                   static_cast<unsigned>(order)) *
         std::pow(3.0, order);
}

double truncated_fault_mass(std::size_t locations, double p, int order) {
  if (order < 0) return 1.0;
  if (p <= 0.0 || static_cast<std::size_t>(order) >= locations) return 0.0;
  if (p >= 1.0) return 1.0;
  const boost::math::binomial_distribution<double> dist(static_cast<double>(locations), p);
  return boost::math::cdf(boost::math::complement(dist, static_cast<double>(order)));
}

int exhaustive_order(std::size_t locations, double p, const ExhaustiveOptions& options) {
  int best = 1;
  for (int k = 1; k <= options.max_order; ++k) {
    if (k > 1 && fault_configurations(locations, k) > options.max_configurations) break;
    best = k;
    if (truncated_fault_mass(locations, p, k) <= options.tail_tolerance) break;
  }
  return best;
}

namespace {

void check_exhaustive_domain(std::size_t locations, double p) {
  if (static_cast<double>(locations) * p > 1.0) {
    throw ValidationError("exhaustive estimate needs L*p <= 1 (L = " + std::to_string(locations) +
                          ", p = " + std::to_string(p) + "); use Monte Carlo");
  }
}

double single_fault_sum(const SingleFaultTable& table, const std::array<double, 3>& w) {
  std::vector<double> weighted(table.scores.size());
  for (std::size_t k = 0; k < table.scores.size(); ++k) {
    weighted[k] = w[0] * table.scores[k][0] + w[1] * table.scores[k][1] + w[2] * table.scores[k][2];
  }
  return pairwise_sum(weighted);
}

}  // namespace

SuccessEstimate first_order_success(const SingleFaultTable& table, const PauliFaultModel& model) {
  model.validate();
  const double p = model.rate;
  const double locations = static_cast<double>(table.locations.size());
  check_exhaustive_domain(table.locations.size(), p);
  double value = std::pow(1.0 - p, locations) * table.ideal_score;
  if (p > 0.0 && !table.locations.empty()) {
    value += p * std::pow(1.0 - p, locations - 1.0) * single_fault_sum(table, model.weights);
  }
  SuccessEstimate est;
  est.value = est.ci_low = est.ci_high = value;
  est.method = EstimateMethod::Exhaustive;
  est.trials = 3 * table.locations.size() + 1;
  est.order = 1;
  est.truncation = truncated_fault_mass(table.locations.size(), p, 1);
  return est;
}

SuccessEstimate exhaustive_success(const SingleFaultTable& table, const PauliFaultModel& model) {
  SuccessEstimate est = first_order_success(table, model);
  if (table.higher_orders.empty()) return est;
  if (model.weights != table.higher_order_weights) {
    throw ValidationError("fault table was built for different Pauli weights");
  }
  const double p = model.rate;
  const double locations = static_cast<double>(table.locations.size());
  if (p > 0.0) {
    for (std::size_t j = 0; j < table.higher_orders.size(); ++j) {
      const double k = static_cast<double>(j + 2);
      if (k > locations) break;
      est.value += std::pow(p, k) * std::pow(1.0 - p, locations - k) * table.higher_orders[j];
    }
  }
  est.ci_low = est.ci_high = est.value;
  est.trials = table.simulations;
  est.order = table.order();
  est.truncation = truncated_fault_mass(table.locations.size(), p, table.order());
  return est;
}

SuccessEstimate success_probability_exhaustive(const Circuit& circuit, const PauliFaultModel& model,
                                               const SuccessCriterion& criterion,
                                               std::string_view initial, Parallelism par,
                                               const ExhaustiveOptions& options) {
  model.validate();
  const std::size_t locations = enumerate_locations(circuit, model).size();
  check_exhaustive_domain(locations, model.rate);
  SingleFaultTable table = single_fault_scores(circuit, model.policy, criterion, initial, par);
  const int order = exhaustive_order(locations, model.rate, options);
  extend_fault_table(table, circuit, criterion, initial, order, model.weights, par);
  return exhaustive_success(table, model);
}

SuccessEstimate success_probability_mc(const Circuit& circuit, const PauliFaultModel& model,
                                       const SuccessCriterion& criterion, std::string_view initial,
                                       std::size_t trials, std::uint64_t seed, Parallelism par) {
  model.validate();
  check_initial(circuit, initial);
  if (trials < 1) throw ValidationError("Monte Carlo needs at least one trial");
  const auto locations = enumerate_locations(circuit, model);
  const FaultScorer scorer(circuit, criterion, initial);

  std::vector<double> scores(trials);
  parallel_for(trials, par, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      Rng rng = make_rng(seed, i);
      const FaultSet faults = sample_fault_set(locations, model, rng);
      scores[i] = scorer.score(faults);
    }
  });

  const double n = static_cast<double>(trials);
  const double mean = pairwise_sum(scores) / n;
  std::vector<double> sq(trials);
  bool binary = true;
  for (std::size_t i = 0; i < trials; ++i) {
    const double d = scores[i] - mean;
    sq[i] = d * d;
    binary = binary && (scores[i] == 0.0 || scores[i] == 1.0);
  }
  const double variance = trials > 1 ? pairwise_sum(sq) / (n - 1.0) : 0.0;

  SuccessEstimate est;
  est.value = mean;
  est.method = EstimateMethod::MonteCarlo;
  est.trials = trials;
  est.std_error = std::sqrt(variance / n);
  est.binary = binary;
  std::tie(est.ci_low, est.ci_high) = est.interval(kZ95);
  return est;
}

}  // namespace nisq
