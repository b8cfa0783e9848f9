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


// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "nisq/circuits/generators.hpp"
#include "nisq/common/random.hpp"
#include "nisq/gst/lgst.hpp"
#include "nisq/io/reports.hpp"
#include "nisq/noise/channel.hpp"
#include "nisq/rb/clifford.hpp"
#include "nisq/rb/fit.hpp"
#include "nisq/rb/rb.hpp"
#include "nisq/sim/simulator.hpp"
#include "nisq/tolerance/estimators.hpp"
#include "nisq/tolerance/instance_criterion.hpp"
#include "nisq/tolerance/memory.hpp"
#include "nisq/tolerance/tolerance.hpp"

namespace {

using namespace nisq;
using Mat = Eigen::MatrixXcd;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kSeed = 20260416;
constexpr int kMaxSuiteQubits = 8;
constexpr double kThreshold = 0.66;
constexpr double kReportRate = 0.0015;

struct Outcome {
  bool pass = true;
  std::string detail;
  // Serialized numeric results, compared across thread counts.
  std::string record;
};

void fail(Outcome& o, const std::string& why) {
  o.pass = false;
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += why;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const CliffordGroup& clifford_group(int n) {
  static const CliffordGroup one = CliffordGroup::build(1);
  static const CliffordGroup two = CliffordGroup::build(2);
  return n == 1 ? one : two;
}

Mat apply_kraus(const QuantumChannel& ch, const Mat& rho) {
  Mat out = Mat::Zero(rho.rows(), rho.cols());
  for (const auto& k : ch.kraus()) out += k * rho * k.adjoint();
  return out;
}

// 1. Bell-pair example, state after every layer.
Outcome criterion_worked_example() {
  Outcome o;
  Circuit c(2);
  c.add_layer({Operation(Gate::h(), 0), Operation(Gate::x(), 1)});
  c.add_layer({Operation(Gate::cx(), 0, 1)});
  const double r = 1.0 / std::sqrt(2.0);
  const std::vector<std::vector<Complex>> want{{0, 1, 0, 0}, {r, 0, r, 0}, {r, 0, 0, r}};
  const auto t0 = Clock::now();
  StateVector s = StateVector::basis("01");
  std::vector<StateVector> states{s};
  for (int l = 0; l < c.depth(); ++l) {
    run_layers(s, c, l, l + 1);
    states.push_back(s);
  }
  const double elapsed = seconds_since(t0);
  double worst = 0.0;
  for (std::size_t k = 0; k < want.size(); ++k) {
    for (std::size_t i = 0; i < 4; ++i) worst = std::max(worst, std::abs(states[k][i] - want[k][i]));
  }
  if (worst > 1e-12) fail(o, fmt::format("amplitude error {:.3g}", worst));
  if (elapsed >= 1e-3) fail(o, fmt::format("took {:.3g} s", elapsed));
  o.detail = o.detail.empty() ? fmt::format("max amplitude error {:.2g}, {:.1f} us", worst, elapsed * 1e6)
                              : o.detail;
  return o;
}

// 2. r = (1 - 2^-n) p against the closed form and a Haar average.
Outcome criterion_error_rate() {
  Outcome o;
  std::mt19937_64 rng(derive_seed(kSeed, 2));
  std::normal_distribution<double> g;
  double worst_closed = 0.0;
  double worst_mc = 0.0;
  for (int n = 1; n <= 2; ++n) {
    for (double p : {1e-3, 1e-2, 1e-1}) {
      const QuantumChannel ch = depolarizing_channel(n, p);
      const double want = (1.0 - std::pow(2.0, -n)) * p;
      worst_closed = std::max(worst_closed, std::abs(average_error_rate(ch) - want));
      double fid = 0.0;
      const int samples = 10'000;
      for (int s = 0; s < samples; ++s) {
        Eigen::VectorXcd psi(Eigen::Index{1} << n);
        for (Eigen::Index i = 0; i < psi.size(); ++i) psi(i) = Complex(g(rng), g(rng));
        psi.normalize();
        fid += (psi.adjoint() * apply_kraus(ch, psi * psi.adjoint()) * psi)(0, 0).real();
      }
      worst_mc = std::max(worst_mc, std::abs(1.0 - fid / samples - want));
    }
  }
  if (worst_closed > 1e-10) fail(o, fmt::format("closed form off by {:.3g}", worst_closed));
  if (worst_mc > 2e-3) fail(o, fmt::format("Haar average off by {:.3g}", worst_mc));
  if (o.pass) o.detail = fmt::format("closed-form error {:.2g}, Haar error {:.2g}", worst_closed, worst_mc);
  return o;
}

std::uint64_t instance_seed(Family f, int n) {
  return derive_seed(kSeed, (static_cast<std::uint64_t>(f) << 16) | static_cast<std::uint64_t>(n));
}

// 3. Exhaustive estimate inside the 10^6-trial Monte Carlo 99% interval.
Outcome criterion_estimator_agreement(Parallelism par) {
  Outcome o;
  std::vector<std::pair<Family, int>> cases;
  for (int n = 2; n <= 5; ++n) cases.emplace_back(Family::BV, n);
  for (int n = 2; n <= 4; ++n) cases.emplace_back(Family::QFT, n);
  cases.emplace_back(Family::Grover, 2);
  int checked = 0;
  int inside = 0;
  std::uint64_t stream = 0;
  for (const auto& [family, n] : cases) {
    const BenchmarkInstance inst = make_instance(family, n, instance_seed(family, n));
    const SuccessCriterion crit = criterion_for_instance(inst, std::nullopt, kThreshold);
    const double locations = static_cast<double>(inst.circuit.area());
    for (double lp : {0.01, 0.1, 0.3}) {
      const PauliFaultModel model = PauliFaultModel::depolarizing(lp / locations);
      const SuccessEstimate ex =
          success_probability_exhaustive(inst.circuit, model, crit, inst.initial, par);
      const SuccessEstimate mc = success_probability_mc(inst.circuit, model, crit, inst.initial, 1'000'000,
                                                        derive_seed(kSeed, 300 + stream++), par);
      const auto [lo, hi] = mc.interval(kZ99);
      ++checked;
      if (ex.value >= lo && ex.value <= hi) {
        ++inside;
      } else {
        fail(o, fmt::format("{} Lp={}: exhaustive {:.6f} outside [{:.6f}, {:.6f}]", inst.id, lp, ex.value, lo, hi));
      }
      o.record += fmt::format("{},{},{},{},{},{}\n", inst.id, format_number(lp), format_number(ex.value),
                              ex.order, format_number(mc.value), format_number(mc.std_error));
    }
  }
  o.detail = fmt::format("{}/{} inside", inside, checked) + (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

std::vector<BenchmarkInstance> benchmark_suite() {
  std::vector<BenchmarkInstance> suite;
  for (Family f : {Family::BV, Family::Grover, Family::QFT, Family::HLF, Family::Adder, Family::RYRZ}) {
    for (int n = 1; n <= kMaxSuiteQubits; ++n) {
      if (family_accepts(f, n)) suite.push_back(make_instance(f, n, instance_seed(f, n)));
    }
  }
  return suite;
}

// 4. p* <= 1/A for every generated instance.
Outcome criterion_area_bound(Parallelism par) {
  Outcome o;
  int checked = 0;
  double worst_ratio = 0.0;
  for (const BenchmarkInstance& inst : benchmark_suite()) {
    const SuccessCriterion crit = criterion_for_instance(inst, std::nullopt, kThreshold);
    ToleranceConfig cfg;
    cfg.seed = derive_seed(instance_seed(inst.family, inst.circuit.n_qubits()), 4);
    cfg.parallelism = par;
    const auto t0 = Clock::now();
    const ToleranceResult r = tolerable_error_rate(inst.circuit, crit, inst.initial, cfg, inst.id);
    std::fprintf(stderr, "  %-10s A=%-6lld p*=%.4g 1/A=%.4g (%.1f s)\n", inst.id.c_str(), r.area, r.p_star,
                 r.bound_1_over_area, seconds_since(t0));
    ++checked;
    worst_ratio = std::max(worst_ratio, r.p_star * static_cast<double>(r.area));
    if (r.p_star > r.bound_1_over_area) {
      fail(o, fmt::format("{}: p* = {:.4g} > 1/A = {:.4g}", inst.id, r.p_star, r.bound_1_over_area));
    }
    o.record += fmt::format("{},{},{},{}\n", inst.id, r.area, format_number(r.p_star), r.probes);
  }
  o.detail = fmt::format("{} instances, max p*A = {:.3f}", checked, worst_ratio) +
             (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

// 5. Below area 322 instances pass at p = 0.0015, and success does not rise with area.
Outcome criterion_area_threshold(Parallelism par) {
  Outcome o;
  struct Point {
    long long area;
    double value;
    double lo;
    double hi;
    std::string id;
  };
  std::map<Family, std::vector<Point>> by_family;
  int small = 0;
  for (const BenchmarkInstance& inst : benchmark_suite()) {
    const SuccessCriterion crit = criterion_for_instance(inst, std::nullopt, kThreshold);
    ToleranceConfig cfg;
    cfg.parallelism = par;
    const PauliFaultModel model = PauliFaultModel::depolarizing(kReportRate);
    SingleFaultTable table = single_fault_scores(inst.circuit, model.policy, crit, inst.initial, par);
    const SuccessEstimate e = estimate_success(inst.circuit, model, crit, inst.initial, table, cfg,
                                               derive_seed(instance_seed(inst.family, inst.circuit.n_qubits()), 5));
    // The exhaustive value leaves out at most `truncation` of probability mass.
    const double lo = e.method == EstimateMethod::Exhaustive ? e.value : e.ci_low;
    const double hi = e.method == EstimateMethod::Exhaustive ? e.value + e.truncation : e.ci_high;
    const long long area = inst.circuit.area();
    by_family[inst.family].push_back({area, e.value, lo, hi, inst.id});
    o.record += fmt::format("{},{},{},{},{}\n", inst.id, area, format_number(e.value), format_number(lo),
                            format_number(hi));
    if (area < 322) {
      ++small;
      if (e.value < kThreshold) fail(o, fmt::format("{} (A={}) scores {:.4f}", inst.id, area, e.value));
    }
  }
  int pairs = 0;
  for (auto& [family, points] : by_family) {
    std::sort(points.begin(), points.end(), [](const Point& a, const Point& b) { return a.area < b.area; });
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (std::size_t j = i + 1; j < points.size(); ++j) {
        if (points[j].area == points[i].area) continue;
        ++pairs;
        if (points[j].lo > points[i].hi) {
          fail(o, fmt::format("{} (A={}) above {} (A={})", points[j].id, points[j].area, points[i].id,
                              points[i].area));
        }
      }
    }
  }
  o.detail = fmt::format("{} instances with A < 322, {} ordered pairs", small, pairs) +
             (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

// 6. Group sizes and the twirl of a dephasing channel.
Outcome criterion_clifford() {
  Outcome o;
  for (int n = 1; n <= 2; ++n) {
    const auto want = clifford_group_size(n);
    if (boost::multiprecision::cpp_int(clifford_group(n).size()) != want) {
      fail(o, fmt::format("n={}: {} elements", n, clifford_group(n).size()));
    }
  }
  const RMatrix r = channel_to_ptm(pauli_error_channel(0.1, {0.0, 0.0, 1.0}));
  RMatrix twirl = RMatrix::Zero(4, 4);
  for (const auto& e : clifford_group(1).elements()) {
    const RMatrix u = channel_to_ptm(QuantumChannel::unitary(e.unitary));
    twirl += u.transpose() * r * u;
  }
  twirl /= static_cast<double>(clifford_group(1).size());
  const double f = (twirl(1, 1) + twirl(2, 2) + twirl(3, 3)) / 3.0;
  RMatrix dep = RMatrix::Identity(4, 4) * f;
  dep(0, 0) = 1.0;
  const double off = (twirl - dep).cwiseAbs().maxCoeff();
  if (off > 1e-10) fail(o, fmt::format("twirl differs from depolarizing by {:.3g}", off));
  if (o.pass) {
    o.detail = fmt::format("24 and 11520 elements, twirl deviation {:.2g}", off);
  }
  return o;
}

// 7. Fitted decay and error per Clifford under injected depolarizing noise.
Outcome criterion_rb(Parallelism par) {
  Outcome o;
  double worst = 0.0;
  for (int n = 1; n <= 2; ++n) {
    for (double p : {0.005, 0.02, 0.05}) {
      RBConfig cfg;
      cfg.n_qubits = n;
      cfg.channel = depolarizing_channel(n, p);
      cfg.seed = derive_seed(kSeed, 700 + static_cast<std::uint64_t>(n));
      cfg.parallelism = par;
      const RBResult res = run_rb(cfg, clifford_group(n));
      const DecayFit fit = fit_rb(res);
      const double r_want = (1.0 - std::pow(2.0, -n)) * p;
      const double dp = std::abs(fit.p - p) / p;
      const double dr = std::abs(fit.r - r_want) / r_want;
      worst = std::max({worst, dp, dr});
      if (dp > 0.05 || dr > 0.05) {
        fail(o, fmt::format("n={} p={}: fitted p {:.5g}, r {:.5g}", n, p, fit.p, fit.r));
      }
      o.record += fmt::format("{},{},{},{},{}\n", n, format_number(p), format_number(fit.p),
                              format_number(fit.r), format_number(res.mean_cnots_per_clifford));
    }
  }
  const std::string per_cnot = fmt::format("{:.3g}", per_cnot_error(0.01966, 1.485));
  if (per_cnot != "0.0132") fail(o, "per-CNOT error prints as " + per_cnot);
  o.detail = fmt::format("max relative error {:.2g}, per-CNOT {}", worst, per_cnot) +
             (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

// 8. LGST predictions against direct density-matrix simulation.
Outcome criterion_lgst() {
  Outcome o;
  const GateSet truth = depolarized_gate_set(0.05);
  const std::vector<std::string> names{"h", "s", "x"};
  Rng rng = make_rng(kSeed, 800);
  std::vector<GateSequence> seqs;
  for (int i = 0; i < 1000; ++i) {
    GateSequence s(uniform_index(rng, 11));
    for (auto& g : s) g = names[uniform_index(rng, names.size())];
    seqs.push_back(std::move(s));
  }
  auto oracle = [&](const GateSequence& seq) {
    Mat rho = truth.rho0.matrix();
    for (const auto& g : seq) rho = apply_kraus(truth.gate(g), rho);
    return (truth.effect0 * rho).trace().real();
  };
  auto max_error = [&](const GSTEstimate& est) {
    double worst = 0.0;
    for (const auto& s : seqs) worst = std::max(worst, std::abs(predict_probability(est, s) - oracle(s)));
    return worst;
  };
  const double exact = max_error(lgst(collect_gst_data(truth, default_fiducials(), 0, kSeed)));
  const double sampled = max_error(lgst(collect_gst_data(truth, default_fiducials(), 100'000, kSeed)));
  if (exact > 1e-8) fail(o, fmt::format("exact data error {:.3g}", exact));
  if (sampled > 0.01) fail(o, fmt::format("sampled data error {:.3g}", sampled));
  if (o.pass) o.detail = fmt::format("exact {:.2g}, 1e5 shots {:.2g}", exact, sampled);
  return o;
}

// 9. Memory for 53 qubits at 8 bytes per amplitude.
Outcome criterion_memory() {
  Outcome o;
  const std::string sv =
      fmt::format("{:.3g}", memory_estimate(53, Representation::StateVector, 8) / kBytesPerPetabyte);
  const std::string dm =
      fmt::format("{:.3g}", memory_estimate(53, Representation::DensityMatrix, 8) / kBytesPerPetabyte);
  if (sv != "72.1") fail(o, "statevector " + sv + " PB");
  if (dm != "6.49e+17") fail(o, "density matrix " + dm + " PB");
  if (o.pass) o.detail = fmt::format("{} PB and {} PB", sv, dm);
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double time_limit;
  std::function<Outcome(Parallelism)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "worked example", 10.0, [](Parallelism) { return criterion_worked_example(); }},
      {2, "average error rate", 10.0, [](Parallelism) { return criterion_error_rate(); }},
      {3, "exhaustive vs Monte Carlo", 300.0, criterion_estimator_agreement},
      {4, "p* below 1/A", 1800.0, criterion_area_bound},
      {5, "area threshold at p = 0.0015", 900.0, criterion_area_threshold},
      {6, "Clifford group", 120.0, [](Parallelism) { return criterion_clifford(); }},
      {7, "RB recovery", 300.0, criterion_rb},
      {8, "LGST predictions", 120.0, [](Parallelism) { return criterion_lgst(); }},
      {9, "memory estimates", 1.0, [](Parallelism) { return criterion_memory(); }},
  };
  bool all = true;
  std::map<int, std::string> records;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o = c.run(Parallelism{1});
    const double elapsed = seconds_since(t0);
    if (elapsed > c.time_limit) fail(o, fmt::format("runtime {:.1f} s over {:.0f} s", elapsed, c.time_limit));
    records[c.id] = o.record;
    all = all && o.pass;
    std::printf("criterion %d %s: %s (%s) [%.2f s]\n", c.id, c.name.c_str(), o.pass ? "PASS" : "FAIL",
                o.detail.c_str(), elapsed);
    std::fflush(stdout);
  }

  Outcome det;
  const auto t0 = Clock::now();
  for (const auto& c : criteria) {
    if (c.id != 3 && c.id != 4 && c.id != 5 && c.id != 7) continue;
    const Outcome again = c.run(Parallelism{8});
    if (again.record != records[c.id]) fail(det, fmt::format("criterion {} differs at 8 threads", c.id));
    if (records[c.id].empty()) fail(det, fmt::format("criterion {} produced no output", c.id));
  }
  if (det.pass) det.detail = "criteria 3, 4, 5, 7 identical at 1 and 8 threads";
  all = all && det.pass;
  std::printf("criterion 10 determinism: %s (%s) [%.2f s]\n", det.pass ? "PASS" : "FAIL", det.detail.c_str(),
              seconds_since(t0));
  return all ? 0 : 1;
}
