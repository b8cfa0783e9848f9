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

// Command-line front end: tolerance scans, randomized benchmarking, gate set
// tomography, memory estimates and circuit utilities.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "nisq/circuits/generators.hpp"
#include "nisq/common/errors.hpp"
#include "nisq/common/random.hpp"
#include "nisq/gst/lgst.hpp"
#include "nisq/io/circuit_file.hpp"
#include "nisq/io/reports.hpp"
#include "nisq/noise/density_matrix.hpp"
#include "nisq/rb/rb.hpp"
#include "nisq/sim/simulator.hpp"
#include "nisq/tolerance/instance_criterion.hpp"
#include "nisq/tolerance/memory.hpp"
#include "nisq/tolerance/tolerance.hpp"

namespace {

using nisq::ValidationError;

struct CommonOptions {
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
  std::string output;
  std::string format;
};

std::uint64_t resolve_seed(const CommonOptions& common) {
  if (common.seed) return *common.seed;
  std::random_device rd;
  const std::uint64_t seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  std::cerr << "seed: " << seed << '\n';
  return seed;
}

nisq::Parallelism parallelism(const CommonOptions& common) { return nisq::Parallelism{common.threads}; }

void emit(const CommonOptions& common, const std::string& text) {
  if (common.output.empty() || common.output == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(common.output);
  if (!out) throw ValidationError("cannot write output file " + common.output);
  out << text;
  if (!out) throw ValidationError("failed writing output file " + common.output);
}

std::string json_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw ValidationError("qubit range must look like 3 or 3..6, got '" + text + "'");
  }
}

struct NoiseSpec {
  std::string kind = "none";
  double p = 0.0;
};

NoiseSpec parse_noise(const std::string& text) {
  if (text == "none") return {};
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw ValidationError("noise must look like depolarizing:0.01, pauli:0.01, dephasing:0.01 or none");
  }
  NoiseSpec spec;
  spec.kind = text.substr(0, colon);
  try {
    spec.p = std::stod(text.substr(colon + 1));
  } catch (const std::exception&) {
    throw ValidationError("noise strength is not a number: '" + text + "'");
  }
  if (spec.kind != "depolarizing" && spec.kind != "pauli" && spec.kind != "dephasing") {
    throw ValidationError("unknown noise kind '" + spec.kind + "'");
  }
  return spec;
}

// ---------------------------------------------------------------- scan

struct ScanOptions {
  std::vector<std::string> families{"bv", "grover", "qft", "hlf", "adder", "ryrz"};
  std::string n_range = "2..6";
  std::vector<double> rates{0.0015};
  std::string criterion = "auto";
  double threshold = 0.66;
  bool tolerable = false;
  std::size_t trials = 100'000;
  std::string policy = "all";
};

int command_scan(const ScanOptions& opt, const CommonOptions& common) {
  const std::uint64_t seed = resolve_seed(common);
  const auto [n_lo, n_hi] = parse_range(opt.n_range);
  if (n_lo < 1 || n_hi < n_lo) throw ValidationError("empty qubit range " + opt.n_range);
  std::optional<nisq::CriterionKind> kind;
  if (opt.criterion != "auto") {
    kind = nisq::parse_criterion(opt.criterion);
    if (!kind) throw ValidationError("unknown criterion '" + opt.criterion + "'");
  }
  nisq::LocationPolicy policy = nisq::LocationPolicy::AllQubitsEveryLayer;
  if (opt.policy == "active") {
    policy = nisq::LocationPolicy::ActiveQubitsOnly;
  } else if (opt.policy != "all") {
    throw ValidationError("policy must be 'all' or 'active'");
  }
  for (double p : opt.rates) {
    if (!(p >= 0.0 && p <= 0.75)) throw ValidationError("error rates must lie in [0, 0.75]");
  }

  std::vector<nisq::ScanRow> rows;
  std::vector<nisq::TolerableRow> tolerable_rows;
  for (const auto& name : opt.families) {
    const auto family = nisq::parse_family(name);
    if (!family) throw ValidationError("unknown family '" + name + "'");
    for (int n = n_lo; n <= n_hi; ++n) {
      if (!nisq::family_accepts(*family, n)) {
        std::cerr << "skipping " << name << " at n = " << n << " (unsupported size)\n";
        continue;
      }
      const std::uint64_t instance_seed =
          nisq::derive_seed(seed, (static_cast<std::uint64_t>(*family) << 16) | static_cast<std::uint64_t>(n));
      const nisq::BenchmarkInstance inst = nisq::make_instance(*family, n, instance_seed);
      const nisq::SuccessCriterion crit = nisq::criterion_for_instance(inst, kind, opt.threshold);
      const std::string crit_name(nisq::criterion_name(crit.kind()));
      const nisq::CircuitArea area = nisq::circuit_area(inst.circuit);

      if (opt.tolerable) {
        nisq::ToleranceConfig config;
        config.seed = nisq::derive_seed(instance_seed, 1);
        config.parallelism = parallelism(common);
        config.policy = policy;
        const auto res = nisq::tolerable_error_rate(inst.circuit, crit, inst.initial, config, inst.id);
        tolerable_rows.push_back({inst.id, name, res.n, res.d, res.area, res.p_star, res.bound_1_over_area});
        continue;
      }

      nisq::SingleFaultTable table =
          nisq::single_fault_scores(inst.circuit, policy, crit, inst.initial, parallelism(common));
      for (std::size_t i = 0; i < opt.rates.size(); ++i) {
        nisq::PauliFaultModel model{opt.rates[i], {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}, policy};
        nisq::SuccessEstimate est;
        const std::size_t locations = table.locations.size();
        if (static_cast<double>(locations) * model.rate <= 1.0) {
          const int order = nisq::exhaustive_order(locations, model.rate, nisq::ExhaustiveOptions{});
          nisq::extend_fault_table(table, inst.circuit, crit, inst.initial, order, model.weights,
                                   parallelism(common));
          est = nisq::exhaustive_success(table, model);
        } else {
          est = nisq::success_probability_mc(inst.circuit, model, crit, inst.initial, opt.trials,
                                             nisq::derive_seed(instance_seed, 100 + i), parallelism(common));
        }
        rows.push_back({inst.id, name, area.n, area.d, area.area, model.rate, est.value, est.ci_low,
                        est.ci_high, std::string(nisq::method_name(est.method)), crit_name, opt.threshold});
      }
    }
  }

  std::ostringstream out;
  if (common.format == "json") {
    out << json_text(opt.tolerable ? nisq::tolerable_json(tolerable_rows) : nisq::scan_json(rows));
  } else if (opt.tolerable) {
    nisq::write_tolerable_csv(out, tolerable_rows);
  } else {
    nisq::write_scan_csv(out, rows);
  }
  emit(common, out.str());
  return 0;
}

// ---------------------------------------------------------------- rb

struct RBOptions {
  int qubits = 1;
  std::string noise = "depolarizing:0.01";
  bool exact = false;
  int shots = 1000;
  std::vector<int> lengths{1, 2, 3, 5, 7, 10, 15, 20, 30, 50};
  int sequences = 5;
  std::string insertion = "per_clifford";
  double readout_flip = 0.0;
  std::string interleave;
  std::string group_cache;
};

nisq::CliffordGroup load_group(int n, const std::string& cache) {
  if (!cache.empty()) {
    std::ifstream in(cache);
    if (in) {
      const auto j = nlohmann::json::parse(in, nullptr, false);
      if (!j.is_discarded() && j.value("n_qubits", 0) == n) return nisq::clifford_group_from_json(j);
      std::cerr << "ignoring unusable Clifford group cache " << cache << '\n';
    }
  }
  nisq::CliffordGroup group = nisq::CliffordGroup::build(n);
  if (!cache.empty()) {
    std::ofstream out(cache);
    if (out) out << nisq::clifford_group_to_json(group).dump() << '\n';
  }
  return group;
}

// "cx:0,1" or "h:0" -> element index of that gate in the group.
std::size_t interleave_element(const std::string& text, const nisq::CliffordGroup& group) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  const auto kind = nisq::parse_gate_kind(name);
  if (!kind) throw ValidationError("unknown interleaved gate '" + name + "'");
  const nisq::Gate gate(*kind);
  std::vector<int> qubits;
  if (colon != std::string::npos) {
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) qubits.push_back(std::stoi(item));
  } else {
    for (int q = 0; q < gate.arity(); ++q) qubits.push_back(q);
  }
  if (static_cast<int>(qubits.size()) != gate.arity()) {
    throw ValidationError("interleaved gate " + name + " needs " + std::to_string(gate.arity()) + " qubit(s)");
  }
  for (int q : qubits) {
    if (q < 0 || q >= group.n_qubits()) throw ValidationError("interleaved gate qubit out of range");
  }
  const auto idx = group.find(nisq::embed_operator(gate.matrix(), qubits, group.n_qubits()));
  if (!idx) throw ValidationError("interleaved gate " + name + " is not a Clifford");
  return *idx;
}

int command_rb(const RBOptions& opt, const CommonOptions& common) {
  nisq::RBConfig config;
  config.n_qubits = opt.qubits;
  config.lengths = opt.lengths;
  config.sequences_per_length = opt.sequences;
  config.shots = opt.exact ? 0 : opt.shots;
  config.readout_flip = opt.readout_flip;
  config.seed = resolve_seed(common);
  config.parallelism = parallelism(common);
  if (opt.insertion == "per_clifford") {
    config.insertion = nisq::NoiseInsertion::PerClifford;
  } else if (opt.insertion == "per_gate") {
    config.insertion = nisq::NoiseInsertion::PerElementaryGate;
  } else if (opt.insertion == "per_cnot") {
    config.insertion = nisq::NoiseInsertion::PerCnot;
  } else {
    throw ValidationError("insertion must be per_clifford, per_gate or per_cnot");
  }
  if (opt.qubits < 1 || opt.qubits > 2) throw ValidationError("--qubits must be 1 or 2");
  const NoiseSpec noise = parse_noise(opt.noise);
  if (noise.kind == "depolarizing") {
    config.channel = nisq::depolarizing_channel(opt.qubits, noise.p);
  } else if (noise.kind == "pauli") {
    config.pauli = nisq::PauliFaultModel::depolarizing(noise.p);
  } else if (noise.kind == "dephasing") {
    config.pauli = nisq::PauliFaultModel::dephasing(noise.p);
  }
  config.validate();

  const nisq::CliffordGroup group = load_group(opt.qubits, opt.group_cache);
  nlohmann::json report;
  if (!opt.interleave.empty()) {
    const nisq::InterleavedTarget target{interleave_element(opt.interleave, group), std::nullopt};
    const auto result = nisq::run_interleaved_rb(config, group, target);
    report = nisq::interleaved_rb_report(config, result);
    if (common.format == "csv") throw ValidationError("interleaved RB reports are JSON only");
  } else {
    nisq::RBResult result = nisq::run_rb(config, group);
    result.fit = nisq::fit_rb(result);
    if (common.format == "csv") {
      std::ostringstream out;
      out << "m,mean_survival,stderr\n";
      for (const auto& p : result.points) {
        out << p.m << ',' << nisq::format_number(p.mean_survival) << ',' << nisq::format_number(p.stderr_survival)
            << '\n';
      }
      emit(common, out.str());
      return 0;
    }
    report = nisq::rb_report(config, result);
    report["group_mean_cnot_count"] = group.mean_cnot_count();
    if (opt.qubits == 2 && result.fit->r >= 0.0) {
      report["per_cnot_error"] = nisq::per_cnot_error(result.fit->r, group.mean_cnot_count());
    }
  }
  emit(common, json_text(report));
  return 0;
}

// ---------------------------------------------------------------- gst

struct GSTOptions {
  std::string noise = "none";
  int shots = 0;
  int sequences = 1000;
  int max_length = 10;
  double prep_error = 0.0;
};

int command_gst(const GSTOptions& opt, const CommonOptions& common) {
  const std::uint64_t seed = resolve_seed(common);
  const NoiseSpec noise = parse_noise(opt.noise);
  if (noise.kind != "none" && noise.kind != "depolarizing") {
    throw ValidationError("gst supports depolarizing:p or none");
  }
  if (opt.sequences < 0 || opt.max_length < 1) throw ValidationError("--sequences >= 0 and --max-length >= 1");
  if (!(opt.prep_error >= 0.0 && opt.prep_error <= 1.0)) throw ValidationError("--prep-error must lie in [0, 1]");
  nisq::GateSet gs = noise.kind == "none" ? nisq::ideal_gate_set() : nisq::depolarized_gate_set(noise.p);
  nisq::CMatrix rho = nisq::CMatrix::Zero(2, 2);
  rho(0, 0) = 1.0 - opt.prep_error;
  rho(1, 1) = opt.prep_error;
  gs.rho0 = nisq::DensityMatrix(1, rho);

  const nisq::GSTData data = nisq::collect_gst_data(gs, nisq::default_fiducials(), opt.shots, seed);
  const nisq::GSTEstimate est = nisq::lgst(data);

  std::vector<std::string> names;
  for (const auto& [name, g] : gs.gates) names.push_back(name);
  nisq::Rng rng = nisq::make_rng(seed, 0xC0FFEEULL);
  double max_error = 0.0;
  for (int s = 0; s < opt.sequences; ++s) {
    const std::size_t length = 1 + nisq::uniform_index(rng, static_cast<std::uint64_t>(opt.max_length));
    nisq::GateSequence seq;
    for (std::size_t k = 0; k < length; ++k) seq.push_back(names[nisq::uniform_index(rng, names.size())]);
    max_error = std::max(max_error, std::abs(nisq::predict_probability(est, seq) - nisq::sequence_probability(gs, seq)));
  }

  nlohmann::json report = nisq::gst_report(est);
  report["shots"] = opt.shots;
  report["validation"] = {{"sequences", opt.sequences}, {"max_length", opt.max_length},
                          {"max_abs_prediction_error", max_error}};
  emit(common, json_text(report));
  return 0;
}

// ---------------------------------------------------------------- estimate-memory

std::string petabytes_text(double pb) {
  std::string s = fmt::format("{:.3g}", pb);
  const auto e = s.find('e');
  if (e != std::string::npos) {
    std::string mantissa = s.substr(0, e);
    int exponent = std::stoi(s.substr(e + 1));
    s = mantissa + "e" + std::to_string(exponent);
  }
  return s + " PB";
}

int command_memory(int qubits, const std::string& repr_name, int bytes, const CommonOptions& common) {
  const auto repr = nisq::parse_representation(repr_name);
  if (!repr) throw ValidationError("--repr must be statevector or density");
  const double total = nisq::memory_estimate(qubits, *repr, bytes);
  const double pb = total / nisq::kBytesPerPetabyte;
  if (common.format == "json") {
    emit(common, json_text({{"n_qubits", qubits},
                            {"representation", *repr == nisq::Representation::StateVector ? "statevector" : "density"},
                            {"bytes_per_amplitude", bytes},
                            {"bytes", total},
                            {"petabytes", pb}}));
  } else {
    emit(common, petabytes_text(pb) + "\n");
  }
  return 0;
}

// ---------------------------------------------------------------- circuits

int command_generate(const std::string& family_name, int n, const CommonOptions& common) {
  const auto family = nisq::parse_family(family_name);
  if (!family) throw ValidationError("unknown family '" + family_name + "'");
  const nisq::BenchmarkInstance inst = nisq::make_instance(*family, n, resolve_seed(common));
  std::cerr << "initial: " << inst.initial << '\n';
  if (inst.expected_outcome) std::cerr << "expected: " << *inst.expected_outcome << '\n';
  emit(common, nisq::serialize_circuit(inst.circuit));
  return 0;
}

int command_simulate(const std::string& path, std::string initial, const CommonOptions& common) {
  const nisq::Circuit circuit = nisq::load_circuit(path);
  if (initial.empty()) initial.assign(static_cast<std::size_t>(circuit.n_qubits()), '0');
  const nisq::StateVector state = nisq::run_circuit(circuit, initial);
  const nisq::OutcomeDistribution dist = nisq::measure_distribution(state);
  if (common.format == "json") {
    nlohmann::json probs = nlohmann::json::object();
    for (std::size_t i = 0; i < dist.size(); ++i) {
      if (dist[i] > 1e-15) probs[nisq::index_to_bits(i, circuit.n_qubits())] = dist[i];
    }
    emit(common, json_text({{"n_qubits", circuit.n_qubits()}, {"initial", initial}, {"probabilities", probs}}));
    return 0;
  }
  std::ostringstream out;
  out << "outcome,probability\n";
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (dist[i] > 1e-15) out << nisq::index_to_bits(i, circuit.n_qubits()) << ',' << nisq::format_number(dist[i]) << '\n';
  }
  emit(common, out.str());
  return 0;
}

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--seed", common.seed, "Master seed (random and printed when omitted)");
  cmd->add_option("--threads", common.threads, "Worker threads (0 = all cores)");
  cmd->add_option("-o,--output", common.output, "Output file (default stdout)");
  cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"csv", "json", "text"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nisq: noise-aware quantum circuit simulation and characterization"};
  app.require_subcommand(1);

  CommonOptions common;

  ScanOptions scan;
  auto* scan_cmd = app.add_subcommand("scan", "Success probability or tolerable error rate of benchmark circuits");
  add_common(scan_cmd, common);
  scan_cmd->add_option("--families", scan.families, "Comma-separated families")->delimiter(',');
  scan_cmd->add_option("--n", scan.n_range, "Qubit count or range a..b");
  scan_cmd->add_option("--p", scan.rates, "Comma-separated Pauli error rates")->delimiter(',');
  scan_cmd->add_option("--criterion", scan.criterion, "auto, correct, acceptable, fidelity, tvd, heavy, xeb");
  scan_cmd->add_option("--threshold", scan.threshold, "Success threshold");
  scan_cmd->add_flag("--tolerable", scan.tolerable, "Report the tolerable error rate instead");
  scan_cmd->add_option("--trials", scan.trials, "Monte Carlo trials when L*p > 1");
  scan_cmd->add_option("--policy", scan.policy, "Fault locations: all or active");

  RBOptions rb;
  auto* rb_cmd = app.add_subcommand("rb", "Randomized benchmarking on a simulated noisy device");
  add_common(rb_cmd, common);
  rb_cmd->add_option("--qubits", rb.qubits, "1 or 2");
  rb_cmd->add_option("--noise", rb.noise, "depolarizing:p, pauli:p, dephasing:p or none");
  rb_cmd->add_flag("--exact", rb.exact, "Exact survival probabilities instead of shots");
  rb_cmd->add_option("--shots", rb.shots, "Shots per sequence");
  rb_cmd->add_option("--lengths", rb.lengths, "Comma-separated sequence lengths")->delimiter(',');
  rb_cmd->add_option("--sequences", rb.sequences, "Random sequences per length");
  rb_cmd->add_option("--insertion", rb.insertion, "per_clifford, per_gate or per_cnot");
  rb_cmd->add_option("--readout-flip", rb.readout_flip, "Readout bit-flip probability");
  rb_cmd->add_option("--interleave", rb.interleave, "Interleaved gate, e.g. cx:0,1 or h:0");
  rb_cmd->add_option("--group-cache", rb.group_cache, "Clifford group cache file");

  GSTOptions gst;
  auto* gst_cmd = app.add_subcommand("gst", "Linear gate set tomography of a simulated single-qubit gate set");
  add_common(gst_cmd, common);
  gst_cmd->add_option("--noise", gst.noise, "depolarizing:p or none");
  gst_cmd->add_option("--shots", gst.shots, "Shots per circuit (0 = exact)");
  gst_cmd->add_option("--sequences", gst.sequences, "Random validation sequences");
  gst_cmd->add_option("--max-length", gst.max_length, "Longest validation sequence");
  gst_cmd->add_option("--prep-error", gst.prep_error, "Probability of preparing |1> instead of |0>");

  int mem_qubits = 53;
  std::string mem_repr = "statevector";
  int mem_bytes = 16;
  auto* mem_cmd = app.add_subcommand("estimate-memory", "Memory needed to store an n-qubit state");
  add_common(mem_cmd, common);
  mem_cmd->add_option("--qubits", mem_qubits, "Qubit count")->required();
  mem_cmd->add_option("--repr", mem_repr, "statevector or density");
  mem_cmd->add_option("--bytes", mem_bytes, "Bytes per amplitude (8 or 16)");

  std::string gen_family = "bv";
  int gen_n = 3;
  auto* gen_cmd = app.add_subcommand("generate", "Write a benchmark circuit file");
  add_common(gen_cmd, common);
  gen_cmd->add_option("--family", gen_family, "Benchmark family")->required();
  gen_cmd->add_option("--n", gen_n, "Qubit count")->required();

  std::string sim_path;
  std::string sim_initial;
  auto* sim_cmd = app.add_subcommand("simulate", "Noiseless outcome distribution of a circuit file");
  add_common(sim_cmd, common);
  sim_cmd->add_option("circuit", sim_path, "Circuit file")->required();
  sim_cmd->add_option("--initial", sim_initial, "Initial basis state bitstring");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (common.format.empty()) {
    common.format = (*scan_cmd || *sim_cmd) ? "csv" : (*mem_cmd ? "text" : "json");
  }

  try {
    if (*scan_cmd) return command_scan(scan, common);
    if (*rb_cmd) return command_rb(rb, common);
    if (*gst_cmd) return command_gst(gst, common);
    if (*mem_cmd) return command_memory(mem_qubits, mem_repr, mem_bytes, common);
    if (*gen_cmd) return command_generate(gen_family, gen_n, common);
    if (*sim_cmd) return command_simulate(sim_path, sim_initial, common);
  } catch (const nisq::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
