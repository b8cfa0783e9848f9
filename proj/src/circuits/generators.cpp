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

#include "nisq/circuits/generators.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <utility>

#include "nisq/circuits/builder.hpp"
#include "nisq/common/errors.hpp"
#include "nisq/common/random.hpp"

namespace nisq {
namespace {

constexpr std::array<std::pair<std::string_view, Family>, 6> kFamilies{{
    {"bv", Family::BV},
    {"grover", Family::Grover},
    {"qft", Family::QFT},
    {"hlf", Family::HLF},
    {"adder", Family::Adder},
    {"ryrz", Family::RYRZ},
}};

std::string random_bits(int n, Rng& rng) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (auto& c : s) c = (rng() >> 63) ? '1' : '0';
  return s;
}

void check_bits(std::string_view bits, std::string_view what) {
  if (bits.empty()) throw ValidationError(std::string(what) + " must be non-empty");
  for (char c : bits) {
    if (c != '0' && c != '1') throw ValidationError(std::string(what) + " may only contain 0 and 1");
  }
}

}  // namespace

std::string_view family_name(Family f) noexcept {
  for (const auto& [name, fam] : kFamilies) {
    if (fam == f) return name;
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
  for (const auto& [n, fam] : kFamilies) {
    if (n == name) return fam;
  }
  return std::nullopt;
}

bool QuadraticForm::symmetric() const {
  if (n < 1 || entries.size() != static_cast<std::size_t>(n * n)) return false;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if ((*this)(i, j) > 1 || (*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

Circuit gen_bv(std::string_view hidden) {
  check_bits(hidden, "hidden string");
  const int k = static_cast<int>(hidden.size());
  const int ancilla = k;
  CircuitBuilder b(k + 1);
  for (int q = 0; q < k; ++q) b.h(q);
  b.x(ancilla);
  b.h(ancilla);
  b.barrier();
  for (int q = 0; q < k; ++q) {
    if (hidden[static_cast<std::size_t>(q)] == '1') b.cx(q, ancilla);
  }
  b.barrier();
  for (int q = 0; q <= k; ++q) b.h(q);
  return b.build();
}

Circuit gen_qft(int n) {
  if (n < 1) throw ValidationError("QFT needs at least one qubit");
  CircuitBuilder b(n);
  for (int j = 0; j < n; ++j) {
    b.h(j);
    for (int k = j + 1; k < n; ++k) {
      b.cphase(std::numbers::pi / static_cast<double>(std::size_t{1} << (k - j)), k, j);
    }
  }
  for (int j = 0; j < n / 2; ++j) b.swap(j, n - 1 - j);
  return b.build();
}

int optimal_grover_iterations(int n) {
  const double n_items = std::ldexp(1.0, n);
  return std::max(1, static_cast<int>(std::floor(std::numbers::pi / 4.0 * std::sqrt(n_items))));
}

Circuit gen_grover(int n, std::string_view marked, int iterations) {
  if (n < 2) throw ValidationError("Grover needs at least two qubits");
  check_bits(marked, "marked item");
  if (static_cast<int>(marked.size()) != n) {
    throw ValidationError("marked item length must equal the qubit count");
  }
  if (iterations < 0) throw ValidationError("Grover iteration count must be non-negative");
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) all[static_cast<std::size_t>(q)] = q;

  CircuitBuilder b(n);
  for (int q = 0; q < n; ++q) b.h(q);
  for (int it = 0; it < iterations; ++it) {
    for (int q = 0; q < n; ++q) {
      if (marked[static_cast<std::size_t>(q)] == '0') b.x(q);
    }
    b.mcz(all);
    for (int q = 0; q < n; ++q) {
      if (marked[static_cast<std::size_t>(q)] == '0') b.x(q);
    }
    for (int q = 0; q < n; ++q) b.h(q);
    for (int q = 0; q < n; ++q) b.x(q);
    b.mcz(all);
    for (int q = 0; q < n; ++q) b.x(q);
    for (int q = 0; q < n; ++q) b.h(q);
  }
  return b.build();
}

Circuit gen_hlf(const QuadraticForm& form) {
  if (!form.symmetric()) throw ValidationError("HLF quadratic form must be a symmetric binary matrix");
  const int n = form.n;
  CircuitBuilder b(n);
  for (int q = 0; q < n; ++q) b.h(q);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (form(i, j)) b.cz(i, j);
    }
  }
  for (int i = 0; i < n; ++i) {
    if (form(i, i)) b.add(Gate::s(), i);
  }
  for (int q = 0; q < n; ++q) b.h(q);
  return b.build();
}

std::string AdderLayout::encode(std::uint64_t a_value, std::uint64_t b_value) const {
  if (width < 1 || width > 14) throw ValidationError("adder width must be in [1, 14]");
  if ((a_value >> width) != 0 || (b_value >> width) != 0) {
    throw ValidationError("adder operand exceeds register width");
  }
  std::string bits(static_cast<std::size_t>(n_qubits()), '0');
  for (int i = 0; i < width; ++i) {
    if ((a_value >> i) & 1U) bits[static_cast<std::size_t>(a(i))] = '1';
    if ((b_value >> i) & 1U) bits[static_cast<std::size_t>(b(i))] = '1';
  }
  return bits;
}

std::uint64_t AdderLayout::decode_sum(std::string_view bits) const {
  std::uint64_t v = 0;
  for (int i = 0; i < width; ++i) {
    if (bits[static_cast<std::size_t>(b(i))] == '1') v |= std::uint64_t{1} << i;
  }
  if (bits[static_cast<std::size_t>(carry_out())] == '1') v |= std::uint64_t{1} << width;
  return v;
}

std::uint64_t AdderLayout::decode_a(std::string_view bits) const {
  std::uint64_t v = 0;
  for (int i = 0; i < width; ++i) {
    if (bits[static_cast<std::size_t>(a(i))] == '1') v |= std::uint64_t{1} << i;
  }
  return v;
}

Circuit gen_adder(int width) {
  if (width < 1) throw ValidationError("adder width must be at least 1");
  const AdderLayout lay{width};
  CircuitBuilder b(lay.n_qubits());
  const auto maj = [&](int c, int bq, int aq) {
    b.cx(aq, bq);
    b.cx(aq, c);
    b.toffoli(c, bq, aq);
  };
  const auto uma = [&](int c, int bq, int aq) {
    b.toffoli(c, bq, aq);
    b.cx(aq, c);
    b.cx(c, bq);
  };
  maj(lay.carry_in(), lay.b(0), lay.a(0));
  for (int i = 1; i < width; ++i) maj(lay.a(i - 1), lay.b(i), lay.a(i));
  b.cx(lay.a(width - 1), lay.carry_out());
  for (int i = width - 1; i >= 1; --i) uma(lay.a(i - 1), lay.b(i), lay.a(i));
  uma(lay.carry_in(), lay.b(0), lay.a(0));
  return b.build();
}

Circuit gen_ryrz(int n, int layers, const std::vector<double>& angles) {
  if (n < 1 || layers < 0) throw ValidationError("RYRZ needs n >= 1 and layers >= 0");
  const std::size_t expected = static_cast<std::size_t>(2 * n * (layers + 1));
  if (angles.size() != expected) {
    throw ValidationError("RYRZ expects " + std::to_string(expected) + " angles, got " +
                          std::to_string(angles.size()));
  }
  CircuitBuilder b(n);
  std::size_t next = 0;
  const auto rotations = [&] {
    for (int q = 0; q < n; ++q) b.add(Gate::ry(angles[next++]), q);
    for (int q = 0; q < n; ++q) b.add(Gate::rz(angles[next++]), q);
  };
  rotations();
  for (int l = 0; l < layers; ++l) {
    for (int q = 0; q + 1 < n; ++q) b.cx(q, q + 1);
    rotations();
  }
  return b.build();
}

int family_min_qubits(Family family) noexcept {
  switch (family) {
    case Family::BV:
    case Family::Grover:
      return 2;
    case Family::Adder:
      return 4;
    default:
      return 1;
  }
}

bool family_accepts(Family family, int n_qubits) noexcept {
  if (n_qubits < family_min_qubits(family) || n_qubits > 20) return false;
  if (family == Family::Adder) return n_qubits % 2 == 0;
  return true;
}

BenchmarkInstance make_instance(Family family, int n_qubits, std::uint64_t seed) {
  if (!family_accepts(family, n_qubits)) {
    throw ValidationError("family '" + std::string(family_name(family)) + "' does not support " +
                          std::to_string(n_qubits) + " qubits");
  }
  Rng rng = make_rng(seed, 0);
  BenchmarkInstance inst;
  inst.family = family;
  inst.id = std::string(family_name(family)) + "_n" + std::to_string(n_qubits);
  switch (family) {
    case Family::BV: {
      std::string hidden = random_bits(n_qubits - 1, rng);
      if (hidden.find('1') == std::string::npos) hidden.back() = '1';
      inst.circuit = gen_bv(hidden);
      inst.initial = std::string(static_cast<std::size_t>(n_qubits), '0');
      // Data bits carry the hidden string; the ancilla ends in |1>.
      inst.expected_outcome = hidden + "1";
      break;
    }
    case Family::QFT:
      inst.circuit = gen_qft(n_qubits);
      inst.initial = random_bits(n_qubits, rng);
      break;
    case Family::Grover: {
      const std::string marked = random_bits(n_qubits, rng);
      inst.circuit = gen_grover(n_qubits, marked, optimal_grover_iterations(n_qubits));
      inst.initial = std::string(static_cast<std::size_t>(n_qubits), '0');
      break;
    }
    case Family::HLF: {
      QuadraticForm form{n_qubits, std::vector<std::uint8_t>(static_cast<std::size_t>(n_qubits * n_qubits))};
      for (int i = 0; i < n_qubits; ++i) {
        for (int j = i; j < n_qubits; ++j) {
          const auto v = static_cast<std::uint8_t>(rng() >> 63);
          form.entries[static_cast<std::size_t>(i * n_qubits + j)] = v;
          form.entries[static_cast<std::size_t>(j * n_qubits + i)] = v;
        }
      }
      inst.circuit = gen_hlf(form);
      inst.initial = std::string(static_cast<std::size_t>(n_qubits), '0');
      break;
    }
    case Family::Adder: {
      const AdderLayout lay{(n_qubits - 2) / 2};
      const std::uint64_t a = uniform_index(rng, std::uint64_t{1} << lay.width);
      const std::uint64_t b = uniform_index(rng, std::uint64_t{1} << lay.width);
      inst.circuit = gen_adder(lay.width);
      inst.initial = lay.encode(a, b);
      std::string out = inst.initial;
      const std::uint64_t sum = a + b;
      for (int i = 0; i < lay.width; ++i) {
        out[static_cast<std::size_t>(lay.b(i))] = ((sum >> i) & 1U) ? '1' : '0';
      }
      out[static_cast<std::size_t>(lay.carry_out())] = ((sum >> lay.width) & 1U) ? '1' : '0';
      inst.expected_outcome = out;
      break;
    }
    case Family::RYRZ: {
      constexpr int kLayers = 2;
      std::vector<double> angles(static_cast<std::size_t>(2 * n_qubits * (kLayers + 1)));
      for (auto& a : angles) a = 2.0 * std::numbers::pi * uniform01(rng);
      inst.circuit = gen_ryrz(n_qubits, kLayers, angles);
      inst.initial = std::string(static_cast<std::size_t>(n_qubits), '0');
      break;
    }
  }
  return inst;
}

}  // namespace nisq
