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

#include "nisq/rb/clifford.hpp"

#include <bit>
#include <cmath>
#include <queue>
#include <tuple>

#include "nisq/circuits/builder.hpp"
#include "nisq/common/errors.hpp"
#include "nisq/noise/channel.hpp"
#include "nisq/noise/density_matrix.hpp"

namespace nisq {

boost::multiprecision::cpp_int clifford_group_size(int n) {
  using boost::multiprecision::cpp_int;
  if (n < 1) throw ValidationError("Clifford group size needs n >= 1");
  cpp_int size = cpp_int(1) << (2 * n + n * n);
  for (int j = 1; j <= n; ++j) size *= (cpp_int(1) << (2 * j)) - 1;
  return size;
}

CMatrix canonicalize_phase(const CMatrix& u) {
  for (Eigen::Index r = 0; r < u.rows(); ++r) {
    for (Eigen::Index c = 0; c < u.cols(); ++c) {
      const double mag = std::abs(u(r, c));
      if (mag > 1e-9) return u * (std::conj(u(r, c)) / mag);
    }
  }
  return u;
}

bool is_clifford(const CMatrix& u, double tol) {
  const Eigen::Index dim = u.rows();
  const int n = std::countr_zero(static_cast<unsigned long>(dim));
  const std::size_t terms = std::size_t{1} << (2 * n);
  std::vector<CMatrix> paulis;
  for (std::size_t k = 0; k < terms; ++k) paulis.push_back(pauli_string(k, n));
  for (std::size_t k = 1; k < terms; ++k) {
    const CMatrix image = u * paulis[k] * u.adjoint();
    bool found = false;
    for (std::size_t j = 1; j < terms && !found; ++j) {
      const Complex overlap = (paulis[j] * image).trace() / static_cast<double>(dim);
      found = std::abs(std::abs(overlap.real()) - 1.0) < tol && std::abs(overlap.imag()) < tol;
    }
    if (!found) return false;
  }
  return true;
}

CMatrix sequence_unitary(const std::vector<Operation>& ops, int n_qubits) {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  CMatrix u = CMatrix::Identity(dim, dim);
  for (const auto& op : ops) u = embed_operator(op.gate.matrix(), op.qubits(), n_qubits) * u;
  return u;
}

std::string CliffordGroup::key(const CMatrix& canonical) {
  std::string k;
  k.reserve(static_cast<std::size_t>(canonical.size()) * 2 * sizeof(std::int32_t));
  const auto push = [&k](double v) {
    const auto q = static_cast<std::int32_t>(std::llround(v * 1e7));
    k.append(reinterpret_cast<const char*>(&q), sizeof(q));
  };
  for (Eigen::Index i = 0; i < canonical.size(); ++i) {
    push(canonical(i).real());
    push(canonical(i).imag());
  }
  return k;
}

void CliffordGroup::add(CMatrix canonical, std::vector<Operation> decomposition) {
  CliffordElement e;
  e.index = elements_.size();
  e.unitary = std::move(canonical);
  e.decomposition = std::move(decomposition);
  for (const auto& op : e.decomposition) e.cnot_count += op.gate.kind() == GateKind::CX ? 1 : 0;
  lookup_.emplace(key(e.unitary), e.index);
  elements_.push_back(std::move(e));
}

CliffordGroup CliffordGroup::build(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 2) {
    throw ValidationError("Clifford group construction supports 1 or 2 qubits");
  }
  std::vector<Operation> generators;
  for (int q = 0; q < n_qubits; ++q) generators.emplace_back(Gate::h(), q);
  for (int q = 0; q < n_qubits; ++q) generators.emplace_back(Gate::s(), q);
  if (n_qubits == 2) generators.emplace_back(Gate::cx(), 0, 1);
  std::vector<CMatrix> generator_unitaries;
  for (const auto& g : generators) {
    generator_unitaries.push_back(embed_operator(g.gate.matrix(), g.qubits(), n_qubits));
  }

  // Dijkstra over (cnots, gates, discovery order); the discovery counter
  // makes tie-breaking, and so element numbering, deterministic.
  struct Node {
    int cnots;
    int gates;
    std::size_t order;
    std::size_t parent;
    int generator;
  };
  const auto later = [](const Node& a, const Node& b) {
    return std::tie(a.cnots, a.gates, a.order) > std::tie(b.cnots, b.gates, b.order);
  };
  std::priority_queue<Node, std::vector<Node>, decltype(later)> frontier(later);
  std::vector<CMatrix> discovered;
  std::unordered_map<std::string, bool> settled;

  CliffordGroup group;
  group.n_qubits_ = n_qubits;
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;

  discovered.push_back(CMatrix::Identity(dim, dim));
  frontier.push({0, 0, 0, 0, -1});
  std::size_t next_order = 1;
  // Parent element index for each discovery.
  std::vector<std::size_t> parent_element{0};

  while (!frontier.empty()) {
    const Node node = frontier.top();
    frontier.pop();
    const CMatrix& u = discovered[node.order];
    const std::string k = key(u);
    if (group.lookup_.contains(k)) continue;

    std::vector<Operation> decomposition;
    if (node.generator >= 0) {
      decomposition = group.elements_[parent_element[node.order]].decomposition;
      decomposition.push_back(generators[static_cast<std::size_t>(node.generator)]);
    }
    group.add(u, std::move(decomposition));
    const std::size_t element = group.elements_.size() - 1;

    for (std::size_t g = 0; g < generators.size(); ++g) {
      CMatrix next = canonicalize_phase(generator_unitaries[g] * group.elements_[element].unitary);
      if (group.lookup_.contains(key(next))) continue;
      const int is_cx = generators[g].gate.kind() == GateKind::CX ? 1 : 0;
      discovered.push_back(std::move(next));
      parent_element.push_back(element);
      frontier.push({node.cnots + is_cx, node.gates + 1, next_order++, element, static_cast<int>(g)});
    }
  }
  if (clifford_group_size(n_qubits) != group.size()) {
    throw NumericalError("Clifford closure produced " + std::to_string(group.size()) + " elements");
  }
  return group;
}

CliffordGroup CliffordGroup::from_decompositions(
    int n_qubits, const std::vector<std::vector<Operation>>& decompositions) {
  if (n_qubits < 1 || n_qubits > 2) throw ValidationError("Clifford groups support 1 or 2 qubits");
  CliffordGroup group;
  group.n_qubits_ = n_qubits;
  for (const auto& d : decompositions) {
    for (const auto& op : d) {
      const GateKind k = op.gate.kind();
      if (k != GateKind::H && k != GateKind::S && k != GateKind::CX) {
        throw ValidationError("Clifford decompositions may only use h, s and cx");
      }
      validate_layer(Layer{op}, n_qubits);
    }
    CMatrix u = canonicalize_phase(sequence_unitary(d, n_qubits));
    if (group.lookup_.contains(key(u))) throw ValidationError("duplicate Clifford element in cache");
    group.add(std::move(u), d);
  }
  if (clifford_group_size(n_qubits) != group.size()) {
    throw ValidationError("cached Clifford group has the wrong number of elements");
  }
  return group;
}

std::optional<std::size_t> CliffordGroup::find(const CMatrix& u) const {
  const auto it = lookup_.find(key(canonicalize_phase(u)));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t CliffordGroup::compose(std::size_t second, std::size_t first) const {
  const auto idx = find(elements_.at(second).unitary * elements_.at(first).unitary);
  if (!idx) throw NumericalError("Clifford product left the group");
  return *idx;
}

std::size_t CliffordGroup::inverse(std::size_t index) const {
  const auto idx = find(elements_.at(index).unitary.adjoint());
  if (!idx) throw NumericalError("Clifford inverse not found in the group");
  return *idx;
}

double CliffordGroup::mean_cnot_count() const {
  double total = 0.0;
  for (const auto& e : elements_) total += e.cnot_count;
  return total / static_cast<double>(elements_.size());
}

const CliffordElement& clifford_inverse(const CliffordElement& element, const CliffordGroup& group) {
  const auto idx = group.find(element.unitary.adjoint());
  if (!idx) throw NumericalError("Clifford inverse not found in the group");
  return group[*idx];
}

RBSequence generate_rb_sequence(int m, const CliffordGroup& group, Rng& rng,
                                std::optional<std::size_t> interleaved) {
  if (m < 1) throw ValidationError("RB sequence length must be at least 1");
  if (interleaved && *interleaved >= group.size()) throw ValidationError("interleaved element not in group");
  RBSequence seq;
  std::size_t composite = 0;
  for (int k = 0; k < m; ++k) {
    const std::size_t c = uniform_index(rng, group.size());
    seq.cliffords.push_back(c);
    composite = group.compose(c, composite);
    if (interleaved) {
      seq.cliffords.push_back(*interleaved);
      composite = group.compose(*interleaved, composite);
    }
  }
  seq.cliffords.push_back(group.inverse(composite));

  CircuitBuilder builder(group.n_qubits());
  for (std::size_t c : seq.cliffords) {
    for (const auto& op : group[c].decomposition) {
      if (op.gate.arity() == 1) {
        builder.add(op.gate, op.targets[0]);
      } else {
        builder.add(op.gate, op.targets[0], op.targets[1]);
      }
    }
  }
  seq.circuit = builder.build();
  return seq;
}

}  // namespace nisq
