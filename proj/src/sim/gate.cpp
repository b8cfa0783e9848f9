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

#include "nisq/sim/gate.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <utility>

namespace nisq {
namespace {

constexpr std::array<std::pair<std::string_view, GateKind>, 11> kNames{{
    {"h", GateKind::H},
    {"x", GateKind::X},
    {"y", GateKind::Y},
    {"z", GateKind::Z},
    {"s", GateKind::S},
    {"sdg", GateKind::Sdg},
    {"t", GateKind::T},
    {"rx", GateKind::Rx},
    {"ry", GateKind::Ry},
    {"rz", GateKind::Rz},
    {"cx", GateKind::CX},
}};

}  // namespace

std::string_view Gate::name() const noexcept {
  for (const auto& [name, kind] : kNames) {
    if (kind == kind_) return name;
  }
  return "?";
}

std::optional<GateKind> parse_gate_kind(std::string_view name) noexcept {
  for (const auto& [n, kind] : kNames) {
    if (n == name) return kind;
  }
  return std::nullopt;
}

CMatrix Gate::matrix() const {
  using std::numbers::sqrt2;
  const Complex i{0.0, 1.0};
  CMatrix m(2, 2);
  const double c = std::cos(angle_ / 2.0);
  const double s = std::sin(angle_ / 2.0);
  switch (kind_) {
    case GateKind::H:
      m << 1.0 / sqrt2, 1.0 / sqrt2, 1.0 / sqrt2, -1.0 / sqrt2;
      break;
    case GateKind::X:
      m << 0.0, 1.0, 1.0, 0.0;
      break;
    case GateKind::Y:
      m << 0.0, -i, i, 0.0;
      break;
    case GateKind::Z:
      m << 1.0, 0.0, 0.0, -1.0;
      break;
    case GateKind::S:
      m << 1.0, 0.0, 0.0, i;
      break;
    case GateKind::Sdg:
      m << 1.0, 0.0, 0.0, -i;
      break;
    case GateKind::T:
      m << 1.0, 0.0, 0.0, std::polar(1.0, std::numbers::pi / 4.0);
      break;
    case GateKind::Rx:
      m << c, -i * s, -i * s, c;
      break;
    case GateKind::Ry:
      m << c, -s, s, c;
      break;
    case GateKind::Rz:
      m << std::polar(1.0, -angle_ / 2.0), 0.0, 0.0, std::polar(1.0, angle_ / 2.0);
      break;
    case GateKind::CX:
      m = CMatrix::Zero(4, 4);
      m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
      break;
  }
  return m;
}

CMatrix tensor_product(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    }
  }
  return out;
}

bool is_unitary(const CMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const CMatrix diff = m.adjoint() * m - CMatrix::Identity(m.rows(), m.cols());
  return diff.cwiseAbs().maxCoeff() <= tol;
}

}  // namespace nisq
