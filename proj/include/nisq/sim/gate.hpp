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

#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace nisq {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

enum class GateKind { H, X, Y, Z, S, Sdg, T, Rx, Ry, Rz, CX };

/// A gate from the supported set. Rotation gates carry an angle in radians;
/// for all other kinds the angle is ignored and kept at zero.
class Gate {
 public:
  constexpr Gate(GateKind kind, double angle = 0.0) noexcept
      : kind_(kind), angle_(is_parametric(kind) ? angle : 0.0) {}

  static constexpr Gate h() { return Gate(GateKind::H); }
  static constexpr Gate x() { return Gate(GateKind::X); }
  static constexpr Gate y() { return Gate(GateKind::Y); }
  static constexpr Gate z() { return Gate(GateKind::Z); }
  static constexpr Gate s() { return Gate(GateKind::S); }
  static constexpr Gate sdg() { return Gate(GateKind::Sdg); }
  static constexpr Gate t() { return Gate(GateKind::T); }
  static constexpr Gate rx(double theta) { return Gate(GateKind::Rx, theta); }
  static constexpr Gate ry(double theta) { return Gate(GateKind::Ry, theta); }
  static constexpr Gate rz(double theta) { return Gate(GateKind::Rz, theta); }
  static constexpr Gate cx() { return Gate(GateKind::CX); }

  static constexpr bool is_parametric(GateKind k) noexcept {
    return k == GateKind::Rx || k == GateKind::Ry || k == GateKind::Rz;
  }

  constexpr GateKind kind() const noexcept { return kind_; }
  constexpr double angle() const noexcept { return angle_; }
  constexpr int arity() const noexcept { return kind_ == GateKind::CX ? 2 : 1; }
  constexpr bool parametric() const noexcept { return is_parametric(kind_); }

  /// Lowercase file-format name: h, x, y, z, s, sdg, t, rx, ry, rz, cx.
  std::string_view name() const noexcept;

  /// 2^arity x 2^arity unitary. For cx the first target is the control and
  /// the most significant bit of the local index.
  CMatrix matrix() const;

  friend constexpr bool operator==(const Gate&, const Gate&) = default;

 private:
  GateKind kind_;
  double angle_;
};

std::optional<GateKind> parse_gate_kind(std::string_view name) noexcept;

/// Kronecker product a (x) b; `a` acts on the more significant index bits.
CMatrix tensor_product(const CMatrix& a, const CMatrix& b);

bool is_unitary(const CMatrix& m, double tol = 1e-10);

}  // namespace nisq
