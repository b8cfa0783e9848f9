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

#include <span>

namespace nisq {

/// Parameters of survival(m) = A0 (1 - p)^m + B0.
struct DecayFit {
  double A0 = 0.0;
  double B0 = 0.0;
  double p = 0.0;
  /// Average error per Clifford, (1 - 2^-n) p.
  double r = 0.0;
  /// Root-mean-square residual of the fitted curve.
  double residual = 0.0;
  int iterations = 0;
};

/// Bounded Levenberg-Marquardt fit of A0, B0, p in [0, 1].
///
/// Starts from B0 = 2^-n, A0 = y(first) - B0 and p from a log-linear fit of
/// y - B0. Needs at least three distinct lengths. Data that is constant to
/// within 1e-12 returns p = 0 with A0 = 0 and B0 equal to the constant.
DecayFit fit_rb(std::span<const double> lengths, std::span<const double> survival, int n_qubits);

/// r divided by the mean number of CNOTs per Clifford.
double per_cnot_error(double r, double mean_cnots_per_clifford);

}  // namespace nisq
