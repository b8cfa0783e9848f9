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

#include "nisq/rb/fit.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "nisq/common/errors.hpp"

namespace nisq {
namespace {

struct Params {
  double a, b, p;
};

double model(const Params& x, double m) { return x.a * std::pow(1.0 - x.p, m) + x.b; }

double cost(const Params& x, std::span<const double> m, std::span<const double> y) {
  double c = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const double r = model(x, m[i]) - y[i];
    c += r * r;
  }
  return c;
}

Params clamp(Params x) {
  return {std::clamp(x.a, 0.0, 1.0), std::clamp(x.b, 0.0, 1.0), std::clamp(x.p, 0.0, 1.0)};
}

}  // namespace

DecayFit fit_rb(std::span<const double> lengths, std::span<const double> survival, int n_qubits) {
  if (lengths.size() != survival.size()) throw ValidationError("length/survival size mismatch");
  if (std::set<double>(lengths.begin(), lengths.end()).size() < 3) {
    throw ValidationError("RB fit needs at least three distinct sequence lengths");
  }
  const double floor = std::ldexp(1.0, -n_qubits);
  DecayFit fit;

  const auto [lo, hi] = std::minmax_element(survival.begin(), survival.end());
  if (*hi - *lo <= 1e-12) {
    fit.B0 = std::clamp(*lo, 0.0, 1.0);
    fit.residual = 0.0;
    return fit;
  }

  // Initial guess.
  std::size_t first = 0;
  for (std::size_t i = 1; i < lengths.size(); ++i) {
    if (lengths[i] < lengths[first]) first = i;
  }
  Params x{survival[first] - floor, floor, 0.0};
  {
    double sm = 0, sy = 0, smm = 0, smy = 0;
    int count = 0;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
      const double excess = survival[i] - floor;
      if (excess <= 0.0) continue;
      const double ly = std::log(excess);
      sm += lengths[i];
      sy += ly;
      smm += lengths[i] * lengths[i];
      smy += lengths[i] * ly;
      ++count;
    }
    const double denom = count * smm - sm * sm;
    if (count >= 2 && denom > 0.0) {
      const double slope = (count * smy - sm * sy) / denom;
      x.p = 1.0 - std::exp(slope);
    }
  }
  x = clamp(x);

  double lambda = 1e-3;
  double current = cost(x, lengths, survival);
  int it = 0;
  bool converged = false;
  while (it < 500 && !converged) {
    ++it;
    Eigen::Matrix3d jtj = Eigen::Matrix3d::Zero();
    Eigen::Vector3d jtr = Eigen::Vector3d::Zero();
    for (std::size_t i = 0; i < lengths.size(); ++i) {
      const double m = lengths[i];
      const double decay = std::pow(1.0 - x.p, m);
      const double dp = m > 0.0 ? -x.a * m * std::pow(1.0 - x.p, m - 1.0) : 0.0;
      const Eigen::Vector3d j(decay, 1.0, dp);
      jtj += j * j.transpose();
      jtr += j * (model(x, m) - survival[i]);
    }
    bool improved = false;
    for (int attempt = 0; attempt < 30 && !improved; ++attempt) {
      Eigen::Matrix3d damped = jtj;
      for (int k = 0; k < 3; ++k) damped(k, k) += lambda * std::max(jtj(k, k), 1e-12);
      const Eigen::Vector3d step = damped.ldlt().solve(-jtr);
      const Params trial = clamp({x.a + step(0), x.b + step(1), x.p + step(2)});
      const double c = cost(trial, lengths, survival);
      if (c < current) {
        converged = current - c <= 1e-15 * current || c < 1e-30;
        x = trial;
        current = c;
        lambda = std::max(lambda / 10.0, 1e-15);
        improved = true;
      } else {
        lambda *= 10.0;
      }
    }
    converged = converged || !improved;
  }
  fit.A0 = x.a;
  fit.B0 = x.b;
  fit.p = x.p;
  fit.r = (1.0 - floor) * x.p;
  fit.residual = std::sqrt(current / static_cast<double>(lengths.size()));
  fit.iterations = it;
  return fit;
}

double per_cnot_error(double r, double mean_cnots_per_clifford) {
  if (r < 0.0) throw ValidationError("error rate must be non-negative");
  if (!(mean_cnots_per_clifford > 0.0)) {
    throw ValidationError("per-CNOT error is undefined without CNOTs in the Clifford decompositions");
  }
  return r / mean_cnots_per_clifford;
}

}  // namespace nisq
