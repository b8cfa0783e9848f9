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

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "nisq/gst/lgst.hpp"
#include "nisq/rb/clifford.hpp"
#include "nisq/rb/rb.hpp"
#include "nisq/tolerance/estimators.hpp"
#include "nisq/tolerance/tolerance.hpp"

namespace nisq {

struct ScanRow {
  std::string circuit_id;
  std::string family;
  int n = 0;
  int d = 0;
  long long area = 0;
  double p = 0.0;
  double success_prob = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::string method;
  std::string criterion;
  double threshold = 0.0;
};

struct TolerableRow {
  std::string circuit_id;
  std::string family;
  int n = 0;
  int d = 0;
  long long area = 0;
  double p_star = 0.0;
  double bound = 0.0;
};

inline constexpr const char* kScanCsvHeader =
    "circuit_id,family,n,d,area,p,success_prob,ci_low,ci_high,method,criterion,threshold";
inline constexpr const char* kTolerableCsvHeader = "circuit_id,family,n,d,area,p_star,bound";

/// Shortest decimal text that reads back to the same double.
std::string format_number(double value);

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows);
void write_tolerable_csv(std::ostream& out, const std::vector<TolerableRow>& rows);
nlohmann::json scan_json(const std::vector<ScanRow>& rows);
nlohmann::json tolerable_json(const std::vector<TolerableRow>& rows);

/// {config, per_m: [{m, mean_survival, stderr}], fit: {A0, B0, p, r}, ...}
nlohmann::json rb_report(const RBConfig& config, const RBResult& result);
nlohmann::json interleaved_rb_report(const RBConfig& config, const InterleavedRBResult& result);

/// {fiducials, gram_condition_number, gates: {name: PTM row-major}, spam,
/// diagnostics: {min_choi_eigenvalue}}
nlohmann::json gst_report(const GSTEstimate& estimate);

/// Versioned list of per-element decompositions.
nlohmann::json clifford_group_to_json(const CliffordGroup& group);
CliffordGroup clifford_group_from_json(const nlohmann::json& j);

}  // namespace nisq
