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

#include "nisq/tolerance/instance_criterion.hpp"

#include <string>

#include "nisq/common/errors.hpp"
#include "nisq/sim/simulator.hpp"

namespace nisq {

SuccessCriterion criterion_for_instance(const BenchmarkInstance& instance,
                                        std::optional<CriterionKind> kind, double threshold) {
  if (!kind) kind = instance.expected_outcome ? CriterionKind::CorrectOutcome : CriterionKind::Fidelity;
  const StateVector ideal = run_circuit(instance.circuit, instance.initial);
  switch (*kind) {
    case CriterionKind::CorrectOutcome:
    case CriterionKind::AcceptableSet:
      if (!instance.expected_outcome) {
        throw ValidationError(std::string("family '") + std::string(family_name(instance.family)) +
                              "' has no single expected outcome; use fidelity, tvd, heavy or xeb");
      }
      return *kind == CriterionKind::CorrectOutcome
                 ? SuccessCriterion::correct_outcome(*instance.expected_outcome, threshold)
                 : SuccessCriterion::acceptable_set({*instance.expected_outcome}, threshold);
    case CriterionKind::Fidelity:
      return SuccessCriterion::fidelity(ideal, threshold);
    case CriterionKind::TotalVariation:
      return SuccessCriterion::total_variation(measure_distribution(ideal), threshold);
    case CriterionKind::HeavyOutput:
      return SuccessCriterion::heavy_output(measure_distribution(ideal), threshold);
    case CriterionKind::CrossEntropy:
      return SuccessCriterion::cross_entropy(measure_distribution(ideal), threshold);
  }
  throw ValidationError("unknown criterion");
}

}  // namespace nisq
