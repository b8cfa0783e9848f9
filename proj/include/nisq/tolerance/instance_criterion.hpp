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

#include <optional>

#include "nisq/circuits/generators.hpp"
#include "nisq/tolerance/criterion.hpp"

namespace nisq {

/// Criterion for a generated benchmark. With no kind given, instances with an
/// expected outcome use correct_outcome and the rest use fidelity with the
/// noiseless final state. Distribution criteria compare against the noiseless
/// output distribution.
SuccessCriterion criterion_for_instance(const BenchmarkInstance& instance,
                                        std::optional<CriterionKind> kind, double threshold);

}  // namespace nisq
