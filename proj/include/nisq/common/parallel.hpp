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

#include <cstddef>
#include <functional>
#include <span>

namespace nisq {

/// Worker-count knob shared by every parallel routine. `threads == 0` means
/// "use hardware concurrency".
struct Parallelism {
  unsigned threads = 1;
  unsigned resolved() const noexcept;
};

/// Runs body(i) for i in [0, count) over contiguous blocks on up to
/// `par.resolved()` threads. Each index is visited exactly once; callers write
/// results into per-index slots so the outcome is independent of scheduling.
void parallel_for(std::size_t count, Parallelism par,
                  const std::function<void(std::size_t begin, std::size_t end)>& body);

/// Pairwise summation; the reduction tree depends only on the input length.
double pairwise_sum(std::span<const double> values) noexcept;

}  // namespace nisq
