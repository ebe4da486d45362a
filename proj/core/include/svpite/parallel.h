// Copyright 2026 The svpite Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SVPITE_PARALLEL_H
#define SVPITE_PARALLEL_H

#include <cstddef>
#include <functional>

namespace svpite {

/// Number of workers used for internal parallel loops.
///
/// Read from the SVPITE_THREADS environment variable (0 or unset means the
/// hardware concurrency). `set_worker_count` overrides it for the process.
size_t worker_count();
void set_worker_count(size_t workers);

/// Runs `body(begin, end)` over `[0, n)` split into fixed chunks of `grain`
/// items. Chunk boundaries never depend on the worker count, so any per-chunk
/// result is reproducible regardless of how many threads execute it.
void parallel_for_chunks(size_t n, size_t grain, const std::function<void(size_t, size_t)> &body);

/// Deterministic sum of `term(i)` for i in [0, n): fixed-size blocks are
/// summed sequentially (possibly on different workers) and the block partials
/// are combined by pairwise summation in block order.
template <typename T, typename F>
T deterministic_sum(size_t n, F &&term);

}  // namespace svpite

#include "svpite/parallel.inl"

#endif
