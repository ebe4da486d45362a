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

#include <algorithm>
#include <vector>

namespace svpite {

namespace internal {

constexpr size_t kSumBlock = 4096;

template <typename T>
T pairwise_combine(std::vector<T> &parts) {
    if (parts.empty()) {
        return T{};
    }
    size_t n = parts.size();
    while (n > 1) {
        size_t half = (n + 1) / 2;
        for (size_t k = 0; k + half < n; k++) {
            parts[k] += parts[k + half];
        }
        n = half;
    }
    return parts[0];
}

}  // namespace internal

template <typename T, typename F>
T deterministic_sum(size_t n, F &&term) {
    size_t blocks = (n + internal::kSumBlock - 1) / internal::kSumBlock;
    std::vector<T> parts(blocks, T{});
    parallel_for_chunks(blocks, 1, [&](size_t b0, size_t b1) {
        for (size_t b = b0; b < b1; b++) {
            size_t lo = b * internal::kSumBlock;
            size_t hi = std::min(n, lo + internal::kSumBlock);
            T acc{};
            for (size_t i = lo; i < hi; i++) {
                acc += term(i);
            }
            parts[b] = acc;
        }
    });
    return internal::pairwise_combine(parts);
}

}  // namespace svpite
