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

#include "svpite/parallel.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace svpite {

namespace {

std::atomic<size_t> g_workers{0};

size_t workers_from_env() {
    size_t workers = 0;
    if (const char *env = std::getenv("SVPITE_THREADS")) {
        try {
            workers = static_cast<size_t>(std::stoul(env));
        } catch (const std::exception &) {
            workers = 0;
        }
    }
    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    return workers;
}

}  // namespace

size_t worker_count() {
    size_t w = g_workers.load(std::memory_order_relaxed);
    if (w == 0) {
        w = workers_from_env();
        g_workers.store(w, std::memory_order_relaxed);
    }
    return w;
}

void set_worker_count(size_t workers) {
    g_workers.store(workers == 0 ? workers_from_env() : workers, std::memory_order_relaxed);
}

void parallel_for_chunks(size_t n, size_t grain, const std::function<void(size_t, size_t)> &body) {
    if (n == 0) {
        return;
    }
    grain = std::max<size_t>(grain, 1);
    size_t chunks = (n + grain - 1) / grain;
    size_t workers = std::min(worker_count(), chunks);
    if (workers <= 1) {
        for (size_t c = 0; c < chunks; c++) {
            body(c * grain, std::min(n, (c + 1) * grain));
        }
        return;
    }
    std::atomic<size_t> next{0};
    auto run = [&] {
        for (size_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) {
            body(c * grain, std::min(n, (c + 1) * grain));
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (size_t w = 1; w < workers; w++) {
        pool.emplace_back(run);
    }
    run();
    for (auto &t : pool) {
        t.join();
    }
}

}  // namespace svpite
