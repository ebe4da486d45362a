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

#ifndef SVPITE_WORKBENCH_DRIVER_H
#define SVPITE_WORKBENCH_DRIVER_H

#include <filesystem>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "svpite/workbench/runspec.h"

namespace svpite::workbench {

inline constexpr const char *kToolVersion = "0.1.0";

struct SweepRecord {
    double gamma = 0;
    double final_energy = 0;  // per site
    std::vector<double> probabilities;
    double cumulative_success = 0;
    std::optional<double> infidelity;
};

/// One state-vector run per gamma on a shared Hamiltonian; records sorted by
/// gamma. Infidelity is measured against `reference` when given.
std::vector<SweepRecord> sweep_gamma(const RunSpec &spec, const Hamiltonian &h, std::vector<double> gammas,
                                     const StateVector *reference = nullptr);

struct BenchRecord {
    std::string scenario;  // "size" or "steps"
    uint32_t n_sites = 0;
    uint32_t n_steps = 0;
    EvolutionMode mode = EvolutionMode::Sequential;
    uint32_t repetitions = 0;
    double mean_s = 0;
    double std_s = 0;
};

/// Times run_sv in both evolution modes over the size and step grids. Throws
/// InvalidConfig for fewer than three repetitions and ShapeMismatch when the
/// two modes disagree.
std::vector<BenchRecord> bench(const RunSpec &spec);

void write_bench_csv(std::ostream &out, const std::vector<BenchRecord> &records);

struct RunOptions {
    std::filesystem::path out_dir;
    std::optional<uint64_t> seed;
    std::optional<std::vector<double>> gammas;
    bool dump_state = false;
    bool reproducible = false;  // report wall_time_s as 0 for byte-stable files
};

/// Executes one subcommand and writes result.json plus CSV series into
/// out_dir. Returns the result document.
nlohmann::json run(Algorithm algorithm, RunSpec spec, const RunOptions &options);

/// {"error": {"kind": ..., "message": ...}}
nlohmann::json error_json(std::string_view kind, std::string_view message);

/// Write to a sibling temporary file, then rename over the target.
void write_file_atomic(const std::filesystem::path &path, std::string_view contents);

}  // namespace svpite::workbench

#endif
