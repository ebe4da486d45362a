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

#ifndef SVPITE_WORKBENCH_RUNSPEC_H
#define SVPITE_WORKBENCH_RUNSPEC_H

#include <filesystem>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "svpite/dsf.h"
#include "svpite/ed.h"
#include "svpite/hamiltonian.h"
#include "svpite/pite.h"

namespace svpite::workbench {

enum class Algorithm { SV, Shot, ED, DSF, Sweep, Bench };

std::string_view algorithm_name(Algorithm algorithm);
Algorithm parse_algorithm(std::string_view name);

struct UniformTermSpec {
    std::string key;
    double coeff = 0;
    std::optional<BoundaryCondition> bc;
};

struct ExplicitTermSpec {
    std::string key;
    double coeff = 0;
    std::vector<std::vector<uint32_t>> sites;
};

struct ModelSpec {
    std::string type;  // ising, heisenberg, xy, xxz, heisenberg_2d, terms
    uint32_t n_sites = 0;  // L, or Lx * Ly for the square lattice
    uint32_t lx = 0;
    uint32_t ly = 0;
    double j = 1.0;
    double h = 0.0;      // ising transverse field
    double delta = 1.0;  // xxz anisotropy
    double hz = 0.0;     // xxz longitudinal field
    BoundaryCondition bc = BoundaryCondition::PBC;
    std::vector<UniformTermSpec> uniform_terms;
    std::vector<ExplicitTermSpec> terms;
};

enum class GroundStateSource { ED, SV, File };

struct DSFSpec {
    DSFConfig config;
    GroundStateSource ground_state = GroundStateSource::ED;
    std::string state_file;
};

struct SweepSpec {
    std::vector<double> gammas;
    bool ed_reference = true;
};

struct BenchSpec {
    std::vector<uint32_t> sizes{8, 12, 16};
    uint32_t size_grid_steps = 10;
    std::vector<uint32_t> steps_grid{10, 20, 40, 80};
    uint32_t steps_grid_size = 16;
    uint32_t repetitions = 3;
};

struct RunSpec {
    std::optional<Algorithm> algorithm;
    ModelSpec model;
    PITEConfig pite;
    EvolutionMode mode = EvolutionMode::Sequential;
    std::string initial_state_file;  // overrides pite.initial_state when set
    EDConfig ed;
    DSFSpec dsf;
    SweepSpec sweep;
    BenchSpec bench;
    uint64_t seed = 0;
};

/// Validates the document and applies defaults. Throws SchemaError (with the
/// offending field path), UnknownModel or UnknownAlgorithm.
RunSpec parse_runspec(const nlohmann::json &doc);
RunSpec parse_runspec_file(const std::filesystem::path &path);

/// Normalized echo with every default spelled out; parse_runspec(to_json(s))
/// reproduces s.
nlohmann::json to_json(const RunSpec &spec);

Hamiltonian build_hamiltonian(const ModelSpec &model);

/// "start:stop:step" (inclusive) or a comma separated list.
std::vector<double> parse_gamma_list(std::string_view text);

}  // namespace svpite::workbench

#endif
