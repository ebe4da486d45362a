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

#ifndef SVPITE_PITE_H
#define SVPITE_PITE_H

#include <optional>
#include <vector>

#include "svpite/hamiltonian.h"
#include "svpite/state.h"
#include "svpite/trotter.h"

namespace svpite {

enum class EvolutionMode { Sequential, ParallelPair };

std::string_view evolution_mode_name(EvolutionMode mode);
EvolutionMode parse_evolution_mode(std::string_view name);

/// User parameters shared by the state-vector and shot-based runs.
/// `n_shots` is ignored by state-vector runs.
struct PITEConfig {
    double gamma = 0.0;
    uint32_t n_steps = 1;
    double dt = 0.1;  // imaginary-time step
    int order = 1;
    InitialState initial_state;
    uint32_t n_shots = 1000;
    uint64_t seed = 0;
    uint32_t reps_per_step = 1;

    /// Throws GammaOutOfRange / InvalidConfig / BadOrder.
    void validate() const;
};

/// Small-step expansion parameters of the dilated unitary.
struct PITEParams {
    int kappa = 0;       // sgn(gamma - 1/sqrt2)
    double theta0 = 0;   // kappa * arccos[(gamma + sqrt(1 - gamma^2)) / sqrt2]
    double s1 = 0;       // gamma / sqrt(1 - gamma^2)
};

/// Throws GammaOutOfRange unless 0 < gamma < 1.
PITEParams derive_params(double gamma);

/// Branch weights of the post-selected update,
/// psi_new = a_fw * U psi + a_bw * U^dagger psi.
struct BranchWeights {
    complex forward;
    complex backward;
};
/// Success outcome: (1 - i) e^{i theta0} / (2 sqrt2), (1 + i) e^{-i theta0} / (2 sqrt2).
BranchWeights success_weights(const PITEParams &params);
/// Complementary failure outcome, normalized so that both outcome
/// probabilities add to one for any state.
BranchWeights failure_weights(const PITEParams &params);

/// Forward and backward real-time programs for one imaginary-time step,
/// compiled at dt = s1 * dtau (split over `reps_per_step`).
struct StepPrograms {
    TrotterProgram forward;
    TrotterProgram backward;
};
StepPrograms compile_step_programs(const Hamiltonian &h, const PITEParams &params, double dtau, int order,
                                   uint32_t reps_per_step = 1);

/// Unnormalized combination weights.fw * fw(psi) + weights.bw * bw(psi).
/// ParallelPair evaluates the two branches concurrently on independent copies;
/// the combination is identical to Sequential.
StateVector combine_branches(const StateVector &state, const StepPrograms &programs, const BranchWeights &weights,
                             EvolutionMode mode);

struct StepOutcome {
    StateVector state;  // normalized
    double p0;
};

/// One post-selected step. Throws VanishingNorm when P0 < 1e-14.
StepOutcome pite_step(const StateVector &state, const PITEParams &params, const StepPrograms &programs,
                      EvolutionMode mode = EvolutionMode::Sequential);

constexpr double kVanishingNorm = 1e-14;

struct SVResult {
    std::vector<double> energies;       // E/L, entry 0 is the initial state
    std::vector<double> probabilities;  // entry 0 is 1
    std::vector<double> cumulative_success;  // running product of probabilities
    std::optional<StateVector> final_state;
    PITEConfig config;
    PITEParams params;
    double wall_time_s = 0;

    double final_energy() const {
        return energies.back();
    }
    double total_success() const {
        return cumulative_success.back();
    }
};

struct SVRunOptions {
    EvolutionMode mode = EvolutionMode::Sequential;
    bool return_state = false;
};

SVResult run_sv(const PITEConfig &config, const Hamiltonian &h, const SVRunOptions &options = {});

}  // namespace svpite

#endif
