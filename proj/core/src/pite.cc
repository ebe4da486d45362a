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

#include "svpite/pite.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <thread>

#include "svpite/error.h"

namespace svpite {

std::string_view evolution_mode_name(EvolutionMode mode) {
    return mode == EvolutionMode::ParallelPair ? "parallel_pair" : "sequential";
}

EvolutionMode parse_evolution_mode(std::string_view name) {
    if (name == "sequential") {
        return EvolutionMode::Sequential;
    }
    if (name == "parallel_pair") {
        return EvolutionMode::ParallelPair;
    }
    throw Error(ErrorKind::InvalidConfig, "unknown evolution mode '" + std::string(name) + "'");
}

void PITEConfig::validate() const {
    if (!(gamma > 0.0 && gamma < 1.0)) {
        throw Error(ErrorKind::GammaOutOfRange, "gamma must lie in (0, 1), got " + std::to_string(gamma));
    }
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw Error(ErrorKind::InvalidConfig, "imaginary-time step dt must be positive");
    }
    if (order != 1 && order != 2) {
        throw Error(ErrorKind::BadOrder, "Trotter order must be 1 or 2");
    }
    if (n_shots < 1) {
        throw Error(ErrorKind::InvalidConfig, "n_shots must be >= 1");
    }
    if (reps_per_step < 1) {
        throw Error(ErrorKind::InvalidConfig, "reps_per_step must be >= 1");
    }
}

PITEParams derive_params(double gamma) {
    if (!(gamma > 0.0 && gamma < 1.0)) {
        throw Error(ErrorKind::GammaOutOfRange, "gamma must lie in (0, 1), got " + std::to_string(gamma));
    }
    PITEParams p;
    double co = std::sqrt(1.0 - gamma * gamma);
    double threshold = 1.0 / std::numbers::sqrt2;
    p.kappa = gamma > threshold ? 1 : (gamma < threshold ? -1 : 0);
    double arg = std::clamp((gamma + co) / std::numbers::sqrt2, -1.0, 1.0);
    p.theta0 = p.kappa * std::acos(arg);
    p.s1 = gamma / co;
    return p;
}

BranchWeights success_weights(const PITEParams &params) {
    const double norm = 1.0 / (2.0 * std::numbers::sqrt2);
    return {complex(1, -1) * std::polar(norm, params.theta0), complex(1, 1) * std::polar(norm, -params.theta0)};
}

BranchWeights failure_weights(const PITEParams &params) {
    const double norm = 1.0 / (2.0 * std::numbers::sqrt2);
    return {complex(1, -1) * std::polar(norm, params.theta0), -complex(1, 1) * std::polar(norm, -params.theta0)};
}

StepPrograms compile_step_programs(const Hamiltonian &h, const PITEParams &params, double dtau, int order,
                                   uint32_t reps_per_step) {
    if (reps_per_step < 1) {
        throw Error(ErrorKind::InvalidConfig, "reps_per_step must be >= 1");
    }
    double real_time = params.s1 * dtau;
    StepPrograms out;
    out.forward = build_trotter(h, real_time / reps_per_step, order, reps_per_step);
    out.backward = adjoint(out.forward);
    return out;
}

StateVector combine_branches(const StateVector &state, const StepPrograms &programs, const BranchWeights &weights,
                             EvolutionMode mode) {
    StateVector fw = state;
    StateVector bw = state;
    if (mode == EvolutionMode::ParallelPair) {
        std::thread backward([&] { evolve(bw, programs.backward); });
        evolve(fw, programs.forward);
        backward.join();
    } else {
        evolve(fw, programs.forward);
        evolve(bw, programs.backward);
    }
    auto out = fw.amplitudes();
    auto back = bw.amplitudes();
    for (size_t i = 0; i < out.size(); i++) {
        out[i] = weights.forward * out[i] + weights.backward * back[i];
    }
    return fw;
}

StepOutcome pite_step(const StateVector &state, const PITEParams &params, const StepPrograms &programs,
                      EvolutionMode mode) {
    StateVector next = combine_branches(state, programs, success_weights(params), mode);
    double p0 = next.norm_squared();
    if (!(p0 >= kVanishingNorm)) {
        throw Error(ErrorKind::VanishingNorm, "post-selected branch norm " + std::to_string(p0) + " below 1e-14");
    }
    next *= complex(1.0 / std::sqrt(p0), 0.0);
    return {std::move(next), p0};
}

SVResult run_sv(const PITEConfig &config, const Hamiltonian &h, const SVRunOptions &options) {
    auto start = std::chrono::steady_clock::now();
    config.validate();
    SVResult result;
    result.config = config;
    result.params = derive_params(config.gamma);
    StepPrograms programs =
        compile_step_programs(h, result.params, config.dt, config.order, config.reps_per_step);

    const double sites = h.n_sites();
    StateVector state = init_state(config.initial_state, h.n_sites());
    result.energies.reserve(config.n_steps + 1);
    result.probabilities.reserve(config.n_steps + 1);
    result.energies.push_back(expectation(state, h) / sites);
    result.probabilities.push_back(1.0);
    result.cumulative_success.push_back(1.0);
    for (uint32_t step = 0; step < config.n_steps; step++) {
        StepOutcome outcome = pite_step(state, result.params, programs, options.mode);
        state = std::move(outcome.state);
        result.probabilities.push_back(outcome.p0);
        result.cumulative_success.push_back(result.cumulative_success.back() * outcome.p0);
        result.energies.push_back(expectation(state, h) / sites);
    }
    if (options.return_state) {
        result.final_state = std::move(state);
    }
    result.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace svpite
