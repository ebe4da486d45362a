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

#include "svpite/shot.h"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <map>

#include "svpite/error.h"
#include "svpite/parallel.h"

namespace svpite {

namespace {

// Salt separating the measurement streams from the survival streams.
constexpr uint64_t kMeasureSalt = 0x6D65617375726521ULL;

MeasurementBasis basis_of(const PauliString &string) {
    switch (string.labels().front()) {
        case 'X':
            return MeasurementBasis::X;
        case 'Y':
            return MeasurementBasis::Y;
        default:
            return MeasurementBasis::Z;
    }
}

/// Cumulative outcome distribution of `state` read out in `basis`.
std::vector<double> outcome_cdf(const StateVector &state, MeasurementBasis basis) {
    StateVector rotated = state;
    for (uint32_t site = 0; site < state.n_sites(); site++) {
        if (basis == MeasurementBasis::Y) {
            apply_single_qubit_gate(rotated, site, gates::s_dagger());
        }
        if (basis != MeasurementBasis::Z) {
            apply_single_qubit_gate(rotated, site, gates::hadamard());
        }
    }
    std::vector<double> cdf(rotated.dim());
    double acc = 0;
    for (size_t b = 0; b < cdf.size(); b++) {
        acc += std::norm(rotated[b]);
        cdf[b] = acc;
    }
    return cdf;
}

uint64_t sample_outcome(const std::vector<double> &cdf, Rng &rng) {
    double u = rng.uniform() * cdf.back();
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    return static_cast<uint64_t>(std::min<size_t>(it - cdf.begin(), cdf.size() - 1));
}

double group_value(const std::vector<PauliTerm> &group, uint64_t bits) {
    double value = 0;
    for (const auto &term : group) {
        double sign = (std::popcount(bits & term.string.support_mask()) & 1) ? -1.0 : 1.0;
        value += term.coeff.real() * sign;
    }
    return value;
}

}  // namespace

MeasurementPlan MeasurementPlan::from_hamiltonian(const Hamiltonian &h) {
    MeasurementPlan plan;
    for (const auto &term : h.terms()) {
        plan.groups[static_cast<size_t>(basis_of(term.string))].push_back(term);
    }
    return plan;
}

std::vector<MeasurementBasis> MeasurementPlan::active_bases() const {
    std::vector<MeasurementBasis> out;
    for (auto basis : {MeasurementBasis::Z, MeasurementBasis::X, MeasurementBasis::Y}) {
        if (!group(basis).empty()) {
            out.push_back(basis);
        }
    }
    return out;
}

EnergyEstimate measure_energy(std::span<const StateVector *const> surviving_states, const Hamiltonian &h,
                              const MeasurementPlan &plan, std::span<Rng> shot_rngs) {
    if (surviving_states.empty()) {
        throw Error(ErrorKind::AllShotsDiscarded, "no surviving shots to measure");
    }
    if (shot_rngs.size() != surviving_states.size()) {
        throw Error(ErrorKind::InvalidConfig, "need one generator per surviving shot");
    }
    auto active = plan.active_bases();
    EnergyEstimate estimate;
    if (active.empty()) {
        return estimate;
    }
    if (surviving_states.size() < active.size()) {
        throw Error(ErrorKind::EmptyGroupAllocation, std::to_string(surviving_states.size()) + " shot(s) for " +
                                                         std::to_string(active.size()) + " non-empty basis groups");
    }

    std::map<std::pair<const StateVector *, MeasurementBasis>, std::vector<double>> cdfs;
    std::vector<double> values(surviving_states.size());
    for (size_t k = 0; k < surviving_states.size(); k++) {
        MeasurementBasis basis = active[k % active.size()];
        auto key = std::make_pair(surviving_states[k], basis);
        auto it = cdfs.find(key);
        if (it == cdfs.end()) {
            it = cdfs.emplace(key, outcome_cdf(*surviving_states[k], basis)).first;
        }
        values[k] = group_value(plan.group(basis), sample_outcome(it->second, shot_rngs[k]));
    }

    double variance = 0;
    double total = 0;
    for (size_t g = 0; g < active.size(); g++) {
        double sum = 0;
        size_t n = 0;
        for (size_t k = g; k < values.size(); k += active.size()) {
            sum += values[k];
            n++;
        }
        double mean = sum / n;
        double ss = 0;
        for (size_t k = g; k < values.size(); k += active.size()) {
            ss += (values[k] - mean) * (values[k] - mean);
        }
        double sample_var = n > 1 ? ss / (n - 1) : 0.0;
        total += mean;
        variance += sample_var / n;
    }
    double sites = h.n_sites();
    estimate.energy = total / sites;
    estimate.std = std::sqrt(variance) / sites;
    return estimate;
}

EnergyEstimate measure_energy(std::span<const StateVector *const> surviving_states, const Hamiltonian &h,
                              const MeasurementPlan &plan, Rng &rng) {
    std::vector<Rng> rngs;
    rngs.reserve(surviving_states.size());
    for (size_t k = 0; k < surviving_states.size(); k++) {
        rngs.push_back(Rng(rng.next_u64()));
    }
    return measure_energy(surviving_states, h, plan, rngs);
}

ShotResult run_shot(const PITEConfig &config, const Hamiltonian &h, uint64_t seed, const ShotRunOptions &options) {
    auto start = std::chrono::steady_clock::now();
    config.validate();
    ShotResult result;
    result.config = config;
    result.seed = seed;
    PITEParams params = derive_params(config.gamma);
    StepPrograms programs = compile_step_programs(h, params, config.dt, config.order, config.reps_per_step);

    // A surviving trajectory's state after step j does not depend on which
    // shot it belongs to, so the success branch is evaluated once per step
    // and shared. The chain stops once the branch vanishes.
    StateVector state = init_state(config.initial_state, h.n_sites());
    std::vector<double> p0;
    p0.reserve(config.n_steps);
    for (uint32_t step = 0; step < config.n_steps; step++) {
        try {
            StepOutcome outcome = pite_step(state, params, programs);
            p0.push_back(outcome.p0);
            state = std::move(outcome.state);
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::VanishingNorm) {
                throw;
            }
            p0.resize(config.n_steps, 0.0);
            break;
        }
    }

    // Step at which each shot was discarded (n_steps when it survived).
    const uint32_t n_steps = config.n_steps;
    std::vector<uint32_t> failed_at(config.n_shots, n_steps);
    parallel_for_chunks(config.n_shots, 256, [&](size_t lo, size_t hi) {
        for (size_t shot = lo; shot < hi; shot++) {
            Rng rng = Rng::stream(seed, shot);
            for (uint32_t step = 0; step < n_steps; step++) {
                if (!(rng.uniform() < p0[step])) {
                    failed_at[shot] = step;
                    break;
                }
            }
        }
    });

    std::vector<uint64_t> discarded(n_steps + 1, 0);
    for (uint32_t f : failed_at) {
        discarded[f]++;
    }
    result.survivors.push_back(config.n_shots);
    result.probabilities.push_back(1.0);
    for (uint32_t step = 0; step < n_steps; step++) {
        uint64_t before = result.survivors.back();
        uint64_t after = before - discarded[step];
        result.survivors.push_back(after);
        result.probabilities.push_back(before == 0 ? 0.0 : static_cast<double>(after) / before);
    }

    uint64_t alive = result.survivors.back();
    if (alive > 0 && alive >= options.min_survivors) {
        std::vector<const StateVector *> states(alive, &state);
        std::vector<Rng> rngs;
        rngs.reserve(alive);
        for (size_t shot = 0; shot < failed_at.size(); shot++) {
            if (failed_at[shot] == n_steps) {
                rngs.push_back(Rng::stream(seed ^ kMeasureSalt, shot));
            }
        }
        MeasurementPlan plan = MeasurementPlan::from_hamiltonian(h);
        EnergyEstimate estimate = measure_energy(states, h, plan, rngs);
        result.energy = estimate.energy;
        result.energy_std = estimate.std;
    }
    result.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

ShotResult run_shot_checked(const PITEConfig &config, const Hamiltonian &h, uint64_t seed) {
    ShotResult result = run_shot(config, h, seed);
    if (!result.energy) {
        throw Error(ErrorKind::AllShotsDiscarded, std::to_string(result.survivors.back()) +
                                                      " surviving shot(s), below the minimum of " +
                                                      std::to_string(kMinSurvivorsForEnergy));
    }
    return result;
}

CircuitCheck verify_circuit_equivalence(const Hamiltonian &h, const StateVector &state, const PITEParams &params,
                                        double dtau, int order) {
    const uint32_t n = h.n_sites();
    if (state.n_sites() != n) {
        throw Error(ErrorKind::SiteCountMismatch, "state and Hamiltonian site counts differ");
    }
    StepPrograms programs = compile_step_programs(h, params, dtau, order);

    // Ancilla is the most significant qubit: the lower half of the register
    // is the ancilla-|0> block, the upper half the ancilla-|1> block.
    StateVector full(n + 1);
    auto amps = full.amplitudes();
    std::copy(state.amplitudes().begin(), state.amplitudes().end(), amps.begin());
    const size_t half = state.dim();
    std::span<complex> block0 = amps.subspan(0, half);
    std::span<complex> block1 = amps.subspan(half, half);

    apply_single_qubit_gate(amps, n, gates::w());
    evolve(block0, programs.forward);
    evolve(block1, programs.backward);
    apply_single_qubit_gate(amps, n, gates::rz(-2.0 * params.theta0));
    apply_single_qubit_gate(amps, n, gates::s());
    apply_single_qubit_gate(amps, n, gates::hadamard());

    CircuitCheck check{0.0, 0.0, 0.0, StateVector(n), StateVector(n)};
    std::copy(block0.begin(), block0.end(), check.success_state.amplitudes().begin());
    std::copy(block1.begin(), block1.end(), check.failure_state.amplitudes().begin());
    check.success_probability = check.success_state.norm_squared();
    check.failure_probability = check.failure_state.norm_squared();

    StateVector reference = combine_branches(state, programs, success_weights(params), EvolutionMode::Sequential);
    double norms = check.success_probability * reference.norm_squared();
    check.infidelity = norms > 0 ? 1.0 - std::norm(inner(reference, check.success_state)) / norms : 1.0;
    return check;
}

}  // namespace svpite
