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

#ifndef SVPITE_SHOT_H
#define SVPITE_SHOT_H

#include <array>
#include <optional>
#include <vector>

#include "svpite/pite.h"
#include "svpite/rng.h"

namespace svpite {

enum class MeasurementBasis { Z = 0, X = 1, Y = 2 };

/// Partition of Hamiltonian terms into globally measurable basis groups:
/// Z and ZZ terms, X and XX terms, Y and YY terms.
struct MeasurementPlan {
    std::array<std::vector<PauliTerm>, 3> groups;

    static MeasurementPlan from_hamiltonian(const Hamiltonian &h);

    const std::vector<PauliTerm> &group(MeasurementBasis basis) const {
        return groups[static_cast<size_t>(basis)];
    }
    /// Bases that contain at least one term, in Z, X, Y order. Surviving
    /// shots are dealt round-robin over these.
    std::vector<MeasurementBasis> active_bases() const;
};

struct EnergyEstimate {
    double energy = 0;  // per site
    double std = 0;     // standard error per site
};

/// Samples one bitstring per shot in its assigned basis and combines the
/// per-group sample means. `shot_rngs[k]` drives shot k, which is assigned to
/// basis active_bases()[k % n_active].
/// Throws EmptyGroupAllocation when a non-empty group receives no shot.
EnergyEstimate measure_energy(std::span<const StateVector *const> surviving_states, const Hamiltonian &h,
                              const MeasurementPlan &plan, std::span<Rng> shot_rngs);
/// Convenience overload drawing every shot from one generator.
EnergyEstimate measure_energy(std::span<const StateVector *const> surviving_states, const Hamiltonian &h,
                              const MeasurementPlan &plan, Rng &rng);

struct ShotResult {
    std::vector<double> probabilities;  // entry 0 is 1; entry j = survivors_j / survivors_{j-1}
    std::vector<uint64_t> survivors;    // entry 0 is n_shots
    std::optional<double> energy;       // per site
    std::optional<double> energy_std;
    PITEConfig config;
    uint64_t seed = 0;
    double wall_time_s = 0;
};

/// Minimum number of surviving shots for an energy estimate.
constexpr uint64_t kMinSurvivorsForEnergy = 10;

struct ShotRunOptions {
    uint64_t min_survivors = kMinSurvivorsForEnergy;
};

/// Trajectory sampling of the one-ancilla circuit: every shot steps through
/// the post-selected update, drawing the ancilla outcome with probability P0;
/// failed shots are discarded. The energy is measured on the survivors after
/// the last step. Results depend only on (config, seed), never on the worker
/// count.
///
/// When every shot is discarded (or fewer than `min_survivors` remain) the
/// energy is left empty; `run_shot_checked` throws AllShotsDiscarded instead.
ShotResult run_shot(const PITEConfig &config, const Hamiltonian &h, uint64_t seed,
                    const ShotRunOptions &options = {});
ShotResult run_shot_checked(const PITEConfig &config, const Hamiltonian &h, uint64_t seed);

struct CircuitCheck {
    double infidelity = 0;          // 1 - |<circuit|update>|^2 / norms
    double success_probability = 0;  // ancilla found in |0>
    double failure_probability = 0;  // ancilla found in |1>
    StateVector success_state;       // post-selected system state, unnormalized
    StateVector failure_state;
};

/// Runs the explicit (L+1)-qubit step: ancilla |0>, W, forward program
/// controlled on ancilla 0 and backward program on ancilla 1, Rz(-2 theta0),
/// then S followed by H on the ancilla, and projects the ancilla. Compares the
/// |0> projection against the state-vector update.
CircuitCheck verify_circuit_equivalence(const Hamiltonian &h, const StateVector &state, const PITEParams &params,
                                        double dtau, int order = 1);

}  // namespace svpite

#endif
