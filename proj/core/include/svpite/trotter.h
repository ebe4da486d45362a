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

#ifndef SVPITE_TROTTER_H
#define SVPITE_TROTTER_H

#include <vector>

#include "svpite/hamiltonian.h"

namespace svpite {

/// exp(-i * angle * string)
struct PauliRotation {
    PauliString string;
    double angle;

    bool operator==(const PauliRotation &other) const = default;
};

enum class TrotterDirection { Forward, Backward };

/// Ordered rotation sequence for one repetition, applied `reps` times.
/// Rotation 0 acts on the state first.
struct TrotterProgram {
    uint32_t n_sites = 0;
    std::vector<PauliRotation> rotations;
    uint32_t reps = 1;
    double dt = 0.0;  // time per repetition
    int order = 1;
    TrotterDirection direction = TrotterDirection::Forward;

    bool operator==(const TrotterProgram &other) const = default;
};

/// Compiles exp(-i H dt) per repetition. Order 1 applies every term once with
/// angle c_k dt in canonical term order; order 2 is the symmetric sweep with
/// angles c_k dt / 2 (the two middle half-steps are fused).
/// Throws BadOrder or InvalidConfig.
TrotterProgram build_trotter(const Hamiltonian &h, double dt, int order, uint32_t reps = 1);
TrotterProgram build_trotter(const PauliSumOperator &op, double dt, int order, uint32_t reps = 1);

/// Exact operator adjoint of the compiled program: reversed order, negated
/// angles.
TrotterProgram adjoint(const TrotterProgram &program);

}  // namespace svpite

#endif
