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

#include "svpite/trotter.h"

#include <algorithm>
#include <cmath>

#include "svpite/error.h"

namespace svpite {

TrotterProgram build_trotter(const PauliSumOperator &op, double dt, int order, uint32_t reps) {
    if (order != 1 && order != 2) {
        throw Error(ErrorKind::BadOrder, "Trotter order must be 1 or 2, got " + std::to_string(order));
    }
    if (!std::isfinite(dt)) {
        throw Error(ErrorKind::InvalidConfig, "Trotter time step must be finite");
    }
    if (reps < 1) {
        throw Error(ErrorKind::InvalidConfig, "Trotter repetitions must be >= 1");
    }
    if (!op.is_real()) {
        throw Error(ErrorKind::ComplexCoefficient, "time evolution needs a Hermitian operator");
    }
    TrotterProgram program;
    program.n_sites = op.n_sites();
    program.reps = reps;
    program.dt = dt;
    program.order = order;
    auto terms = op.terms();
    if (order == 1) {
        for (const auto &t : terms) {
            program.rotations.push_back({t.string, t.coeff.real() * dt});
        }
        return program;
    }
    for (const auto &t : terms) {
        program.rotations.push_back({t.string, t.coeff.real() * dt / 2});
    }
    // The last forward half step and the first backward half step coincide.
    for (size_t k = terms.size(); k-- > 0;) {
        double half = terms[k].coeff.real() * dt / 2;
        if (k + 1 == terms.size()) {
            program.rotations.back().angle += half;
        } else {
            program.rotations.push_back({terms[k].string, half});
        }
    }
    return program;
}

TrotterProgram build_trotter(const Hamiltonian &h, double dt, int order, uint32_t reps) {
    return build_trotter(h.op(), dt, order, reps);
}

TrotterProgram adjoint(const TrotterProgram &program) {
    TrotterProgram out = program;
    std::reverse(out.rotations.begin(), out.rotations.end());
    for (auto &rot : out.rotations) {
        rot.angle = -rot.angle;
    }
    out.direction =
        program.direction == TrotterDirection::Forward ? TrotterDirection::Backward : TrotterDirection::Forward;
    return out;
}

}  // namespace svpite
