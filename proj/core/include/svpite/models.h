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

#ifndef SVPITE_MODELS_H
#define SVPITE_MODELS_H

#include "svpite/hamiltonian.h"

namespace svpite::models {

/// Row-major index of a site on an Lx x Ly square lattice.
struct LatticeMap2D {
    uint32_t lx;
    uint32_t ly;

    uint32_t index(uint32_t x, uint32_t y) const {
        return x + y * lx;
    }
    uint32_t size() const {
        return lx * ly;
    }
};

/// J sum Z_i Z_i+1 + h sum X_i
Hamiltonian ising(uint32_t n_sites, double j, double h, BoundaryCondition bc);
/// J sum (X X + Y Y + Z Z)
Hamiltonian heisenberg(uint32_t n_sites, double j, BoundaryCondition bc);
/// J sum (X X + Y Y)
Hamiltonian xy(uint32_t n_sites, double j, BoundaryCondition bc);
/// J sum (X X + Y Y + delta Z Z)
Hamiltonian xxz(uint32_t n_sites, double j, double delta, BoundaryCondition bc);
/// Nearest-neighbour Heisenberg model on the square lattice; PBC wraps both
/// axes.
Hamiltonian heisenberg_2d(uint32_t lx, uint32_t ly, double j, BoundaryCondition bc);

/// Nearest-neighbour bonds (i < j not enforced) of a chain / square lattice.
std::vector<std::pair<uint32_t, uint32_t>> chain_bonds(uint32_t n_sites, BoundaryCondition bc);
std::vector<std::pair<uint32_t, uint32_t>> square_bonds(LatticeMap2D lattice, BoundaryCondition bc);

}  // namespace svpite::models

#endif
