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

#include "svpite/models.h"

#include "svpite/error.h"

namespace svpite::models {

namespace {

void require_chain(uint32_t n_sites) {
    if (n_sites < 2) {
        throw Error(ErrorKind::TooFewSites, "chain models need L >= 2, got " + std::to_string(n_sites));
    }
}

void add_bonds(Hamiltonian &h, std::string_view key, double coeff,
               const std::vector<std::pair<uint32_t, uint32_t>> &bonds) {
    for (auto [i, j] : bonds) {
        h.add_term(key, coeff, {i, j});
    }
}

}  // namespace

std::vector<std::pair<uint32_t, uint32_t>> chain_bonds(uint32_t n_sites, BoundaryCondition bc) {
    std::vector<std::pair<uint32_t, uint32_t>> bonds;
    for (uint32_t i = 0; i + 1 < n_sites; i++) {
        bonds.emplace_back(i, i + 1);
    }
    if (bc == BoundaryCondition::PBC && n_sites >= 2) {
        bonds.emplace_back(n_sites - 1, 0);
    }
    return bonds;
}

std::vector<std::pair<uint32_t, uint32_t>> square_bonds(LatticeMap2D lattice, BoundaryCondition bc) {
    std::vector<std::pair<uint32_t, uint32_t>> bonds;
    bool wrap = bc == BoundaryCondition::PBC;
    for (uint32_t y = 0; y < lattice.ly; y++) {
        for (uint32_t x = 0; x < lattice.lx; x++) {
            if (x + 1 < lattice.lx || wrap) {
                bonds.emplace_back(lattice.index(x, y), lattice.index((x + 1) % lattice.lx, y));
            }
            if (y + 1 < lattice.ly || wrap) {
                bonds.emplace_back(lattice.index(x, y), lattice.index(x, (y + 1) % lattice.ly));
            }
        }
    }
    return bonds;
}

Hamiltonian ising(uint32_t n_sites, double j, double h, BoundaryCondition bc) {
    require_chain(n_sites);
    Hamiltonian out(n_sites);
    out.add_uniform_terms("ZZ", j, bc);
    out.add_uniform_terms("X", h);
    return out;
}

Hamiltonian heisenberg(uint32_t n_sites, double j, BoundaryCondition bc) {
    return xxz(n_sites, j, 1.0, bc);
}

Hamiltonian xy(uint32_t n_sites, double j, BoundaryCondition bc) {
    require_chain(n_sites);
    Hamiltonian out(n_sites);
    out.add_uniform_terms("XX", j, bc);
    out.add_uniform_terms("YY", j, bc);
    return out;
}

Hamiltonian xxz(uint32_t n_sites, double j, double delta, BoundaryCondition bc) {
    require_chain(n_sites);
    Hamiltonian out(n_sites);
    out.add_uniform_terms("XX", j, bc);
    out.add_uniform_terms("YY", j, bc);
    out.add_uniform_terms("ZZ", j * delta, bc);
    return out;
}

Hamiltonian heisenberg_2d(uint32_t lx, uint32_t ly, double j, BoundaryCondition bc) {
    if (lx < 2 || ly < 2) {
        throw Error(ErrorKind::TooFewSites, "square lattice needs Lx, Ly >= 2");
    }
    LatticeMap2D lattice{lx, ly};
    Hamiltonian out(lattice.size());
    auto bonds = square_bonds(lattice, bc);
    for (std::string_view key : {"XX", "YY", "ZZ"}) {
        add_bonds(out, key, j, bonds);
    }
    return out;
}

}  // namespace svpite::models
