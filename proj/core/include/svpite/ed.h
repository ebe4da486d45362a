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

#ifndef SVPITE_ED_H
#define SVPITE_ED_H

#include <optional>
#include <vector>

#include "svpite/hamiltonian.h"
#include "svpite/state.h"

namespace svpite {

struct EDConfig {
    double tol = 1e-10;
    uint32_t maxiter = 10000;
    std::optional<std::vector<complex>> v0;  // in the (sector) basis
    std::optional<uint32_t> n_up;
    uint64_t seed = 0;
    uint32_t krylov_dim = 100;  // vectors kept per restart cycle
    bool return_ground_state = true;

    void validate(uint32_t n_sites) const;
};

/// Bitstrings of fixed popcount, in increasing order.
class SectorBasis {
   public:
    SectorBasis(uint32_t n_sites, uint32_t n_up);

    uint32_t n_sites() const {
        return n_sites_;
    }
    uint32_t n_up() const {
        return n_up_;
    }
    size_t size() const {
        return states_.size();
    }
    uint64_t state(size_t index) const {
        return states_[index];
    }
    const std::vector<uint64_t> &states() const {
        return states_;
    }
    /// Position of `bits` in the enumeration (combinatorial rank); `bits` must
    /// have popcount n_up.
    size_t index(uint64_t bits) const;

    /// Full-space embedding of a sector vector and the reverse projection.
    StateVector embed(std::span<const complex> sector_vector) const;
    std::vector<complex> project(const StateVector &full) const;

   private:
    uint32_t n_sites_;
    uint32_t n_up_;
    std::vector<uint64_t> states_;
    std::vector<std::vector<uint64_t>> binom_;
};

/// True when every term conserves total Z: Z and ZZ terms always, XX and YY
/// only as equal-coefficient pairs on the same bond.
bool check_sector_compatibility(const Hamiltonian &h);

/// H * vector on the full space (basis == nullptr) or inside a sector.
std::vector<complex> matvec(const Hamiltonian &h, std::span<const complex> vector, const SectorBasis *basis = nullptr);

struct EDResult {
    double energy = 0;  // per site
    double total_energy = 0;
    std::optional<StateVector> ground_state;  // full-space embedding
    double residual = 0;  // ||H v - E v||
    uint32_t iterations = 0;
    uint32_t restarts = 0;
    EDConfig config;
};

/// Lanczos with full reorthogonalization, restarted from the current Ritz
/// vector each `krylov_dim` iterations; converged when the residual is below
/// tol * max(1, |E|). Up to three fresh random restarts are attempted after
/// `maxiter` iterations. Throws NotConverged, IncompatibleSector.
EDResult lanczos_ground(const Hamiltonian &h, const EDConfig &config = {});

}  // namespace svpite

#endif
