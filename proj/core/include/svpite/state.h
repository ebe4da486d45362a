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

#ifndef SVPITE_STATE_H
#define SVPITE_STATE_H

#include <array>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "svpite/hamiltonian.h"
#include "svpite/pauli.h"
#include "svpite/trotter.h"

namespace svpite {

/// Largest register the state engine allocates.
constexpr uint32_t kMaxStateSites = 30;

/// 2^L complex amplitudes. Basis index b has bit j equal to the state of
/// site j; bit value 0 is the +1 eigenstate of Z.
class StateVector {
   public:
    /// All-zero amplitudes.
    explicit StateVector(uint32_t n_sites);
    StateVector(uint32_t n_sites, std::vector<complex> amplitudes);

    uint32_t n_sites() const {
        return n_sites_;
    }
    size_t dim() const {
        return amps_.size();
    }
    std::span<complex> amplitudes() {
        return amps_;
    }
    std::span<const complex> amplitudes() const {
        return amps_;
    }
    complex &operator[](size_t index) {
        return amps_[index];
    }
    const complex &operator[](size_t index) const {
        return amps_[index];
    }

    double norm_squared() const;
    double norm() const;
    /// Divides by the norm; throws NotNormalizable for a zero vector.
    void normalize();

    StateVector &operator*=(complex scale);
    StateVector &operator+=(const StateVector &other);

   private:
    uint32_t n_sites_;
    std::vector<complex> amps_;
};

enum class InitialStateKind { Zero, One, Plus, Minus, Neel, Singlet, Random, Explicit };

std::string_view initial_state_name(InitialStateKind kind);
/// "zero", "one", "plus", "minus", "neel", "singlet", "random".
InitialStateKind parse_initial_state(std::string_view name);

struct InitialState {
    InitialStateKind kind = InitialStateKind::Zero;
    uint64_t seed = 0;                 // Random only
    std::vector<complex> amplitudes;  // Explicit only

    static InitialState explicit_state(std::vector<complex> amplitudes) {
        return InitialState{InitialStateKind::Explicit, 0, std::move(amplitudes)};
    }
};

/// zero=|0..0>, one=|1..1>, plus/minus=(|0>+-|1>)^L/2^(L/2), neel has site j
/// in state j % 2, singlet is the product of (|q1 q0> = |01> - |10>)/sqrt2 on
/// the pairs (0,1), (2,3), ..., random is a normalized complex Gaussian vector.
/// Throws OddSitesForSinglet, BadLength, NotNormalizable.
StateVector init_state(const InitialState &spec, uint32_t n_sites);
StateVector init_state(InitialStateKind kind, uint32_t n_sites, uint64_t seed = 0);

/// In place: amps <- exp(-i angle P) amps, using one pass over the amplitude
/// pairs coupled by P and no scratch storage.
void apply_pauli_rotation(std::span<complex> amps, const PauliString &string, double angle);
void apply_pauli_rotation(StateVector &state, const PauliString &string, double angle);

/// out += coeff * P * in
void accumulate_pauli_string(std::span<const complex> in, std::span<complex> out, const PauliString &string, complex coeff);

/// sum_k c_k P_k |state>, unnormalized.
StateVector apply_pauli_sum(const StateVector &state, const PauliSumOperator &op);
StateVector apply_pauli_sum(const StateVector &state, const Hamiltonian &h);

/// <a|b>
complex inner(const StateVector &a, const StateVector &b);
/// <state|P|state>
complex expectation_value(std::span<const complex> amps, const PauliString &string);
/// <state|op|state> (not divided by the norm).
complex expectation_value(const StateVector &state, const PauliSumOperator &op);
/// Re <state|H|state>; the imaginary residue is checked against round-off.
double expectation(const StateVector &state, const Hamiltonian &h);

using Gate1Q = std::array<complex, 4>;  // row major [[a, b], [c, d]]

/// Applies a 2x2 unitary to one site.
void apply_single_qubit_gate(std::span<complex> amps, uint32_t site, const Gate1Q &gate);
void apply_single_qubit_gate(StateVector &state, uint32_t site, const Gate1Q &gate);

namespace gates {
Gate1Q hadamard();
Gate1Q s();
Gate1Q s_dagger();
/// Rz(phi) = diag(e^{-i phi/2}, e^{i phi/2})
Gate1Q rz(double phi);
/// (1/sqrt2) [[1, -i], [1, i]]
Gate1Q w();
}  // namespace gates

/// Applies every rotation of the program, `reps` times.
void evolve(std::span<complex> amps, const TrotterProgram &program);
void evolve(StateVector &state, const TrotterProgram &program);

/// Binary state file: "SVPT", u32 version = 1, u32 n_sites, u32 reserved = 0,
/// then 2^L (re, im) float64 pairs, all little-endian.
void write_state_file(const std::filesystem::path &path, const StateVector &state);
StateVector read_state_file(const std::filesystem::path &path);
std::vector<uint8_t> encode_state(const StateVector &state);
StateVector decode_state(std::span<const uint8_t> bytes);

}  // namespace svpite

#endif
