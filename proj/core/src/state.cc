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

#include "svpite/state.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numbers>

#include "svpite/error.h"
#include "svpite/parallel.h"
#include "svpite/rng.h"

namespace svpite {

namespace {

// Below this many amplitude pairs the kernels stay on the calling thread.
constexpr size_t kParallelThreshold = size_t{1} << 16;
constexpr size_t kGrain = size_t{1} << 14;

const complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

inline double parity_sign(uint64_t v) {
    return (std::popcount(v) & 1) ? -1.0 : 1.0;
}

template <typename Body>
void for_range(size_t n, Body &&body) {
    if (n < kParallelThreshold) {
        body(size_t{0}, n);
    } else {
        parallel_for_chunks(n, kGrain, body);
    }
}

inline uint64_t insert_zero_bit(uint64_t k, uint32_t bit) {
    uint64_t low = k & ((uint64_t{1} << bit) - 1);
    return ((k >> bit) << (bit + 1)) | low;
}

void require_dim(size_t dim, uint32_t n_sites) {
    if (n_sites > 63 || dim != (size_t{1} << n_sites)) {
        throw Error(ErrorKind::SiteCountMismatch, "operator on " + std::to_string(n_sites) +
                                                      " sites applied to a state of dimension " +
                                                      std::to_string(dim));
    }
}

}  // namespace

StateVector::StateVector(uint32_t n_sites) : n_sites_(n_sites) {
    if (n_sites > kMaxStateSites) {
        throw Error(ErrorKind::BadLength, std::to_string(n_sites) + " sites exceed the state-vector limit");
    }
    amps_.assign(size_t{1} << n_sites, complex{});
}

StateVector::StateVector(uint32_t n_sites, std::vector<complex> amplitudes)
    : n_sites_(n_sites), amps_(std::move(amplitudes)) {
    if (n_sites > kMaxStateSites || amps_.size() != (size_t{1} << n_sites)) {
        throw Error(ErrorKind::BadLength, "expected 2^" + std::to_string(n_sites) + " amplitudes, got " +
                                              std::to_string(amps_.size()));
    }
}

double StateVector::norm_squared() const {
    return deterministic_sum<double>(amps_.size(), [this](size_t i) { return std::norm(amps_[i]); });
}

double StateVector::norm() const {
    return std::sqrt(norm_squared());
}

void StateVector::normalize() {
    double n = norm();
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw Error(ErrorKind::NotNormalizable, "state has zero or non-finite norm");
    }
    *this *= complex(1.0 / n, 0.0);
}

StateVector &StateVector::operator*=(complex scale) {
    for (auto &a : amps_) {
        a *= scale;
    }
    return *this;
}

StateVector &StateVector::operator+=(const StateVector &other) {
    require_dim(other.dim(), n_sites_);
    for (size_t i = 0; i < amps_.size(); i++) {
        amps_[i] += other.amps_[i];
    }
    return *this;
}

std::string_view initial_state_name(InitialStateKind kind) {
    switch (kind) {
        case InitialStateKind::Zero:
            return "zero";
        case InitialStateKind::One:
            return "one";
        case InitialStateKind::Plus:
            return "plus";
        case InitialStateKind::Minus:
            return "minus";
        case InitialStateKind::Neel:
            return "neel";
        case InitialStateKind::Singlet:
            return "singlet";
        case InitialStateKind::Random:
            return "random";
        case InitialStateKind::Explicit:
            return "explicit";
    }
    return "unknown";
}

InitialStateKind parse_initial_state(std::string_view name) {
    for (auto kind : {InitialStateKind::Zero, InitialStateKind::One, InitialStateKind::Plus, InitialStateKind::Minus,
                      InitialStateKind::Neel, InitialStateKind::Singlet, InitialStateKind::Random}) {
        if (initial_state_name(kind) == name) {
            return kind;
        }
    }
    throw Error(ErrorKind::InvalidConfig, "unknown initial state '" + std::string(name) + "'");
}

StateVector init_state(InitialStateKind kind, uint32_t n_sites, uint64_t seed) {
    return init_state(InitialState{kind, seed, {}}, n_sites);
}

StateVector init_state(const InitialState &spec, uint32_t n_sites) {
    if (spec.kind == InitialStateKind::Explicit) {
        if (n_sites > kMaxStateSites || spec.amplitudes.size() != (size_t{1} << n_sites)) {
            throw Error(ErrorKind::BadLength, "explicit initial state needs 2^" + std::to_string(n_sites) +
                                                  " amplitudes, got " + std::to_string(spec.amplitudes.size()));
        }
        StateVector out(n_sites, spec.amplitudes);
        out.normalize();
        return out;
    }
    StateVector out(n_sites);
    size_t dim = out.dim();
    switch (spec.kind) {
        case InitialStateKind::Zero:
            out[0] = 1.0;
            break;
        case InitialStateKind::One:
            out[dim - 1] = 1.0;
            break;
        case InitialStateKind::Plus:
        case InitialStateKind::Minus: {
            double amp = std::pow(2.0, -0.5 * n_sites);
            bool minus = spec.kind == InitialStateKind::Minus;
            for (uint64_t b = 0; b < dim; b++) {
                out[b] = minus ? amp * parity_sign(b) : amp;
            }
            break;
        }
        case InitialStateKind::Neel: {
            uint64_t b = 0;
            for (uint32_t j = 1; j < n_sites; j += 2) {
                b |= uint64_t{1} << j;
            }
            out[b] = 1.0;
            break;
        }
        case InitialStateKind::Singlet: {
            if (n_sites % 2 != 0) {
                throw Error(ErrorKind::OddSitesForSinglet, "singlet product state needs an even site count");
            }
            // Each pair contributes +1/sqrt2 for (site 2k, site 2k+1) = (1, 0)
            // and -1/sqrt2 for (0, 1).
            uint32_t pairs = n_sites / 2;
            double amp = std::pow(2.0, -0.5 * pairs);
            for (uint64_t choice = 0; choice < (uint64_t{1} << pairs); choice++) {
                uint64_t b = 0;
                double sign = 1.0;
                for (uint32_t p = 0; p < pairs; p++) {
                    if ((choice >> p) & 1) {
                        b |= uint64_t{1} << (2 * p + 1);
                        sign = -sign;
                    } else {
                        b |= uint64_t{1} << (2 * p);
                    }
                }
                out[b] = sign * amp;
            }
            break;
        }
        case InitialStateKind::Random: {
            Rng rng(spec.seed);
            for (uint64_t b = 0; b < dim; b++) {
                double re = rng.normal();
                double im = rng.normal();
                out[b] = complex(re, im);
            }
            out.normalize();
            break;
        }
        case InitialStateKind::Explicit:
            break;
    }
    return out;
}

void apply_pauli_rotation(std::span<complex> amps, const PauliString &string, double angle) {
    require_dim(amps.size(), string.n_sites());
    const uint64_t x = string.x_mask();
    const uint64_t z = string.z_mask();
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    complex *a = amps.data();

    if (x == 0) {
        const complex even(c, -s);
        const complex odd(c, s);
        for_range(amps.size(), [=](size_t lo, size_t hi) {
            for (size_t b = lo; b < hi; b++) {
                a[b] *= (std::popcount(b & z) & 1) ? odd : even;
            }
        });
        return;
    }

    // new[b] = c psi[b] + f sigma(b ^ x) psi[b ^ x], sigma(v) = (-1)^{|v & z|}
    const complex f = complex(0, -s) * kIPow[string.num_y() % 4];
    const uint32_t pivot = static_cast<uint32_t>(std::countr_zero(x));
    for_range(amps.size() / 2, [=](size_t lo, size_t hi) {
        for (size_t k = lo; k < hi; k++) {
            uint64_t b0 = insert_zero_bit(k, pivot);
            uint64_t b1 = b0 ^ x;
            complex a0 = a[b0];
            complex a1 = a[b1];
            double s0 = parity_sign(b0 & z);
            double s1 = parity_sign(b1 & z);
            a[b0] = c * a0 + (s1 * f) * a1;
            a[b1] = c * a1 + (s0 * f) * a0;
        }
    });
}

void apply_pauli_rotation(StateVector &state, const PauliString &string, double angle) {
    apply_pauli_rotation(state.amplitudes(), string, angle);
}

void accumulate_pauli_string(std::span<const complex> in, std::span<complex> out, const PauliString &string,
                             complex coeff) {
    require_dim(in.size(), string.n_sites());
    require_dim(out.size(), string.n_sites());
    const uint64_t x = string.x_mask();
    const uint64_t z = string.z_mask();
    const complex base = coeff * kIPow[string.num_y() % 4];
    const complex *src = in.data();
    complex *dst = out.data();
    for_range(in.size(), [=](size_t lo, size_t hi) {
        for (size_t b = lo; b < hi; b++) {
            uint64_t v = b ^ x;
            dst[b] += (parity_sign(v & z) * base) * src[v];
        }
    });
}

StateVector apply_pauli_sum(const StateVector &state, const PauliSumOperator &op) {
    require_dim(state.dim(), op.n_sites());
    StateVector out(state.n_sites());
    for (const auto &[string, coeff] : op.term_map()) {
        accumulate_pauli_string(state.amplitudes(), out.amplitudes(), string, coeff);
    }
    return out;
}

StateVector apply_pauli_sum(const StateVector &state, const Hamiltonian &h) {
    return apply_pauli_sum(state, h.op());
}

complex inner(const StateVector &a, const StateVector &b) {
    require_dim(b.dim(), a.n_sites());
    auto x = a.amplitudes();
    auto y = b.amplitudes();
    return deterministic_sum<complex>(x.size(), [&](size_t i) { return std::conj(x[i]) * y[i]; });
}

complex expectation_value(std::span<const complex> amps, const PauliString &string) {
    require_dim(amps.size(), string.n_sites());
    const uint64_t x = string.x_mask();
    const uint64_t z = string.z_mask();
    const complex *a = amps.data();
    complex sum;
    if (x == 0) {
        sum = deterministic_sum<double>(amps.size(), [=](size_t b) { return parity_sign(b & z) * std::norm(a[b]); });
    } else {
        sum = deterministic_sum<complex>(amps.size(), [=](size_t b) {
            uint64_t v = b ^ x;
            return std::conj(a[b]) * (parity_sign(v & z) * a[v]);
        });
    }
    return sum * kIPow[string.num_y() % 4];
}

complex expectation_value(const StateVector &state, const PauliSumOperator &op) {
    complex total;
    for (const auto &[string, coeff] : op.term_map()) {
        total += coeff * expectation_value(state.amplitudes(), string);
    }
    return total;
}

double expectation(const StateVector &state, const Hamiltonian &h) {
    complex value = expectation_value(state, h.op());
    double scale = 0;
    for (const auto &[string, coeff] : h.op().term_map()) {
        scale += std::abs(coeff);
    }
    scale = std::max(1.0, scale) * std::max(1.0, state.norm_squared());
    if (std::abs(value.imag()) > 1e-10 * scale) {
        throw Error(ErrorKind::ComplexCoefficient, "expectation of a Hermitian operator has imaginary part " +
                                                       std::to_string(value.imag()));
    }
    return value.real();
}

void apply_single_qubit_gate(std::span<complex> amps, uint32_t site, const Gate1Q &g) {
    if (amps.size() < 2 || (size_t{1} << site) >= amps.size()) {
        throw Error(ErrorKind::OutOfRangeSite, "gate site " + std::to_string(site) + " outside the register");
    }
    complex *a = amps.data();
    const uint64_t bit = uint64_t{1} << site;
    for_range(amps.size() / 2, [=](size_t lo, size_t hi) {
        for (size_t k = lo; k < hi; k++) {
            uint64_t b0 = insert_zero_bit(k, site);
            uint64_t b1 = b0 | bit;
            complex a0 = a[b0];
            complex a1 = a[b1];
            a[b0] = g[0] * a0 + g[1] * a1;
            a[b1] = g[2] * a0 + g[3] * a1;
        }
    });
}

void apply_single_qubit_gate(StateVector &state, uint32_t site, const Gate1Q &gate) {
    apply_single_qubit_gate(state.amplitudes(), site, gate);
}

namespace gates {

Gate1Q hadamard() {
    const double r = std::numbers::sqrt2 / 2;
    return {complex(r), complex(r), complex(r), complex(-r)};
}

Gate1Q s() {
    return {complex(1), complex(0), complex(0), complex(0, 1)};
}

Gate1Q s_dagger() {
    return {complex(1), complex(0), complex(0), complex(0, -1)};
}

Gate1Q rz(double phi) {
    return {std::polar(1.0, -phi / 2), complex(0), complex(0), std::polar(1.0, phi / 2)};
}

Gate1Q w() {
    const double r = std::numbers::sqrt2 / 2;
    return {complex(r), complex(0, -r), complex(r), complex(0, r)};
}

}  // namespace gates

void evolve(std::span<complex> amps, const TrotterProgram &program) {
    require_dim(amps.size(), program.n_sites);
    for (uint32_t rep = 0; rep < program.reps; rep++) {
        for (const auto &rot : program.rotations) {
            apply_pauli_rotation(amps, rot.string, rot.angle);
        }
    }
}

void evolve(StateVector &state, const TrotterProgram &program) {
    evolve(state.amplitudes(), program);
}

namespace {

constexpr char kMagic[4] = {'S', 'V', 'P', 'T'};
constexpr uint32_t kFormatVersion = 1;

template <typename T>
void put_le(std::vector<uint8_t> &out, T value) {
    uint8_t bytes[sizeof(T)];
    std::memcpy(bytes, &value, sizeof(T));
    if constexpr (std::endian::native == std::endian::big) {
        std::reverse(std::begin(bytes), std::end(bytes));
    }
    out.insert(out.end(), std::begin(bytes), std::end(bytes));
}

template <typename T>
T get_le(std::span<const uint8_t> in, size_t offset) {
    uint8_t bytes[sizeof(T)];
    std::memcpy(bytes, in.data() + offset, sizeof(T));
    if constexpr (std::endian::native == std::endian::big) {
        std::reverse(std::begin(bytes), std::end(bytes));
    }
    T value;
    std::memcpy(&value, bytes, sizeof(T));
    return value;
}

}  // namespace

std::vector<uint8_t> encode_state(const StateVector &state) {
    std::vector<uint8_t> out;
    out.reserve(16 + 16 * state.dim());
    out.insert(out.end(), std::begin(kMagic), std::end(kMagic));
    put_le<uint32_t>(out, kFormatVersion);
    put_le<uint32_t>(out, state.n_sites());
    put_le<uint32_t>(out, 0);
    for (const auto &a : state.amplitudes()) {
        put_le<double>(out, a.real());
        put_le<double>(out, a.imag());
    }
    return out;
}

StateVector decode_state(std::span<const uint8_t> bytes) {
    if (bytes.size() < 16 || std::memcmp(bytes.data(), kMagic, 4) != 0) {
        throw Error(ErrorKind::BadStateFile, "missing SVPT header");
    }
    uint32_t version = get_le<uint32_t>(bytes, 4);
    uint32_t n_sites = get_le<uint32_t>(bytes, 8);
    uint32_t reserved = get_le<uint32_t>(bytes, 12);
    if (version != kFormatVersion || reserved != 0) {
        throw Error(ErrorKind::BadStateFile, "unsupported state file version " + std::to_string(version));
    }
    if (n_sites > kMaxStateSites || bytes.size() != 16 + 16 * (size_t{1} << n_sites)) {
        throw Error(ErrorKind::BadStateFile, "payload size does not match n_sites = " + std::to_string(n_sites));
    }
    std::vector<complex> amps(size_t{1} << n_sites);
    for (size_t i = 0; i < amps.size(); i++) {
        amps[i] = complex(get_le<double>(bytes, 16 + 16 * i), get_le<double>(bytes, 24 + 16 * i));
    }
    return StateVector(n_sites, std::move(amps));
}

void write_state_file(const std::filesystem::path &path, const StateVector &state) {
    auto bytes = encode_state(state);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(reinterpret_cast<const char *>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw Error(ErrorKind::IoError, "cannot write " + path.string());
    }
}

StateVector read_state_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::IoError, "cannot open " + path.string());
    }
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return decode_state(bytes);
}

}  // namespace svpite
