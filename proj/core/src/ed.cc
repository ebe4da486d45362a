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

#include "svpite/ed.h"

#include <Eigen/Eigenvalues>
#include <bit>
#include <cmath>

#include "svpite/error.h"
#include "svpite/parallel.h"
#include "svpite/rng.h"

namespace svpite {

namespace {

const complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

double vec_norm(const std::vector<complex> &v) {
    return std::sqrt(deterministic_sum<double>(v.size(), [&](size_t i) { return std::norm(v[i]); }));
}

complex vec_dot(const std::vector<complex> &a, const std::vector<complex> &b) {
    return deterministic_sum<complex>(a.size(), [&](size_t i) { return std::conj(a[i]) * b[i]; });
}

void axpy(complex alpha, const std::vector<complex> &x, std::vector<complex> &y) {
    for (size_t i = 0; i < y.size(); i++) {
        y[i] += alpha * x[i];
    }
}

std::vector<complex> random_vector(size_t dim, uint64_t seed) {
    Rng rng(seed);
    std::vector<complex> v(dim);
    for (auto &x : v) {
        double re = rng.normal();
        double im = rng.normal();
        x = complex(re, im);
    }
    return v;
}

}  // namespace

void EDConfig::validate(uint32_t n_sites) const {
    if (!(tol > 0.0)) {
        throw Error(ErrorKind::InvalidConfig, "ED tolerance must be positive");
    }
    if (maxiter < 1) {
        throw Error(ErrorKind::InvalidConfig, "ED maxiter must be >= 1");
    }
    if (krylov_dim < 2) {
        throw Error(ErrorKind::InvalidConfig, "ED krylov_dim must be >= 2");
    }
    if (n_up && *n_up > n_sites) {
        throw Error(ErrorKind::InvalidConfig, "n_up must lie in [0, " + std::to_string(n_sites) + "]");
    }
}

SectorBasis::SectorBasis(uint32_t n_sites, uint32_t n_up) : n_sites_(n_sites), n_up_(n_up) {
    if (n_up > n_sites || n_sites > kMaxStateSites) {
        throw Error(ErrorKind::InvalidConfig, "invalid sector n_up = " + std::to_string(n_up) + " on " +
                                                  std::to_string(n_sites) + " sites");
    }
    binom_.assign(n_sites + 1, std::vector<uint64_t>(n_sites + 2, 0));
    for (uint32_t n = 0; n <= n_sites; n++) {
        binom_[n][0] = 1;
        for (uint32_t k = 1; k <= n; k++) {
            binom_[n][k] = binom_[n - 1][k - 1] + (k <= n - 1 ? binom_[n - 1][k] : 0);
        }
    }
    states_.reserve(binom_[n_sites][n_up]);
    if (n_up == 0) {
        states_.push_back(0);
        return;
    }
    // Gosper's hack walks popcount-n_up words in increasing order.
    uint64_t v = (uint64_t{1} << n_up) - 1;
    const uint64_t limit = uint64_t{1} << n_sites;
    while (v < limit) {
        states_.push_back(v);
        uint64_t t = v | (v - 1);
        v = (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
    }
}

size_t SectorBasis::index(uint64_t bits) const {
    size_t rank = 0;
    uint32_t k = 1;
    while (bits) {
        uint32_t pos = static_cast<uint32_t>(std::countr_zero(bits));
        if (k <= pos) {
            rank += binom_[pos][k];
        }
        bits &= bits - 1;
        k++;
    }
    return rank;
}

StateVector SectorBasis::embed(std::span<const complex> sector_vector) const {
    if (sector_vector.size() != states_.size()) {
        throw Error(ErrorKind::BadLength, "sector vector has the wrong length");
    }
    StateVector full(n_sites_);
    for (size_t i = 0; i < states_.size(); i++) {
        full[states_[i]] = sector_vector[i];
    }
    return full;
}

std::vector<complex> SectorBasis::project(const StateVector &full) const {
    if (full.n_sites() != n_sites_) {
        throw Error(ErrorKind::SiteCountMismatch, "state has the wrong site count");
    }
    std::vector<complex> out(states_.size());
    for (size_t i = 0; i < states_.size(); i++) {
        out[i] = full[states_[i]];
    }
    return out;
}

bool check_sector_compatibility(const Hamiltonian &h) {
    const auto &terms = h.op().term_map();
    for (const auto &[string, coeff] : terms) {
        const std::string &labels = string.labels();
        if (labels == "Z" || labels == "ZZ") {
            continue;
        }
        if (labels == "XX" || labels == "YY") {
            PauliString partner(labels == "XX" ? "YY" : "XX", string.sites(), string.n_sites());
            auto it = terms.find(partner);
            if (it == terms.end() || std::abs(it->second - coeff) > PauliSumOperator::kEqualityTolerance) {
                return false;
            }
            continue;
        }
        return false;
    }
    return true;
}

std::vector<complex> matvec(const Hamiltonian &h, std::span<const complex> vector, const SectorBasis *basis) {
    if (!basis) {
        size_t dim = size_t{1} << h.n_sites();
        if (vector.size() != dim) {
            throw Error(ErrorKind::BadLength, "vector length does not match the Hilbert space");
        }
        std::vector<complex> out(dim);
        for (const auto &[string, coeff] : h.op().term_map()) {
            accumulate_pauli_string(vector, out, string, coeff);
        }
        return out;
    }
    if (vector.size() != basis->size() || basis->n_sites() != h.n_sites()) {
        throw Error(ErrorKind::BadLength, "vector length does not match the sector basis");
    }
    struct Op {
        uint64_t x;
        uint64_t z;
        complex c;
    };
    std::vector<Op> ops;
    for (const auto &[string, coeff] : h.op().term_map()) {
        ops.push_back({string.x_mask(), string.z_mask(), coeff * kIPow[string.num_y() % 4]});
    }
    const uint32_t n_up = basis->n_up();
    std::vector<complex> out(basis->size());
    // Gather form: (H v)[b] = sum_t c_t sigma_t(b ^ x_t) v[b ^ x_t]. Transitions
    // leaving the sector cancel between matched XX/YY pairs.
    parallel_for_chunks(basis->size(), 1024, [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; i++) {
            uint64_t b = basis->state(i);
            complex acc;
            for (const auto &op : ops) {
                uint64_t v = b ^ op.x;
                if (static_cast<uint32_t>(std::popcount(v)) != n_up) {
                    continue;
                }
                double sign = (std::popcount(v & op.z) & 1) ? -1.0 : 1.0;
                acc += (sign * op.c) * vector[op.x == 0 ? i : basis->index(v)];
            }
            out[i] = acc;
        }
    });
    return out;
}

EDResult lanczos_ground(const Hamiltonian &h, const EDConfig &config) {
    config.validate(h.n_sites());
    std::optional<SectorBasis> basis;
    if (config.n_up) {
        if (!check_sector_compatibility(h)) {
            throw Error(ErrorKind::IncompatibleSector, "Hamiltonian does not conserve total Z");
        }
        basis.emplace(h.n_sites(), *config.n_up);
    }
    const SectorBasis *basis_ptr = basis ? &*basis : nullptr;
    const size_t dim = basis ? basis->size() : (size_t{1} << h.n_sites());
    auto apply = [&](const std::vector<complex> &v) { return matvec(h, v, basis_ptr); };

    std::vector<complex> start;
    if (config.v0) {
        if (config.v0->size() != dim) {
            throw Error(ErrorKind::BadLength, "v0 has length " + std::to_string(config.v0->size()) + ", expected " +
                                                  std::to_string(dim));
        }
        start = *config.v0;
    } else {
        start = random_vector(dim, config.seed);
    }

    EDResult result;
    result.config = config;
    const size_t m_max = std::min<size_t>(config.krylov_dim, dim);
    for (uint32_t attempt = 0; attempt <= 3; attempt++) {
        if (attempt > 0) {
            start = random_vector(dim, splitmix64(config.seed + attempt));
            result.restarts = attempt;
        }
        double n0 = vec_norm(start);
        if (!(n0 > 0)) {
            throw Error(ErrorKind::NotNormalizable, "Lanczos start vector is zero");
        }
        for (auto &x : start) {
            x /= n0;
        }
        uint32_t iterations = 0;
        std::vector<complex> x = start;
        while (iterations < config.maxiter) {
            std::vector<std::vector<complex>> basis_vecs;
            std::vector<double> alpha;
            std::vector<double> beta;
            basis_vecs.push_back(x);
            Eigen::VectorXd ritz;
            double theta = 0;
            for (size_t k = 0; k < m_max && iterations < config.maxiter; k++) {
                iterations++;
                std::vector<complex> w = apply(basis_vecs[k]);
                alpha.push_back(vec_dot(basis_vecs[k], w).real());
                // Full reorthogonalization, two passes.
                for (int pass = 0; pass < 2; pass++) {
                    for (const auto &v : basis_vecs) {
                        axpy(-vec_dot(v, w), v, w);
                    }
                }
                double b = vec_norm(w);
                Eigen::VectorXd d = Eigen::Map<Eigen::VectorXd>(alpha.data(), alpha.size());
                Eigen::VectorXd e = Eigen::Map<Eigen::VectorXd>(beta.data(), beta.size());
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
                tri.computeFromTridiagonal(d, e, Eigen::ComputeEigenvectors);
                theta = tri.eigenvalues()(0);
                ritz = tri.eigenvectors().col(0);
                double estimate = b * std::abs(ritz(ritz.size() - 1));
                bool invariant = b < 1e-12 * std::max(1.0, std::abs(theta));
                if (estimate < 0.1 * config.tol * std::max(1.0, std::abs(theta)) || invariant || k + 1 == m_max) {
                    break;
                }
                beta.push_back(b);
                for (auto &c : w) {
                    c /= b;
                }
                basis_vecs.push_back(std::move(w));
            }
            std::vector<complex> ritz_vec(dim);
            for (Eigen::Index j = 0; j < ritz.size(); j++) {
                axpy(ritz(j), basis_vecs[static_cast<size_t>(j)], ritz_vec);
            }
            double rn = vec_norm(ritz_vec);
            for (auto &c : ritz_vec) {
                c /= rn;
            }
            std::vector<complex> hx = apply(ritz_vec);
            double energy = vec_dot(ritz_vec, hx).real();
            axpy(-energy, ritz_vec, hx);
            double residual = vec_norm(hx);
            x = std::move(ritz_vec);
            if (residual <= config.tol * std::max(1.0, std::abs(energy))) {
                result.total_energy = energy;
                result.energy = energy / h.n_sites();
                result.residual = residual;
                result.iterations += iterations;
                if (config.return_ground_state) {
                    result.ground_state = basis ? basis->embed(x) : StateVector(h.n_sites(), std::move(x));
                }
                return result;
            }
            (void)theta;
        }
        result.iterations += iterations;
    }
    throw Error(ErrorKind::NotConverged, "Lanczos did not reach tol " + std::to_string(config.tol) + " in " +
                                             std::to_string(config.maxiter) + " iterations after 3 restarts");
}

}  // namespace svpite
