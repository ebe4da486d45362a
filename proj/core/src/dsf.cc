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

#include "svpite/dsf.h"

#include <charconv>
#include <cmath>
#include <numbers>
#include <ostream>

#include "svpite/error.h"
#include "svpite/parallel.h"
#include "svpite/trotter.h"

namespace svpite {

std::string_view window_name(WindowKind kind) {
    switch (kind) {
        case WindowKind::None:
            return "none";
        case WindowKind::Hann:
            return "hann";
        case WindowKind::Gaussian:
            return "gaussian";
    }
    return "?";
}

WindowKind parse_window(std::string_view name) {
    if (name == "none") {
        return WindowKind::None;
    }
    if (name == "hann") {
        return WindowKind::Hann;
    }
    if (name == "gaussian") {
        return WindowKind::Gaussian;
    }
    throw Error(ErrorKind::InvalidConfig, "unknown window '" + std::string(name) + "'");
}

void DSFConfig::validate() const {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw Error(ErrorKind::InvalidConfig, "dt must be positive");
    }
    if (n_t < 2) {
        throw Error(ErrorKind::InvalidConfig, "n_t must be >= 2");
    }
    if (order != 1 && order != 2) {
        throw Error(ErrorKind::BadOrder, "Trotter order must be 1 or 2");
    }
    if (reps < 1) {
        throw Error(ErrorKind::InvalidConfig, "reps must be >= 1");
    }
    if (window == WindowKind::Gaussian && !(gaussian_sigma > 0.0)) {
        throw Error(ErrorKind::InvalidConfig, "gaussian sigma must be positive");
    }
}

CorrelationTable compute_czz(const StateVector &psi0, const Hamiltonian &h, const DSFConfig &config) {
    config.validate();
    const uint32_t n = h.n_sites();
    if (psi0.n_sites() != n) {
        throw Error(ErrorKind::SiteCountMismatch, "state and Hamiltonian disagree on the site count");
    }
    if (config.source_site >= n) {
        throw Error(ErrorKind::OutOfRangeSite, "source site " + std::to_string(config.source_site) + " out of range");
    }
    if (std::abs(psi0.norm_squared() - 1.0) > 1e-8) {
        throw Error(ErrorKind::NotNormalized, "ground state norm^2 = " + std::to_string(psi0.norm_squared()));
    }
    CorrelationTable table;
    table.n_sites = n;
    table.n_t = config.n_t;
    table.dt = config.dt;
    table.config = config;
    table.e0 = expectation(psi0, h);
    table.c.assign(n, std::vector<complex>(config.n_t));

    StateVector phi = psi0;
    const uint64_t source_bit = uint64_t{1} << config.source_site;
    for (size_t v = 0; v < phi.dim(); v++) {
        phi[v] *= (v & source_bit) ? -0.5 : 0.5;
    }
    TrotterProgram step = build_trotter(h, config.dt / config.reps, config.order, config.reps);
    auto psi_amps = psi0.amplitudes();
    for (uint32_t t = 0; t < config.n_t; t++) {
        if (t > 0) {
            evolve(phi, step);
        }
        double time = t * config.dt;
        complex phase = std::polar(1.0, table.e0 * time);
        auto phi_amps = phi.amplitudes();
        for (uint32_t r = 0; r < n; r++) {
            uint64_t bit = uint64_t{1} << ((config.source_site + r) % n);
            complex overlap = deterministic_sum<complex>(phi.dim(), [&](size_t v) {
                complex term = std::conj(psi_amps[v]) * phi_amps[v];
                return (v & bit) ? -0.5 * term : 0.5 * term;
            });
            table.c[r][t] = phase * overlap;
        }
    }
    return table;
}

double window_weight(WindowKind kind, int n, uint32_t n_t, double gaussian_sigma) {
    double x = static_cast<double>(n) / static_cast<double>(n_t);
    switch (kind) {
        case WindowKind::None:
            return 1.0;
        case WindowKind::Hann:
            return 0.5 * (1.0 + std::cos(std::numbers::pi * x));
        case WindowKind::Gaussian: {
            double u = static_cast<double>(n) / (gaussian_sigma * std::max<double>(1.0, n_t - 1.0));
            return std::exp(-0.5 * u * u);
        }
    }
    return 1.0;
}

DSFGrid dsf_transform(const CorrelationTable &table, const DSFConfig &config) {
    config.validate();
    const uint32_t n_sites = table.n_sites;
    const int n_t = static_cast<int>(table.n_t);
    const int m_count = 2 * n_t - 1;
    const double dt = table.dt;
    DSFGrid grid;
    grid.window = config.window;
    for (uint32_t k = 0; k < n_sites; k++) {
        grid.q.push_back(2.0 * std::numbers::pi * k / n_sites);
    }
    for (int m = -(n_t - 1); m <= n_t - 1; m++) {
        grid.omega.push_back(2.0 * std::numbers::pi * m / (m_count * dt));
    }

    // Spatial transform first: F[k][n] = sum_r e^{-iqr} C(r, t_n), n >= 0.
    std::vector<std::vector<complex>> spatial(n_sites, std::vector<complex>(table.n_t));
    std::vector<std::vector<complex>> spatial_neg(n_sites, std::vector<complex>(table.n_t));
    for (uint32_t k = 0; k < n_sites; k++) {
        for (int n = 0; n < n_t; n++) {
            complex acc;
            complex acc_neg;
            for (uint32_t r = 0; r < n_sites; r++) {
                complex kernel = std::polar(1.0, -grid.q[k] * r);
                acc += kernel * table.c[r][n];
                acc_neg += kernel * std::conj(table.c[r][n]);
            }
            spatial[k][n] = acc;
            spatial_neg[k][n] = acc_neg;
        }
    }

    std::vector<double> weights(static_cast<size_t>(n_t));
    for (int n = 0; n < n_t; n++) {
        weights[n] = window_weight(config.window, n, table.n_t, config.gaussian_sigma);
    }

    grid.s.assign(n_sites, std::vector<double>(grid.omega.size()));
    std::vector<double> residues(n_sites, 0.0);
    parallel_for_chunks(n_sites, 1, [&](size_t lo, size_t hi) {
        for (size_t k = lo; k < hi; k++) {
            for (size_t m = 0; m < grid.omega.size(); m++) {
                int mi = static_cast<int>(m) - (n_t - 1);
                complex acc = weights[0] * spatial[k][0];
                for (int n = 1; n < n_t; n++) {
                    // Exact phase on the integer grid avoids drift at large n.
                    double angle = 2.0 * std::numbers::pi * static_cast<double>((static_cast<long>(mi) * n) % m_count) /
                                   m_count;
                    complex e = std::polar(1.0, angle);
                    acc += weights[n] * (e * spatial[k][n] + std::conj(e) * spatial_neg[k][n]);
                }
                acc *= dt;
                grid.s[k][m] = acc.real();
                residues[k] = std::max(residues[k], std::abs(acc.imag()));
            }
        }
    });
    for (double r : residues) {
        grid.max_imag_residue = std::max(grid.max_imag_residue, r);
    }
    return grid;
}

std::vector<double> static_structure_factor(const CorrelationTable &table) {
    std::vector<double> out(table.n_sites);
    for (uint32_t k = 0; k < table.n_sites; k++) {
        double q = 2.0 * std::numbers::pi * k / table.n_sites;
        complex acc;
        for (uint32_t r = 0; r < table.n_sites; r++) {
            acc += std::polar(1.0, -q * r) * table.c[r][0];
        }
        out[k] = acc.real();
    }
    return out;
}

double static_sum_rule(const DSFGrid &grid, const CorrelationTable &table) {
    std::vector<double> direct = static_structure_factor(table);
    double scale = 0;
    for (double v : direct) {
        scale = std::max(scale, std::abs(v));
    }
    double integrated_scale = 0;
    for (const auto &row : grid.s) {
        for (double v : row) {
            integrated_scale = std::max(integrated_scale, std::abs(v));
        }
    }
    if (scale == 0 && integrated_scale == 0) {
        return 0.0;
    }
    const double d_omega = grid.omega.size() > 1 ? grid.omega[1] - grid.omega[0] : 0.0;
    const double floor = std::max(1e-6 * scale, 1e-300);
    double worst = 0;
    for (size_t k = 0; k < grid.s.size(); k++) {
        double integral = 0;
        for (double v : grid.s[k]) {
            integral += v;
        }
        integral *= d_omega / (2.0 * std::numbers::pi);
        worst = std::max(worst, std::abs(integral - direct[k]) / std::max(std::abs(direct[k]), floor));
    }
    return worst;
}

double q_reflection_asymmetry(const DSFGrid &grid) {
    const size_t n_q = grid.s.size();
    double worst = 0;
    for (size_t k = 0; k < n_q; k++) {
        size_t mirror = (n_q - k) % n_q;
        for (size_t m = 0; m < grid.s[k].size(); m++) {
            worst = std::max(worst, std::abs(grid.s[k][m] - grid.s[mirror][m]));
        }
    }
    return worst;
}

namespace {

void put_double(std::ostream &out, double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    out.write(buf, res.ptr - buf);
}

}  // namespace

void write_dsf_csv(std::ostream &out, const DSFGrid &grid) {
    out << "q,omega,S\n";
    for (size_t k = 0; k < grid.q.size(); k++) {
        for (size_t m = 0; m < grid.omega.size(); m++) {
            put_double(out, grid.q[k]);
            out << ',';
            put_double(out, grid.omega[m]);
            out << ',';
            put_double(out, grid.s[k][m]);
            out << '\n';
        }
    }
}

}  // namespace svpite
