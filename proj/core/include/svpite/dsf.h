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

#ifndef SVPITE_DSF_H
#define SVPITE_DSF_H

#include <iosfwd>
#include <vector>

#include "svpite/hamiltonian.h"
#include "svpite/state.h"

namespace svpite {

enum class WindowKind { None, Hann, Gaussian };

std::string_view window_name(WindowKind kind);
WindowKind parse_window(std::string_view name);

struct DSFConfig {
    uint32_t source_site = 0;
    double dt = 0.025;  // real-time step between samples
    uint32_t n_t = 400;  // samples t_n = n * dt, n in [0, n_t)
    int order = 1;
    uint32_t reps = 1;  // Trotter repetitions per sample interval
    WindowKind window = WindowKind::Hann;
    double gaussian_sigma = 0.4;  // fraction of the largest |t|

    void validate() const;
};

/// C[r][n] = e^{i E0 t_n} <psi0| S^z_{j+r} e^{-iHt_n} S^z_j |psi0>.
struct CorrelationTable {
    uint32_t n_sites = 0;
    uint32_t n_t = 0;
    double dt = 0;
    double e0 = 0;  // total ground energy
    std::vector<std::vector<complex>> c;  // [r][n]
    DSFConfig config;
};

/// Throws NotNormalized when psi0 is not unit norm.
CorrelationTable compute_czz(const StateVector &psi0, const Hamiltonian &h, const DSFConfig &config);

struct DSFGrid {
    std::vector<double> q;      // 2 pi k / L
    std::vector<double> omega;  // conjugate grid of the doubled time window
    std::vector<std::vector<double>> s;  // [q][omega]
    WindowKind window = WindowKind::Hann;
    double max_imag_residue = 0;  // largest |Im| discarded
};

/// Window weight at time index n (|n| <= n_t - 1).
double window_weight(WindowKind kind, int n, uint32_t n_t, double gaussian_sigma);

/// Space-time transform over the doubled window t_n, n in [-(n_t-1), n_t-1],
/// with C(r, -t) = C(r, t)*:
/// S(q, w) = dt * sum_n sum_r w(t_n) e^{-i(q r - w t_n)} C(r, t_n).
DSFGrid dsf_transform(const CorrelationTable &table, const DSFConfig &config);

/// Static structure factor sum_r e^{-iqr} C(r, 0) for each q of the grid.
std::vector<double> static_structure_factor(const CorrelationTable &table);

/// max over q of |int S dw / 2pi - S(q)| / max(|S(q)|, floor); 0 for all-zero
/// input.
double static_sum_rule(const DSFGrid &grid, const CorrelationTable &table);

/// max over (q, w) of |S(q, w) - S(2 pi - q, w)|.
double q_reflection_asymmetry(const DSFGrid &grid);

/// "q,omega,S" header then one row per grid point.
void write_dsf_csv(std::ostream &out, const DSFGrid &grid);

}  // namespace svpite

#endif
