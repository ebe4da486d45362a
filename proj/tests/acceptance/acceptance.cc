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

// Acceptance run: one PASS/FAIL line per criterion, followed by the numbers
// behind it. Exit status is non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "oracles.h"
#include "svpite/dsf.h"
#include "svpite/ed.h"
#include "svpite/models.h"
#include "svpite/parallel.h"
#include "svpite/pite.h"
#include "svpite/shot.h"
#include "svpite/workbench/driver.h"

namespace {

using namespace svpite;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

std::string fmt(const char *format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof(buf), format, args);
    va_end(args);
    return buf;
}

class Criterion {
   public:
    Criterion(int id, std::string title, double budget_s)
        : id_(id), title_(std::move(title)), budget_s_(budget_s), start_(Clock::now()) {
    }

    void note(const std::string &line) {
        notes_.push_back(line);
    }

    // Records a named clause; the criterion passes only if every clause does.
    void check(bool ok, const std::string &line) {
        pass_ = pass_ && ok;
        notes_.push_back(std::string(ok ? "ok   " : "MISS ") + line);
    }

    bool finish() {
        double elapsed = std::chrono::duration<double>(Clock::now() - start_).count();
        check(elapsed < budget_s_, fmt("runtime %.2f s (budget %.0f s)", elapsed, budget_s_));
        std::printf("%s  [%d] %s\n", pass_ ? "PASS" : "FAIL", id_, title_.c_str());
        for (const auto &n : notes_) {
            std::printf("        %s\n", n.c_str());
        }
        std::fflush(stdout);
        return pass_;
    }

   private:
    int id_;
    std::string title_;
    double budget_s_;
    Clock::time_point start_;
    bool pass_ = true;
    std::vector<std::string> notes_;
};

double closed_form_p0(const PITEParams &p, double energy, double dtau) {
    double c = std::cos(p.theta0 - std::numbers::pi / 4 - energy * p.s1 * dtau);
    return c * c;
}

// ---------------------------------------------------------------------------

bool eigenstate_oracle() {
    Criterion c(1, "eigenstate success probability, all-Z Hamiltonians at L = 1, 2", 1.0);
    std::mt19937_64 gen(101);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    std::uniform_real_distribution<double> gamma_dist(0.1, 0.9);
    std::uniform_real_distribution<double> dtau_dist(0.0, 0.5);
    double worst = 0;
    int draws = 0;
    for (uint32_t n : {1u, 2u}) {
        for (int trial = 0; trial < 200; trial++) {
            Hamiltonian h(n);
            for (uint32_t i = 0; i < n; i++) {
                h.add_term("Z", coeff(gen), {i});
            }
            if (n == 2) {
                h.add_term("ZZ", coeff(gen), {0, 1});
            }
            PITEParams params = derive_params(gamma_dist(gen));
            double dtau = dtau_dist(gen);
            StateVector s(n);
            s[gen() % s.dim()] = 1.0;
            double energy = expectation(s, h);
            double p0 = pite_step(s, params, compile_step_programs(h, params, dtau, 1)).p0;
            worst = std::max(worst, std::abs(p0 - closed_form_p0(params, energy, dtau)));
            draws++;
        }
    }
    c.check(worst <= 1e-12, fmt("max |P0 - cos^2(...)| = %.2e over %d draws (tol 1e-12)", worst, draws));

    double lo = 1e300;
    double hi = 0;
    int pairs = 0;
    for (uint32_t n : {1u, 2u}) {
        for (double gamma : {0.3, 0.5, 0.6, 0.8}) {
            for (double field : {-1.0, -0.5, 0.5, 1.0}) {
                Hamiltonian h(n);
                h.add_term("Z", field, {0});
                if (n == 2) {
                    h.add_term("ZZ", 0.5 * field, {0, 1});
                }
                PITEParams params = derive_params(gamma);
                StateVector s(n);
                s[n == 2 ? 1 : 0] = 1.0;
                double energy = expectation(s, h);
                auto gap = [&](double dtau) {
                    double p0 = pite_step(s, params, compile_step_programs(h, params, dtau, 1)).p0;
                    return std::abs(p0 - gamma * gamma * std::exp(-2 * energy * dtau));
                };
                double ratio = gap(0.02) / gap(0.01);
                lo = std::min(lo, ratio);
                hi = std::max(hi, ratio);
                pairs++;
            }
        }
    }
    c.check(lo >= 3.4 && hi <= 4.6,
            fmt("gap(0.02) / gap(0.01) in [%.4f, %.4f] over %d (gamma, E) pairs (band [3.4, 4.6])", lo, hi, pairs));
    return c.finish();
}

// ---------------------------------------------------------------------------

bool circuit_equivalence() {
    Criterion c(2, "ancilla circuit post-selected on |0> equals the two-branch update, L = 3", 5.0);
    std::mt19937_64 gen(202);
    std::uniform_real_distribution<double> gamma_dist(0.05, 0.95);
    std::uniform_real_distribution<double> dtau_dist(0.01, 0.5);
    double worst_library = 0;
    double worst_dense = 0;
    double worst_completeness = 0;
    for (int draw = 0; draw < 50; draw++) {
        Hamiltonian h = oracle::random_hamiltonian(3, gen);
        StateVector psi = oracle::random_state(3, gen);
        PITEParams params = derive_params(gamma_dist(gen));
        double dtau = dtau_dist(gen);
        CircuitCheck check = verify_circuit_equivalence(h, psi, params, dtau);
        worst_library = std::max(worst_library, check.infidelity);
        worst_completeness =
            std::max(worst_completeness, std::abs(check.success_probability + check.failure_probability - 1));

        // Independent update: dense exponentials of each term in program order.
        oracle::Matrix u = oracle::Matrix::Identity(8, 8);
        for (const auto &term : h.terms()) {
            u = oracle::expm_hermitian(oracle::string_matrix(term.string), term.coeff.real() * params.s1 * dtau) * u;
        }
        const double norm = 1 / (2 * std::numbers::sqrt2);
        oracle::Matrix update = norm * (complex(1, -1) * std::polar(1.0, params.theta0) * u +
                                        complex(1, 1) * std::polar(1.0, -params.theta0) * u.adjoint());
        oracle::Vector expected = update * oracle::to_eigen(psi);
        oracle::Vector got = oracle::to_eigen(check.success_state);
        double overlap = std::norm(expected.dot(got)) / (expected.squaredNorm() * got.squaredNorm());
        worst_dense = std::max(worst_dense, std::max(1 - overlap, std::abs(got.squaredNorm() - expected.squaredNorm())));
    }
    c.check(worst_library <= 1e-10, fmt("max infidelity vs library update = %.2e (tol 1e-10)", worst_library));
    c.check(worst_dense <= 1e-10,
            fmt("max infidelity / norm mismatch vs dense-exponential update = %.2e (tol 1e-10)", worst_dense));
    c.note(fmt("max |P(0) + P(1) - 1| = %.2e", worst_completeness));
    return c.finish();
}

// ---------------------------------------------------------------------------

// <H>/L of the state the Trotterized step converges to: the lowest eigenvector
// of the effective Hamiltonian i log(U) / (s1 dtau) that overlaps `start`.
double trotter_fixed_point(const Hamiltonian &h, const PITEParams &params, double dtau, const StateVector &start) {
    TrotterProgram p = compile_step_programs(h, params, dtau, 1).forward;
    const size_t dim = size_t{1} << h.n_sites();
    oracle::Matrix u(dim, dim);
    for (size_t col = 0; col < dim; col++) {
        StateVector s(h.n_sites());
        s[col] = 1.0;
        evolve(s, p);
        u.col(static_cast<Eigen::Index>(col)) = oracle::to_eigen(s);
    }
    Eigen::ComplexEigenSolver<oracle::Matrix> solver(u);
    oracle::Vector start_vec = oracle::to_eigen(start);
    double best_energy = 1e300;
    double result = 0;
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); k++) {
        oracle::Vector v = solver.eigenvectors().col(k).normalized();
        if (std::norm(v.dot(start_vec)) < 1e-10) {
            continue;
        }
        double heff = -std::arg(solver.eigenvalues()(k)) / (params.s1 * dtau);
        if (heff < best_energy) {
            best_energy = heff;
            result = v.dot(oracle::dense(h) * v).real() / h.n_sites();
        }
    }
    return result;
}

bool tfim_small() {
    Criterion c(3, "TFIM L = 4 (J = h = -1, PBC), gamma 0.78, dtau 0.1, 100 steps from |+>", 1.0);
    Hamiltonian h = models::ising(4, -1.0, -1.0, BoundaryCondition::PBC);
    EDResult ed = lanczos_ground(h);
    double dense = oracle::eigh(oracle::dense(h)).values(0);
    c.check(std::abs(ed.total_energy - dense) <= 1e-10,
            fmt("Lanczos E = %.12f vs dense 16x16 %.12f (|diff| %.1e, tol 1e-10)", ed.total_energy, dense,
                std::abs(ed.total_energy - dense)));
    PITEConfig config;
    config.gamma = 0.78;
    config.dt = 0.1;
    config.n_steps = 100;
    config.order = 1;
    config.initial_state.kind = InitialStateKind::Plus;
    SVResult sv = run_sv(config, h);
    double diff = std::abs(sv.final_energy() - ed.energy);
    c.check(diff <= 1e-3, fmt("|E_sv - E_ED| / L = %.3e (E_sv/L %.8f, E_ED/L %.8f, tol 1e-3)", diff,
                               sv.final_energy(), ed.energy));
    double fixed = trotter_fixed_point(h, sv.params, config.dt, init_state(InitialStateKind::Plus, 4));
    c.note(fmt("fixed point of the first-order Trotterized step: <H>/L = %.8f (|E_sv - fixed| %.1e)", fixed,
               std::abs(sv.final_energy() - fixed)));
    for (auto [order, reps] : {std::pair{1u, 4u}, std::pair{1u, 16u}, std::pair{2u, 1u}}) {
        PITEConfig refined = config;
        refined.order = static_cast<int>(order);
        refined.reps_per_step = reps;
        refined.n_steps = 200;
        double d = std::abs(run_sv(refined, h).final_energy() - ed.energy);
        c.note(fmt("order %u, %u Trotter rep(s) per step, 200 steps: |E_sv - E_ED| / L = %.2e", order, reps, d));
    }
    return c.finish();
}

// ---------------------------------------------------------------------------

bool heisenberg_square() {
    Criterion c(4, "Heisenberg 4x4 (J = 1/4, PBC): Lanczos in n_up = 8 and state-vector PITE from Neel", 600.0);
    Hamiltonian h = models::heisenberg_2d(4, 4, 0.25, BoundaryCondition::PBC);
    EDConfig ed_config;
    ed_config.n_up = 8;
    EDResult ed = lanczos_ground(h, ed_config);
    c.check(std::abs(ed.energy - (-0.701780)) <= 1e-5,
            fmt("E_ED / N = %.8f (target -0.701780 +- 1e-5), residual %.1e", ed.energy, ed.residual));

    PITEConfig config;
    config.gamma = 0.6;
    config.dt = 0.1;
    config.n_steps = 150;
    config.initial_state.kind = InitialStateKind::Neel;
    SVResult sv = run_sv(config, h);
    double diff = std::abs(sv.final_energy() - ed.energy);
    c.check(diff <= 1e-2, fmt("after %u steps |E_sv - E_ED| / N = %.3e (tol 1e-2)", config.n_steps, diff));
    auto min_it = std::min_element(sv.probabilities.begin() + 1, sv.probabilities.end());
    size_t below = std::count_if(sv.probabilities.begin() + 1, sv.probabilities.end(), [](double p) { return p < 0.9; });
    c.check(*min_it >= 0.9, fmt("min per-step P0 = %.4f at step %td; %zu of %u steps below 0.9", *min_it,
                                min_it - sv.probabilities.begin(), below, config.n_steps));
    c.note(fmt("|0101...> in row-major order is a column-stripe pattern on 4x4: E_init / N = %.4f",
               sv.energies.front()));

    // Checkerboard Neel start for comparison.
    std::vector<complex> amps(size_t{1} << 16);
    uint64_t bits = 0;
    for (uint32_t y = 0; y < 4; y++) {
        for (uint32_t x = 0; x < 4; x++) {
            if ((x + y) % 2) {
                bits |= uint64_t{1} << (x + 4 * y);
            }
        }
    }
    amps[bits] = 1.0;
    PITEConfig checker = config;
    checker.initial_state = InitialState::explicit_state(std::move(amps));
    SVResult cb = run_sv(checker, h);
    auto cb_min = std::min_element(cb.probabilities.begin() + 1, cb.probabilities.end());
    c.note(fmt("checkerboard start: E_init / N = %.4f, min P0 = %.4f at step %td, final |E - E_ED| / N = %.2e",
               cb.energies.front(), *cb_min, cb_min - cb.probabilities.begin(),
               std::abs(cb.final_energy() - ed.energy)));
    PITEParams params = derive_params(config.gamma);
    c.note(fmt("closed-form eigenstate P0 at gamma 0.6, dtau 0.1: %.4f at E = 0, %.4f at E = -8, %.4f at E_0",
               closed_form_p0(params, 0.0, 0.1), closed_form_p0(params, -8.0, 0.1),
               closed_form_p0(params, ed.total_energy, 0.1)));
    return c.finish();
}

// ---------------------------------------------------------------------------

bool gamma_sweep() {
    Criterion c(5, "gamma sweep, Heisenberg L = 16 (J = 1/4, PBC), dtau 0.2, singlet start, 80 steps", 900.0);
    Hamiltonian h = models::heisenberg(16, 0.25, BoundaryCondition::PBC);
    EDConfig ed_config;
    ed_config.n_up = 8;
    EDResult ed = lanczos_ground(h, ed_config);
    c.note(fmt("E_ED / L = %.10f", ed.energy));

    auto run = [&](double gamma) {
        PITEConfig config;
        config.gamma = gamma;
        config.dt = 0.2;
        config.n_steps = 80;
        config.initial_state.kind = InitialStateKind::Singlet;
        SVResult sv = run_sv(config, h, {EvolutionMode::Sequential, true});
        double infidelity = std::clamp(1 - std::norm(inner(*ed.ground_state, *sv.final_state)), 0.0, 1.0);
        return std::tuple{sv.total_success(), infidelity, sv.final_energy()};
    };

    auto [low_cum, low_inf, low_e] = run(0.525);
    c.check(low_cum < 0.10, fmt("cumulative success at gamma 0.525 = %.4f (< 0.10)", low_cum));

    std::vector<double> grid;
    for (int k = 0; k <= 8; k++) {
        grid.push_back(0.50 + 0.01 * k);
    }
    std::vector<double> cum;
    std::vector<double> inf;
    for (double g : grid) {
        auto [cs, in, e] = run(g);
        cum.push_back(cs);
        inf.push_back(in);
        c.note(fmt("gamma %.2f: cumulative %.4f  infidelity %.3e  E/L %.8f", g, cs, in, e));
    }
    auto first_drop = [](const std::vector<double> &v) {
        for (size_t k = 1; k < v.size(); k++) {
            if (!(v[k] > v[k - 1])) {
                return static_cast<int>(k);
            }
        }
        return -1;
    };
    int inf_drop = first_drop(inf);
    int cum_drop = first_drop(cum);
    c.check(inf_drop < 0, inf_drop < 0 ? std::string("infidelity strictly increasing over gamma 0.50..0.58")
                                       : fmt("infidelity not increasing at gamma %.2f", grid[inf_drop]));
    c.check(cum_drop < 0, cum_drop < 0 ? std::string("cumulative success strictly increasing over gamma 0.50..0.58")
                                       : fmt("cumulative success decreases from gamma %.2f to %.2f (%.4f -> %.4f)",
                                             grid[cum_drop - 1], grid[cum_drop], cum[cum_drop - 1], cum[cum_drop]));
    return c.finish();
}

// ---------------------------------------------------------------------------

// Probability that a binomial(n, p) fraction lands within k sigma of p.
double within_band(uint64_t n, double p, double k_sigma) {
    if (n == 0 || p >= 1.0 || p <= 0.0) {
        return 1.0;
    }
    double sigma = std::sqrt(p * (1 - p) / n);
    double lo = std::floor(n * (p - k_sigma * sigma)) - 1;
    double hi = std::ceil(n * (p + k_sigma * sigma)) + 1;
    double total = 0;
    for (double k = std::max(0.0, lo); k <= std::min<double>(n, hi); k++) {
        if (std::abs(k / n - p) > k_sigma * sigma) {
            continue;
        }
        total += std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1) - std::lgamma(n - k + 1) + k * std::log(p) +
                          (n - k) * std::log1p(-p));
    }
    return total;
}

bool shot_agreement() {
    Criterion c(6, "shot vs state-vector agreement, XXZ + field L = 8, 10000 shots, 20 seeds", 600.0);
    Hamiltonian h = models::xxz(8, 0.25, 0.70711, BoundaryCondition::PBC);
    h.add_uniform_terms("Z", 0.2);
    PITEConfig config;
    config.gamma = 0.72;
    config.n_steps = 80;
    config.dt = 0.2;
    config.n_shots = 10000;
    config.initial_state.kind = InitialStateKind::Singlet;
    SVResult sv = run_sv(config, h);

    int passing = 0;
    int energy_misses = 0;
    int step_misses = 0;
    for (uint64_t seed = 0; seed < 20; seed++) {
        ShotResult shot = run_shot(config, h, seed);
        int bad_steps = 0;
        double worst_z = 0;
        for (uint32_t j = 1; j <= config.n_steps; j++) {
            double n = static_cast<double>(shot.survivors[j - 1]);
            double p = sv.probabilities[j];
            double f = shot.probabilities[j];
            double sigma = std::sqrt(p * (1 - p) / n);
            double z = sigma > 0 ? std::abs(f - p) / sigma : (f == p ? 0.0 : 1e300);
            worst_z = std::max(worst_z, z);
            bad_steps += z > 3;
        }
        bool energy_ok = shot.energy && std::abs(*shot.energy - sv.final_energy()) <= 3 * *shot.energy_std;
        bool ok = bad_steps == 0 && energy_ok;
        passing += ok;
        energy_misses += !energy_ok;
        step_misses += bad_steps;
        c.note(fmt("seed %2llu: %s  survivors %llu  steps outside 3 sigma %d (max z %.2f)  "
                   "E_shot %.5f +- %.5f vs E_sv %.5f",
                   static_cast<unsigned long long>(seed), ok ? "pass" : "miss",
                   static_cast<unsigned long long>(shot.survivors.back()), bad_steps, worst_z,
                   shot.energy.value_or(NAN), shot.energy_std.value_or(NAN), sv.final_energy()));
    }
    c.check(passing >= 19, fmt("%d of 20 seeds pass (need >= 19, i.e. 95%%)", passing));
    c.note(fmt("over all seeds: %d step checks of %u outside 3 sigma, %d energy checks of 20 outside 3 sigma",
               step_misses, 20 * config.n_steps, energy_misses));

    // Exact pass probability of one seed if every check were an independent
    // binomial / Gaussian draw at the expected survivor counts.
    double seed_pass = std::erf(3 / std::numbers::sqrt2);
    for (uint32_t j = 1; j <= config.n_steps; j++) {
        uint64_t n = static_cast<uint64_t>(std::llround(config.n_shots * sv.cumulative_success[j - 1]));
        seed_pass *= within_band(n, sv.probabilities[j], 3.0);
    }
    double at_least_19 = std::pow(seed_pass, 20) + 20 * std::pow(seed_pass, 19) * (1 - seed_pass);
    c.note(fmt("ideal per-seed pass probability %.4f; P(>= 19 of 20 seeds) = %.4f", seed_pass, at_least_19));
    return c.finish();
}

// ---------------------------------------------------------------------------

bool structure_factor() {
    Criterion c(7, "S(q, w) of the L = 8 Heisenberg ground state, dt 0.025, n_t 400", 300.0);
    Hamiltonian h = models::heisenberg(8, 0.25, BoundaryCondition::PBC);
    EDConfig ed_config;
    ed_config.n_up = 4;
    StateVector psi = *lanczos_ground(h, ed_config).ground_state;
    DSFConfig config;
    config.dt = 0.025;
    config.n_t = 400;
    CorrelationTable table = compute_czz(psi, h, config);

    for (WindowKind w : {WindowKind::Hann, WindowKind::None}) {
        config.window = w;
        DSFGrid grid = dsf_transform(table, config);
        std::string name(window_name(w));
        double asym = q_reflection_asymmetry(grid);
        double sum_rule = static_sum_rule(grid, table);
        double tol = w == WindowKind::Hann ? 0.05 : 0.01;
        c.check(asym <= 1e-8, fmt("%s: max |S(q, w) - S(2pi - q, w)| = %.2e (tol 1e-8)", name.c_str(), asym));
        c.check(sum_rule <= tol,
                fmt("%s: worst relative static sum rule error = %.2e (tol %.0f%%)", name.c_str(), sum_rule, tol * 100));
        double lo = 0;
        double hi = 0;
        size_t peak_q = 0;
        size_t peak_w = 0;
        for (size_t k = 0; k < grid.s.size(); k++) {
            for (size_t m = 0; m < grid.s[k].size(); m++) {
                lo = std::min(lo, grid.s[k][m]);
                if (grid.s[k][m] > hi) {
                    hi = grid.s[k][m];
                    peak_q = k;
                    peak_w = m;
                }
            }
        }
        if (w == WindowKind::Hann) {
            c.check(lo >= -0.05 * hi, fmt("hann: min S / max S = %.4f (>= -0.05)", lo / hi));
        } else {
            c.note(fmt("none: min S / max S = %.4f (unwindowed truncation ringing)", lo / hi));
        }
        c.note(fmt("%s: peak at q = %.4f, w = %.4f; max |Im| discarded %.1e", name.c_str(), grid.q[peak_q],
                   grid.omega[peak_w], grid.max_imag_residue));
    }
    return c.finish();
}

// ---------------------------------------------------------------------------

std::string slurp(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

bool determinism() {
    Criterion c(8, "mode equivalence and byte-identical result files across worker counts", 120.0);
    std::mt19937_64 gen(808);
    Hamiltonian h = models::heisenberg(12, 0.25, BoundaryCondition::PBC);
    h.add_term("X", 0.1, {3});
    PITEConfig config;
    config.gamma = 0.6;
    config.dt = 0.15;
    config.n_steps = 20;
    config.order = 2;
    config.initial_state.kind = InitialStateKind::Random;
    config.initial_state.seed = 5;
    SVResult seq = run_sv(config, h, {EvolutionMode::Sequential, true});
    SVResult par = run_sv(config, h, {EvolutionMode::ParallelPair, true});
    double worst = 0;
    for (size_t j = 0; j < seq.energies.size(); j++) {
        worst = std::max({worst, std::abs(seq.energies[j] - par.energies[j]),
                          std::abs(seq.probabilities[j] - par.probabilities[j]),
                          std::abs(seq.cumulative_success[j] - par.cumulative_success[j])});
    }
    for (size_t b = 0; b < seq.final_state->dim(); b++) {
        worst = std::max(worst, std::abs((*seq.final_state)[b] - (*par.final_state)[b]));
    }
    c.check(worst <= 1e-12, fmt("sequential vs parallel_pair: max deviation %.1e (tol 1e-12)", worst));

    const char *shot_doc = R"({"model": {"type": "xxz", "L": 8, "J": 0.25, "Delta": 0.70711, "hz": 0.2, "bc": "PBC"},
        "pite": {"gamma": 0.72, "n_steps": 80, "dt": 0.2, "n_shots": 10000, "initial_state": "singlet"}, "seed": 1})";
    const char *sv_doc = R"({"model": {"type": "heisenberg", "L": 10, "J": 0.25},
        "pite": {"gamma": 0.6, "n_steps": 30, "dt": 0.2, "initial_state": "neel"}})";
    const char *dsf_doc = R"({"model": {"type": "heisenberg", "L": 6, "J": 0.25}, "ed": {"n_up": 3},
        "dsf": {"n_t": 100, "dt": 0.05}})";
    struct Case {
        workbench::Algorithm algorithm;
        const char *doc;
        std::vector<std::string> files;
    };
    std::vector<Case> cases = {
        {workbench::Algorithm::Shot, shot_doc, {"result.json", "probabilities.csv", "survivors.csv"}},
        {workbench::Algorithm::SV, sv_doc, {"result.json", "energies.csv", "probabilities.csv", "final_state.svpt"}},
        {workbench::Algorithm::DSF, dsf_doc, {"result.json", "dsf.csv"}},
    };
    fs::path root = fs::temp_directory_path() / fmt("svpite_acceptance_%d", static_cast<int>(gen() % 1000000));
    size_t saved = worker_count();
    bool identical = true;
    size_t compared = 0;
    for (const auto &cs : cases) {
        workbench::RunSpec spec = workbench::parse_runspec(nlohmann::json::parse(cs.doc));
        std::vector<fs::path> dirs;
        for (size_t workers : {1, 3, 8}) {
            set_worker_count(workers);
            workbench::RunOptions options;
            options.out_dir = root / fmt("%s_%zu", std::string(workbench::algorithm_name(cs.algorithm)).c_str(), workers);
            options.reproducible = true;
            options.dump_state = true;
            workbench::run(cs.algorithm, spec, options);
            dirs.push_back(options.out_dir);
        }
        for (const auto &file : cs.files) {
            std::string first = slurp(dirs[0] / file);
            for (size_t k = 1; k < dirs.size(); k++) {
                bool same = !first.empty() && first == slurp(dirs[k] / file);
                identical = identical && same;
                compared++;
                if (!same) {
                    c.note("differs: " + (dirs[k] / file).string());
                }
            }
        }
    }
    set_worker_count(saved);
    fs::remove_all(root);
    c.check(identical, fmt("%zu file comparisons (shot, sv, dsf runs at 1, 3 and 8 workers) byte-identical", compared));
    return c.finish();
}

// ---------------------------------------------------------------------------

bool performance() {
    Criterion c(9, "performance: Heisenberg L = 16, 80 state-vector steps on one worker; bench tables", 300.0);
    size_t saved = worker_count();
    set_worker_count(1);
    Hamiltonian h = models::heisenberg(16, 0.25, BoundaryCondition::PBC);
    PITEConfig config;
    config.gamma = 0.55;
    config.dt = 0.2;
    config.n_steps = 80;
    config.initial_state.kind = InitialStateKind::Singlet;
    auto start = Clock::now();
    SVResult sv = run_sv(config, h);
    double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    set_worker_count(saved);
    c.check(elapsed <= 30.0, fmt("run_sv wall time %.2f s on 1 worker (budget 30 s), E/L %.6f", elapsed,
                                 sv.final_energy()));

    workbench::RunSpec spec = workbench::parse_runspec(nlohmann::json::parse(R"({
        "algorithm": "bench", "model": {"type": "heisenberg", "L": 8, "J": 0.25},
        "pite": {"gamma": 0.6, "dt": 0.2, "initial_state": "singlet"},
        "bench": {"sizes": [8, 10, 12], "size_grid_steps": 10, "steps_grid": [10, 20, 40],
                  "steps_grid_size": 12, "repetitions": 3}})"));
    auto records = workbench::bench(spec);
    std::ostringstream csv;
    workbench::write_bench_csv(csv, records);
    std::string text = csv.str();
    size_t lines = std::count(text.begin(), text.end(), '\n');
    bool header = text.rfind("scenario,L,n_steps,mode,repetitions,mean_s,std_s\n", 0) == 0;
    c.check(header && lines == 1 + 2 * (3 + 3),
            fmt("bench table: header %s, %zu data rows (expected 12: 2 modes x (3 sizes + 3 step counts))",
                header ? "ok" : "wrong", lines - 1));
    for (const auto &r : records) {
        if (r.n_sites == 12 && r.n_steps == 40) {
            c.note(fmt("L 12, 40 steps, %s: %.4f +- %.4f s", std::string(evolution_mode_name(r.mode)).c_str(),
                       r.mean_s, r.std_s));
        }
    }
    return c.finish();
}

}  // namespace

int main() {
    std::printf("svpite acceptance run (%zu worker thread(s))\n\n", worker_count());
    std::vector<bool> results = {eigenstate_oracle(), circuit_equivalence(), tfim_small(),
                                 heisenberg_square(), gamma_sweep(),         shot_agreement(),
                                 structure_factor(),  determinism(),         performance()};
    int passed = static_cast<int>(std::count(results.begin(), results.end(), true));
    std::printf("\n%d of %zu criteria passed\n", passed, results.size());
    return passed == static_cast<int>(results.size()) ? 0 : 1;
}
