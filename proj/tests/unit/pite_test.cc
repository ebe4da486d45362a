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

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <random>

#include "oracles.h"
#include "svpite/error.h"
#include "svpite/models.h"
#include "svpite/pite.h"

namespace svpite {
namespace {

constexpr double kPi = 3.14159265358979323846;

ErrorKind kind_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "no svpite::Error raised";
    return ErrorKind::IoError;
}

double closed_form_p0(const PITEParams &p, double energy, double dtau) {
    double c = std::cos(p.theta0 - kPi / 4 - energy * p.s1 * dtau);
    return c * c;
}

TEST(Params, ClosedForms) {
    PITEParams mid = derive_params(1 / std::sqrt(2.0));
    EXPECT_NEAR(mid.theta0, 0.0, 1e-7);
    EXPECT_NEAR(mid.s1, 1.0, 1e-12);
    PITEParams p = derive_params(0.53);
    EXPECT_EQ(p.kappa, -1);
    EXPECT_NEAR(p.s1, 0.625, 1e-5);
    EXPECT_NEAR(p.theta0, -0.2268, 5e-4);
    EXPECT_EQ(derive_params(0.8).kappa, 1);
    EXPECT_EQ(kind_of([] { derive_params(0.0); }), ErrorKind::GammaOutOfRange);
    EXPECT_EQ(kind_of([] { derive_params(1.0); }), ErrorKind::GammaOutOfRange);
}

TEST(Config, Validation) {
    PITEConfig c;
    c.gamma = 0.5;
    EXPECT_NO_THROW(c.validate());
    c.order = 3;
    EXPECT_EQ(kind_of([&] { c.validate(); }), ErrorKind::BadOrder);
    c.order = 1;
    c.dt = -0.1;
    EXPECT_EQ(kind_of([&] { c.validate(); }), ErrorKind::InvalidConfig);
    c.dt = 0.1;
    c.gamma = 1.5;
    EXPECT_EQ(kind_of([&] { c.validate(); }), ErrorKind::GammaOutOfRange);
}

TEST(Step, EigenstateSuccessProbability) {
    std::mt19937_64 gen(17);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    for (uint32_t n : {1u, 2u}) {
        for (int trial = 0; trial < 20; trial++) {
            Hamiltonian h(n);
            for (uint32_t i = 0; i < n; i++) {
                h.add_term("Z", coeff(gen), {i});
            }
            if (n == 2) {
                h.add_term("ZZ", coeff(gen), {0, 1});
            }
            double gamma = 0.2 + 0.6 * (trial / 20.0);
            double dtau = 0.05 + 0.01 * trial;
            PITEParams params = derive_params(gamma);
            size_t basis = gen() % (size_t{1} << n);
            StateVector s(n);
            s[basis] = 1.0;
            double energy = expectation(s, h);
            auto programs = compile_step_programs(h, params, dtau, 1);
            StepOutcome out = pite_step(s, params, programs);
            EXPECT_NEAR(out.p0, closed_form_p0(params, energy, dtau), 1e-12);
            EXPECT_NEAR(out.state.norm_squared(), 1.0, 1e-12);
            EXPECT_NEAR(std::norm(inner(s, out.state)), 1.0, 1e-12);
        }
    }
}

TEST(Step, ZeroTimeStepGivesGammaSquared) {
    std::mt19937_64 gen(3);
    Hamiltonian h = oracle::random_hamiltonian(3, gen);
    StateVector s = oracle::random_state(3, gen);
    for (double gamma : {0.3, 0.6, 0.9}) {
        PITEParams params = derive_params(gamma);
        StepOutcome out = pite_step(s, params, compile_step_programs(h, params, 0.0, 1));
        EXPECT_NEAR(out.p0, gamma * gamma, 1e-12);
        EXPECT_NEAR(std::norm(inner(s, out.state)), 1.0, 1e-12);
    }
}

TEST(Step, ApproachesExactImaginaryTimeQuadratically) {
    Hamiltonian h(1);
    h.add_term("Z", 0.8, {0});
    StateVector s = init_state(InitialStateKind::Zero, 1);
    const double gamma = 0.6;
    PITEParams params = derive_params(gamma);
    auto gap = [&](double dtau) {
        double p0 = pite_step(s, params, compile_step_programs(h, params, dtau, 1)).p0;
        return std::abs(p0 - gamma * gamma * std::exp(-2 * 0.8 * dtau));
    };
    for (double dtau : {0.04, 0.02}) {
        double ratio = gap(dtau) / gap(dtau / 2);
        EXPECT_GE(ratio, 3.4) << dtau;
        EXPECT_LE(ratio, 4.6) << dtau;
    }
}

TEST(Step, SuccessAndFailureAreComplete) {
    std::mt19937_64 gen(23);
    Hamiltonian h = oracle::random_hamiltonian(3, gen);
    StateVector s = oracle::random_state(3, gen);
    PITEParams params = derive_params(0.65);
    auto programs = compile_step_programs(h, params, 0.1, 1);
    StateVector ok = combine_branches(s, programs, success_weights(params), EvolutionMode::Sequential);
    StateVector fail = combine_branches(s, programs, failure_weights(params), EvolutionMode::Sequential);
    EXPECT_NEAR(ok.norm_squared() + fail.norm_squared(), 1.0, 1e-12);
}

TEST(Step, VanishingNorm) {
    // At this gamma and step the closed form cos^2 is exactly zero on |0>.
    Hamiltonian h(1);
    h.add_term("Z", 1.0, {0});
    PITEParams params = derive_params(0.6);
    double dtau = (params.theta0 - kPi / 4 + kPi / 2) / params.s1;
    auto programs = compile_step_programs(h, params, dtau, 1);
    EXPECT_EQ(kind_of([&] { pite_step(init_state(InitialStateKind::Zero, 1), params, programs); }),
              ErrorKind::VanishingNorm);
}

TEST(Run, SingletIsFixedPoint) {
    Hamiltonian h = models::heisenberg(2, 0.25, BoundaryCondition::OBC);
    PITEConfig c;
    c.gamma = 0.7;
    c.n_steps = 30;
    c.dt = 0.2;
    c.initial_state.kind = InitialStateKind::Singlet;
    SVRunOptions options;
    options.return_state = true;
    SVResult r = run_sv(c, h, options);
    for (double e : r.energies) {
        EXPECT_NEAR(e * 2, -0.75, 1e-12);
    }
    EXPECT_NEAR(std::norm(inner(*r.final_state, init_state(InitialStateKind::Singlet, 2))), 1.0, 1e-12);
}

TEST(Run, SeriesLayout) {
    Hamiltonian h = models::ising(4, -1.0, -1.0, BoundaryCondition::PBC);
    PITEConfig c;
    c.gamma = 0.78;
    c.n_steps = 0;
    c.initial_state.kind = InitialStateKind::Plus;
    SVResult none = run_sv(c, h);
    ASSERT_EQ(none.energies.size(), 1u);
    EXPECT_NEAR(none.energies[0], expectation(init_state(InitialStateKind::Plus, 4), h) / 4, 1e-15);
    EXPECT_EQ(none.probabilities, std::vector<double>{1.0});

    c.n_steps = 12;
    SVResult r = run_sv(c, h);
    ASSERT_EQ(r.energies.size(), 13u);
    ASSERT_EQ(r.probabilities.size(), 13u);
    double product = 1;
    for (size_t j = 1; j < r.probabilities.size(); j++) {
        EXPECT_GT(r.probabilities[j], 0.0);
        EXPECT_LE(r.probabilities[j], 1.0);
        product *= r.probabilities[j];
        EXPECT_NEAR(r.cumulative_success[j], product, 1e-15);
    }
}

TEST(Run, ModesAgree) {
    std::mt19937_64 gen(31);
    Hamiltonian h = oracle::random_hamiltonian(5, gen);
    PITEConfig c;
    c.gamma = 0.55;
    c.n_steps = 15;
    c.dt = 0.1;
    c.order = 2;
    c.initial_state.kind = InitialStateKind::Random;
    c.initial_state.seed = 4;
    SVResult seq = run_sv(c, h, {EvolutionMode::Sequential, true});
    SVResult par = run_sv(c, h, {EvolutionMode::ParallelPair, true});
    for (size_t j = 0; j < seq.energies.size(); j++) {
        EXPECT_NEAR(seq.energies[j], par.energies[j], 1e-12);
        EXPECT_NEAR(seq.probabilities[j], par.probabilities[j], 1e-12);
    }
    EXPECT_LE(oracle::max_abs(oracle::to_eigen(*seq.final_state), oracle::to_eigen(*par.final_state)), 1e-12);
}

TEST(Run, GlobalPhaseOfInitialStateIsIrrelevant) {
    std::mt19937_64 gen(2);
    Hamiltonian h = oracle::random_hamiltonian(3, gen);
    StateVector s = oracle::random_state(3, gen);
    std::vector<complex> amps(s.amplitudes().begin(), s.amplitudes().end());
    std::vector<complex> rotated = amps;
    for (auto &a : rotated) {
        a *= std::polar(1.0, 0.77);
    }
    PITEConfig c;
    c.gamma = 0.6;
    c.n_steps = 5;
    c.initial_state = InitialState::explicit_state(amps);
    SVResult a = run_sv(c, h);
    c.initial_state = InitialState::explicit_state(rotated);
    SVResult b = run_sv(c, h);
    for (size_t j = 0; j < a.energies.size(); j++) {
        EXPECT_NEAR(a.energies[j], b.energies[j], 1e-12);
    }
}

}  // namespace
}  // namespace svpite
