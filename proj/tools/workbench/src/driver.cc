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

#include "svpite/workbench/driver.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include "svpite/error.h"
#include "svpite/shot.h"

namespace svpite::workbench {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

template <typename T>
std::string series_csv(const std::string &value_name, const std::vector<T> &values) {
    std::ostringstream out;
    out << "step," << value_name << "\n";
    for (size_t i = 0; i < values.size(); i++) {
        out << i << ',';
        if constexpr (std::is_floating_point_v<T>) {
            out << format_double(values[i]);
        } else {
            out << values[i];
        }
        out << '\n';
    }
    return out.str();
}

std::string gamma_csv(const std::string &value_name, const std::vector<SweepRecord> &records,
                      double (*get)(const SweepRecord &)) {
    std::ostringstream out;
    out << "gamma," << value_name << "\n";
    for (const auto &r : records) {
        out << format_double(r.gamma) << ',' << format_double(get(r)) << '\n';
    }
    return out.str();
}

StateVector load_state(const std::string &path, uint32_t n_sites) {
    StateVector state = read_state_file(path);
    if (state.n_sites() != n_sites) {
        throw Error(ErrorKind::SiteCountMismatch, "state file '" + path + "' holds " +
                                                      std::to_string(state.n_sites()) + " sites, model has " +
                                                      std::to_string(n_sites));
    }
    return state;
}

void resolve_initial_state(RunSpec &spec) {
    if (spec.initial_state_file.empty()) {
        return;
    }
    StateVector state = load_state(spec.initial_state_file, spec.model.n_sites);
    auto amps = state.amplitudes();
    spec.pite.initial_state = InitialState::explicit_state({amps.begin(), amps.end()});
}

// Ground state for infidelity or spectral runs: the sector given in the ED
// block, else the full space.
EDResult ground_state(const RunSpec &spec, const Hamiltonian &h) {
    EDConfig config = spec.ed;
    config.return_ground_state = true;
    return lanczos_ground(h, config);
}

std::string bytes_of(const StateVector &state) {
    std::vector<uint8_t> bytes = encode_state(state);
    return std::string(bytes.begin(), bytes.end());
}

double mean(const std::vector<double> &v) {
    double s = 0;
    for (double x : v) {
        s += x;
    }
    return s / static_cast<double>(v.size());
}

double sample_std(const std::vector<double> &v) {
    if (v.size() < 2) {
        return 0;
    }
    double m = mean(v);
    double s = 0;
    for (double x : v) {
        s += (x - m) * (x - m);
    }
    return std::sqrt(s / static_cast<double>(v.size() - 1));
}

double max_abs_diff(const std::vector<double> &a, const std::vector<double> &b) {
    double worst = 0;
    for (size_t i = 0; i < a.size(); i++) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

}  // namespace

std::vector<SweepRecord> sweep_gamma(const RunSpec &spec, const Hamiltonian &h, std::vector<double> gammas,
                                     const StateVector *reference) {
    std::sort(gammas.begin(), gammas.end());
    std::vector<SweepRecord> records;
    for (double gamma : gammas) {
        PITEConfig config = spec.pite;
        config.gamma = gamma;
        SVRunOptions options;
        options.mode = spec.mode;
        options.return_state = reference != nullptr;
        SVResult result = run_sv(config, h, options);
        SweepRecord record;
        record.gamma = gamma;
        record.final_energy = result.final_energy();
        record.probabilities = result.probabilities;
        record.cumulative_success = result.total_success();
        if (reference) {
            double overlap = std::norm(inner(*reference, *result.final_state));
            record.infidelity = std::clamp(1.0 - overlap, 0.0, 1.0);
        }
        records.push_back(std::move(record));
    }
    return records;
}

std::vector<BenchRecord> bench(const RunSpec &spec) {
    const BenchSpec &b = spec.bench;
    if (b.repetitions < 3) {
        throw Error(ErrorKind::InvalidConfig, "bench needs at least 3 repetitions");
    }
    std::vector<BenchRecord> records;
    auto time_case = [&](const std::string &scenario, uint32_t n_sites, uint32_t n_steps) {
        ModelSpec model = spec.model;
        if (model.type == "heisenberg_2d") {
            throw Error(ErrorKind::InvalidConfig, "bench scales chain models only");
        }
        model.n_sites = n_sites;
        Hamiltonian h = build_hamiltonian(model);
        PITEConfig config = spec.pite;
        config.n_steps = n_steps;
        if (config.initial_state.kind == InitialStateKind::Explicit) {
            throw Error(ErrorKind::InvalidConfig, "bench needs a size-independent initial state");
        }
        std::vector<double> reference;
        for (EvolutionMode mode : {EvolutionMode::Sequential, EvolutionMode::ParallelPair}) {
            std::vector<double> times;
            for (uint32_t rep = 0; rep < b.repetitions; rep++) {
                auto start = Clock::now();
                SVResult result = run_sv(config, h, {mode, false});
                times.push_back(seconds_since(start));
                if (reference.empty()) {
                    reference = result.energies;
                } else if (max_abs_diff(reference, result.energies) > 1e-12) {
                    throw Error(ErrorKind::ShapeMismatch, "evolution modes disagree at L=" + std::to_string(n_sites));
                }
            }
            records.push_back({scenario, n_sites, n_steps, mode, b.repetitions, mean(times), sample_std(times)});
        }
    };
    for (uint32_t n : b.sizes) {
        time_case("size", n, b.size_grid_steps);
    }
    for (uint32_t steps : b.steps_grid) {
        time_case("steps", b.steps_grid_size, steps);
    }
    return records;
}

void write_bench_csv(std::ostream &out, const std::vector<BenchRecord> &records) {
    out << "scenario,L,n_steps,mode,repetitions,mean_s,std_s\n";
    for (const auto &r : records) {
        out << r.scenario << ',' << r.n_sites << ',' << r.n_steps << ',' << evolution_mode_name(r.mode) << ','
            << r.repetitions << ',' << format_double(r.mean_s) << ',' << format_double(r.std_s) << '\n';
    }
}

json error_json(std::string_view kind, std::string_view message) {
    return {{"error", {{"kind", kind}, {"message", message}}}};
}

void write_file_atomic(const std::filesystem::path &path, std::string_view contents) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error(ErrorKind::IoError, "cannot write '" + tmp.string() + "'");
        }
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!out) {
            throw Error(ErrorKind::IoError, "write failed for '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        throw Error(ErrorKind::IoError, "cannot rename onto '" + path.string() + "': " + ec.message());
    }
}

json run(Algorithm algorithm, RunSpec spec, const RunOptions &options) {
    if (spec.algorithm && *spec.algorithm != algorithm) {
        throw Error(ErrorKind::SchemaError, "algorithm: config requests '" + std::string(algorithm_name(*spec.algorithm)) +
                                                "' but the subcommand runs '" + std::string(algorithm_name(algorithm)) +
                                                "'");
    }
    spec.algorithm = algorithm;
    if (options.seed) {
        spec.seed = *options.seed;
        spec.pite.seed = spec.seed;
        spec.ed.seed = spec.seed;
    }
    if (options.gammas) {
        spec.sweep.gammas = *options.gammas;
    }
    bool needs_pite = algorithm == Algorithm::SV || algorithm == Algorithm::Shot || algorithm == Algorithm::Sweep ||
                      algorithm == Algorithm::Bench ||
                      (algorithm == Algorithm::DSF && spec.dsf.ground_state == GroundStateSource::SV);
    if (needs_pite && !(spec.pite.gamma > 0.0)) {
        throw Error(ErrorKind::SchemaError, "pite: missing required block");
    }
    if (algorithm == Algorithm::Sweep && spec.sweep.gammas.empty()) {
        throw Error(ErrorKind::SchemaError, "sweep.gammas: no gamma values given");
    }
    resolve_initial_state(spec);

    std::filesystem::create_directories(options.out_dir);
    auto write = [&](const std::string &name, const std::string &contents) {
        write_file_atomic(options.out_dir / name, contents);
    };

    auto start = Clock::now();
    Hamiltonian h = build_hamiltonian(spec.model);
    json series = json::object();
    json scalars = json::object();

    switch (algorithm) {
        case Algorithm::SV: {
            SVResult r = run_sv(spec.pite, h, {spec.mode, options.dump_state});
            series["energies"] = r.energies;
            series["probabilities"] = r.probabilities;
            series["cumulative_success"] = r.cumulative_success;
            scalars["final_energy"] = r.final_energy();
            scalars["total_success"] = r.total_success();
            scalars["kappa"] = r.params.kappa;
            scalars["theta0"] = r.params.theta0;
            scalars["s1"] = r.params.s1;
            write("energies.csv", series_csv("energy", r.energies));
            write("probabilities.csv", series_csv("p0", r.probabilities));
            write("cumulative_success.csv", series_csv("cumulative_success", r.cumulative_success));
            if (options.dump_state) {
                write("final_state.svpt", bytes_of(*r.final_state));
            }
            break;
        }
        case Algorithm::Shot: {
            ShotResult r = run_shot(spec.pite, h, spec.seed);
            series["probabilities"] = r.probabilities;
            series["survivors"] = r.survivors;
            scalars["energy"] = r.energy ? json(*r.energy) : json(nullptr);
            scalars["energy_std"] = r.energy_std ? json(*r.energy_std) : json(nullptr);
            scalars["final_survivors"] = r.survivors.back();
            scalars["all_shots_discarded"] = r.survivors.back() == 0;
            write("probabilities.csv", series_csv("p0", r.probabilities));
            write("survivors.csv", series_csv("survivors", r.survivors));
            break;
        }
        case Algorithm::ED: {
            EDResult r = lanczos_ground(h, spec.ed);
            scalars["energy"] = r.energy;
            scalars["total_energy"] = r.total_energy;
            scalars["residual"] = r.residual;
            scalars["iterations"] = r.iterations;
            scalars["restarts"] = r.restarts;
            if (options.dump_state && r.ground_state) {
                write("ground_state.svpt", bytes_of(*r.ground_state));
            }
            break;
        }
        case Algorithm::DSF: {
            std::optional<StateVector> psi0;
            switch (spec.dsf.ground_state) {
                case GroundStateSource::ED:
                    psi0 = std::move(ground_state(spec, h).ground_state);
                    break;
                case GroundStateSource::SV: {
                    SVResult r = run_sv(spec.pite, h, {spec.mode, true});
                    psi0 = std::move(r.final_state);
                    scalars["sv_final_energy"] = r.final_energy();
                    break;
                }
                case GroundStateSource::File:
                    psi0 = load_state(spec.dsf.state_file, h.n_sites());
                    break;
            }
            CorrelationTable table = compute_czz(*psi0, h, spec.dsf.config);
            DSFGrid grid = dsf_transform(table, spec.dsf.config);
            std::vector<double> static_sf = static_structure_factor(table);
            series["q"] = grid.q;
            series["omega"] = grid.omega;
            series["static_structure_factor"] = static_sf;
            scalars["e0"] = table.e0;
            scalars["sum_rule_discrepancy"] = static_sum_rule(grid, table);
            scalars["q_reflection_asymmetry"] = q_reflection_asymmetry(grid);
            scalars["max_imag_residue"] = grid.max_imag_residue;
            std::ostringstream csv;
            write_dsf_csv(csv, grid);
            write("dsf.csv", csv.str());
            break;
        }
        case Algorithm::Sweep: {
            std::optional<EDResult> ed;
            if (spec.sweep.ed_reference) {
                ed = ground_state(spec, h);
                scalars["ed_energy"] = ed->energy;
            }
            auto records = sweep_gamma(spec, h, spec.sweep.gammas, ed ? &*ed->ground_state : nullptr);
            json gammas = json::array();
            json energies = json::array();
            json cumulative = json::array();
            json infidelity = json::array();
            json p0 = json::array();
            for (const auto &r : records) {
                gammas.push_back(r.gamma);
                energies.push_back(r.final_energy);
                cumulative.push_back(r.cumulative_success);
                infidelity.push_back(r.infidelity ? json(*r.infidelity) : json(nullptr));
                p0.push_back(r.probabilities);
            }
            series["gamma"] = gammas;
            series["final_energy"] = energies;
            series["cumulative_success"] = cumulative;
            series["infidelity"] = infidelity;
            series["probabilities"] = p0;
            write("energy_vs_gamma.csv",
                  gamma_csv("final_energy", records, [](const SweepRecord &r) { return r.final_energy; }));
            write("cumulative_vs_gamma.csv",
                  gamma_csv("cumulative_success", records, [](const SweepRecord &r) { return r.cumulative_success; }));
            if (ed) {
                write("infidelity_vs_gamma.csv",
                      gamma_csv("infidelity", records, [](const SweepRecord &r) { return *r.infidelity; }));
            }
            break;
        }
        case Algorithm::Bench: {
            auto records = bench(spec);
            json rows = json::array();
            for (const auto &r : records) {
                rows.push_back({{"scenario", r.scenario},
                                {"L", r.n_sites},
                                {"n_steps", r.n_steps},
                                {"mode", evolution_mode_name(r.mode)},
                                {"repetitions", r.repetitions},
                                {"mean_s", options.reproducible ? 0.0 : r.mean_s},
                                {"std_s", options.reproducible ? 0.0 : r.std_s}});
            }
            series["bench"] = rows;
            std::ostringstream csv;
            write_bench_csv(csv, records);
            write("bench.csv", csv.str());
            break;
        }
    }

    json result;
    result["tool_version"] = kToolVersion;
    result["algorithm"] = algorithm_name(algorithm);
    result["config"] = to_json(spec);
    result["series"] = series;
    result["scalars"] = scalars;
    result["wall_time_s"] = options.reproducible ? 0.0 : seconds_since(start);
    result["seed"] = spec.seed;
    write("result.json", result.dump(2) + "\n");
    return result;
}

}  // namespace svpite::workbench
