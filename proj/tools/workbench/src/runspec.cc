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

#include "svpite/workbench/runspec.h"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "svpite/error.h"
#include "svpite/models.h"

namespace svpite::workbench {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string &path, const std::string &message) {
    throw Error(ErrorKind::SchemaError, path + ": " + message);
}

// Reads one JSON object, remembering which keys were consumed so leftovers
// can be reported as unknown.
class Fields {
   public:
    Fields(const json &obj, std::string path) : obj_(obj), path_(std::move(path)) {
        if (!obj_.is_object()) {
            schema_error(path_, "expected an object");
        }
    }

    std::string at(const std::string &key) const {
        return path_.empty() ? key : path_ + "." + key;
    }

    bool has(const std::string &key) const {
        return obj_.contains(key);
    }

    const json &get(const std::string &key) {
        seen_.insert(key);
        return obj_.at(key);
    }

    const json &require(const std::string &key) {
        if (!has(key)) {
            schema_error(at(key), "missing required field");
        }
        return get(key);
    }

    double number(const std::string &key, std::optional<double> fallback = {}) {
        if (!has(key)) {
            if (!fallback) {
                schema_error(at(key), "missing required field");
            }
            return *fallback;
        }
        const json &v = get(key);
        if (!v.is_number()) {
            schema_error(at(key), "expected a number");
        }
        double x = v.get<double>();
        if (!std::isfinite(x)) {
            schema_error(at(key), "expected a finite number");
        }
        return x;
    }

    uint64_t integer(const std::string &key, std::optional<uint64_t> fallback = {}) {
        if (!has(key)) {
            if (!fallback) {
                schema_error(at(key), "missing required field");
            }
            return *fallback;
        }
        const json &v = get(key);
        if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<int64_t>() < 0)) {
            schema_error(at(key), "expected a non-negative integer");
        }
        return v.get<uint64_t>();
    }

    uint32_t integer32(const std::string &key, std::optional<uint32_t> fallback = {}) {
        uint64_t v = integer(key, fallback);
        if (v > UINT32_MAX) {
            schema_error(at(key), "value too large");
        }
        return static_cast<uint32_t>(v);
    }

    std::string string(const std::string &key, std::optional<std::string> fallback = {}) {
        if (!has(key)) {
            if (!fallback) {
                schema_error(at(key), "missing required field");
            }
            return *fallback;
        }
        const json &v = get(key);
        if (!v.is_string()) {
            schema_error(at(key), "expected a string");
        }
        return v.get<std::string>();
    }

    bool boolean(const std::string &key, bool fallback) {
        if (!has(key)) {
            return fallback;
        }
        const json &v = get(key);
        if (!v.is_boolean()) {
            schema_error(at(key), "expected a boolean");
        }
        return v.get<bool>();
    }

    void finish() const {
        for (auto it = obj_.begin(); it != obj_.end(); ++it) {
            if (!seen_.count(it.key())) {
                schema_error(at(it.key()), "unknown key");
            }
        }
    }

   private:
    const json &obj_;
    std::string path_;
    std::set<std::string> seen_;
};

// Re-raises library validation errors as schema errors at `path`.
template <typename F>
auto at_path(const std::string &path, F &&f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error &e) {
        schema_error(path, e.what());
    }
}

std::vector<uint32_t> uint_list(const json &v, const std::string &path) {
    if (!v.is_array()) {
        schema_error(path, "expected an array of non-negative integers");
    }
    std::vector<uint32_t> out;
    for (const auto &x : v) {
        if (!x.is_number_unsigned() || x.get<uint64_t>() > UINT32_MAX) {
            schema_error(path, "expected an array of non-negative integers");
        }
        out.push_back(x.get<uint32_t>());
    }
    return out;
}

const std::set<std::string> kModelTypes = {"ising", "heisenberg", "xy", "xxz", "heisenberg_2d", "terms"};

ModelSpec parse_model(const json &doc) {
    Fields f(doc, "model");
    ModelSpec m;
    m.type = f.string("type");
    if (!kModelTypes.count(m.type)) {
        throw Error(ErrorKind::UnknownModel, "model.type: unknown model '" + m.type + "'");
    }
    if (m.type == "heisenberg_2d") {
        m.lx = f.integer32("Lx");
        m.ly = f.integer32("Ly");
        m.n_sites = m.lx * m.ly;
    } else {
        m.n_sites = f.integer32("L");
    }
    if (m.n_sites < 1 || m.n_sites > kMaxStateSites) {
        schema_error(f.at(m.type == "heisenberg_2d" ? "Lx" : "L"),
                     "site count must lie in [1, " + std::to_string(kMaxStateSites) + "]");
    }
    if (m.type != "terms") {
        m.j = f.number("J");
        std::string bc = f.string("bc", "PBC");
        m.bc = at_path(f.at("bc"), [&] { return parse_boundary(bc); });
    }
    if (m.type == "ising") {
        m.h = f.number("h");
    }
    if (m.type == "xxz") {
        m.delta = f.number("Delta");
        m.hz = f.number("hz", 0.0);
    }
    if (f.has("uniform_terms")) {
        const json &list = f.get("uniform_terms");
        if (!list.is_array()) {
            schema_error("model.uniform_terms", "expected an array");
        }
        for (size_t i = 0; i < list.size(); i++) {
            Fields t(list[i], "model.uniform_terms[" + std::to_string(i) + "]");
            UniformTermSpec u;
            u.key = t.string("key");
            u.coeff = t.number("coeff");
            if (t.has("bc")) {
                std::string bc = t.string("bc");
                u.bc = at_path(t.at("bc"), [&] { return parse_boundary(bc); });
            }
            t.finish();
            m.uniform_terms.push_back(u);
        }
    }
    if (f.has("terms")) {
        const json &list = f.get("terms");
        if (!list.is_array()) {
            schema_error("model.terms", "expected an array");
        }
        for (size_t i = 0; i < list.size(); i++) {
            std::string path = "model.terms[" + std::to_string(i) + "]";
            Fields t(list[i], path);
            ExplicitTermSpec e;
            e.key = t.string("key");
            e.coeff = t.number("coeff");
            const json &sites = t.require("sites");
            if (!sites.is_array()) {
                schema_error(path + ".sites", "expected an array");
            }
            for (const auto &s : sites) {
                e.sites.push_back(uint_list(s, path + ".sites"));
            }
            t.finish();
            m.terms.push_back(std::move(e));
        }
    } else if (m.type == "terms") {
        schema_error("model.terms", "missing required field");
    }
    f.finish();
    // Surface operator-level problems (bad keys, out-of-range sites) now.
    at_path("model", [&] { return build_hamiltonian(m); });
    return m;
}

InitialState parse_initial_state_value(const json &v, const std::string &path, std::string *state_file) {
    if (v.is_string()) {
        std::string name = v.get<std::string>();
        InitialState s;
        s.kind = at_path(path, [&] { return parse_initial_state(name); });
        if (s.kind == InitialStateKind::Explicit) {
            schema_error(path, "explicit states need an object with amplitudes");
        }
        return s;
    }
    Fields f(v, path);
    std::string kind = f.string("kind");
    InitialState s;
    if (kind == "file") {
        *state_file = f.string("path");
        f.finish();
        return s;
    }
    s.kind = kind == "explicit" ? InitialStateKind::Explicit
                                : at_path(f.at("kind"), [&] { return parse_initial_state(kind); });
    if (s.kind == InitialStateKind::Random) {
        s.seed = f.integer("seed", 0);
    }
    if (s.kind == InitialStateKind::Explicit) {
        const json &amps = f.require("amplitudes");
        if (!amps.is_array()) {
            schema_error(f.at("amplitudes"), "expected an array of [re, im] pairs");
        }
        for (const auto &a : amps) {
            if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number()) {
                schema_error(f.at("amplitudes"), "expected an array of [re, im] pairs");
            }
            s.amplitudes.emplace_back(a[0].get<double>(), a[1].get<double>());
        }
    }
    f.finish();
    return s;
}

void parse_pite(const json &doc, RunSpec &spec) {
    Fields f(doc, "pite");
    PITEConfig &c = spec.pite;
    c.gamma = f.number("gamma");
    if (!(c.gamma > 0.0 && c.gamma < 1.0)) {
        schema_error("pite.gamma", "must lie in (0, 1)");
    }
    c.n_steps = f.integer32("n_steps", 1);
    c.dt = f.number("dt", 0.1);
    c.order = static_cast<int>(f.integer32("order", 1));
    if (c.order != 1 && c.order != 2) {
        schema_error("pite.order", "must be 1 or 2");
    }
    c.n_shots = f.integer32("n_shots", 1000);
    c.reps_per_step = f.integer32("reps_per_step", 1);
    if (f.has("initial_state")) {
        c.initial_state = parse_initial_state_value(f.get("initial_state"), "pite.initial_state", &spec.initial_state_file);
    }
    std::string mode = f.string("mode", "sequential");
    spec.mode = at_path("pite.mode", [&] { return parse_evolution_mode(mode); });
    f.finish();
    at_path("pite", [&] {
        c.validate();
        return 0;
    });
    if (c.initial_state.kind == InitialStateKind::Explicit &&
        c.initial_state.amplitudes.size() != (size_t{1} << spec.model.n_sites)) {
        schema_error("pite.initial_state.amplitudes", "length must be 2^L");
    }
}

void parse_ed(const json &doc, RunSpec &spec) {
    Fields f(doc, "ed");
    EDConfig &c = spec.ed;
    c.tol = f.number("tol", 1e-10);
    c.maxiter = f.integer32("maxiter", 10000);
    c.krylov_dim = f.integer32("krylov_dim", 100);
    c.return_ground_state = f.boolean("return_ground_state", true);
    if (f.has("n_up")) {
        c.n_up = f.integer32("n_up");
    }
    f.finish();
    at_path("ed", [&] {
        c.validate(spec.model.n_sites);
        return 0;
    });
}

void parse_dsf(const json &doc, RunSpec &spec) {
    Fields f(doc, "dsf");
    DSFConfig &c = spec.dsf.config;
    c.source_site = f.integer32("source_site", 0);
    c.dt = f.number("dt", 0.025);
    c.n_t = f.integer32("n_t", 400);
    c.order = static_cast<int>(f.integer32("order", 1));
    if (c.order != 1 && c.order != 2) {
        schema_error("dsf.order", "must be 1 or 2");
    }
    c.reps = f.integer32("reps", 1);
    std::string window = f.string("window", "hann");
    c.window = at_path("dsf.window", [&] { return parse_window(window); });
    c.gaussian_sigma = f.number("gaussian_sigma", 0.4);
    std::string source = f.string("ground_state", "ed");
    if (source == "ed") {
        spec.dsf.ground_state = GroundStateSource::ED;
    } else if (source == "sv") {
        spec.dsf.ground_state = GroundStateSource::SV;
    } else if (source == "file") {
        spec.dsf.ground_state = GroundStateSource::File;
        spec.dsf.state_file = f.string("state_file");
    } else {
        schema_error("dsf.ground_state", "expected one of ed, sv, file");
    }
    f.finish();
    at_path("dsf", [&] {
        c.validate();
        return 0;
    });
    if (c.source_site >= spec.model.n_sites) {
        schema_error("dsf.source_site", "out of range");
    }
}

void parse_sweep(const json &doc, RunSpec &spec) {
    Fields f(doc, "sweep");
    if (f.has("gammas")) {
        const json &g = f.get("gammas");
        if (g.is_string()) {
            spec.sweep.gammas = at_path("sweep.gammas", [&] { return parse_gamma_list(g.get<std::string>()); });
        } else if (g.is_array()) {
            for (const auto &x : g) {
                if (!x.is_number()) {
                    schema_error("sweep.gammas", "expected numbers");
                }
                spec.sweep.gammas.push_back(x.get<double>());
            }
        } else {
            schema_error("sweep.gammas", "expected a list or a start:stop:step string");
        }
        for (double x : spec.sweep.gammas) {
            if (!(x > 0.0 && x < 1.0)) {
                schema_error("sweep.gammas", "every gamma must lie in (0, 1)");
            }
        }
    }
    spec.sweep.ed_reference = f.boolean("ed_reference", true);
    f.finish();
}

void parse_bench(const json &doc, RunSpec &spec) {
    Fields f(doc, "bench");
    BenchSpec &b = spec.bench;
    if (f.has("sizes")) {
        b.sizes = uint_list(f.get("sizes"), "bench.sizes");
    }
    b.size_grid_steps = f.integer32("size_grid_steps", b.size_grid_steps);
    if (f.has("steps_grid")) {
        b.steps_grid = uint_list(f.get("steps_grid"), "bench.steps_grid");
    }
    b.steps_grid_size = f.integer32("steps_grid_size", b.steps_grid_size);
    b.repetitions = f.integer32("repetitions", 3);
    f.finish();
    if (b.repetitions < 3) {
        schema_error("bench.repetitions", "must be >= 3");
    }
    for (uint32_t n : b.sizes) {
        if (n < 2 || n > kMaxStateSites) {
            schema_error("bench.sizes", "sizes must lie in [2, " + std::to_string(kMaxStateSites) + "]");
        }
    }
    if (b.steps_grid_size < 2 || b.steps_grid_size > kMaxStateSites) {
        schema_error("bench.steps_grid_size", "out of range");
    }
}

json initial_state_json(const RunSpec &spec) {
    const InitialState &s = spec.pite.initial_state;
    if (!spec.initial_state_file.empty()) {
        return {{"kind", "file"}, {"path", spec.initial_state_file}};
    }
    if (s.kind == InitialStateKind::Random) {
        return {{"kind", "random"}, {"seed", s.seed}};
    }
    if (s.kind == InitialStateKind::Explicit) {
        json amps = json::array();
        for (complex a : s.amplitudes) {
            amps.push_back({a.real(), a.imag()});
        }
        return {{"kind", "explicit"}, {"amplitudes", amps}};
    }
    return std::string(initial_state_name(s.kind));
}

}  // namespace

std::string_view algorithm_name(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::SV:
            return "sv";
        case Algorithm::Shot:
            return "shot";
        case Algorithm::ED:
            return "ed";
        case Algorithm::DSF:
            return "dsf";
        case Algorithm::Sweep:
            return "sweep";
        case Algorithm::Bench:
            return "bench";
    }
    return "?";
}

Algorithm parse_algorithm(std::string_view name) {
    for (Algorithm a : {Algorithm::SV, Algorithm::Shot, Algorithm::ED, Algorithm::DSF, Algorithm::Sweep, Algorithm::Bench}) {
        if (algorithm_name(a) == name) {
            return a;
        }
    }
    throw Error(ErrorKind::UnknownAlgorithm, "unknown algorithm '" + std::string(name) + "'");
}

Hamiltonian build_hamiltonian(const ModelSpec &m) {
    Hamiltonian h(m.n_sites);
    if (m.type == "ising") {
        h = models::ising(m.n_sites, m.j, m.h, m.bc);
    } else if (m.type == "heisenberg") {
        h = models::heisenberg(m.n_sites, m.j, m.bc);
    } else if (m.type == "xy") {
        h = models::xy(m.n_sites, m.j, m.bc);
    } else if (m.type == "xxz") {
        h = models::xxz(m.n_sites, m.j, m.delta, m.bc);
        if (m.hz != 0.0) {
            h.add_uniform_terms("Z", m.hz);
        }
    } else if (m.type == "heisenberg_2d") {
        h = models::heisenberg_2d(m.lx, m.ly, m.j, m.bc);
    } else if (m.type != "terms") {
        throw Error(ErrorKind::UnknownModel, "unknown model '" + m.type + "'");
    }
    for (const auto &u : m.uniform_terms) {
        h.add_uniform_terms(u.key, u.coeff, u.bc);
    }
    for (const auto &t : m.terms) {
        for (const auto &sites : t.sites) {
            h.add_term(t.key, t.coeff, sites);
        }
    }
    return h;
}

std::vector<double> parse_gamma_list(std::string_view text) {
    auto to_double = [&](std::string_view s) {
        std::string copy(s);
        size_t used = 0;
        double v = 0;
        try {
            v = std::stod(copy, &used);
        } catch (const std::exception &) {
            used = std::string::npos;
        }
        if (used != copy.size() || copy.empty()) {
            throw Error(ErrorKind::SchemaError, "gammas: cannot parse '" + copy + "'");
        }
        return v;
    };
    std::vector<double> out;
    if (text.find(':') != std::string_view::npos) {
        size_t a = text.find(':');
        size_t b = text.find(':', a + 1);
        if (b == std::string_view::npos) {
            throw Error(ErrorKind::SchemaError, "gammas: expected start:stop:step");
        }
        double start = to_double(text.substr(0, a));
        double stop = to_double(text.substr(a + 1, b - a - 1));
        double step = to_double(text.substr(b + 1));
        if (!(step > 0.0) || stop < start) {
            throw Error(ErrorKind::SchemaError, "gammas: need step > 0 and stop >= start");
        }
        // Integer stepping avoids accumulating round-off; the stop value is
        // included when it lies on the grid within 1e-9 steps.
        auto count = static_cast<size_t>(std::floor((stop - start) / step + 1e-9));
        for (size_t i = 0; i <= count; i++) {
            out.push_back(start + static_cast<double>(i) * step);
        }
        return out;
    }
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) {
            comma = text.size();
        }
        out.push_back(to_double(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

RunSpec parse_runspec(const json &doc) {
    Fields f(doc, "");
    RunSpec spec;
    if (f.has("algorithm")) {
        spec.algorithm = parse_algorithm(f.string("algorithm"));
    }
    spec.model = parse_model(f.require("model"));
    spec.seed = f.integer("seed", 0);
    if (f.has("pite")) {
        parse_pite(f.get("pite"), spec);
    }
    if (f.has("ed")) {
        parse_ed(f.get("ed"), spec);
    }
    if (f.has("dsf")) {
        parse_dsf(f.get("dsf"), spec);
    }
    if (f.has("sweep")) {
        parse_sweep(f.get("sweep"), spec);
    }
    if (f.has("bench")) {
        parse_bench(f.get("bench"), spec);
    }
    bool needs_pite = false;
    if (spec.algorithm) {
        switch (*spec.algorithm) {
            case Algorithm::SV:
            case Algorithm::Shot:
            case Algorithm::Sweep:
            case Algorithm::Bench:
                needs_pite = true;
                break;
            case Algorithm::DSF:
                needs_pite = spec.dsf.ground_state == GroundStateSource::SV;
                if (!f.has("dsf")) {
                    schema_error("dsf", "missing required block");
                }
                break;
            case Algorithm::ED:
                break;
        }
    }
    if (needs_pite && !f.has("pite")) {
        schema_error("pite", "missing required block");
    }
    f.finish();
    spec.pite.seed = spec.seed;
    spec.ed.seed = spec.seed;
    return spec;
}

RunSpec parse_runspec_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::IoError, "cannot open config '" + path.string() + "'");
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error &e) {
        throw Error(ErrorKind::SchemaError, "config is not valid JSON: " + std::string(e.what()));
    }
    return parse_runspec(doc);
}

json to_json(const RunSpec &spec) {
    json doc;
    if (spec.algorithm) {
        doc["algorithm"] = algorithm_name(*spec.algorithm);
    }
    const ModelSpec &m = spec.model;
    json model{{"type", m.type}};
    if (m.type == "heisenberg_2d") {
        model["Lx"] = m.lx;
        model["Ly"] = m.ly;
    } else {
        model["L"] = m.n_sites;
    }
    if (m.type != "terms") {
        model["J"] = m.j;
        model["bc"] = boundary_name(m.bc);
    }
    if (m.type == "ising") {
        model["h"] = m.h;
    }
    if (m.type == "xxz") {
        model["Delta"] = m.delta;
        model["hz"] = m.hz;
    }
    if (!m.uniform_terms.empty()) {
        json list = json::array();
        for (const auto &u : m.uniform_terms) {
            json t{{"key", u.key}, {"coeff", u.coeff}};
            if (u.bc) {
                t["bc"] = boundary_name(*u.bc);
            }
            list.push_back(t);
        }
        model["uniform_terms"] = list;
    }
    if (!m.terms.empty() || m.type == "terms") {
        json list = json::array();
        for (const auto &t : m.terms) {
            list.push_back({{"key", t.key}, {"coeff", t.coeff}, {"sites", t.sites}});
        }
        model["terms"] = list;
    }
    doc["model"] = model;
    const PITEConfig &p = spec.pite;
    doc["pite"] = {{"gamma", p.gamma},
                   {"n_steps", p.n_steps},
                   {"dt", p.dt},
                   {"order", p.order},
                   {"n_shots", p.n_shots},
                   {"reps_per_step", p.reps_per_step},
                   {"initial_state", initial_state_json(spec)},
                   {"mode", evolution_mode_name(spec.mode)}};
    if (!(p.gamma > 0.0)) {
        doc.erase("pite");
    }
    json ed{{"tol", spec.ed.tol},
            {"maxiter", spec.ed.maxiter},
            {"krylov_dim", spec.ed.krylov_dim},
            {"return_ground_state", spec.ed.return_ground_state}};
    if (spec.ed.n_up) {
        ed["n_up"] = *spec.ed.n_up;
    }
    doc["ed"] = ed;
    const DSFConfig &d = spec.dsf.config;
    json dsf{{"source_site", d.source_site}, {"dt", d.dt},           {"n_t", d.n_t},
             {"order", d.order},             {"reps", d.reps},       {"window", window_name(d.window)},
             {"gaussian_sigma", d.gaussian_sigma}};
    switch (spec.dsf.ground_state) {
        case GroundStateSource::ED:
            dsf["ground_state"] = "ed";
            break;
        case GroundStateSource::SV:
            dsf["ground_state"] = "sv";
            break;
        case GroundStateSource::File:
            dsf["ground_state"] = "file";
            dsf["state_file"] = spec.dsf.state_file;
            break;
    }
    doc["dsf"] = dsf;
    doc["sweep"] = {{"gammas", spec.sweep.gammas}, {"ed_reference", spec.sweep.ed_reference}};
    const BenchSpec &b = spec.bench;
    doc["bench"] = {{"sizes", b.sizes},
                    {"size_grid_steps", b.size_grid_steps},
                    {"steps_grid", b.steps_grid},
                    {"steps_grid_size", b.steps_grid_size},
                    {"repetitions", b.repetitions}};
    doc["seed"] = spec.seed;
    return doc;
}

}  // namespace svpite::workbench
