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

// svpite: batch driver for state-vector / shot PITE, exact diagonalization,
// structure factors, gamma sweeps and timing tables.

#include <CLI11.hpp>
#include <iostream>

#include "svpite/error.h"
#include "svpite/parallel.h"
#include "svpite/workbench/driver.h"

namespace wb = svpite::workbench;

namespace {

struct Subcommand {
    const char *name;
    wb::Algorithm algorithm;
    const char *help;
};

constexpr Subcommand kSubcommands[] = {
    {"run-sv", wb::Algorithm::SV, "State-vector PITE run"},
    {"run-shot", wb::Algorithm::Shot, "Shot-based PITE run with post-selection"},
    {"run-ed", wb::Algorithm::ED, "Lanczos ground state"},
    {"run-dsf", wb::Algorithm::DSF, "Dynamic spin structure factor S(q, w)"},
    {"sweep-gamma", wb::Algorithm::Sweep, "State-vector runs over a gamma grid"},
    {"bench", wb::Algorithm::Bench, "Sequential vs paired-branch timing tables"},
};

int report(std::string_view kind, std::string_view message, int status) {
    std::cerr << wb::error_json(kind, message).dump() << std::endl;
    return status;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"svpite - probabilistic imaginary-time evolution workbench"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(wb::kToolVersion));

    std::string config_path;
    std::string out_dir;
    uint64_t seed = 0;
    std::string gammas;
    bool dump_state = false;
    bool reproducible = false;

    for (const auto &sub : kSubcommands) {
        CLI::App *cmd = app.add_subcommand(sub.name, sub.help);
        cmd->add_option("--config", config_path, "Run config (JSON)")->required();
        cmd->add_option("--out", out_dir, "Output directory")->required();
        cmd->add_option("--seed", seed, "Override the seed in the config");
        if (sub.algorithm == wb::Algorithm::Sweep) {
            cmd->add_option("--gammas", gammas, "start:stop:step (inclusive) or a comma list");
        }
        cmd->add_flag("--dump-state", dump_state, "Write the final / ground state as an SVPT file");
        cmd->add_flag("--reproducible", reproducible, "Report wall_time_s as 0 so identical runs give identical files");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        return report("UsageError", e.what(), 2);
    }

    CLI::App *chosen = app.get_subcommands().front();
    wb::Algorithm algorithm = wb::Algorithm::SV;
    for (const auto &sub : kSubcommands) {
        if (chosen->get_name() == sub.name) {
            algorithm = sub.algorithm;
        }
    }

    try {
        wb::RunSpec spec = wb::parse_runspec_file(config_path);
        wb::RunOptions options;
        options.out_dir = out_dir;
        if (chosen->count("--seed")) {
            options.seed = seed;
        }
        if (!gammas.empty()) {
            options.gammas = wb::parse_gamma_list(gammas);
        }
        options.dump_state = dump_state;
        options.reproducible = reproducible;
        nlohmann::json result = wb::run(algorithm, std::move(spec), options);
        std::cout << (std::filesystem::path(out_dir) / "result.json").string() << std::endl;
    } catch (const svpite::Error &e) {
        int status = e.kind() == svpite::ErrorKind::SchemaError || e.kind() == svpite::ErrorKind::UnknownModel ||
                             e.kind() == svpite::ErrorKind::UnknownAlgorithm
                         ? 2
                         : 1;
        return report(svpite::error_kind_name(e.kind()), e.what(), status);
    } catch (const std::exception &e) {
        return report("InternalError", e.what(), 1);
    }
    return 0;
}
