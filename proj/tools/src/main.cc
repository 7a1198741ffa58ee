// Copyright 2026 The measchain Authors
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


#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "config.h"
#include "execute.h"
#include "measchain/errors.h"
#include "report.h"

namespace {

enum ExitCode { kOk = 0, kFailure = 1, kConfigError = 2, kCapacityError = 3, kIoError = 4 };

}  // namespace

int main(int argc, char **argv) {
    using namespace measchain;
    using namespace measchain::app;

    CLI::App cli{"Measurement-chain simulator and analysis toolkit"};
    cli.set_version_flag("--version", version_string());
    cli.require_subcommand(1);
    cli.fallthrough();

    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::optional<std::string> out;
    std::optional<std::string> format;
    cli.add_option("--config", config_path, "JSON run configuration")->check(CLI::ExistingFile);
    cli.add_option("--seed", seed, "Sampler seed (overrides the config)");
    cli.add_option("--trials", trials, "Number of Born trials (overrides the config)");
    cli.add_option("--out", out, "Output path; standard output when absent");
    cli.add_option("--format", format, "csv or structured-text");

    std::string chosen;
    const std::pair<const char *, const char *> commands[] = {
        {"chain", "Chain state, restrictions and Born weights"},
        {"discriminate", "Eigenvalue-relation feasibility with certificate and numeric oracle"},
        {"overlap", "Overlaps, purity rate and purity information per observable"},
        {"born", "Seeded Born-rule Monte Carlo with goodness of fit"},
        {"decohere", "Coherence factor sweep over environment size"},
        {"all", "Every experiment above, concatenated"},
    };
    for (const auto &[name, help] : commands) {
        cli.add_subcommand(name, help)->callback([&chosen, name = name] { chosen = name; });
    }
    cli.add_subcommand("run", "Run the command named in the config file")->callback([&chosen] { chosen = "run"; });

    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = cli.exit(e);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        RunConfig cfg = config_path.empty() ? RunConfig{} : load_config(config_path);
        if (chosen != "run") {
            cfg.command = parse_command(chosen);
        }
        if (seed) {
            cfg.scenario.seed = *seed;
        }
        if (trials) {
            cfg.scenario.trials = *trials;
        }
        if (out) {
            cfg.output_path = *out;
        }
        if (format) {
            cfg.output_format = parse_output_format(*format);
        }
        cfg.scenario.validate();

        const Report report = execute(cfg);
        if (cfg.output_path.empty()) {
            emit_report(report, cfg.output_format, std::cout);
        } else {
            emit_report(report, cfg.output_format, cfg.output_path);
        }
        return kOk;
    } catch (const CapacityError &e) {
        std::cerr << "capacity error: " << e.what() << " (requested dimension " << e.requested_dim << ", limit "
                  << e.max_dim << ")\n";
        return kCapacityError;
    } catch (const IoError &e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kIoError;
    } catch (const std::invalid_argument &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
}
