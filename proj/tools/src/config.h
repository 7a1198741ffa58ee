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


// Run configuration for the measchain tool, read from JSON.

#ifndef MEASCHAIN_TOOLS_CONFIG_H
#define MEASCHAIN_TOOLS_CONFIG_H

#include <string>
#include <vector>

#include "measchain/chain.h"

namespace measchain::app {

enum class Command { chain, discriminate, overlap, born, decohere, all };

std::string to_string(Command c);
Command parse_command(const std::string &text);

enum class OutputFormat { csv, structured_text };

std::string to_string(OutputFormat f);
OutputFormat parse_output_format(const std::string &text);

struct Tolerances {
    // Largest | |a1|^2 + |a2|^2 - 1 | accepted before renormalizing.
    double normalization = 1e-3;
    // Significance level for stream comparisons.
    double alpha = 0.01;
    // Decoherence sweep upper bound used when n_env is 0.
    std::size_t default_sweep = 4;
};

struct RunConfig {
    Scenario scenario;
    Command command = Command::all;
    std::string output_path;  // empty: standard output
    OutputFormat output_format = OutputFormat::structured_text;
    Tolerances tolerances;
};

/// Parses and validates a JSON configuration. Unknown fields are rejected by
/// name; amplitudes may be numbers or [re, im] pairs.
RunConfig parse_config(const std::string &text);

RunConfig load_config(const std::string &path);

}  // namespace measchain::app

#endif
