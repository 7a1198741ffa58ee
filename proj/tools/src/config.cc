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


#include "config.h"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "measchain/errors.h"
#include "measchain/text.h"
#include "report.h"

namespace measchain::app {

namespace {

using nlohmann::json;

const std::set<std::string> kTopLevelFields{"a1",    "a2",      "input_kind", "n_env",         "env_overlap",
                                            "seed",  "trials",  "command",    "output_path",   "output_format",
                                            "tolerances"};
const std::set<std::string> kToleranceFields{"normalization", "alpha", "default_sweep"};

void reject_unknown(const json &obj, const std::set<std::string> &known, const std::string &where) {
    for (const auto &[key, value] : obj.items()) {
        if (!known.contains(key)) {
            throw ValidationError("unknown config field '" + where + key + "'");
        }
    }
}

Complex read_amplitude(const json &v, const std::string &name) {
    if (v.is_number()) {
        return v.get<double>();
    }
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        return Complex(v[0].get<double>(), v[1].get<double>());
    }
    throw ValidationError("field '" + name + "' must be a number or a [re, im] pair");
}

double read_real(const json &v, const std::string &name) {
    if (!v.is_number()) {
        throw ValidationError("field '" + name + "' must be a number");
    }
    return v.get<double>();
}

std::uint64_t read_count(const json &v, const std::string &name) {
    if (v.is_number_unsigned()) {
        return v.get<std::uint64_t>();
    }
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
        return static_cast<std::uint64_t>(v.get<std::int64_t>());
    }
    throw ValidationError("field '" + name + "' must be a non-negative integer");
}

std::string read_string(const json &v, const std::string &name) {
    if (!v.is_string()) {
        throw ValidationError("field '" + name + "' must be a string");
    }
    return v.get<std::string>();
}

}  // namespace

std::string to_string(Command c) {
    switch (c) {
        case Command::chain:
            return "chain";
        case Command::discriminate:
            return "discriminate";
        case Command::overlap:
            return "overlap";
        case Command::born:
            return "born";
        case Command::decohere:
            return "decohere";
        case Command::all:
            return "all";
    }
    return "?";
}

Command parse_command(const std::string &text) {
    for (auto c : {Command::chain, Command::discriminate, Command::overlap, Command::born, Command::decohere,
                   Command::all}) {
        if (to_string(c) == text) {
            return c;
        }
    }
    throw ValidationError("unknown command '" + text + "'");
}

std::string to_string(OutputFormat f) {
    return f == OutputFormat::csv ? "csv" : "structured-text";
}

OutputFormat parse_output_format(const std::string &text) {
    if (text == "csv") {
        return OutputFormat::csv;
    }
    if (text == "structured-text" || text == "json") {
        return OutputFormat::structured_text;
    }
    throw ValidationError("unknown output format '" + text + "'");
}

RunConfig parse_config(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ValidationError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ValidationError("config must be a JSON object");
    }
    reject_unknown(doc, kTopLevelFields, "");

    RunConfig cfg;
    if (doc.contains("tolerances")) {
        const auto &t = doc["tolerances"];
        if (!t.is_object()) {
            throw ValidationError("field 'tolerances' must be an object");
        }
        reject_unknown(t, kToleranceFields, "tolerances.");
        if (t.contains("normalization")) {
            cfg.tolerances.normalization = read_real(t["normalization"], "tolerances.normalization");
        }
        if (t.contains("alpha")) {
            cfg.tolerances.alpha = read_real(t["alpha"], "tolerances.alpha");
        }
        if (t.contains("default_sweep")) {
            cfg.tolerances.default_sweep = read_count(t["default_sweep"], "tolerances.default_sweep");
        }
        if (!(cfg.tolerances.normalization >= 0) || !(cfg.tolerances.alpha > 0 && cfg.tolerances.alpha < 1)) {
            throw ValidationError("tolerances out of range");
        }
    }

    auto &sc = cfg.scenario;
    if (doc.contains("a1") || doc.contains("a2")) {
        sc.a1 = doc.contains("a1") ? read_amplitude(doc["a1"], "a1") : Complex{};
        sc.a2 = doc.contains("a2") ? read_amplitude(doc["a2"], "a2") : Complex{};
        const double norm2 = std::norm(sc.a1) + std::norm(sc.a2);
        const double residual = std::abs(norm2 - 1.0);
        if (!(residual <= cfg.tolerances.normalization)) {
            throw ValidationError("amplitudes are not normalized: | |a1|^2 + |a2|^2 - 1 | = " +
                                  format_real(residual, 6));
        }
        const double scale = 1.0 / std::sqrt(norm2);
        sc.a1 *= scale;
        sc.a2 *= scale;
    }
    if (doc.contains("input_kind")) {
        sc.input_kind = parse_input_kind(read_string(doc["input_kind"], "input_kind"));
    }
    if (doc.contains("n_env")) {
        sc.n_env = read_count(doc["n_env"], "n_env");
    }
    if (doc.contains("env_overlap")) {
        sc.env_overlap = read_real(doc["env_overlap"], "env_overlap");
    }
    if (doc.contains("seed")) {
        sc.seed = read_count(doc["seed"], "seed");
    }
    if (doc.contains("trials")) {
        sc.trials = read_count(doc["trials"], "trials");
    }
    if (doc.contains("command")) {
        cfg.command = parse_command(read_string(doc["command"], "command"));
    }
    if (doc.contains("output_path")) {
        cfg.output_path = read_string(doc["output_path"], "output_path");
    }
    if (doc.contains("output_format")) {
        cfg.output_format = parse_output_format(read_string(doc["output_format"], "output_format"));
    }
    sc.validate();
    return cfg;
}

RunConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot read config file '" + path + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

}  // namespace measchain::app
