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


// Report model and its JSON / CSV serializations.

#ifndef MEASCHAIN_TOOLS_REPORT_H
#define MEASCHAIN_TOOLS_REPORT_H

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "config.h"
#include "measchain/sampler.h"

namespace measchain::app {

class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kReportDigits = 12;

struct ReportRow {
    std::string section;
    std::string name;
    std::string anchor;
    double value = 0;

    bool operator==(const ReportRow &) const = default;
};

struct ReportText {
    std::string section;
    std::string name;
    std::string anchor;
    std::string text;

    bool operator==(const ReportText &) const = default;
};

struct ReportCheck {
    std::string name;
    bool passed = false;
    std::string detail;

    bool operator==(const ReportCheck &) const = default;
};

struct FrequencyTable {
    struct Row {
        double outcome;
        std::size_t count;
        double frequency;
        double expected;
        double z;

        bool operator==(const Row &) const = default;
    };
    std::vector<Row> rows;

    bool operator==(const FrequencyTable &) const = default;
};

struct Report {
    std::string command;
    std::string scenario_digest;
    std::string version;
    std::vector<ReportRow> rows;
    std::vector<ReportText> texts;
    std::vector<ReportCheck> checks;
    std::vector<std::string> notes;
    std::optional<FrequencyTable> frequencies;

    // Values are stored already rounded to the serialized precision, so a
    // parse of the emitted text compares equal to the report.
    void add(std::string section, std::string name, std::string anchor, double value);
    void add_text(std::string section, std::string name, std::string anchor, std::string text);
    void check(std::string name, bool passed, std::string detail = {});
    void set_frequencies(const FrequencyReport &rep);
    void append(const Report &other);

    const ReportRow *find(const std::string &section, const std::string &name) const;
    bool all_checks_passed() const;

    bool operator==(const Report &) const = default;
};

/// Real as serialized: 12 significant digits; non-finite values map to the
/// strings "inf", "-inf" and "nan".
double report_real(double value);

void emit_report(const Report &report, OutputFormat format, std::ostream &out);
/// Writes to `path`, throwing IoError when it cannot be opened or written.
void emit_report(const Report &report, OutputFormat format, const std::string &path);

Report parse_report_json(const std::string &text);

}  // namespace measchain::app

#endif
