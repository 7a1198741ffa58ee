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


#include "report.h"

#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>

#include <nlohmann/json.hpp>

#include "measchain/errors.h"
#include "measchain/text.h"

namespace measchain::app {

namespace {

using nlohmann::json;

json real_json(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    return v;
}

double json_real(const json &v) {
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s == "inf") {
            return std::numeric_limits<double>::infinity();
        }
        if (s == "-inf") {
            return -std::numeric_limits<double>::infinity();
        }
        if (s == "nan") {
            return std::numeric_limits<double>::quiet_NaN();
        }
        throw ValidationError("malformed real '" + s + "' in report");
    }
    return v.get<double>();
}

std::string csv_real(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    return format_real(v, kReportDigits);
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
}

json to_json(const Report &r) {
    json doc = json::object();
    doc["command"] = r.command;
    doc["scenario_digest"] = r.scenario_digest;
    doc["version"] = r.version;
    doc["results"] = json::array();
    for (const auto &row : r.rows) {
        doc["results"].push_back(
            {{"section", row.section}, {"name", row.name}, {"anchor", row.anchor}, {"value", real_json(row.value)}});
    }
    doc["texts"] = json::array();
    for (const auto &t : r.texts) {
        doc["texts"].push_back({{"section", t.section}, {"name", t.name}, {"anchor", t.anchor}, {"text", t.text}});
    }
    doc["checks"] = json::array();
    for (const auto &c : r.checks) {
        doc["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    doc["notes"] = r.notes;
    if (r.frequencies) {
        doc["frequencies"] = json::array();
        for (const auto &f : r.frequencies->rows) {
            doc["frequencies"].push_back({{"outcome", real_json(f.outcome)},
                                          {"count", f.count},
                                          {"frequency", real_json(f.frequency)},
                                          {"expected", real_json(f.expected)},
                                          {"z", real_json(f.z)}});
        }
    }
    return doc;
}

}  // namespace

double report_real(double value) {
    return std::isfinite(value) ? round_significant(value, kReportDigits) : value;
}

void Report::add(std::string section, std::string name, std::string anchor, double value) {
    rows.push_back({std::move(section), std::move(name), std::move(anchor), report_real(value)});
}

void Report::add_text(std::string section, std::string name, std::string anchor, std::string text) {
    texts.push_back({std::move(section), std::move(name), std::move(anchor), std::move(text)});
}

void Report::check(std::string name, bool passed, std::string detail) {
    checks.push_back({std::move(name), passed, std::move(detail)});
}

void Report::set_frequencies(const FrequencyReport &rep) {
    FrequencyTable t;
    for (const auto &r : rep.rows) {
        t.rows.push_back({report_real(r.q), r.count, report_real(r.frequency), report_real(r.expected),
                          report_real(r.z)});
    }
    frequencies = std::move(t);
}

void Report::append(const Report &other) {
    rows.insert(rows.end(), other.rows.begin(), other.rows.end());
    texts.insert(texts.end(), other.texts.begin(), other.texts.end());
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
    if (other.frequencies) {
        frequencies = other.frequencies;
    }
}

const ReportRow *Report::find(const std::string &section, const std::string &name) const {
    for (const auto &r : rows) {
        if (r.section == section && r.name == name) {
            return &r;
        }
    }
    return nullptr;
}

bool Report::all_checks_passed() const {
    for (const auto &c : checks) {
        if (!c.passed) {
            return false;
        }
    }
    return true;
}

void emit_report(const Report &report, OutputFormat format, std::ostream &out) {
    if (format == OutputFormat::structured_text) {
        out << to_json(report).dump(2) << "\n";
        return;
    }
    // A Born-only report is the frequency table itself; everything else is
    // the labeled results table.
    if (report.command == "born" && report.frequencies) {
        out << "outcome,count,frequency,expected,z\n";
        for (const auto &f : report.frequencies->rows) {
            out << csv_real(f.outcome) << "," << f.count << "," << csv_real(f.frequency) << "," << csv_real(f.expected)
                << "," << csv_real(f.z) << "\n";
        }
        return;
    }
    out << "section,name,anchor,value\n";
    for (const auto &r : report.rows) {
        out << csv_field(r.section) << "," << csv_field(r.name) << "," << csv_field(r.anchor) << ","
            << csv_real(r.value) << "\n";
    }
}

void emit_report(const Report &report, OutputFormat format, const std::string &path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    emit_report(report, format, out);
    out.flush();
    if (!out) {
        throw IoError("failed writing '" + path + "'");
    }
}

Report parse_report_json(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ValidationError(std::string("report is not valid JSON: ") + e.what());
    }
    Report r;
    r.command = doc.at("command").get<std::string>();
    r.scenario_digest = doc.at("scenario_digest").get<std::string>();
    r.version = doc.at("version").get<std::string>();
    for (const auto &row : doc.at("results")) {
        r.rows.push_back({row.at("section").get<std::string>(), row.at("name").get<std::string>(),
                          row.at("anchor").get<std::string>(), json_real(row.at("value"))});
    }
    for (const auto &t : doc.at("texts")) {
        r.texts.push_back({t.at("section").get<std::string>(), t.at("name").get<std::string>(),
                           t.at("anchor").get<std::string>(), t.at("text").get<std::string>()});
    }
    for (const auto &c : doc.at("checks")) {
        r.checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>(),
                            c.at("detail").get<std::string>()});
    }
    r.notes = doc.at("notes").get<std::vector<std::string>>();
    if (doc.contains("frequencies")) {
        FrequencyTable t;
        for (const auto &f : doc["frequencies"]) {
            t.rows.push_back({json_real(f.at("outcome")), f.at("count").get<std::size_t>(),
                              json_real(f.at("frequency")), json_real(f.at("expected")), json_real(f.at("z"))});
        }
        r.frequencies = std::move(t);
    }
    return r;
}

}  // namespace measchain::app
