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

#include "measchain/sampler.h"

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <limits>
#include <map>
#include <thread>

#include "measchain/errors.h"
#include "measchain/text.h"

namespace measchain {

namespace {

constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

// O pointer eigenvalue of a branch whose O restriction is a pointer state.
double branch_pointer_value(const MSState &branch_state) {
    const auto o = gemenge_restriction(Gemenge({Branch{branch_state, 1.0}}), kObserver);
    const auto &local = o.branches().front().state.vector();
    const double p_up = std::norm(local[0]);
    if (p_up > 1 - 1e-10) {
        return kPointerUp;
    }
    if (p_up < 1e-10) {
        return kPointerDown;
    }
    throw DecompositionError("gemenge branch does not restrict to a pointer eigenstate");
}

InformationPattern pattern_of(double q) {
    return InformationPattern{{q}};
}

}  // namespace

void InformationPattern::validate() const {
    if (values.empty()) {
        throw ValidationError("information pattern must be nonempty");
    }
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw ValidationError("information pattern entries must be finite");
        }
    }
}

std::uint64_t splitmix64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t trial_key(std::uint64_t seed, std::uint64_t trial) {
    return splitmix64_mix(splitmix64_mix(seed) + (trial + 1) * kGoldenGamma);
}

double trial_uniform(std::uint64_t seed, std::uint64_t trial) {
    return static_cast<double>(trial_key(seed, trial) >> 11) * 0x1.0p-53;
}

InformationPattern stochastic_restriction(const MSState &state, double draw, const PointerBasis &basis) {
    const auto born = born_probabilities(state, basis);
    return pattern_of(draw < born.p1 ? basis.q1 : basis.q2);
}

GemengeSample sample_gemenge(const Gemenge &w, double draw) {
    const auto &branches = w.branches();
    double cumulative = 0;
    std::size_t chosen = branches.size() - 1;
    for (std::size_t i = 0; i < branches.size(); ++i) {
        cumulative += branches[i].prob;
        if (draw < cumulative) {
            chosen = i;
            break;
        }
    }
    return GemengeSample{chosen, pattern_of(branch_pointer_value(branches[chosen].state))};
}

TrialRun run_trials(const Scenario &scenario, unsigned threads) {
    scenario.validate();
    const auto chain = full_chain(scenario);

    // Per-trial work reduced to thresholds so every trial is a pure function of its index.
    std::vector<double> cumulative;
    std::vector<double> value;
    std::vector<int> branch_label;
    double p1 = 0;
    if (const auto *ms = std::get_if<MSState>(&chain)) {
        const auto born = born_probabilities(*ms, PointerBasis::standard(kObserver));
        p1 = born.p1;
        cumulative = {born.p1, std::numeric_limits<double>::infinity()};
        value = {kPointerUp, kPointerDown};
        branch_label = {-1, -1};
    } else {
        const auto &w = std::get<Gemenge>(chain);
        double acc = 0;
        for (std::size_t i = 0; i < w.branches().size(); ++i) {
            acc += w.branches()[i].prob;
            cumulative.push_back(i + 1 == w.branches().size() ? std::numeric_limits<double>::infinity() : acc);
            value.push_back(branch_pointer_value(w.branches()[i].state));
            branch_label.push_back(static_cast<int>(i));
            if (value.back() == kPointerUp) {
                p1 += w.branches()[i].prob;
            }
        }
    }

    const std::size_t n = scenario.trials;
    std::vector<std::size_t> pick(n);
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t t = begin; t < end; ++t) {
            const double u = trial_uniform(scenario.seed, t);
            std::size_t k = 0;
            while (u >= cumulative[k]) {
                ++k;
            }
            pick[t] = k;
        }
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, n / 4096))));
    if (threads == 1) {
        work(0, n);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (n + threads - 1) / threads;
        for (unsigned i = 0; i < threads; ++i) {
            const std::size_t begin = std::min(n, i * chunk);
            const std::size_t end = std::min(n, begin + chunk);
            pool.emplace_back(work, begin, end);
        }
        for (auto &t : pool) {
            t.join();
        }
    }

    TrialRun run;
    run.stream.seed = scenario.seed;
    run.stream.scenario_digest = scenario_digest(scenario);
    run.stream.outcomes.reserve(n);
    run.stream.branches.reserve(n);
    std::size_t count_up = 0;
    for (std::size_t t = 0; t < n; ++t) {
        run.stream.outcomes.push_back(pattern_of(value[pick[t]]));
        run.stream.branches.push_back(branch_label[pick[t]]);
        count_up += value[pick[t]] == kPointerUp;
    }

    auto &rep = run.report;
    rep.trials = n;
    const double nd = static_cast<double>(n);
    const std::size_t counts[2] = {count_up, n - count_up};
    const double expected[2] = {p1, 1.0 - p1};
    const double qs[2] = {kPointerUp, kPointerDown};
    std::size_t support = 0;
    bool impossible_seen = false;
    for (int i = 0; i < 2; ++i) {
        const double var = nd * expected[i] * (1 - expected[i]);
        const double diff = static_cast<double>(counts[i]) - nd * expected[i];
        const double z = var > 0 ? diff / std::sqrt(var) : 0.0;
        rep.rows.push_back({qs[i], counts[i], static_cast<double>(counts[i]) / nd, expected[i], z});
        if (expected[i] > 0) {
            ++support;
            rep.chi2 += diff * diff / (nd * expected[i]);
        } else if (counts[i] > 0) {
            impossible_seen = true;
        }
    }
    rep.degenerate = support < 2;
    rep.dof = support > 0 ? support - 1 : 0;
    if (impossible_seen) {
        rep.chi2 = std::numeric_limits<double>::infinity();
        rep.p_value = 0;
    } else {
        rep.p_value = chi_square_p_value(rep.chi2, rep.dof);
    }
    return run;
}

std::string to_string(StreamVerdict v) {
    return v == StreamVerdict::indistinguishable ? "indistinguishable" : "distinct";
}

double chi_square_p_value(double chi2, std::size_t dof) {
    if (dof == 0) {
        return chi2 > 0 ? 0.0 : 1.0;
    }
    if (chi2 <= 0) {
        return 1.0;
    }
    if (!std::isfinite(chi2)) {
        return 0.0;
    }
    return boost::math::gamma_q(static_cast<double>(dof) / 2.0, chi2 / 2.0);
}

StreamComparison compare_streams(const OutcomeStream &s1, const OutcomeStream &s2, double alpha) {
    if (s1.outcomes.empty() || s2.outcomes.empty()) {
        throw ValidationError("cannot compare an empty outcome stream");
    }
    std::map<std::vector<double>, std::pair<double, double>> table;
    for (const auto &o : s1.outcomes) {
        table[o.values].first += 1;
    }
    for (const auto &o : s2.outcomes) {
        table[o.values].second += 1;
    }
    const double n1 = static_cast<double>(s1.outcomes.size());
    const double n2 = static_cast<double>(s2.outcomes.size());
    const double total = n1 + n2;
    double chi2 = 0;
    for (const auto &[key, counts] : table) {
        const double col = counts.first + counts.second;
        const double e1 = n1 * col / total;
        const double e2 = n2 * col / total;
        chi2 += (counts.first - e1) * (counts.first - e1) / e1 + (counts.second - e2) * (counts.second - e2) / e2;
    }
    const std::size_t dof = table.size() - 1;
    const double p = chi_square_p_value(chi2, dof);
    return StreamComparison{chi2, p, dof, p < alpha ? StreamVerdict::distinct : StreamVerdict::indistinguishable};
}

double ip_distance(const InformationPattern &j1, const InformationPattern &j2) {
    if (j1.values.size() != j2.values.size()) {
        throw UsageError("information patterns have different lengths");
    }
    double acc = 0;
    for (std::size_t i = 0; i < j1.values.size(); ++i) {
        acc += std::abs(j1.values[i] - j2.values[i]);
    }
    return acc;
}

void write_stream_csv(const OutcomeStream &stream, std::ostream &out) {
    out << "trial,outcome_q,branch\n";
    for (std::size_t t = 0; t < stream.outcomes.size(); ++t) {
        out << t << "," << format_real(stream.outcomes[t].values.front()) << ","
            << (t < stream.branches.size() ? stream.branches[t] : -1) << "\n";
    }
}

}  // namespace measchain
