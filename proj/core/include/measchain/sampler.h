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

#ifndef MEASCHAIN_SAMPLER_H
#define MEASCHAIN_SAMPLER_H

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "measchain/chain.h"
#include "measchain/metrics.h"

namespace measchain {

/// Real parameters an observer assigns to one recognized outcome.
struct InformationPattern {
    std::vector<double> values;

    /// Throws ValidationError when empty or non-finite.
    void validate() const;
    bool operator==(const InformationPattern &) const = default;
};

/// Counter-based draws: trial t of seed s uses
///   key = mix(mix(s) + (t + 1) * 0x9E3779B97F4A7C15)
/// where mix is the SplitMix64 finalizer, and the uniform draw in [0, 1) is
/// (key >> 11) * 2^-53. No generator state is shared between trials.
std::uint64_t splitmix64_mix(std::uint64_t z);
std::uint64_t trial_key(std::uint64_t seed, std::uint64_t trial);
double trial_uniform(std::uint64_t seed, std::uint64_t trial);

/// q1 if draw < |a1|^2, else q2. Throws DecompositionError when the state is
/// not a pointer triple-product superposition.
InformationPattern stochastic_restriction(const MSState &state, double draw,
                                          const PointerBasis &basis = PointerBasis::standard(kObserver));

struct GemengeSample {
    std::size_t branch;
    InformationPattern pattern;
};

/// Picks a branch by cumulative probability; its O restriction is deterministic.
/// Throws PreconditionError for an entangled branch.
GemengeSample sample_gemenge(const Gemenge &w, double draw);

struct OutcomeStream {
    std::uint64_t seed = 0;
    std::vector<InformationPattern> outcomes;
    /// Gemenge branch per trial; -1 for pure input.
    std::vector<int> branches;
    std::string scenario_digest;
};

struct OutcomeRow {
    double q;
    std::size_t count;
    double frequency;
    double expected;
    double z;
};

struct FrequencyReport {
    std::vector<OutcomeRow> rows;
    std::size_t trials = 0;
    double chi2 = 0;
    double p_value = 1;
    std::size_t dof = 0;
    /// Fewer than two outcomes have nonzero expected probability.
    bool degenerate = false;
};

struct TrialRun {
    OutcomeStream stream;
    FrequencyReport report;
};

/// Builds the chain once and samples scenario.trials outcomes. `threads`
/// only changes wall time; the stream is identical for any value.
TrialRun run_trials(const Scenario &scenario, unsigned threads = 1);

enum class StreamVerdict { indistinguishable, distinct };
std::string to_string(StreamVerdict v);

struct StreamComparison {
    double chi2;
    double p_value;
    std::size_t dof;
    StreamVerdict verdict;
};

/// Two-sample chi-square test on outcome counts.
StreamComparison compare_streams(const OutcomeStream &s1, const OutcomeStream &s2, double alpha = 0.01);

/// Upper tail of the chi-square distribution.
double chi_square_p_value(double chi2, std::size_t dof);

/// sum_i |e1_i - e2_i|. Throws UsageError on length mismatch.
double ip_distance(const InformationPattern &j1, const InformationPattern &j2);

/// CSV with header `trial,outcome_q,branch`.
void write_stream_csv(const OutcomeStream &stream, std::ostream &out);

}  // namespace measchain

#endif
