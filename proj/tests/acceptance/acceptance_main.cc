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


// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// An optional argument names the measchain executable for the end-to-end
// determinism check.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "config.h"
#include "execute.h"
#include "measchain/chain.h"
#include "measchain/discriminator.h"
#include "measchain/layout.h"
#include "measchain/metrics.h"
#include "measchain/sampler.h"
#include "measchain/spectral.h"
#include "report.h"
#include "test_util.h"

using namespace measchain;

namespace {

constexpr double kExact = 1e-12;
const double kR = 1 / std::sqrt(2.0);

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string &what) {
        if (!ok && pass) {
            detail = what;
        }
        pass = pass && ok;
    }
};

std::string num(double v) {
    std::ostringstream out;
    out.precision(6);
    out << v;
    return out.str();
}

DensityOperator object_mixture(Complex a1, Complex a2) {
    const double p[] = {std::norm(a1), std::norm(a2)};
    return DensityOperator(ComplexMatrix::diagonal(p));
}

Outcome restriction_identity() {
    Outcome o;
    for (int k = 0; k < 20; ++k) {
        const double theta = std::numbers::pi / 2 * k / 19.0;
        const Complex a1 = std::cos(theta);
        const Complex a2 = std::polar(std::sin(theta), 0.37 * k);
        const auto rst = statistical_restriction(chain_pure(a1, a2));
        const double p[] = {std::norm(a1), std::norm(a2)};
        const double diff = max_abs_diff(rst.matrix(), ComplexMatrix::diagonal(p));
        o.require(diff <= kExact, "theta=" + num(theta) + " diff=" + num(diff));
    }
    o.detail = o.pass ? "20 amplitudes, observer restriction = diag(|a1|^2, |a2|^2) within 1e-12" : o.detail;
    return o;
}

Outcome no_go_sweep() {
    Outcome o;
    const std::vector<double> grid{-1.0, -0.5, 0.0, 0.5, 1.0};
    double min_infeasible_residual = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 20; ++i) {
        for (int j = 0; j < 20; ++j) {
            const double theta = std::numbers::pi / 2 * (i + 1) / 21.0;
            const double phi = 2 * std::numbers::pi * j / 20.0;
            const auto p = superposition_problem(std::cos(theta), std::polar(std::sin(theta), phi));
            const auto r = check_eigen_discrimination(p);
            const auto oracle = numeric_feasibility_oracle(p, grid);
            min_infeasible_residual = std::min(min_infeasible_residual, oracle.min_residual);
            const std::string at = " at theta=" + num(theta) + " phi=" + num(phi);
            o.require(r.verdict == Verdict::infeasible, "FEASIBLE" + at);
            o.require(r.certificate && verify_certificate(p, *r.certificate), "certificate rejected" + at);
            o.require(oracle.min_residual >= 1e-6, "oracle residual " + num(oracle.min_residual) + at);
        }
    }
    const auto q = build_pointer_algebra(kObserver).q.matrix();
    for (bool observer_only : {true, false}) {
        const auto p = recognition_problem(observer_only);
        const auto r = check_eigen_discrimination(p);
        o.require(r.verdict == Verdict::feasible && r.witness, "recognition problem not FEASIBLE");
        if (r.witness) {
            o.require(witness_residual(p, *r.witness) < 1e-12, "recognition witness residual");
            if (observer_only) {
                o.require(max_abs_diff(r.witness->observable, q) <= kExact, "recognition witness is not Q");
            }
        }
        o.require(numeric_feasibility_oracle(p, grid).min_residual < 1e-6, "oracle disagrees on recognition");
    }
    if (o.pass) {
        o.detail = "400 grid points INFEASIBLE with verified certificates (min oracle residual " +
                   num(min_infeasible_residual) + "); recognition FEASIBLE with witness Q";
    }
    return o;
}

Outcome overlap_values() {
    Outcome o;
    const HermitianObservable sx(s_gamma(0.0), kObject, "S_x");
    for (int k = 0; k <= 20; ++k) {
        const double theta = std::numbers::pi / 2 * k / 20.0;
        const double m1 = std::cos(theta), m2 = std::sin(theta);
        const double tv = overlap_tv(eigen_distribution(DensityOperator::pure(prepare_object_state(m1, m2)), sx),
                                     eigen_distribution(object_mixture(m1, m2), sx));
        o.require(std::abs(tv - (1 - m1 * m2)) <= kExact, "k_tv law off at theta=" + num(theta));
    }
    const auto wp = eigen_distribution(DensityOperator::pure(prepare_object_state(kR, kR)), sx);
    const auto wm = eigen_distribution(object_mixture(kR, kR), sx);
    o.require(overlap_tv(wp, wm) == 0.5, "symmetric k_tv = " + num(overlap_tv(wp, wm)));
    o.require(std::abs(overlap_bc(wp, wm) - std::sqrt(2.0) / 2) <= kExact, "symmetric k_bc");

    const auto report = app::execute(app::parse_config(R"({"command":"overlap"})"));
    bool noted = false;
    for (const auto &n : report.notes) {
        noted = noted || n.find("k_bc") != std::string::npos;
    }
    o.require(noted, "overlap report lacks the k_bc / k_tv note");
    if (o.pass) {
        o.detail = "k_tv(S_x) = 1 - |a1||a2| on 21 points; symmetric k_tv = 0.5, k_bc = " + num(overlap_bc(wp, wm)) +
                   " with note";
    }
    return o;
}

Outcome detector_blindness() {
    Outcome o;
    const TensorLayout sd({{kObject, 2}, {kDetector, 2}});
    const std::vector<std::string> keep{kDetector};
    const auto alg = build_pointer_algebra(kDetector);
    const std::vector<std::pair<Complex, Complex>> amplitudes{
        {kR, kR}, {std::sqrt(0.3), std::sqrt(0.7)}, {0.6, Complex(0, 0.8)}, {std::polar(0.8, 1.0), std::polar(0.6, -2.0)},
        {1.0, 0.0}};
    std::size_t checked = 0;
    for (const auto &[a1, a2] : amplitudes) {
        auto pre = [&](const StateVector &object) {
            return premeasure(MSState(tensor_product(object, ready_state()), sd), kObject, kDetector).vector();
        };
        const auto rd_pure = reduced_density(pre(prepare_object_state(a1, a2)), sd, keep);
        std::vector<StateVector> states;
        std::vector<double> probs;
        const auto w = prepare_gemenge(a1, a2);
        for (const auto &b : w.branches()) {
            states.push_back(pre(b.state.vector()));
            probs.push_back(b.prob);
        }
        const auto rd_mixed = partial_trace(DensityOperator::mixture(states, probs), sd, keep);

        std::vector<HermitianObservable> family;
        for (int i = 0; i < 8; ++i) {
            for (int j = 0; j < 8; ++j) {
                const double polar = std::numbers::pi * i / 7.0;
                const double az = 2 * std::numbers::pi * j / 8.0;
                family.push_back(combine_observable(
                    alg, {std::cos(polar), std::sin(polar) * std::cos(az), std::sin(polar) * std::sin(az)}));
            }
        }
        for (int k = 0; k < 36; ++k) {
            const double gamma = 2 * std::numbers::pi * k / 36.0;
            family.push_back(combine_observable(alg, {0.0, std::cos(gamma), std::sin(gamma)}));
        }
        for (const auto &obs : family) {
            const auto w1 = eigen_distribution(rd_pure, obs);
            const auto w2 = eigen_distribution(rd_mixed, obs);
            o.require(std::abs(overlap_tv(w1, w2) - 1) <= kExact && std::abs(overlap_bc(w1, w2) - 1) <= kExact,
                      "overlap below 1 for a detector observable");
            ++checked;
        }
    }
    if (o.pass) {
        o.detail = std::to_string(checked) + " (amplitude, observable) pairs: 64 grid specs + 36 gamma points each, "
                   "k_tv = k_bc = 1";
    }
    return o;
}

Outcome it_observable() {
    Outcome o;
    const auto b = build_it_observable(ItKind::full).observable;
    const auto psi = chain_pure(kR, kR).vector();
    auto applied = b.matrix() * psi.amplitudes();
    for (std::size_t i = 0; i < applied.size(); ++i) {
        applied[i] -= psi[i];
    }
    const double residual = norm(applied);
    o.require(residual < 1e-12, "B psi - psi residual " + num(residual));
    const auto mix = chain_gemenge(kR, kR).density();
    const auto wm = eigen_distribution(mix, b);
    o.require(std::abs(wm.probability_of(1.0) - 0.5) <= kExact && std::abs(wm.probability_of(-1.0) - 0.5) <= kExact,
              "mixture distribution not {(+-1, 0.5)}");
    const double mean = expectation(mix, b.matrix());
    o.require(std::abs(mean) <= kExact, "B mean on mixture " + num(mean));
    const double kb = overlap_tv(eigen_distribution(psi, b), wm);
    o.require(std::abs(kb - 0.5) <= kExact, "K_b " + num(kb));
    if (o.pass) {
        o.detail = "B psi = psi (residual " + num(residual) + "), mixture {(+-1, 0.5)}, mean 0, K_b = 0.5";
    }
    return o;
}

Outcome born_rule() {
    Outcome o;
    const double p = 0.3;
    const std::size_t n = 1000000;
    const double bound = 4 * std::sqrt(p * (1 - p) / static_cast<double>(n));
    int passes = 0;
    double worst = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Scenario sc;
        sc.a1 = std::sqrt(p);
        sc.a2 = std::sqrt(1 - p);
        sc.trials = n;
        sc.seed = 1000 + seed;
        const auto run = run_trials(sc, 4);
        const double dev = std::abs(run.report.rows[0].frequency - p);
        worst = std::max(worst, dev);
        passes += dev < bound && run.report.p_value > 1e-3;
    }
    o.require(passes >= 19, std::to_string(passes) + "/20 seeds within 4 sigma with p > 0.001");
    if (o.pass) {
        o.detail = std::to_string(passes) + "/20 seeds pass (bound " + num(bound) + ", worst deviation " + num(worst) +
                   ")";
    }
    return o;
}

Outcome pure_gemenge_indistinguishable() {
    Outcome o;
    int indistinguishable = 0;
    for (std::uint64_t pair = 0; pair < 100; ++pair) {
        Scenario pure;
        pure.a1 = std::sqrt(0.3);
        pure.a2 = std::sqrt(0.7);
        pure.trials = 100000;
        pure.seed = 2 * pair + 1;
        auto mixed = pure;
        mixed.input_kind = InputKind::gemenge;
        mixed.seed = 2 * pair + 2;
        const auto cmp = compare_streams(run_trials(pure, 4).stream, run_trials(mixed, 4).stream, 0.01);
        indistinguishable += cmp.verdict == StreamVerdict::indistinguishable;
    }
    o.require(indistinguishable >= 95, std::to_string(indistinguishable) + "/100 pairs indistinguishable");
    if (o.pass) {
        o.detail = std::to_string(indistinguishable) + "/100 seed pairs indistinguishable at alpha = 0.01";
    }
    return o;
}

Outcome decoherence_law() {
    Outcome o;
    const auto ms = chain_pure(std::sqrt(0.3), Complex(0, std::sqrt(0.7)));
    const Complex bare = ms.vector()[0] * std::conj(ms.vector()[7]);
    for (double eps : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        for (std::size_t n = 0; n <= 6; ++n) {
            const auto r = decohere(ms, n, eps);
            const double law = std::pow(eps, static_cast<double>(n));
            const double measured = std::abs(r.reduced_ms.matrix()(0, 7)) / std::abs(bare);
            o.require(std::abs(r.coherence_factor - law) <= kExact && std::abs(measured - law) <= kExact,
                      "eps=" + num(eps) + " n=" + std::to_string(n) + " factor " + num(measured));
        }
    }
    double worst = 1;
    for (const auto &product : {chain_pure(1.0, 0.0), chain_pure(0.0, 1.0)}) {
        for (double eps : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            for (std::size_t n = 0; n <= 6; ++n) {
                const auto r = decohere(product, n, eps);
                const double f = expectation(product.vector(), r.reduced_ms.matrix());
                worst = std::min(worst, f);
            }
        }
    }
    o.require(worst > 1 - 1e-12, "pointer product fidelity " + num(worst));
    if (o.pass) {
        o.detail = "coherence factor = eps^n on 35 (eps, n) points; pointer products fixed (min fidelity " + num(worst) +
                   ")";
    }
    return o;
}

Outcome purity_rate() {
    Outcome o;
    for (int k = 0; k <= 20; ++k) {
        const double theta = std::numbers::pi / 2 * k / 20.0;
        const Complex a1 = std::cos(theta);
        const Complex a2 = std::polar(std::sin(theta), 0.5 * k);
        const double rp = purity_report(DensityOperator::pure(prepare_object_state(a1, a2))).r_p;
        o.require(std::abs(rp - 2 * std::abs(a1 * a2)) <= kExact, "pure r_p at theta=" + num(theta));
        o.require(purity_report(object_mixture(a1, a2)).r_p == 0.0, "mixture r_p nonzero");
    }
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 1000; ++trial) {
        const double rp = purity_report(testutil::random_density(rng, 2)).r_p;
        o.require(rp >= 0 && rp <= 1, "random density r_p " + num(rp));
    }
    if (o.pass) {
        o.detail = "r_p = 2|a1 a2| on 21 pure states, 0 for mixtures, within [0, 1] on 1000 random densities";
    }
    return o;
}

std::string slurp(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome property_suites(const char *cli) {
    Outcome o;
    std::mt19937_64 rng(314);

    for (int trial = 0; trial < 100; ++trial) {
        const auto h = testutil::random_hermitian(rng, 2 + trial % 7);
        const auto spec = eig_hermitian(h);
        o.require(max_abs_diff(spec.reconstruct(), h) < 1e-10, "eigen reconstruction");
    }

    const TensorLayout layout({{kObject, 2}, {kDetector, 3}, {kObserver, 2}});
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = testutil::random_state(rng, 2);
        const auto b = testutil::random_state(rng, 3);
        const auto c = testutil::random_state(rng, 2);
        const auto mixed = testutil::random_density(rng, 12);
        const auto product = tensor_product(tensor_product(a, b), c);
        const std::vector<std::string> keep_d{kDetector};
        const auto rd = reduced_density(product, layout, keep_d);
        o.require(max_abs_diff(rd.matrix(), b.projector()) < 1e-12, "partial trace of product");
        for (const auto &keep : std::vector<std::vector<std::string>>{{kObject}, {kObserver, kObject}, {kDetector}}) {
            const auto r = partial_trace(mixed, layout, keep);
            o.require(std::abs(r.matrix().trace() - 1.0) < 1e-12, "partial trace preserves trace");
            o.require(is_hermitian(r.matrix(), 1e-12), "partial trace hermitian");
            o.require(eig_hermitian(r.matrix()).eigenvalues.back() > -1e-12, "partial trace positive");
        }
    }

    const std::vector<double> grid{-1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5};
    int feasible = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = testutil::random_problem(rng);
        const auto r = check_eigen_discrimination(p);
        const bool oracle_feasible = numeric_feasibility_oracle(p, grid).min_residual < 1e-6;
        feasible += r.verdict == Verdict::feasible;
        o.require((r.verdict == Verdict::feasible) == oracle_feasible,
                  "solver/oracle disagree on random problem " + std::to_string(trial));
    }

    auto cfg = app::parse_config(R"({"a1":0.6,"a2":[0,0.8],"trials":20000,"env_overlap":0.5})");
    for (auto format : {app::OutputFormat::csv, app::OutputFormat::structured_text}) {
        std::ostringstream first, second;
        app::emit_report(app::execute(cfg), format, first);
        app::emit_report(app::execute(cfg), format, second);
        o.require(first.str() == second.str(), "in-process reports differ");
    }
    if (cli) {
        const std::string base = "acceptance_determinism";
        for (int run = 1; run <= 2; ++run) {
            const std::string cmd = std::string("\"") + cli + "\" all --trials 20000 --out " + base +
                                    std::to_string(run) + ".json";
            o.require(std::system(cmd.c_str()) == 0, "CLI run failed");
        }
        const auto a = slurp(base + "1.json");
        o.require(!a.empty() && a == slurp(base + "2.json"), "CLI reports differ");
        std::remove((base + "1.json").c_str());
        std::remove((base + "2.json").c_str());
    }
    if (o.pass) {
        o.detail = "100 reconstructions, 100 partial-trace instances, 200 solver/oracle problems (" +
                   std::to_string(feasible) + " feasible), byte-identical reports" +
                   (cli ? " in process and via the CLI" : " in process");
    }
    return o;
}

}  // namespace

int main(int argc, char **argv) {
    const char *cli = argc > 1 ? argv[1] : nullptr;
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"restriction identity", restriction_identity},
        {"no-go sweep", no_go_sweep},
        {"overlap values", overlap_values},
        {"detector blindness", detector_blindness},
        {"interference-term observable", it_observable},
        {"Born rule sampling", born_rule},
        {"pure/gemenge indistinguishability", pure_gemenge_indistinguishable},
        {"decoherence law", decoherence_law},
        {"purity rate", purity_rate},
        {"property suites", [cli] { return property_suites(cli); }},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failures += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first
                  << "): " << o.detail << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
    return failures == 0 ? 0 : 1;
}
