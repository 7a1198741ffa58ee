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

#include "measchain/chain.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <optional>
#include <sstream>

#include "measchain/errors.h"
#include "measchain/spectral.h"
#include "measchain/text.h"

namespace measchain {

namespace {

constexpr double kReadyFidelity = 1 - 1e-10;
constexpr double kFactorizedFidelity = 1 - 1e-10;
constexpr double kDuplicateFidelity = 1 - 1e-12;

ComplexMatrix ry(double theta) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    return ComplexMatrix{{c, -s}, {s, c}};
}

ComplexMatrix pointer_projector(std::size_t i) {
    ComplexMatrix p(2, 2);
    p(i, i) = 1.0;
    return p;
}

// Global phase chosen so the largest-magnitude amplitude is real positive.
StateVector canonical_phase(const StateVector &v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.dim(); ++i) {
        if (std::abs(v[i]) > std::abs(v[best]) + 1e-12) {
            best = i;
        }
    }
    const Complex phase = std::abs(v[best]) > 0 ? std::conj(v[best]) / std::abs(v[best]) : Complex(1);
    ComplexVector out(v.amplitudes().begin(), v.amplitudes().end());
    for (auto &a : out) {
        a *= phase;
    }
    return StateVector::normalized(std::move(out));
}

StateVector principal_state(const DensityOperator &rho) {
    return canonical_phase(eig_hermitian(rho.matrix()).eigenvectors.front());
}

}  // namespace

std::string to_string(InputKind kind) {
    return kind == InputKind::pure ? "pure" : "gemenge";
}

InputKind parse_input_kind(const std::string &text) {
    if (text == "pure") {
        return InputKind::pure;
    }
    if (text == "gemenge") {
        return InputKind::gemenge;
    }
    throw ValidationError("input_kind must be 'pure' or 'gemenge', got '" + text + "'");
}

void Scenario::validate() const {
    const double n2 = std::norm(a1) + std::norm(a2);
    if (std::abs(n2 - 1.0) > kStateTolerance) {
        std::ostringstream msg;
        msg << "amplitudes not normalized: |a1|^2+|a2|^2-1 = " << std::setprecision(12) << (n2 - 1.0);
        throw ValidationError(msg.str());
    }
    if (!(env_overlap >= 0.0 && env_overlap <= 1.0)) {
        throw ValidationError("env_overlap must lie in [0, 1]");
    }
    if (trials == 0) {
        throw ValidationError("trials must be positive");
    }
}

std::string scenario_digest(const Scenario &s) {
    std::ostringstream text;
    text << "a1=" << format_real(s.a1.real(), 17) << "," << format_real(s.a1.imag(), 17)
         << ";a2=" << format_real(s.a2.real(), 17) << "," << format_real(s.a2.imag(), 17)
         << ";input_kind=" << to_string(s.input_kind) << ";n_env=" << s.n_env
         << ";env_overlap=" << format_real(s.env_overlap, 17) << ";seed=" << s.seed << ";trials=" << s.trials;
    std::ostringstream hex;
    hex << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(text.str());
    return hex.str();
}

MSState::MSState(StateVector vector, TensorLayout layout) : vector_(std::move(vector)), layout_(std::move(layout)) {
    if (vector_.dim() != layout_.total_dim()) {
        throw ValidationError("state dimension " + std::to_string(vector_.dim()) + " does not match layout " +
                              layout_.describe());
    }
}

Gemenge::Gemenge(std::vector<Branch> branches) {
    if (branches.empty()) {
        throw ValidationError("gemenge needs at least one branch");
    }
    const TensorLayout layout = branches.front().state.layout();
    double total = 0;
    double dropped = 0;
    std::size_t dropped_count = 0;
    for (auto &b : branches) {
        if (!(b.prob >= 0.0) || b.prob > 1.0 + kStateTolerance) {
            throw ValidationError("branch probability outside [0, 1]");
        }
        if (b.state.layout() != layout) {
            throw ValidationError("gemenge branches live on different layouts");
        }
        total += b.prob;
        if (b.prob < kMinBranchProbability) {
            dropped += b.prob;
            ++dropped_count;
            continue;
        }
        bool merged = false;
        for (auto &kept : branches_) {
            if (kept.state.vector().fidelity(b.state.vector()) >= kDuplicateFidelity) {
                kept.prob += b.prob;
                merged = true;
                notes_.push_back("merged identical branch");
                break;
            }
        }
        if (!merged) {
            branches_.push_back(std::move(b));
        }
    }
    if (std::abs(total - 1.0) > kStateTolerance) {
        std::ostringstream msg;
        msg << "gemenge probabilities sum to " << std::setprecision(15) << total;
        throw ValidationError(msg.str());
    }
    if (branches_.empty()) {
        throw ValidationError("gemenge has no branch above the probability floor");
    }
    if (dropped_count > 0) {
        std::ostringstream msg;
        msg << "dropped " << dropped_count << " branch(es) with probability below " << kMinBranchProbability
            << " (total " << dropped << ") and renormalized";
        notes_.push_back(msg.str());
    }
    double kept_total = 0;
    for (const auto &b : branches_) {
        kept_total += b.prob;
    }
    for (auto &b : branches_) {
        b.prob /= kept_total;
    }
}

DensityOperator Gemenge::density() const {
    const auto d = layout().total_dim();
    ComplexMatrix m(d, d);
    for (const auto &b : branches_) {
        m += b.state.vector().projector() * Complex(b.prob);
    }
    return DensityOperator(std::move(m));
}

PointerBasis PointerBasis::standard(const std::string &subsystem) {
    return PointerBasis{subsystem, StateVector::basis(2, 0), StateVector::basis(2, 1)};
}

void PointerBasis::validate() const {
    if (up.dim() != 2 || down.dim() != 2) {
        throw ValidationError("pointer basis states must be two-dimensional");
    }
    if (std::abs(up.inner(down)) > 1e-12) {
        throw ValidationError("pointer basis states are not orthogonal");
    }
}

StateVector ready_state() {
    const double r = 1.0 / std::sqrt(2.0);
    return StateVector({r, r});
}

StateVector prepare_object_state(Complex a1, Complex a2) {
    return StateVector({a1, a2});
}

Gemenge prepare_gemenge(Complex a1, Complex a2) {
    (void)prepare_object_state(a1, a2);
    const TensorLayout layout({{kObject, 2}});
    std::vector<Branch> branches;
    branches.push_back({MSState(StateVector::basis(2, 0), layout), std::norm(a1)});
    branches.push_back({MSState(StateVector::basis(2, 1), layout), std::norm(a2)});
    return Gemenge(std::move(branches));
}

ComplexMatrix canonical_premeasurement_unitary() {
    const double half_pi = std::numbers::pi / 2;
    return tensor_product(pointer_projector(0), ry(-half_pi)) + tensor_product(pointer_projector(1), ry(half_pi));
}

MSState premeasure(const MSState &state, const std::string &control, const std::string &apparatus,
                   PremeasureOptions options) {
    const auto &layout = state.layout();
    if (layout.dim_of(control) != 2 || layout.dim_of(apparatus) != 2) {
        throw UsageError("premeasure acts on two-dimensional control and apparatus factors");
    }
    if (control == apparatus) {
        throw UsageError("control and apparatus must differ");
    }
    if (!options.allow_unready) {
        const std::vector<std::string> keep{apparatus};
        const auto rho = reduced_density(state.vector(), layout, keep);
        const auto ready = ready_state();
        const double f = expectation(rho, ready.projector());
        if (f <= kReadyFidelity) {
            std::ostringstream msg;
            msg << "apparatus '" << apparatus << "' is not in its ready state (fidelity " << std::setprecision(12) << f
                << ")";
            throw PreconditionError(msg.str());
        }
    }
    const std::vector<std::string> targets{control, apparatus};
    auto out = apply_on_factors(state.vector().amplitudes(), layout, targets, canonical_premeasurement_unitary());
    return MSState(StateVector(std::move(out)), layout);
}

namespace {

MSState chain_from_object(const StateVector &object) {
    const TensorLayout sd({{kObject, 2}, {kDetector, 2}});
    MSState s_d(tensor_product(object, ready_state()), sd);
    s_d = premeasure(s_d, kObject, kDetector);
    const TensorLayout sdo = sd.appended({kObserver, 2});
    MSState ms(tensor_product(s_d.vector(), ready_state()), sdo);
    return premeasure(ms, kDetector, kObserver);
}

}  // namespace

MSState chain_pure(Complex a1, Complex a2) {
    return chain_from_object(prepare_object_state(a1, a2));
}

Gemenge chain_gemenge(Complex a1, Complex a2) {
    const auto ws = prepare_gemenge(a1, a2);
    std::vector<Branch> branches;
    for (const auto &b : ws.branches()) {
        branches.push_back({chain_from_object(b.state.vector()), b.prob});
    }
    return Gemenge(std::move(branches));
}

std::variant<MSState, Gemenge> full_chain(const Scenario &scenario) {
    scenario.validate();
    if (scenario.input_kind == InputKind::pure) {
        return chain_pure(scenario.a1, scenario.a2);
    }
    return chain_gemenge(scenario.a1, scenario.a2);
}

DensityOperator statistical_restriction(const MSState &state) {
    if (!state.layout().contains(kObserver)) {
        throw UsageError("statistical restriction needs an O factor in " + state.layout().describe());
    }
    const std::vector<std::string> keep{kObserver};
    return reduced_density(state.vector(), state.layout(), keep);
}

DensityOperator statistical_restriction(const DensityOperator &rho, const TensorLayout &layout) {
    if (!layout.contains(kObserver)) {
        throw UsageError("statistical restriction needs an O factor in " + layout.describe());
    }
    const std::vector<std::string> keep{kObserver};
    return partial_trace(rho, layout, keep);
}

double product_fidelity(const MSState &state) {
    const auto &layout = state.layout();
    std::optional<StateVector> product;
    for (const auto &f : layout.factors()) {
        const std::vector<std::string> keep{f.label};
        auto local = principal_state(reduced_density(state.vector(), layout, keep));
        product = product ? tensor_product(*product, local, layout.total_dim()) : local;
    }
    return product->fidelity(state.vector());
}

Gemenge gemenge_restriction(const Gemenge &w, const std::string &keep) {
    const auto kept_layout = w.layout().restricted_to(std::vector<std::string>{keep});
    std::vector<Branch> out;
    for (const auto &b : w.branches()) {
        const double f = product_fidelity(b.state);
        if (f <= kFactorizedFidelity) {
            std::ostringstream msg;
            msg << "gemenge branch is entangled (product fidelity " << std::setprecision(12) << f << ")";
            throw PreconditionError(msg.str());
        }
        const std::vector<std::string> keep_labels{keep};
        auto local = principal_state(reduced_density(b.state.vector(), b.state.layout(), keep_labels));
        out.push_back({MSState(std::move(local), kept_layout), b.prob});
    }
    return Gemenge(std::move(out));
}

DecoherenceResult decohere(const MSState &state, std::size_t n_env, double eps, const std::string &pointer,
                           std::size_t max_dim) {
    if (!(eps >= 0.0 && eps <= 1.0)) {
        throw ValidationError("environment overlap must lie in [0, 1]");
    }
    const auto &layout = state.layout();
    if (layout.dim_of(pointer) != 2) {
        throw UsageError("decoherence pointer factor must be two-dimensional");
    }
    std::size_t env_dim = 1;
    for (std::size_t j = 0; j < n_env; ++j) {
        env_dim *= 2;
        if (layout.total_dim() * env_dim > max_dim) {
            throw CapacityError("decoherence with " + std::to_string(n_env) + " environment elements exceeds capacity " +
                                    std::to_string(max_dim),
                                layout.total_dim() << n_env, max_dim);
        }
    }

    const StateVector e1({1.0, 0.0});
    const StateVector e2({eps, std::sqrt(std::max(0.0, 1.0 - eps * eps))});
    TensorLayout env_layout = layout;
    for (std::size_t j = 0; j < n_env; ++j) {
        env_layout = env_layout.appended({"E" + std::to_string(j + 1), 2});
    }

    const std::vector<std::string> targets{pointer};
    ComplexVector total(layout.total_dim() * env_dim);
    for (std::size_t branch = 0; branch < 2; ++branch) {
        const auto part = apply_on_factors(state.vector().amplitudes(), layout, targets, pointer_projector(branch));
        ComplexVector tag{1.0};
        for (std::size_t j = 0; j < n_env; ++j) {
            const auto &e = branch == 0 ? e1 : e2;
            ComplexVector next(tag.size() * 2);
            for (std::size_t a = 0; a < tag.size(); ++a) {
                next[2 * a] = tag[a] * e[0];
                next[2 * a + 1] = tag[a] * e[1];
            }
            tag = std::move(next);
        }
        for (std::size_t i = 0; i < part.size(); ++i) {
            if (part[i] == Complex{}) {
                continue;
            }
            for (std::size_t k = 0; k < env_dim; ++k) {
                total[i * env_dim + k] += part[i] * tag[k];
            }
        }
    }

    MSState enlarged(StateVector(std::move(total)), env_layout);
    std::vector<std::string> keep;
    for (const auto &f : layout.factors()) {
        keep.push_back(f.label);
    }
    auto reduced = reduced_density(enlarged.vector(), env_layout, keep);
    return DecoherenceResult{std::move(enlarged), std::pow(eps, static_cast<double>(n_env)), std::move(reduced)};
}

HamiltonianSpec HamiltonianSpec::tuned(double duration) {
    if (!(duration > 0)) {
        throw ValidationError("interaction duration must be positive");
    }
    return HamiltonianSpec{kTunedPhase / duration, duration};
}

bool HamiltonianSpec::is_tuned(double tol) const {
    return std::abs(coupling * duration - kTunedPhase) <= tol;
}

ComplexMatrix HamiltonianSpec::generator() const {
    const ComplexMatrix sz{{0.5, 0.0}, {0.0, -0.5}};
    const ComplexMatrix y_half{{0.0, Complex(0, -0.5)}, {Complex(0, 0.5), 0.0}};
    return tensor_product(sz, y_half) * Complex(-2.0 * coupling);
}

CrosscheckResult hamiltonian_premeasure_crosscheck(const HamiltonianSpec &spec, const MSState &state,
                                                   const std::string &control, const std::string &apparatus) {
    const auto u = unitary_evolution(spec.generator(), spec.duration);
    const std::vector<std::string> targets{control, apparatus};
    auto evolved = apply_on_factors(state.vector().amplitudes(), state.layout(), targets, u);
    MSState out(StateVector(std::move(evolved)), state.layout());
    const auto canonical = premeasure(state, control, apparatus, PremeasureOptions{.allow_unready = true});
    const double fidelity = canonical.vector().fidelity(out.vector());
    CrosscheckResult result{std::move(out), fidelity, spec.is_tuned(), {}};
    if (fidelity < 1 - 1e-9) {
        std::ostringstream msg;
        msg << std::setprecision(12) << "g*tau = " << spec.coupling * spec.duration << " (tuned value "
            << HamiltonianSpec::kTunedPhase << "); fidelity with canonical premeasurement " << fidelity;
        result.diagnostic = msg.str();
    }
    return result;
}

}  // namespace measchain
