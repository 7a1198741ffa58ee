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

#include "measchain/metrics.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

#include "measchain/errors.h"

namespace measchain {

namespace {

template <typename Probability>
EigenDistribution distribution_from(const HermitianObservable &obs, Probability prob, std::string source) {
    const auto &spec = obs.spectrum();
    const auto values = spec.group_values();
    EigenDistribution out;
    out.source = std::move(source);
    for (std::size_t g = values.size(); g-- > 0;) {
        double w = prob(spec.group_projector(g));
        // Clip rounding noise so probabilities stay within [0, 1].
        w = std::clamp(w, 0.0, 1.0);
        out.entries.push_back({values[g], w});
    }
    return out;
}

// Pairs of probabilities aligned on the union of both eigenvalue supports.
std::vector<std::pair<double, double>> align(const EigenDistribution &w1, const EigenDistribution &w2) {
    std::vector<double> grid;
    auto add = [&](double v) {
        for (double g : grid) {
            if (std::abs(g - v) <= kEigenGroupTolerance * std::max(1.0, std::abs(v))) {
                return;
            }
        }
        grid.push_back(v);
    };
    for (const auto &e : w1.entries) {
        add(e.eigenvalue);
    }
    for (const auto &e : w2.entries) {
        add(e.eigenvalue);
    }
    std::vector<std::pair<double, double>> out;
    for (double v : grid) {
        out.emplace_back(w1.probability_of(v), w2.probability_of(v));
    }
    return out;
}

void require_two_dim(const DensityOperator &rho) {
    if (rho.dim() != 2) {
        throw UsageError("purity analysis needs a two-dimensional density, got dimension " +
                         std::to_string(rho.dim()));
    }
}

}  // namespace

double EigenDistribution::probability_of(double eigenvalue, double tol) const {
    for (const auto &e : entries) {
        if (std::abs(e.eigenvalue - eigenvalue) <= tol * std::max(1.0, std::abs(eigenvalue))) {
            return e.probability;
        }
    }
    return 0.0;
}

EigenDistribution eigen_distribution(const DensityOperator &rho, const HermitianObservable &obs) {
    if (rho.dim() != obs.dim()) {
        throw UsageError("density dimension " + std::to_string(rho.dim()) + " does not match observable dimension " +
                         std::to_string(obs.dim()));
    }
    return distribution_from(
        obs, [&](const ComplexMatrix &p) { return expectation(rho, p); }, "density vs " + obs.name());
}

EigenDistribution eigen_distribution(const StateVector &state, const HermitianObservable &obs) {
    if (state.dim() != obs.dim()) {
        throw UsageError("state dimension " + std::to_string(state.dim()) + " does not match observable dimension " +
                         std::to_string(obs.dim()));
    }
    return distribution_from(
        obs, [&](const ComplexMatrix &p) { return expectation(state, p); }, "state vs " + obs.name());
}

double overlap_tv(const EigenDistribution &w1, const EigenDistribution &w2) {
    double acc = 0;
    for (auto [p, q] : align(w1, w2)) {
        acc += std::min(p, q);
    }
    return acc;
}

double overlap_bc(const EigenDistribution &w1, const EigenDistribution &w2) {
    double acc = 0;
    for (auto [p, q] : align(w1, w2)) {
        acc += std::sqrt(p * q);
    }
    return acc;
}

double purity_information(double k_tv) {
    if (!(k_tv >= 0.0 && k_tv <= 1.0)) {
        throw ValidationError("overlap must lie in [0, 1] for purity information");
    }
    return 1.0 - k_tv;
}

OverlapReport overlap_report(const EigenDistribution &w1, const EigenDistribution &w2, std::string observable) {
    const double tv = overlap_tv(w1, w2);
    const double bc = overlap_bc(w1, w2);
    return OverlapReport{bc, tv, std::move(observable), purity_information(std::clamp(tv, 0.0, 1.0))};
}

ComplexMatrix s_gamma(double gamma) {
    const double c = 0.5 * std::cos(gamma);
    const double s = 0.5 * std::sin(gamma);
    // S_x = [[0, 1/2], [1/2, 0]], S_y = [[0, -i/2], [i/2, 0]].
    return ComplexMatrix{{0.0, Complex(c, -s)}, {Complex(c, s), 0.0}};
}

PurityReport purity_report(const DensityOperator &rho) {
    require_two_dim(rho);
    const Complex rho12 = rho.matrix()(0, 1);
    const double sx = rho12.real();
    const double sy = -rho12.imag();
    const double magnitude = std::abs(rho12);
    return PurityReport{2.0 * magnitude, std::atan2(sy, sx), magnitude};
}

double phase_averaged_purity_information(const DensityOperator &pure, const DensityOperator &mixed,
                                         std::size_t grid_points) {
    require_two_dim(pure);
    require_two_dim(mixed);
    if (grid_points == 0) {
        throw UsageError("phase grid needs at least one point");
    }
    double acc = 0;
    for (std::size_t k = 0; k < grid_points; ++k) {
        const double gamma = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(grid_points);
        const HermitianObservable obs(s_gamma(gamma), kObject, "S_gamma");
        acc += 1.0 - overlap_tv(eigen_distribution(pure, obs), eigen_distribution(mixed, obs));
    }
    return acc / static_cast<double>(grid_points);
}

BornProbabilities born_probabilities(const MSState &state, const PointerBasis &basis) {
    basis.validate();
    const auto &layout = state.layout();
    const auto pointer_pos = layout.position(basis.subsystem);
    for (const auto &f : layout.factors()) {
        if (f.dim != 2) {
            throw DecompositionError("pointer product decomposition needs two-dimensional factors; '" + f.label +
                                     "' has dimension " + std::to_string(f.dim));
        }
    }
    // Product basis vectors |X_i ... X_i> for i = 1, 2.
    std::vector<StateVector> products;
    for (std::size_t i = 0; i < 2; ++i) {
        std::optional<StateVector> v;
        for (std::size_t k = 0; k < layout.size(); ++k) {
            StateVector local = k == pointer_pos ? (i == 0 ? basis.up : basis.down) : StateVector::basis(2, i);
            v = v ? tensor_product(*v, local, layout.total_dim()) : local;
        }
        products.push_back(*v);
    }
    const Complex c1 = products[0].inner(state.vector());
    const Complex c2 = products[1].inner(state.vector());
    ComplexVector rest(state.vector().amplitudes().begin(), state.vector().amplitudes().end());
    for (std::size_t j = 0; j < rest.size(); ++j) {
        rest[j] -= c1 * products[0][j] + c2 * products[1][j];
    }
    const double residual = norm(rest);
    if (residual > kStateTolerance) {
        std::ostringstream msg;
        msg << "state is not a pointer triple-product superposition (residual " << residual << ")";
        throw DecompositionError(msg.str());
    }
    return BornProbabilities{std::norm(c1), std::norm(c2), c1, c2};
}

}  // namespace measchain
