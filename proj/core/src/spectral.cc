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

#include "measchain/spectral.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "measchain/errors.h"

namespace measchain {

double SpectralDecomposition::grouping_tolerance() const {
    double scale = 0;
    for (double v : eigenvalues) {
        scale = std::max(scale, std::abs(v));
    }
    return std::max(kEigenGroupTolerance * scale, kEigenGroupFloor);
}

std::vector<double> SpectralDecomposition::group_values() const {
    std::vector<double> out;
    out.reserve(groups.size());
    for (const auto &g : groups) {
        double acc = 0;
        for (auto i : g) {
            acc += eigenvalues[i];
        }
        out.push_back(acc / static_cast<double>(g.size()));
    }
    return out;
}

ComplexMatrix SpectralDecomposition::group_projector(std::size_t group) const {
    if (group >= groups.size()) {
        throw LookupError("eigenvalue group index out of range");
    }
    ComplexMatrix p(dim(), dim());
    for (auto i : groups[group]) {
        p += eigenvectors[i].projector();
    }
    return p;
}

ComplexMatrix SpectralDecomposition::reconstruct() const {
    ComplexMatrix m(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        m += eigenvectors[i].projector() * Complex(eigenvalues[i]);
    }
    return m;
}

SpectralDecomposition eig_hermitian(const ComplexMatrix &h) {
    if (!is_hermitian(h, kStateTolerance)) {
        throw ValidationError("eig_hermitian requires a Hermitian matrix");
    }
    const auto n = static_cast<Eigen::Index>(h.rows());
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            m(i, j) = h(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success) {
        throw ValidationError("Hermitian eigensolver did not converge");
    }
    const auto &values = solver.eigenvalues();
    const auto &vectors = solver.eigenvectors();

    // Eigen returns ascending order; flip to descending.
    SpectralDecomposition spec;
    spec.eigenvalues.reserve(h.rows());
    spec.eigenvectors.reserve(h.rows());
    for (Eigen::Index k = n; k-- > 0;) {
        spec.eigenvalues.push_back(values(k));
        ComplexVector v(h.rows());
        for (Eigen::Index i = 0; i < n; ++i) {
            v[static_cast<std::size_t>(i)] = vectors(i, k);
        }
        spec.eigenvectors.push_back(StateVector::normalized(std::move(v)));
    }

    const double tol = spec.grouping_tolerance();
    for (std::size_t k = 0; k < spec.eigenvalues.size(); ++k) {
        if (!spec.groups.empty() && std::abs(spec.eigenvalues[spec.groups.back().front()] - spec.eigenvalues[k]) <= tol) {
            spec.groups.back().push_back(k);
        } else {
            spec.groups.push_back({k});
        }
    }
    return spec;
}

ComplexMatrix projector_onto(const SpectralDecomposition &spec, double lambda, double tol) {
    const auto values = spec.group_values();
    for (std::size_t g = 0; g < values.size(); ++g) {
        if (std::abs(values[g] - lambda) <= tol) {
            return spec.group_projector(g);
        }
    }
    std::ostringstream msg;
    msg << "no eigenvalue within " << tol << " of " << lambda;
    throw LookupError(msg.str());
}

HermitianObservable::HermitianObservable(ComplexMatrix matrix, std::string scope, std::string name)
    : matrix_(std::move(matrix)), spectrum_(eig_hermitian(matrix_)), scope_(std::move(scope)), name_(std::move(name)) {
}

}  // namespace measchain
