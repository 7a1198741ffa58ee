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

#ifndef MEASCHAIN_SPECTRAL_H
#define MEASCHAIN_SPECTRAL_H

#include <cstddef>
#include <string>
#include <vector>

#include "measchain/linalg.h"

namespace measchain {

/// Relative tolerance for merging eigenvalues into one degenerate group.
inline constexpr double kEigenGroupTolerance = 1e-9;
/// Absolute floor for the grouping tolerance.
inline constexpr double kEigenGroupFloor = 1e-12;

/// Eigenvalues sorted descending with orthonormal eigenvectors. Degenerate
/// eigenvalues are grouped; eigenvectors inside a group are not canonical, so
/// consumers should go through projectors.
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    std::vector<StateVector> eigenvectors;
    std::vector<std::vector<std::size_t>> groups;

    std::size_t dim() const {
        return eigenvalues.size();
    }
    /// Representative (mean) eigenvalue of each group, descending.
    std::vector<double> group_values() const;
    ComplexMatrix group_projector(std::size_t group) const;
    ComplexMatrix reconstruct() const;
    double grouping_tolerance() const;
};

/// Full spectrum of a Hermitian matrix. Throws ValidationError otherwise.
SpectralDecomposition eig_hermitian(const ComplexMatrix &h);

/// Projector onto the eigenspace of the group within tol of lambda.
/// Throws LookupError when no group matches.
ComplexMatrix projector_onto(const SpectralDecomposition &spec, double lambda, double tol = kEigenGroupTolerance);

/// Self-adjoint operator with its spectral decomposition cached at
/// construction, tagged with the subsystem it acts on.
class HermitianObservable {
   public:
    HermitianObservable(ComplexMatrix matrix, std::string scope, std::string name = {});

    const ComplexMatrix &matrix() const {
        return matrix_;
    }
    const SpectralDecomposition &spectrum() const {
        return spectrum_;
    }
    const std::string &scope() const {
        return scope_;
    }
    const std::string &name() const {
        return name_;
    }
    std::size_t dim() const {
        return matrix_.rows();
    }

   private:
    ComplexMatrix matrix_;
    SpectralDecomposition spectrum_;
    std::string scope_;
    std::string name_;
};

}  // namespace measchain

#endif
