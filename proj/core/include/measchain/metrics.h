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

#ifndef MEASCHAIN_METRICS_H
#define MEASCHAIN_METRICS_H

#include <string>
#include <vector>

#include "measchain/chain.h"
#include "measchain/linalg.h"
#include "measchain/spectral.h"

namespace measchain {

struct EigenEntry {
    double eigenvalue;
    double probability;
};

/// Grouped eigenvalue -> probability map, w(lambda) = Tr(rho P(lambda)),
/// eigenvalues strictly increasing. Zero-probability eigenvalues are kept.
struct EigenDistribution {
    std::vector<EigenEntry> entries;
    std::string source;

    double probability_of(double eigenvalue, double tol = 1e-9) const;
};

EigenDistribution eigen_distribution(const DensityOperator &rho, const HermitianObservable &obs);
EigenDistribution eigen_distribution(const StateVector &state, const HermitianObservable &obs);

/// sum_i min(w1, w2) over the union of grouped eigenvalues (absent entries are 0).
double overlap_tv(const EigenDistribution &w1, const EigenDistribution &w2);
/// sum_i sqrt(w1 w2), the Bhattacharyya coefficient.
double overlap_bc(const EigenDistribution &w1, const EigenDistribution &w2);

/// Purity information in bits, operationalized as 1 - k_tv.
double purity_information(double k_tv);

struct OverlapReport {
    double k_bc;
    double k_tv;
    std::string observable;
    double purity_information_bits;
};

OverlapReport overlap_report(const EigenDistribution &w1, const EigenDistribution &w2, std::string observable);

struct PurityReport {
    /// 2 max_gamma |<S_gamma>| = 2|rho_12|.
    double r_p;
    /// Maximizing phase, atan2(<S_y>, <S_x>).
    double gamma_star;
    double s_gamma_expect;
};

/// S_gamma = S_x cos(gamma) + S_y sin(gamma), half-Pauli.
ComplexMatrix s_gamma(double gamma);

/// Closed-form phase maximization on a two-dimensional density.
PurityReport purity_report(const DensityOperator &rho);

/// Mean over a uniform gamma grid of 1 - k_tv(S_gamma) between two
/// two-dimensional states; an estimate for the case where the phase is unknown.
double phase_averaged_purity_information(const DensityOperator &pure, const DensityOperator &mixed,
                                         std::size_t grid_points = 360);

struct BornProbabilities {
    double p1;
    double p2;
    Complex c1;
    Complex c2;
};

/// Reads a1, a2 off a state of the form sum_i a_i |X_i>⊗...⊗|X_i> in the
/// pointer product basis (basis.subsystem uses basis.up/down, every other
/// factor its computational basis). Throws DecompositionError otherwise.
BornProbabilities born_probabilities(const MSState &state, const PointerBasis &basis);

}  // namespace measchain

#endif
