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

#ifndef MEASCHAIN_DISCRIMINATOR_H
#define MEASCHAIN_DISCRIMINATOR_H

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "measchain/chain.h"
#include "measchain/linalg.h"
#include "measchain/spectral.h"

namespace measchain {

/// Half-Pauli operators on one two-dimensional factor, in its pointer basis:
/// [Q, Qx] = i Qy and [Q, Qy] = -i Qx.
struct PointerAlgebra {
    HermitianObservable q;
    HermitianObservable qx;
    HermitianObservable qy;
    std::string scope;
};

/// Throws UsageError when dim != 2.
PointerAlgebra build_pointer_algebra(const std::string &scope, std::size_t dim = 2);
PointerAlgebra build_pointer_algebra(const TensorLayout &layout, const std::string &scope);

/// Unit coefficient vector of d0·Q + d1·Qx + d2·Qy.
struct ObservableSpec {
    double d0 = 1;
    double d1 = 0;
    double d2 = 0;

    /// Throws ValidationError unless d0² + d1² + d2² = 1 within 1e-12.
    void validate() const;
};

HermitianObservable combine_observable(const PointerAlgebra &alg, const ObservableSpec &spec);

/// States that some Hermitian G must have as eigenvectors. States in one
/// group share an eigenvalue; states in different groups must get different
/// eigenvalues. States outside every group are unconstrained apart from being
/// eigenvectors.
struct DiscriminationProblem {
    std::size_t space_dim = 0;
    std::vector<StateVector> states;
    std::vector<std::vector<std::size_t>> distinct_groups;

    /// Throws ValidationError on dimension mismatches or overlapping groups.
    void validate() const;
};

enum class Verdict { feasible, infeasible };
std::string to_string(Verdict v);

enum class EqualityReason {
    /// |<phi_a|phi_b>| above the overlap threshold: eigenvectors of a Hermitian
    /// operator with distinct eigenvalues are orthogonal.
    non_orthogonal,
    /// A linear dependence sum_k c_k phi_k = 0 forces sum_k c_k g_k phi_k = 0.
    linear_dependence,
    /// Both states belong to the same requested group.
    same_group,
};

std::string to_string(EqualityReason r);

struct ForcedEquality {
    std::size_t a;
    std::size_t b;
    EqualityReason reason;
    /// |<phi_a|phi_b>| for non_orthogonal; largest |sum_k c_k phi_k| over the
    /// recorded dependencies for linear_dependence; 0 for same_group.
    double evidence;
};

struct GroupConflict {
    std::size_t group_a;
    std::size_t group_b;
    /// Forced equalities connecting a member of group_a to a member of group_b.
    std::vector<ForcedEquality> chain;
};

struct Certificate {
    std::vector<ForcedEquality> equalities;
    /// Dependence coefficient vectors c with sum_k c_k phi_k = 0.
    std::vector<ComplexVector> dependencies;
    std::vector<GroupConflict> conflicts;
    /// State indices that share a provably forced eigenvalue with a conflict.
    std::vector<std::vector<std::size_t>> merged_classes;

    /// Human-readable text, e.g. "g0=g1=g2 forced".
    std::string text() const;
};

struct Witness {
    ComplexMatrix observable;
    /// Eigenvalue of each state under `observable`.
    std::vector<double> eigenvalues;
};

struct FeasibilityResult {
    Verdict verdict;
    std::optional<Witness> witness;
    std::optional<Certificate> certificate;
};

/// Non-orthogonality threshold on |<phi_j|phi_k>|.
inline constexpr double kOverlapThreshold = 1e-10;

/// Decides whether a Hermitian G exists with G phi_k = g_k phi_k and the
/// requested equality/distinctness pattern.
FeasibilityResult check_eigen_discrimination(const DiscriminationProblem &p);

/// Re-checks a certificate from its evidence alone.
bool verify_certificate(const DiscriminationProblem &p, const Certificate &c);

/// Max over states of |G phi_k - g_k phi_k|.
double witness_residual(const DiscriminationProblem &p, const Witness &w);

struct OracleResult {
    /// Minimum over admissible assignments of min_G sum_k |G phi_k - g_k phi_k|^2.
    double min_residual;
    std::vector<double> assignment;
    std::size_t assignments_tried;
};

/// Brute-force least-squares cross-check over eigenvalue assignments drawn
/// from `grid`. Grid values closer than `tol` count as equal.
OracleResult numeric_feasibility_oracle(const DiscriminationProblem &p, const std::vector<double> &grid,
                                        double tol = 1e-12);

/// Psi_MS distinct from Psi_1 and Psi_2 on the S⊗D⊗O space; three singleton groups.
DiscriminationProblem superposition_problem(Complex a1, Complex a2);
/// xi_s = restriction-level superposition distinct from xi_1, xi_2 on the O factor.
DiscriminationProblem observer_superposition_problem(Complex a1, Complex a2);
/// Psi_1 vs Psi_2 (or |O1> vs |O2> when `observer_only`).
DiscriminationProblem recognition_problem(bool observer_only);

enum class ItKind { full, sd_only };

struct ITObservable {
    HermitianObservable observable;
    ItKind kind;
};

/// |S1 D1 O1><S2 D2 O2| + h.c. (full) or |S1 D1><S2 D2| + h.c. (sd_only).
ITObservable build_it_observable(ItKind kind);

struct LiftCheck {
    bool restriction_is_eigenstate;
    bool full_is_eigenstate;
    /// restriction eigenstate => full state eigenstate of I⊗A.
    bool holds;
    double restriction_eigenvalue;
};

/// Checks the lift of an eigenstate property from the O restriction to the
/// whole state for an observable acting on `scope`.
LiftCheck restriction_eigenstate_lift_check(const MSState &full_state, const HermitianObservable &obs,
                                            const std::string &scope = kObserver);

}  // namespace measchain

#endif
