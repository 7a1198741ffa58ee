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

#ifndef MEASCHAIN_CHAIN_H
#define MEASCHAIN_CHAIN_H

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <variant>
#include <vector>

#include "measchain/layout.h"
#include "measchain/linalg.h"

namespace measchain {

// Factor labels used by the measurement chain.
inline const std::string kObject = "S";
inline const std::string kDetector = "D";
inline const std::string kObserver = "O";

/// Pointer eigenvalues q1 = +1/2 and q2 = -1/2 (hbar = 1).
inline constexpr double kPointerUp = 0.5;
inline constexpr double kPointerDown = -0.5;

enum class InputKind { pure, gemenge };

std::string to_string(InputKind kind);
InputKind parse_input_kind(const std::string &text);

/// Parameters of one measurement-chain experiment.
struct Scenario {
    Complex a1 = 1.0 / std::sqrt(2.0);
    Complex a2 = 1.0 / std::sqrt(2.0);
    InputKind input_kind = InputKind::pure;
    std::size_t n_env = 0;
    /// Per-element overlap between the two environment branch states.
    double env_overlap = 1.0;
    std::uint64_t seed = 42;
    std::size_t trials = 100000;

    /// Throws ValidationError on non-normalized amplitudes or out-of-range fields.
    void validate() const;
};

/// Stable 64-bit FNV-1a digest of the scenario's canonical text, as 16 hex digits.
std::string scenario_digest(const Scenario &scenario);

/// Pure state on a labeled tensor-product space.
class MSState {
   public:
    MSState(StateVector vector, TensorLayout layout);

    const StateVector &vector() const {
        return vector_;
    }
    const TensorLayout &layout() const {
        return layout_;
    }
    DensityOperator density() const {
        return DensityOperator::pure(vector_);
    }

   private:
    StateVector vector_;
    TensorLayout layout_;
};

struct Branch {
    MSState state;
    double prob;
};

/// Probabilistic mixture kept as explicit (state, probability) branches.
/// Branches with probability below kMinBranchProbability are dropped and the
/// rest renormalized; identical branches are merged. Both leave a note.
class Gemenge {
   public:
    static constexpr double kMinBranchProbability = 1e-12;

    explicit Gemenge(std::vector<Branch> branches);

    const std::vector<Branch> &branches() const {
        return branches_;
    }
    const TensorLayout &layout() const {
        return branches_.front().state.layout();
    }
    const std::vector<std::string> &notes() const {
        return notes_;
    }
    DensityOperator density() const;

   private:
    std::vector<Branch> branches_;
    std::vector<std::string> notes_;
};

/// Two orthonormal pointer states of one subsystem with eigenvalues (+1/2, -1/2).
struct PointerBasis {
    std::string subsystem;
    StateVector up;
    StateVector down;
    double q1 = kPointerUp;
    double q2 = kPointerDown;

    /// Computational basis |X1> = (1,0), |X2> = (0,1).
    static PointerBasis standard(const std::string &subsystem);
    /// Throws ValidationError if the states are not orthonormal within 1e-12.
    void validate() const;
};

/// (|X1> + |X2>)/sqrt(2).
StateVector ready_state();

/// a1|S1> + a2|S2>. Throws ValidationError when not normalized.
StateVector prepare_object_state(Complex a1, Complex a2);

/// {(|S1>, |a1|^2), (|S2>, |a2|^2)}; a zero amplitude yields one branch and a note.
Gemenge prepare_gemenge(Complex a1, Complex a2);

/// Net-effect premeasurement unitary on (control ⊗ apparatus): control basis
/// state i sends the ready state to |X_i>.
ComplexMatrix canonical_premeasurement_unitary();

struct PremeasureOptions {
    /// Skip the ready-state check and apply the unitary to arbitrary input.
    bool allow_unready = false;
};

/// Throws PreconditionError when the apparatus is not in its ready state.
MSState premeasure(const MSState &state, const std::string &control, const std::string &apparatus,
                   PremeasureOptions options = {});

/// Psi_MS = sum_i a_i |S_i D_i O_i> for pure input.
MSState chain_pure(Complex a1, Complex a2);
/// {(Psi_i, |a_i|^2)} for gemenge input.
Gemenge chain_gemenge(Complex a1, Complex a2);
std::variant<MSState, Gemenge> full_chain(const Scenario &scenario);

/// Reduced state on the O factor. Throws UsageError when the layout lacks O.
DensityOperator statistical_restriction(const MSState &state);
DensityOperator statistical_restriction(const DensityOperator &rho, const TensorLayout &layout);

/// Fidelity between a state and the product of its single-factor principal
/// eigenvectors; 1 exactly for product states.
double product_fidelity(const MSState &state);

/// Branchwise restriction of a factorized gemenge onto one factor.
/// Throws PreconditionError for an entangled branch.
Gemenge gemenge_restriction(const Gemenge &w, const std::string &keep = kObserver);

struct DecoherenceResult {
    MSState state;
    double coherence_factor;
    DensityOperator reduced_ms;
};

/// Attaches n_env qubit environment elements. Pointer branch i of `pointer`
/// is tagged with prod_j |E^j_i>, where |E_1> = |0> and
/// |E_2> = eps|0> + sqrt(1-eps^2)|1>.
DecoherenceResult decohere(const MSState &state, std::size_t n_env, double eps,
                           const std::string &pointer = kObserver, std::size_t max_dim = kDefaultMaxDim);

/// Coupling g and duration tau of the measurement-type Hamiltonian
/// H = -2g · S_z(control) ⊗ Y/2(apparatus).
struct HamiltonianSpec {
    double coupling = 1.0;
    double duration = std::numbers::pi / 2.0;

    /// g·tau at which exp(-iH tau) equals the canonical premeasurement unitary.
    static constexpr double kTunedPhase = std::numbers::pi / 2.0;
    static HamiltonianSpec tuned(double duration = 1.0);
    bool is_tuned(double tol = 1e-12) const;
    ComplexMatrix generator() const;
};

struct CrosscheckResult {
    MSState state;
    /// |<canonical|evolved>|^2 against premeasure() applied to the same input.
    double fidelity_with_canonical;
    bool tuned;
    std::string diagnostic;
};

CrosscheckResult hamiltonian_premeasure_crosscheck(const HamiltonianSpec &spec, const MSState &state,
                                                   const std::string &control = kObject,
                                                   const std::string &apparatus = kDetector);

}  // namespace measchain

#endif
