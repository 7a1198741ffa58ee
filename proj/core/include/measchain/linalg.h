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

#ifndef MEASCHAIN_LINALG_H
#define MEASCHAIN_LINALG_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace measchain {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Largest composite dimension any operation will build unless told otherwise.
inline constexpr std::size_t kDefaultMaxDim = 4096;

/// Tolerance used when checking state normalization and density invariants.
inline constexpr double kStateTolerance = 1e-10;

/// Dense row-major complex matrix. Entries are always finite.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, ComplexVector entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);
    static ComplexMatrix outer(std::span<const Complex> ket, std::span<const Complex> bra);

    std::size_t rows() const {
        return rows_;
    }
    std::size_t cols() const {
        return cols_;
    }
    bool is_square() const {
        return rows_ == cols_;
    }
    std::span<const Complex> entries() const {
        return entries_;
    }

    Complex &operator()(std::size_t r, std::size_t c) {
        return entries_[r * cols_ + c];
    }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }

    ComplexMatrix adjoint() const;
    Complex trace() const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
        return a += b;
    }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
        return a -= b;
    }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) {
        return a *= s;
    }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) {
        return a *= s;
    }
    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
    friend ComplexVector operator*(const ComplexMatrix &a, std::span<const Complex> v);

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    ComplexVector entries_;
};

/// Largest entrywise |a - b|. Shapes must agree.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
bool is_hermitian(const ComplexMatrix &m, double tol = kStateTolerance);
ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b);

/// ⟨a|b⟩ (conjugate-linear in the first argument).
Complex inner(std::span<const Complex> a, std::span<const Complex> b);
double norm(std::span<const Complex> v);

/// Unit-norm vector of amplitudes.
class StateVector {
   public:
    /// Throws ValidationError unless the squared norm is 1 within kStateTolerance.
    explicit StateVector(ComplexVector amplitudes);
    static StateVector normalized(ComplexVector amplitudes);
    static StateVector basis(std::size_t dim, std::size_t index);

    std::size_t dim() const {
        return amplitudes_.size();
    }
    std::span<const Complex> amplitudes() const {
        return amplitudes_;
    }
    const Complex &operator[](std::size_t i) const {
        return amplitudes_[i];
    }

    Complex inner(const StateVector &other) const;
    /// |⟨this|other⟩|².
    double fidelity(const StateVector &other) const;
    ComplexMatrix projector() const;

    bool operator==(const StateVector &other) const = default;

   private:
    ComplexVector amplitudes_;
};

/// Positive, Hermitian, unit-trace operator.
class DensityOperator {
   public:
    /// Throws ValidationError when any invariant fails.
    explicit DensityOperator(ComplexMatrix matrix);
    static DensityOperator pure(const StateVector &state);
    static DensityOperator mixture(std::span<const StateVector> states, std::span<const double> probs);

    std::size_t dim() const {
        return matrix_.rows();
    }
    const ComplexMatrix &matrix() const {
        return matrix_;
    }
    /// Tr ρ².
    double purity() const;

   private:
    ComplexMatrix matrix_;
};

/// Kronecker product: (A⊗B)[i·r+k, j·s+l] = A[i,j]·B[k,l] where B is r×s.
ComplexMatrix tensor_product(const ComplexMatrix &a, const ComplexMatrix &b, std::size_t max_dim = kDefaultMaxDim);
StateVector tensor_product(const StateVector &a, const StateVector &b, std::size_t max_dim = kDefaultMaxDim);

/// Tr(ρ·obs). Throws UsageError on dimension mismatch or non-Hermitian obs.
double expectation(const DensityOperator &rho, const ComplexMatrix &obs);
double expectation(const StateVector &state, const ComplexMatrix &obs);

/// exp(−i·h·t) built from the spectral decomposition of h.
ComplexMatrix unitary_evolution(const ComplexMatrix &h, double t);

std::string to_string(const ComplexMatrix &m);

}  // namespace measchain

#endif
