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

#include "measchain/linalg.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "measchain/errors.h"
#include "measchain/spectral.h"

namespace measchain {

namespace {

void require_finite(std::span<const Complex> values) {
    for (const auto &v : values) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw ValidationError("matrix entries must be finite");
        }
    }
}

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw UsageError("matrix shape mismatch: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
}

void check_capacity(std::size_t rows, std::size_t cols, std::size_t max_dim) {
    std::size_t d = std::max(rows, cols);
    if (d > max_dim) {
        throw CapacityError("tensor product dimension " + std::to_string(d) + " exceeds capacity " +
                                std::to_string(max_dim),
                            d, max_dim);
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0) {
        throw ValidationError("matrix dimensions must be positive");
    }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, ComplexVector entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
        throw ValidationError("matrix dimensions must be positive");
    }
    if (entries_.size() != rows * cols) {
        throw ValidationError("entry count " + std::to_string(entries_.size()) + " does not match " +
                              std::to_string(rows) + "x" + std::to_string(cols));
    }
    require_finite(entries_);
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    if (rows_ == 0 || cols_ == 0) {
        throw ValidationError("matrix dimensions must be positive");
    }
    entries_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw ValidationError("ragged matrix literal");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
    require_finite(entries_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        m(i, i) = values[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> ket, std::span<const Complex> bra) {
    ComplexMatrix m(ket.size(), bra.size());
    for (std::size_t i = 0; i < ket.size(); ++i) {
        for (std::size_t j = 0; j < bra.size(); ++j) {
            m(i, j) = ket[i] * std::conj(bra[j]);
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            m(j, i) = std::conj((*this)(i, j));
        }
    }
    return m;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
        t += (*this)(i, i);
    }
    return t;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_shape(*this, other);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] += other.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_shape(*this, other);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] -= other.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (auto &e : entries_) {
        e *= scale;
    }
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols_ != b.rows_) {
        throw UsageError("matrix product shape mismatch");
    }
    ComplexMatrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols_; ++j) {
                m(i, j) += aik * b(k, j);
            }
        }
    }
    return m;
}

ComplexVector operator*(const ComplexMatrix &a, std::span<const Complex> v) {
    if (a.cols_ != v.size()) {
        throw UsageError("matrix-vector shape mismatch");
    }
    ComplexVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        Complex acc = 0;
        for (std::size_t j = 0; j < a.cols_; ++j) {
            acc += a(i, j) * v[j];
        }
        out[i] = acc;
    }
    return out;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b);
    double worst = 0;
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return worst;
}

bool is_hermitian(const ComplexMatrix &m, double tol) {
    if (!m.is_square()) {
        return false;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = i; j < m.cols(); ++j) {
            if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) {
                return false;
            }
        }
    }
    return true;
}

ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b) {
    return a * b - b * a;
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        throw UsageError("inner product dimension mismatch");
    }
    Complex acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

double norm(std::span<const Complex> v) {
    double acc = 0;
    for (const auto &x : v) {
        acc += std::norm(x);
    }
    return std::sqrt(acc);
}

StateVector::StateVector(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty()) {
        throw ValidationError("state dimension must be positive");
    }
    require_finite(amplitudes_);
    double n2 = 0;
    for (const auto &a : amplitudes_) {
        n2 += std::norm(a);
    }
    if (std::abs(n2 - 1.0) > kStateTolerance) {
        std::ostringstream msg;
        msg << "state is not normalized: |psi|^2 = " << std::setprecision(15) << n2;
        throw ValidationError(msg.str());
    }
}

StateVector StateVector::normalized(ComplexVector amplitudes) {
    double n = norm(amplitudes);
    if (!(n > 0) || !std::isfinite(n)) {
        throw ValidationError("cannot normalize a zero or non-finite vector");
    }
    for (auto &a : amplitudes) {
        a /= n;
    }
    return StateVector(std::move(amplitudes));
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw UsageError("basis index out of range");
    }
    ComplexVector v(dim);
    v[index] = 1.0;
    return StateVector(std::move(v));
}

Complex StateVector::inner(const StateVector &other) const {
    return measchain::inner(amplitudes_, other.amplitudes_);
}

double StateVector::fidelity(const StateVector &other) const {
    return std::norm(inner(other));
}

ComplexMatrix StateVector::projector() const {
    return ComplexMatrix::outer(amplitudes_, amplitudes_);
}

DensityOperator::DensityOperator(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
    if (!matrix_.is_square()) {
        throw ValidationError("density operator must be square");
    }
    if (!is_hermitian(matrix_, kStateTolerance)) {
        throw ValidationError("density operator must be Hermitian");
    }
    Complex tr = matrix_.trace();
    if (std::abs(tr - 1.0) > kStateTolerance) {
        std::ostringstream msg;
        msg << "density operator trace is " << std::setprecision(15) << tr.real() << ", expected 1";
        throw ValidationError(msg.str());
    }
    auto spec = eig_hermitian(matrix_);
    if (spec.eigenvalues.back() < -kStateTolerance) {
        throw ValidationError("density operator has a negative eigenvalue");
    }
}

DensityOperator DensityOperator::pure(const StateVector &state) {
    return DensityOperator(state.projector());
}

DensityOperator DensityOperator::mixture(std::span<const StateVector> states, std::span<const double> probs) {
    if (states.empty() || states.size() != probs.size()) {
        throw UsageError("mixture needs one probability per state");
    }
    ComplexMatrix m(states[0].dim(), states[0].dim());
    for (std::size_t k = 0; k < states.size(); ++k) {
        if (states[k].dim() != states[0].dim()) {
            throw UsageError("mixture states have different dimensions");
        }
        if (probs[k] < 0) {
            throw ValidationError("mixture probabilities must be nonnegative");
        }
        m += states[k].projector() * Complex(probs[k]);
    }
    return DensityOperator(std::move(m));
}

double DensityOperator::purity() const {
    double acc = 0;
    for (const auto &e : matrix_.entries()) {
        acc += std::norm(e);
    }
    return acc;
}

ComplexMatrix tensor_product(const ComplexMatrix &a, const ComplexMatrix &b, std::size_t max_dim) {
    check_capacity(a.rows() * b.rows(), a.cols() * b.cols(), max_dim);
    const std::size_t r = b.rows();
    const std::size_t s = b.cols();
    ComplexMatrix m(a.rows() * r, a.cols() * s);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < r; ++k) {
                for (std::size_t l = 0; l < s; ++l) {
                    m(i * r + k, j * s + l) = aij * b(k, l);
                }
            }
        }
    }
    return m;
}

StateVector tensor_product(const StateVector &a, const StateVector &b, std::size_t max_dim) {
    check_capacity(a.dim() * b.dim(), 1, max_dim);
    ComplexVector v(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t k = 0; k < b.dim(); ++k) {
            v[i * b.dim() + k] = a[i] * b[k];
        }
    }
    // The product of unit vectors can drift by a few ulps; renormalizing keeps
    // the invariant for long chains.
    return StateVector::normalized(std::move(v));
}

namespace {

double real_checked(Complex value) {
    if (std::abs(value.imag()) >= 1e-9) {
        throw ValidationError("expectation has non-negligible imaginary part");
    }
    return value.real();
}

void require_observable(const ComplexMatrix &obs, std::size_t dim) {
    if (obs.rows() != dim || obs.cols() != dim) {
        throw UsageError("observable dimension " + std::to_string(obs.rows()) + " does not match state dimension " +
                         std::to_string(dim));
    }
    if (!is_hermitian(obs, kStateTolerance)) {
        throw UsageError("observable must be Hermitian");
    }
}

}  // namespace

double expectation(const DensityOperator &rho, const ComplexMatrix &obs) {
    require_observable(obs, rho.dim());
    const auto &m = rho.matrix();
    Complex acc = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            acc += m(i, j) * obs(j, i);
        }
    }
    return real_checked(acc);
}

double expectation(const StateVector &state, const ComplexMatrix &obs) {
    require_observable(obs, state.dim());
    auto applied = obs * state.amplitudes();
    return real_checked(measchain::inner(state.amplitudes(), applied));
}

ComplexMatrix unitary_evolution(const ComplexMatrix &h, double t) {
    if (!is_hermitian(h, kStateTolerance)) {
        throw ValidationError("generator must be Hermitian");
    }
    auto spec = eig_hermitian(h);
    ComplexMatrix u(h.rows(), h.cols());
    for (std::size_t k = 0; k < spec.dim(); ++k) {
        const Complex phase = std::exp(Complex(0, -spec.eigenvalues[k] * t));
        u += spec.eigenvectors[k].projector() * phase;
    }
    return u;
}

std::string to_string(const ComplexMatrix &m) {
    std::ostringstream out;
    out << std::setprecision(6);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out << (j ? " " : "") << m(i, j);
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace measchain
