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

#include "measchain/layout.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "measchain/errors.h"

namespace measchain {

TensorLayout::TensorLayout(std::vector<Factor> factors) : factors_(std::move(factors)) {
    std::set<std::string> seen;
    for (const auto &f : factors_) {
        if (f.label.empty()) {
            throw ValidationError("factor label must be nonempty");
        }
        if (f.dim == 0) {
            throw ValidationError("factor '" + f.label + "' has zero dimension");
        }
        if (!seen.insert(f.label).second) {
            throw ValidationError("duplicate factor label '" + f.label + "'");
        }
    }
}

std::size_t TensorLayout::total_dim() const {
    std::size_t d = 1;
    for (const auto &f : factors_) {
        d *= f.dim;
    }
    return d;
}

bool TensorLayout::contains(const std::string &label) const {
    return std::any_of(factors_.begin(), factors_.end(), [&](const Factor &f) { return f.label == label; });
}

std::size_t TensorLayout::position(const std::string &label) const {
    for (std::size_t k = 0; k < factors_.size(); ++k) {
        if (factors_[k].label == label) {
            return k;
        }
    }
    throw UsageError("unknown factor label '" + label + "' in layout " + describe());
}

std::size_t TensorLayout::dim_of(const std::string &label) const {
    return factors_[position(label)].dim;
}

std::vector<std::size_t> TensorLayout::strides() const {
    std::vector<std::size_t> s(factors_.size());
    std::size_t acc = 1;
    for (std::size_t k = factors_.size(); k-- > 0;) {
        s[k] = acc;
        acc *= factors_[k].dim;
    }
    return s;
}

TensorLayout TensorLayout::restricted_to(std::span<const std::string> keep) const {
    if (keep.empty()) {
        throw UsageError("keep set must be nonempty");
    }
    for (const auto &label : keep) {
        (void)position(label);
    }
    std::vector<Factor> kept;
    for (const auto &f : factors_) {
        if (std::find(keep.begin(), keep.end(), f.label) != keep.end()) {
            kept.push_back(f);
        }
    }
    return TensorLayout(std::move(kept));
}

TensorLayout TensorLayout::appended(const Factor &factor) const {
    auto f = factors_;
    f.push_back(factor);
    return TensorLayout(std::move(f));
}

std::string TensorLayout::describe() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t k = 0; k < factors_.size(); ++k) {
        out << (k ? " x " : "") << factors_[k].label << ":" << factors_[k].dim;
    }
    out << "]";
    return out.str();
}

namespace {

// Splits every flat index into (kept index, traced index) for a layout.
struct IndexSplit {
    std::vector<std::size_t> kept_of;
    std::vector<std::size_t> traced_of;
    std::size_t kept_dim = 1;
    std::size_t traced_dim = 1;
};

IndexSplit split_indices(const TensorLayout &layout, std::span<const std::string> keep) {
    const auto kept_layout = layout.restricted_to(keep);
    IndexSplit split;
    const auto factors = layout.factors();
    std::vector<bool> is_kept(factors.size());
    for (std::size_t k = 0; k < factors.size(); ++k) {
        is_kept[k] = kept_layout.contains(factors[k].label);
        (is_kept[k] ? split.kept_dim : split.traced_dim) *= factors[k].dim;
    }
    const std::size_t total = layout.total_dim();
    split.kept_of.resize(total);
    split.traced_of.resize(total);
    const auto strides = layout.strides();
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t kept = 0;
        std::size_t traced = 0;
        for (std::size_t k = 0; k < factors.size(); ++k) {
            std::size_t digit = (flat / strides[k]) % factors[k].dim;
            if (is_kept[k]) {
                kept = kept * factors[k].dim + digit;
            } else {
                traced = traced * factors[k].dim + digit;
            }
        }
        split.kept_of[flat] = kept;
        split.traced_of[flat] = traced;
    }
    return split;
}

void require_layout_dim(std::size_t dim, const TensorLayout &layout) {
    if (dim != layout.total_dim()) {
        throw UsageError("dimension " + std::to_string(dim) + " does not match layout " + layout.describe());
    }
}

// Removes rounding asymmetry so the result satisfies the density invariants.
ComplexMatrix hermitize(ComplexMatrix m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        m(i, i) = m(i, i).real();
        for (std::size_t j = i + 1; j < m.cols(); ++j) {
            Complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
            m(i, j) = avg;
            m(j, i) = std::conj(avg);
        }
    }
    return m;
}

}  // namespace

DensityOperator partial_trace(const DensityOperator &rho, const TensorLayout &layout,
                              std::span<const std::string> keep) {
    require_layout_dim(rho.dim(), layout);
    const auto split = split_indices(layout, keep);
    const auto &m = rho.matrix();
    ComplexMatrix out(split.kept_dim, split.kept_dim);
    const std::size_t total = layout.total_dim();
    for (std::size_t i = 0; i < total; ++i) {
        for (std::size_t j = 0; j < total; ++j) {
            if (split.traced_of[i] == split.traced_of[j]) {
                out(split.kept_of[i], split.kept_of[j]) += m(i, j);
            }
        }
    }
    return DensityOperator(hermitize(std::move(out)));
}

DensityOperator reduced_density(const StateVector &state, const TensorLayout &layout,
                                std::span<const std::string> keep) {
    require_layout_dim(state.dim(), layout);
    const auto split = split_indices(layout, keep);
    // Reshape to a kept x traced coefficient matrix C; the reduced state is C·C†.
    std::vector<Complex> coeff(split.kept_dim * split.traced_dim);
    for (std::size_t flat = 0; flat < state.dim(); ++flat) {
        coeff[split.kept_of[flat] * split.traced_dim + split.traced_of[flat]] = state[flat];
    }
    ComplexMatrix out(split.kept_dim, split.kept_dim);
    for (std::size_t a = 0; a < split.kept_dim; ++a) {
        for (std::size_t b = a; b < split.kept_dim; ++b) {
            Complex acc = 0;
            for (std::size_t t = 0; t < split.traced_dim; ++t) {
                acc += coeff[a * split.traced_dim + t] * std::conj(coeff[b * split.traced_dim + t]);
            }
            out(a, b) = acc;
            out(b, a) = std::conj(acc);
        }
    }
    return DensityOperator(hermitize(std::move(out)));
}

ComplexVector apply_on_factors(std::span<const Complex> vec, const TensorLayout &layout,
                               std::span<const std::string> targets, const ComplexMatrix &op) {
    require_layout_dim(vec.size(), layout);
    if (targets.empty()) {
        throw UsageError("apply_on_factors needs at least one target factor");
    }
    std::vector<std::size_t> positions;
    std::size_t target_dim = 1;
    for (const auto &label : targets) {
        auto p = layout.position(label);
        if (std::find(positions.begin(), positions.end(), p) != positions.end()) {
            throw UsageError("target factor '" + label + "' listed twice");
        }
        positions.push_back(p);
        target_dim *= layout.factors()[p].dim;
    }
    if (op.rows() != target_dim || op.cols() != target_dim) {
        throw UsageError("operator dimension does not match target factors");
    }
    const auto strides = layout.strides();
    const auto factors = layout.factors();
    const std::size_t total = vec.size();

    // Offset within the flat index contributed by a local (target-ordered) index.
    std::vector<std::size_t> local_offset(target_dim);
    for (std::size_t local = 0; local < target_dim; ++local) {
        std::size_t rem = local;
        std::size_t offset = 0;
        for (std::size_t k = positions.size(); k-- > 0;) {
            std::size_t d = factors[positions[k]].dim;
            offset += (rem % d) * strides[positions[k]];
            rem /= d;
        }
        local_offset[local] = offset;
    }

    ComplexVector out(total);
    std::vector<Complex> local_in(target_dim);
    for (std::size_t flat = 0; flat < total; ++flat) {
        bool is_base = true;
        for (auto p : positions) {
            if ((flat / strides[p]) % factors[p].dim != 0) {
                is_base = false;
                break;
            }
        }
        if (!is_base) {
            continue;
        }
        for (std::size_t l = 0; l < target_dim; ++l) {
            local_in[l] = vec[flat + local_offset[l]];
        }
        for (std::size_t r = 0; r < target_dim; ++r) {
            Complex acc = 0;
            for (std::size_t c = 0; c < target_dim; ++c) {
                acc += op(r, c) * local_in[c];
            }
            out[flat + local_offset[r]] = acc;
        }
    }
    return out;
}

}  // namespace measchain
