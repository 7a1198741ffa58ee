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

#ifndef MEASCHAIN_LAYOUT_H
#define MEASCHAIN_LAYOUT_H

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "measchain/linalg.h"

namespace measchain {

struct Factor {
    std::string label;
    std::size_t dim;
    bool operator==(const Factor &) const = default;
};

/// Ordered tensor factorization of a composite space. The first factor is the
/// most significant index (matching tensor_product's convention).
class TensorLayout {
   public:
    TensorLayout() = default;
    /// Throws ValidationError on duplicate/empty labels or zero dims.
    explicit TensorLayout(std::vector<Factor> factors);

    std::span<const Factor> factors() const {
        return factors_;
    }
    std::size_t size() const {
        return factors_.size();
    }
    std::size_t total_dim() const;
    bool contains(const std::string &label) const;
    /// Position of the label. Throws UsageError if absent.
    std::size_t position(const std::string &label) const;
    std::size_t dim_of(const std::string &label) const;
    /// Stride of each factor within a flat index.
    std::vector<std::size_t> strides() const;

    /// Sub-layout with the kept labels, in this layout's order.
    TensorLayout restricted_to(std::span<const std::string> keep) const;
    TensorLayout appended(const Factor &factor) const;

    std::string describe() const;

    bool operator==(const TensorLayout &) const = default;

   private:
    std::vector<Factor> factors_;
};

/// Reduced operator on the kept factors, ordered as they appear in the layout.
DensityOperator partial_trace(const DensityOperator &rho, const TensorLayout &layout, std::span<const std::string> keep);
/// Same as partial_trace(pure(state)) without forming the full projector.
DensityOperator reduced_density(const StateVector &state, const TensorLayout &layout, std::span<const std::string> keep);

/// Applies `op` (acting on the listed factors, in the listed order) to the
/// vector; other factors see the identity.
ComplexVector apply_on_factors(std::span<const Complex> vec, const TensorLayout &layout,
                               std::span<const std::string> targets, const ComplexMatrix &op);

}  // namespace measchain

#endif
