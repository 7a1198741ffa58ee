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

#ifndef MEASCHAIN_ERRORS_H
#define MEASCHAIN_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace measchain {

/// Input violates a value invariant (normalization, hermiticity, ranges).
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Caller misuse: unknown labels, dimension mismatches, wrong factor sizes.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A composite space would exceed the configured maximum dimension.
struct CapacityError : std::length_error {
    CapacityError(const std::string &what, std::size_t requested, std::size_t limit)
        : std::length_error(what), requested_dim(requested), max_dim(limit) {
    }
    std::size_t requested_dim;
    std::size_t max_dim;
};

/// No eigenvalue group matches a requested value.
struct LookupError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// An operation's model precondition does not hold (e.g. apparatus not ready).
struct PreconditionError : std::logic_error {
    using std::logic_error::logic_error;
};

/// A state is not of the pointer triple-product form an operation requires.
struct DecompositionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace measchain

#endif
