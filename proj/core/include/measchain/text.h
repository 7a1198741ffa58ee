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

#ifndef MEASCHAIN_TEXT_H
#define MEASCHAIN_TEXT_H

#include <cstdint>
#include <string>
#include <string_view>

namespace measchain {

/// Locale-independent shortest form of `value` rounded to `significant`
/// digits ("%.{significant}g" semantics, '.' decimal point).
std::string format_real(double value, int significant = 12);

/// Value of format_real(value, significant) read back as a double.
double round_significant(double value, int significant = 12);

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace measchain

#endif
