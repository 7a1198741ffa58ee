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

#include "measchain/text.h"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace measchain {

std::string format_real(double value, int significant) {
    if (!std::isfinite(value)) {
        throw std::invalid_argument("cannot format a non-finite real");
    }
    if (value == 0) {
        return "0";
    }
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, significant);
    if (ec != std::errc{}) {
        throw std::runtime_error("to_chars failed");
    }
    return std::string(buf.data(), end);
}

double round_significant(double value, int significant) {
    auto text = format_real(value, significant);
    double out = 0;
    std::from_chars(text.data(), text.data() + text.size(), out);
    return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace measchain
