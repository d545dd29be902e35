// Copyright 2026 The qbridge Authors
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

#include "number_format.h"

#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace qbridge::detail {

std::string format_real(double value) {
    if (!std::isfinite(value)) {
        throw std::invalid_argument("cannot format non-finite value");
    }
    if (value == 0) {
        return "0";
    }
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    std::string text(buf.data(), ptr);
    auto e = text.find('e');
    if (e != std::string::npos && text.find('.') == std::string::npos) {
        text.insert(e, ".0");
    }
    return text;
}

std::string format_angle(double value, std::string_view pi_token) {
    constexpr double pi = std::numbers::pi;
    if (value == 0) {
        return "0";
    }
    const bool negative = value < 0;
    const double magnitude = std::fabs(value);
    const std::string sign = negative ? "-" : "";
    const std::string p(pi_token);
    for (int den : {1, 2, 3, 4, 6, 8, 16, 32, 64}) {
        for (int num = 1; num <= 16; ++num) {
            if (std::gcd(num, den) != 1) {
                continue;
            }
            // Mirror how a left-to-right parser evaluates "n*pi/d".
            double candidate = num == 1 ? pi : num * pi;
            if (den != 1) {
                candidate = candidate / den;
            }
            if (candidate != magnitude) {
                continue;
            }
            std::string text = sign;
            if (num != 1) {
                text += std::to_string(num) + "*";
            }
            text += p;
            if (den != 1) {
                text += "/" + std::to_string(den);
            }
            return text;
        }
    }
    return format_real(value);
}

}  // namespace qbridge::detail
