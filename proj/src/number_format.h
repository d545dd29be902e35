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

#pragma once

#include <string>
#include <string_view>

namespace qbridge::detail {

/// Shortest decimal that parses back to exactly `value`, always containing
/// a '.' before any exponent ("1.0e-05", "0.25", "3").
std::string format_real(double value);

/// Like format_real, but prefers exact multiples of pi such as "pi/2" or
/// "-3*pi/4" when evaluating that text left to right yields `value`
/// bit-for-bit.
std::string format_angle(double value, std::string_view pi_token = "pi");

}  // namespace qbridge::detail
