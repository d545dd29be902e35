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

#include <optional>
#include <string_view>

#include "qbridge/circuit.h"
#include "qbridge/dialect.h"
#include "qbridge/error.h"

namespace qbridge {

/// Size limits enforced by every frontend.
inline constexpr std::uint32_t kMaxParsedQubits = 1u << 16;
inline constexpr std::uint32_t kMaxParsedClbits = 1u << 16;
inline constexpr std::size_t kMaxExpressionDepth = 256;

/// Parses source text of the given dialect into a valid circuit. Gate
/// macros (OpenQASM `gate`) are kept in Circuit::gate_defs.
///
/// Failures are always ParseError carrying a 1-based line/column inside
/// `source`: Syntax for malformed input, UnsupportedConstruct for features
/// outside the accepted subset, Semantic for undeclared names, range and
/// arity problems.
Circuit parse(SourceDialect dialect, std::string_view source);

Circuit parse_openqasm2(std::string_view source);
Circuit parse_quil2(std::string_view source);
Circuit parse_ionq_json(std::string_view source);
Circuit parse_quantum_circuit_json(std::string_view source);
Circuit parse_quirk_json(std::string_view source);

/// Extension hint first (.qasm, .quil, .json with key sniffing), then
/// content sniffing. Throws Error(UnknownDialect) when no rule applies.
SourceDialect detect_dialect(std::string_view source,
                             std::optional<std::string_view> filename_hint = std::nullopt);

}  // namespace qbridge
