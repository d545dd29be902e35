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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qbridge/circuit.h"

namespace qbridge {

enum class DiagnosticCode {
    QubitOutOfRange,
    DuplicateOperand,
    UnknownGate,
    ArityMismatch,
    ParamCountMismatch,
    NonFiniteParam,
    UnknownCreg,
    ClbitOutOfRange,
    QubitCountMismatch,
    DuplicateRegister,
    InvalidGateDef,
    MacroCycle,
};

std::string_view diagnostic_code_name(DiagnosticCode code);

struct Diagnostic {
    DiagnosticCode code;
    std::string message;
    /// Index into Circuit::ops; empty for register or macro problems.
    std::optional<std::size_t> op_index;
};

/// Checks every circuit invariant. Never throws; an empty result means the
/// circuit is valid.
std::vector<Diagnostic> validate(const Circuit &circuit);

/// Throws Error(InvalidCircuit) carrying the first diagnostic.
void require_valid(const Circuit &circuit);

inline constexpr std::size_t kMacroRecursionLimit = 256;
inline constexpr std::size_t kMaxExpandedOps = std::size_t{1} << 22;

/// Inlines every user gate macro. The result references only standard-table
/// gates and has no gate_defs.
Circuit expand_macros(const Circuit &circuit);

/// Greedy left-packed columns of op indices. Barriers occupy their qubits;
/// measurements and conditionals also occupy the classical bits they touch.
std::vector<std::vector<std::size_t>> moments(const Circuit &circuit);

}  // namespace qbridge
