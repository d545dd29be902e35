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

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qbridge/expr.h"

namespace qbridge {

using Qubit = std::uint32_t;

struct GateOp {
    std::string name;
    std::vector<double> params;  // radians
    std::vector<Qubit> qubits;

    bool operator==(const GateOp &) const = default;
};

struct MeasureOp {
    Qubit qubit = 0;
    std::string creg;
    std::uint32_t bit = 0;

    bool operator==(const MeasureOp &) const = default;
};

struct ResetOp {
    Qubit qubit = 0;

    bool operator==(const ResetOp &) const = default;
};

struct BarrierOp {
    std::vector<Qubit> qubits;

    bool operator==(const BarrierOp &) const = default;
};

/// `if (creg == value) gate;` -- the whole register is read as an unsigned
/// integer with bit 0 least significant.
struct ConditionalOp {
    std::string creg;
    std::uint64_t value = 0;
    GateOp gate;

    bool operator==(const ConditionalOp &) const = default;
};

using Op = std::variant<GateOp, MeasureOp, ResetOp, BarrierOp, ConditionalOp>;

/// Qubits an op acts on, in operand order.
std::vector<Qubit> op_qubits(const Op &op);

struct Register {
    std::string name;
    std::uint32_t size = 0;

    bool operator==(const Register &) const = default;
};

/// One statement of a gate macro body. Qubit operands and parameter
/// expressions refer to the macro's formal arguments by position.
struct MacroOp {
    bool barrier = false;
    std::string name;
    std::vector<Expr> params;
    std::vector<std::size_t> qubits;

    bool operator==(const MacroOp &) const = default;
};

/// User-defined gate macro (OpenQASM `gate` definition).
struct GateDef {
    std::string name;
    std::vector<std::string> param_names;
    std::vector<std::string> qubit_names;
    std::vector<MacroOp> body;

    std::size_t num_params() const {
        return param_names.size();
    }
    std::size_t num_qubits() const {
        return qubit_names.size();
    }
};

/// Dialect-neutral circuit. Multiple quantum registers are flattened into
/// global qubit indices in declaration order.
struct Circuit {
    std::string name;
    std::uint32_t num_qubits = 0;
    std::vector<Register> qregs;
    std::vector<Register> cregs;
    std::vector<Op> ops;
    /// Definition order is preserved; a macro may only reference gates
    /// defined before it.
    std::vector<GateDef> gate_defs;

    /// A circuit with a single quantum register `q` of n qubits.
    static Circuit with_qubits(std::uint32_t n, std::string name = "");

    const GateDef *find_gate_def(std::string_view gate_name) const;
    const Register *find_creg(std::string_view creg_name) const;
    /// Offset of a creg's bit 0 within the concatenation of all cregs.
    std::optional<std::uint32_t> creg_offset(std::string_view creg_name) const;
    std::uint32_t num_clbits() const;

    bool has_conditionals() const;
    bool has_measurements() const;
};

/// Equality up to register naming: qubit indices, total classical width,
/// ops (with classical bits compared by global index), and macro structure.
/// Circuit names and formal argument names are ignored.
bool structurally_equal(const Circuit &a, const Circuit &b);

}  // namespace qbridge
