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

#include "qbridge/circuit.h"

#include <type_traits>

namespace qbridge {

std::vector<Qubit> op_qubits(const Op &op) {
    return std::visit(
        [](const auto &o) -> std::vector<Qubit> {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, GateOp> || std::is_same_v<T, BarrierOp>) {
                return o.qubits;
            } else if constexpr (std::is_same_v<T, ConditionalOp>) {
                return o.gate.qubits;
            } else {
                return {o.qubit};
            }
        },
        op);
}

Circuit Circuit::with_qubits(std::uint32_t n, std::string name) {
    Circuit c;
    c.name = std::move(name);
    c.num_qubits = n;
    if (n > 0) {
        c.qregs.push_back(Register{"q", n});
    }
    return c;
}

const GateDef *Circuit::find_gate_def(std::string_view gate_name) const {
    for (const auto &def : gate_defs) {
        if (def.name == gate_name) {
            return &def;
        }
    }
    return nullptr;
}

const Register *Circuit::find_creg(std::string_view creg_name) const {
    for (const auto &reg : cregs) {
        if (reg.name == creg_name) {
            return &reg;
        }
    }
    return nullptr;
}

std::optional<std::uint32_t> Circuit::creg_offset(std::string_view creg_name) const {
    std::uint32_t offset = 0;
    for (const auto &reg : cregs) {
        if (reg.name == creg_name) {
            return offset;
        }
        offset += reg.size;
    }
    return std::nullopt;
}

std::uint32_t Circuit::num_clbits() const {
    std::uint32_t total = 0;
    for (const auto &reg : cregs) {
        total += reg.size;
    }
    return total;
}

bool Circuit::has_conditionals() const {
    for (const auto &op : ops) {
        if (std::holds_alternative<ConditionalOp>(op)) {
            return true;
        }
    }
    return false;
}

bool Circuit::has_measurements() const {
    for (const auto &op : ops) {
        if (std::holds_alternative<MeasureOp>(op)) {
            return true;
        }
    }
    return false;
}

namespace {

bool ops_equal(const Circuit &a, const Op &x, const Circuit &b, const Op &y) {
    if (x.index() != y.index()) {
        return false;
    }
    if (const auto *mx = std::get_if<MeasureOp>(&x)) {
        const auto &my = std::get<MeasureOp>(y);
        auto ox = a.creg_offset(mx->creg);
        auto oy = b.creg_offset(my.creg);
        return mx->qubit == my.qubit && ox && oy && *ox + mx->bit == *oy + my.bit;
    }
    if (const auto *cx = std::get_if<ConditionalOp>(&x)) {
        const auto &cy = std::get<ConditionalOp>(y);
        auto ox = a.creg_offset(cx->creg);
        auto oy = b.creg_offset(cy.creg);
        const Register *rx = a.find_creg(cx->creg);
        const Register *ry = b.find_creg(cy.creg);
        return ox && oy && rx && ry && *ox == *oy && rx->size == ry->size &&
               cx->value == cy.value && cx->gate == cy.gate;
    }
    return x == y;
}

bool gate_defs_equal(const GateDef &a, const GateDef &b) {
    return a.name == b.name && a.num_params() == b.num_params() &&
           a.num_qubits() == b.num_qubits() && a.body == b.body;
}

}  // namespace

bool structurally_equal(const Circuit &a, const Circuit &b) {
    if (a.num_qubits != b.num_qubits || a.num_clbits() != b.num_clbits() ||
        a.ops.size() != b.ops.size() || a.gate_defs.size() != b.gate_defs.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.gate_defs.size(); ++i) {
        if (!gate_defs_equal(a.gate_defs[i], b.gate_defs[i])) {
            return false;
        }
    }
    for (std::size_t i = 0; i < a.ops.size(); ++i) {
        if (!ops_equal(a, a.ops[i], b, b.ops[i])) {
            return false;
        }
    }
    return true;
}

}  // namespace qbridge
