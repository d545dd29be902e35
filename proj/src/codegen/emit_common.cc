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

#include "codegen/emit_common.h"

#include <algorithm>
#include <set>

namespace qbridge::detail {

void unsupported(TargetDialect target, const std::string &what) {
    throw Error(ErrorKind::UnsupportedForTarget, what + " cannot be expressed in " + std::string(dialect_name(target)));
}

void require_native(const Circuit &circuit, TargetDialect target) {
    if (!circuit.gate_defs.empty() && target != TargetDialect::OpenQasm2) {
        unsupported(target, "gate macro '" + circuit.gate_defs.front().name + "'");
    }
    auto check = [&](const GateOp &g) {
        if (!is_native(g.name, target) && circuit.find_gate_def(g.name) == nullptr) {
            unsupported(target, "gate '" + g.name + "'");
        }
    };
    for (const auto &op : circuit.ops) {
        if (const auto *g = std::get_if<GateOp>(&op)) {
            check(*g);
        } else if (const auto *c = std::get_if<ConditionalOp>(&op)) {
            check(c->gate);
        }
    }
}

std::uint32_t clbit_of(const Circuit &circuit, const MeasureOp &m) {
    return circuit.creg_offset(m.creg).value_or(0) + m.bit;
}

bool measures_are_terminal(const Circuit &circuit) {
    std::vector<bool> measured(circuit.num_qubits, false);
    for (const auto &op : circuit.ops) {
        if (std::holds_alternative<ConditionalOp>(op)) {
            return false;
        }
        if (std::holds_alternative<BarrierOp>(op)) {
            continue;
        }
        for (Qubit q : op_qubits(op)) {
            if (measured[q]) {
                return false;
            }
        }
        if (const auto *m = std::get_if<MeasureOp>(&op)) {
            measured[m->qubit] = true;
        }
    }
    return true;
}

bool measures_read_out_all_in_order(const Circuit &circuit) {
    if (circuit.num_clbits() != circuit.num_qubits || !measures_are_terminal(circuit)) {
        return false;
    }
    std::vector<bool> seen(circuit.num_qubits, false);
    for (const auto &op : circuit.ops) {
        if (const auto *m = std::get_if<MeasureOp>(&op)) {
            if (clbit_of(circuit, *m) != m->qubit) {
                return false;
            }
            seen[m->qubit] = true;
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::string ClassicalLayout::creg_name(const Circuit &circuit, std::string_view original) const {
    if (flattened) {
        return "c";
    }
    for (std::size_t i = 0; i < circuit.cregs.size(); ++i) {
        if (circuit.cregs[i].name == original) {
            return names[i];
        }
    }
    return std::string(original);
}

ClassicalLayout classical_layout(const Circuit &circuit, bool (*usable)(std::string_view),
                                 const std::vector<std::string> &reserved) {
    ClassicalLayout layout;
    layout.flattened = !circuit.has_conditionals();
    if (layout.flattened) {
        return layout;
    }
    std::set<std::string> taken(reserved.begin(), reserved.end());
    for (const auto &reg : circuit.cregs) {
        if (usable(reg.name) && !taken.contains(reg.name)) {
            taken.insert(reg.name);
        }
    }
    for (std::size_t i = 0; i < circuit.cregs.size(); ++i) {
        const std::string &name = circuit.cregs[i].name;
        bool keep = usable(name) && std::find(reserved.begin(), reserved.end(), name) == reserved.end();
        if (keep) {
            layout.names.push_back(name);
            continue;
        }
        std::string candidate = "c" + std::to_string(i);
        while (taken.contains(candidate)) {
            candidate += "_";
        }
        taken.insert(candidate);
        layout.names.push_back(candidate);
    }
    return layout;
}

}  // namespace qbridge::detail
