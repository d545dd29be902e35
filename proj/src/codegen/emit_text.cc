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

#include <set>
#include <sstream>

#include "codegen/emit_common.h"
#include "codegen/emitters.h"
#include "common/dialect_tables.h"
#include "number_format.h"

namespace qbridge::detail {

namespace {

bool qasm_identifier(std::string_view name) {
    static const std::set<std::string_view> reserved = {
        "OPENQASM", "include", "qreg", "creg", "gate", "opaque", "measure", "reset", "barrier", "if", "U", "CX", "pi",
        "sin", "cos", "tan", "exp", "ln", "sqrt",
    };
    if (name.empty() || !(name[0] >= 'a' && name[0] <= 'z')) {
        return false;
    }
    for (char c : name) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
        if (!ok) {
            return false;
        }
    }
    return !reserved.contains(name);
}

std::string qasm_params(const std::vector<double> &params) {
    if (params.empty()) {
        return "";
    }
    std::string out = "(";
    for (std::size_t i = 0; i < params.size(); ++i) {
        out += (i ? "," : "") + format_angle(params[i]);
    }
    return out + ")";
}

std::string qasm_gate(const GateOp &g) {
    std::string out = g.name + qasm_params(g.params) + " ";
    for (std::size_t i = 0; i < g.qubits.size(); ++i) {
        out += (i ? "," : "") + std::string("q[") + std::to_string(g.qubits[i]) + "]";
    }
    return out + ";";
}

void emit_gate_def(const GateDef &def, std::ostringstream &out) {
    out << "gate " << def.name;
    if (!def.param_names.empty()) {
        out << "(";
        for (std::size_t i = 0; i < def.param_names.size(); ++i) {
            out << (i ? "," : "") << def.param_names[i];
        }
        out << ")";
    }
    out << " ";
    for (std::size_t i = 0; i < def.qubit_names.size(); ++i) {
        out << (i ? "," : "") << def.qubit_names[i];
    }
    out << " {\n";
    for (const auto &m : def.body) {
        out << "  " << (m.barrier ? "barrier" : m.name);
        if (!m.params.empty()) {
            out << "(";
            for (std::size_t i = 0; i < m.params.size(); ++i) {
                out << (i ? "," : "") << m.params[i].to_string(def.param_names);
            }
            out << ")";
        }
        out << " ";
        for (std::size_t i = 0; i < m.qubits.size(); ++i) {
            out << (i ? "," : "") << def.qubit_names[m.qubits[i]];
        }
        out << ";\n";
    }
    out << "}\n";
}

}  // namespace

std::string emit_openqasm2(const Circuit &circuit) {
    require_native(circuit, TargetDialect::OpenQasm2);
    std::ostringstream out;
    out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
    for (const auto &def : circuit.gate_defs) {
        emit_gate_def(def, out);
    }
    if (circuit.num_qubits > 0) {
        out << "qreg q[" << circuit.num_qubits << "];\n";
    }
    ClassicalLayout layout = classical_layout(circuit, qasm_identifier, {"q"});
    if (layout.flattened) {
        if (circuit.num_clbits() > 0) {
            out << "creg c[" << circuit.num_clbits() << "];\n";
        }
    } else {
        for (std::size_t i = 0; i < circuit.cregs.size(); ++i) {
            out << "creg " << layout.names[i] << "[" << circuit.cregs[i].size << "];\n";
        }
    }
    for (const auto &op : circuit.ops) {
        std::visit(
            [&](const auto &o) {
                using T = std::decay_t<decltype(o)>;
                if constexpr (std::is_same_v<T, GateOp>) {
                    out << qasm_gate(o) << "\n";
                } else if constexpr (std::is_same_v<T, MeasureOp>) {
                    std::uint32_t bit = layout.flattened ? clbit_of(circuit, o) : o.bit;
                    out << "measure q[" << o.qubit << "] -> " << layout.creg_name(circuit, o.creg) << "[" << bit
                        << "];\n";
                } else if constexpr (std::is_same_v<T, ResetOp>) {
                    out << "reset q[" << o.qubit << "];\n";
                } else if constexpr (std::is_same_v<T, BarrierOp>) {
                    out << "barrier ";
                    for (std::size_t i = 0; i < o.qubits.size(); ++i) {
                        out << (i ? "," : "") << "q[" << o.qubits[i] << "]";
                    }
                    out << ";\n";
                } else {
                    out << "if(" << layout.creg_name(circuit, o.creg) << "==" << o.value << ") "
                        << qasm_gate(o.gate) << "\n";
                }
            },
            op);
    }
    return out.str();
}

std::string emit_quil2(const Circuit &circuit) {
    constexpr TargetDialect target = TargetDialect::Quil2;
    require_native(circuit, target);
    if (circuit.has_conditionals()) {
        unsupported(target, "a classically conditioned gate");
    }
    std::ostringstream out;
    if (circuit.num_clbits() > 0) {
        out << "DECLARE c BIT[" << circuit.num_clbits() << "]\n";
    }
    // Quil infers the qubit count from the largest index in use.
    Qubit highest_used = 0;
    bool any_used = false;
    for (const auto &op : circuit.ops) {
        if (std::holds_alternative<BarrierOp>(op)) {
            continue;
        }
        for (Qubit q : op_qubits(op)) {
            highest_used = any_used ? std::max(highest_used, q) : q;
            any_used = true;
        }
    }
    if (circuit.num_qubits > 0 && (!any_used || highest_used + 1 < circuit.num_qubits)) {
        out << "I " << circuit.num_qubits - 1 << "\n";
    }
    for (const auto &op : circuit.ops) {
        if (const auto *g = std::get_if<GateOp>(&op)) {
            const auto *name = find_quil_gate_for_ir(g->name);
            out << name->quil;
            if (!g->params.empty()) {
                out << "(";
                for (std::size_t i = 0; i < g->params.size(); ++i) {
                    out << (i ? ", " : "") << format_angle(g->params[i]);
                }
                out << ")";
            }
            for (Qubit q : g->qubits) {
                out << " " << q;
            }
            out << "\n";
        } else if (const auto *m = std::get_if<MeasureOp>(&op)) {
            out << "MEASURE " << m->qubit << " c[" << clbit_of(circuit, *m) << "]\n";
        } else if (const auto *r = std::get_if<ResetOp>(&op)) {
            out << "RESET " << r->qubit << "\n";
        }
    }
    return out.str();
}

}  // namespace qbridge::detail
