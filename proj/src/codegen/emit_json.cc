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
#include "codegen/emitters.h"
#include "common/dialect_tables.h"
#include "json.hpp"
#include "qbridge/passes.h"

namespace qbridge::detail {

namespace {

using nlohmann::json;

/// Minified with sorted keys (nlohmann::json keeps object keys ordered).
std::string dump(const json &doc) {
    return doc.dump() + "\n";
}

json ionq_gate(const GateOp &g) {
    const auto &q = g.qubits;
    json out;
    auto single = [&](std::string name) {
        out["gate"] = std::move(name);
        out["target"] = q.back();
    };
    const std::string &n = g.name;
    if (n == "sdg") {
        single("si");
    } else if (n == "tdg") {
        single("ti");
    } else if (n == "sx") {
        single("v");
    } else if (n == "x" || n == "y" || n == "z" || n == "h" || n == "s" || n == "t") {
        single(n);
    } else if (n == "rx" || n == "ry" || n == "rz") {
        single(n);
        out["rotation"] = g.params[0];
    } else if (n == "cx") {
        single("cnot");
        out["control"] = q[0];
    } else if (n == "cy" || n == "cz" || n == "ch") {
        single(n.substr(1));
        out["control"] = q[0];
    } else if (n == "crz") {
        single("rz");
        out["control"] = q[0];
        out["rotation"] = g.params[0];
    } else if (n == "ccx") {
        single("x");
        out["controls"] = json::array({q[0], q[1]});
    } else if (n == "swap") {
        out["gate"] = "swap";
        out["targets"] = json::array({q[0], q[1]});
    } else if (n == "cswap") {
        out["gate"] = "swap";
        out["control"] = q[0];
        out["targets"] = json::array({q[1], q[2]});
    } else {
        unsupported(TargetDialect::IonqJson, "gate '" + n + "'");
    }
    return out;
}

}  // namespace

std::string emit_ionq_json(const Circuit &circuit) {
    constexpr TargetDialect target = TargetDialect::IonqJson;
    require_native(circuit, target);
    if (circuit.has_conditionals()) {
        unsupported(target, "a classically conditioned gate");
    }
    if (!measures_are_terminal(circuit)) {
        unsupported(target, "a mid-circuit measurement");
    }
    json gates = json::array();
    for (const auto &op : circuit.ops) {
        if (const auto *g = std::get_if<GateOp>(&op)) {
            gates.push_back(ionq_gate(*g));
        } else if (std::holds_alternative<ResetOp>(op)) {
            unsupported(target, "reset");
        }
        // IonQ always reads out every qubit at the end; terminal
        // measurements and barriers carry no extra information.
    }
    json doc;
    doc["qubits"] = circuit.num_qubits;
    doc["circuit"] = std::move(gates);
    return dump(doc);
}

std::string emit_quantum_circuit_json(const Circuit &circuit) {
    constexpr TargetDialect target = TargetDialect::QuantumCircuitJson;
    require_native(circuit, target);
    ClassicalLayout layout = classical_layout(
        circuit, [](std::string_view name) { return !name.empty(); }, {});
    json cregs = json::object();
    if (layout.flattened) {
        if (circuit.num_clbits() > 0) {
            cregs["c"] = json::array();
            for (std::uint32_t i = 0; i < circuit.num_clbits(); ++i) {
                cregs["c"].push_back(0);
            }
        }
    } else {
        for (std::size_t i = 0; i < circuit.cregs.size(); ++i) {
            json bits = json::array();
            for (std::uint32_t b = 0; b < circuit.cregs[i].size; ++b) {
                bits.push_back(0);
            }
            cregs[layout.names[i]] = std::move(bits);
        }
    }

    auto columns = moments(circuit);
    json wires = json::array();
    for (Qubit q = 0; q < circuit.num_qubits; ++q) {
        wires.push_back(json::array());
    }
    std::size_t next_id = 0;
    for (const auto &column : columns) {
        std::vector<json> cells(circuit.num_qubits, nullptr);
        for (std::size_t index : column) {
            const Op &op = circuit.ops[index];
            if (std::holds_alternative<BarrierOp>(op)) {
                continue;
            }
            std::string id = "g" + std::to_string(next_id++);
            auto place = [&](const std::string &name, const std::vector<Qubit> &qubits, json options) {
                for (std::size_t k = 0; k < qubits.size(); ++k) {
                    json cell;
                    cell["id"] = id;
                    cell["name"] = name;
                    cell["connector"] = k;
                    cell["options"] = options;
                    cells[qubits[k]] = std::move(cell);
                }
            };
            auto gate_options = [&](const GateOp &g) {
                const auto *entry = find_qc_gate_for_ir(g.name);
                if (entry == nullptr) {
                    unsupported(target, "gate '" + g.name + "'");
                }
                json options = json::object();
                if (!entry->param_names.empty()) {
                    json params = json::object();
                    for (std::size_t k = 0; k < entry->param_names.size(); ++k) {
                        params[std::string(entry->param_names[k])] = g.params[k];
                    }
                    options["params"] = std::move(params);
                }
                return std::pair{std::string(entry->qc), options};
            };
            if (const auto *g = std::get_if<GateOp>(&op)) {
                auto [name, options] = gate_options(*g);
                place(name, g->qubits, options);
            } else if (const auto *c = std::get_if<ConditionalOp>(&op)) {
                auto [name, options] = gate_options(c->gate);
                options["condition"] = {{"creg", layout.creg_name(circuit, c->creg)}, {"value", c->value}};
                place(name, c->gate.qubits, options);
            } else if (const auto *m = std::get_if<MeasureOp>(&op)) {
                std::uint32_t bit = layout.flattened ? clbit_of(circuit, *m) : m->bit;
                json options = {{"creg", {{"name", layout.creg_name(circuit, m->creg)}, {"bit", bit}}}};
                place("measure", {m->qubit}, options);
            } else if (const auto *r = std::get_if<ResetOp>(&op)) {
                place("reset", {r->qubit}, json::object());
            }
        }
        bool any = false;
        for (const auto &cell : cells) {
            any = any || !cell.is_null();
        }
        if (!any) {
            continue;
        }
        for (Qubit q = 0; q < circuit.num_qubits; ++q) {
            wires[q].push_back(std::move(cells[q]));
        }
    }
    json doc;
    doc["numQubits"] = circuit.num_qubits;
    doc["gates"] = std::move(wires);
    doc["customGates"] = json::object();
    doc["cregs"] = std::move(cregs);
    return dump(doc);
}

std::string emit_quirk_json(const Circuit &circuit) {
    constexpr TargetDialect target = TargetDialect::QuirkJson;
    require_native(circuit, target);
    if (circuit.has_conditionals()) {
        unsupported(target, "a classically conditioned gate");
    }
    bool any_measure = circuit.has_measurements();
    if (any_measure) {
        // Quirk writes each measured wire into its own classical bit.
        if (circuit.num_clbits() != circuit.num_qubits) {
            unsupported(target, "a classical register layout other than one bit per qubit");
        }
        for (const auto &op : circuit.ops) {
            if (const auto *m = std::get_if<MeasureOp>(&op); m && clbit_of(circuit, *m) != m->qubit) {
                unsupported(target, "measuring qubit " + std::to_string(m->qubit) + " into another bit");
            }
        }
    }
    auto empty_column = [&] { return json::array_t(circuit.num_qubits, 1); };
    json cols = json::array();
    for (const auto &column : moments(circuit)) {
        json::array_t singles = empty_column();
        bool singles_used = false;
        std::vector<json> separate;
        for (std::size_t index : column) {
            const Op &op = circuit.ops[index];
            if (std::holds_alternative<ResetOp>(op)) {
                unsupported(target, "reset");
            }
            if (const auto *m = std::get_if<MeasureOp>(&op)) {
                singles[m->qubit] = "Measure";
                singles_used = true;
                continue;
            }
            const auto *g = std::get_if<GateOp>(&op);
            if (g == nullptr) {
                continue;
            }
            if (g->qubits.size() == 1) {
                const auto *symbol = find_quirk_symbol_for_ir(g->name);
                singles[g->qubits[0]] = std::string(symbol->quirk);
                singles_used = true;
                continue;
            }
            json::array_t col = empty_column();
            std::string_view base = g->name;
            std::size_t num_controls = 0;
            if (auto plain = quirk_uncontrolled(g->name)) {
                base = plain->first;
                num_controls = plain->second;
            }
            for (std::size_t k = 0; k < num_controls; ++k) {
                col[g->qubits[k]] = "•";
            }
            std::string symbol(find_quirk_symbol_for_ir(base)->quirk);
            for (std::size_t k = num_controls; k < g->qubits.size(); ++k) {
                col[g->qubits[k]] = symbol;
            }
            separate.emplace_back(std::move(col));
        }
        if (singles_used) {
            cols.push_back(std::move(singles));
        }
        for (auto &col : separate) {
            cols.push_back(std::move(col));
        }
    }
    json doc;
    doc["cols"] = std::move(cols);
    return dump(doc);
}

}  // namespace qbridge::detail
