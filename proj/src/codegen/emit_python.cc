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
#include "json.hpp"
#include "number_format.h"

namespace qbridge::detail {

namespace {

std::string py_string(std::string_view s) {
    return nlohmann::json(std::string(s)).dump();
}

std::string angle(double v) {
    return format_angle(v);
}

std::string shots_line() {
    return "SHOTS = int(sys.argv[1]) if len(sys.argv) > 1 else " + std::to_string(kFrameworkDefaultShots) + "\n";
}

const char *kPrintCounts = "print(json.dumps(dict(sorted(counts.items()))))\n";

// ---- Qiskit ---------------------------------------------------------------

std::string qiskit_call(const GateOp &g) {
    auto qubit = [](Qubit q) { return "q[" + std::to_string(q) + "]"; };
    std::string method = g.name;
    std::vector<std::string> args;
    if (g.name == "u1") {
        method = "p";
    } else if (g.name == "u2") {
        method = "u";
        args.push_back("pi / 2");
    } else if (g.name == "u3") {
        method = "u";
    }
    for (double p : g.params) {
        args.push_back(angle(p));
    }
    for (Qubit q : g.qubits) {
        args.push_back(qubit(q));
    }
    std::string out = "qc." + method + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
        out += (i ? ", " : "") + args[i];
    }
    return out + ")";
}

bool python_identifier(std::string_view name) {
    if (name.empty() || !((name[0] >= 'a' && name[0] <= 'z') || (name[0] >= 'A' && name[0] <= 'Z'))) {
        return false;
    }
    for (char c : name) {
        if (!((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_')) {
            return false;
        }
    }
    return true;
}

}  // namespace

std::string emit_qiskit(const Circuit &circuit) {
    require_native(circuit, TargetDialect::QiskitSrc);
    std::ostringstream out;
    out << "import json\n"
           "import sys\n"
           "from math import pi\n"
           "\n"
           "from qiskit import ClassicalRegister, QuantumCircuit, QuantumRegister, transpile\n"
           "from qiskit_aer import AerSimulator\n"
           "\n"
        << shots_line() << "\n";
    out << "q = QuantumRegister(" << circuit.num_qubits << ", \"q\")\n";
    ClassicalLayout layout = classical_layout(circuit, python_identifier, {});
    std::vector<std::string> creg_vars;
    if (layout.flattened) {
        if (circuit.num_clbits() > 0) {
            out << "c = ClassicalRegister(" << circuit.num_clbits() << ", \"c\")\n";
            creg_vars.push_back("c");
        }
    } else {
        for (std::size_t i = 0; i < circuit.cregs.size(); ++i) {
            std::string var = "creg_" + std::to_string(i);
            out << var << " = ClassicalRegister(" << circuit.cregs[i].size << ", " << py_string(layout.names[i])
                << ")\n";
            creg_vars.push_back(var);
        }
    }
    out << "qc = QuantumCircuit(q";
    for (const auto &v : creg_vars) {
        out << ", " << v;
    }
    out << ")\n";
    auto creg_var = [&](std::string_view name) -> std::string {
        if (layout.flattened) {
            return "c";
        }
        for (std::size_t i = 0; i < circuit.cregs.size(); ++i) {
            if (circuit.cregs[i].name == name) {
                return creg_vars[i];
            }
        }
        return "c";
    };
    for (const auto &op : circuit.ops) {
        if (const auto *g = std::get_if<GateOp>(&op)) {
            out << qiskit_call(*g) << "\n";
        } else if (const auto *m = std::get_if<MeasureOp>(&op)) {
            std::uint32_t bit = layout.flattened ? clbit_of(circuit, *m) : m->bit;
            out << "qc.measure(q[" << m->qubit << "], " << creg_var(m->creg) << "[" << bit << "])\n";
        } else if (const auto *r = std::get_if<ResetOp>(&op)) {
            out << "qc.reset(q[" << r->qubit << "])\n";
        } else if (const auto *b = std::get_if<BarrierOp>(&op)) {
            out << "qc.barrier(";
            for (std::size_t i = 0; i < b->qubits.size(); ++i) {
                out << (i ? ", " : "") << "q[" << b->qubits[i] << "]";
            }
            out << ")\n";
        } else if (const auto *c = std::get_if<ConditionalOp>(&op)) {
            out << "with qc.if_test((" << creg_var(c->creg) << ", " << c->value << ")):\n";
            out << "    " << qiskit_call(c->gate) << "\n";
        }
    }
    bool measured = circuit.has_measurements();
    if (!measured) {
        out << "qc.measure_all()\n";
    }
    out << "\n"
           "simulator = AerSimulator()\n"
           "result = simulator.run(transpile(qc, simulator), shots=SHOTS).result()\n";
    if (measured) {
        out << "counts = {key.replace(\" \", \"\"): n for key, n in result.get_counts().items()}\n";
    } else {
        out << "counts = {key.split(\" \")[0]: n for key, n in result.get_counts().items()}\n";
    }
    out << kPrintCounts;
    return out.str();
}

namespace {

// ---- Cirq -----------------------------------------------------------------

std::string cirq_operation(const GateOp &g) {
    auto q = [&](std::size_t i) { return "q[" + std::to_string(g.qubits[i]) + "]"; };
    std::string operands;
    for (std::size_t i = 0; i < g.qubits.size(); ++i) {
        operands += (i ? ", " : "") + q(i);
    }
    const std::string &n = g.name;
    std::string gate;
    auto exponent = [&](double v) { return "(" + angle(v) + ") / pi"; };
    if (n == "id") gate = "cirq.I";
    else if (n == "x") gate = "cirq.X";
    else if (n == "y") gate = "cirq.Y";
    else if (n == "z") gate = "cirq.Z";
    else if (n == "h") gate = "cirq.H";
    else if (n == "s") gate = "cirq.S";
    else if (n == "sdg") gate = "cirq.S**-1";
    else if (n == "t") gate = "cirq.T";
    else if (n == "tdg") gate = "cirq.T**-1";
    else if (n == "sx") gate = "cirq.X**0.5";
    else if (n == "rx") gate = "cirq.rx(" + angle(g.params[0]) + ")";
    else if (n == "ry") gate = "cirq.ry(" + angle(g.params[0]) + ")";
    else if (n == "rz") gate = "cirq.rz(" + angle(g.params[0]) + ")";
    else if (n == "p" || n == "u1") gate = "cirq.ZPowGate(exponent=" + exponent(g.params[0]) + ")";
    else if (n == "cx") gate = "cirq.CNOT";
    else if (n == "cy") gate = "cirq.Y.controlled()";
    else if (n == "cz") gate = "cirq.CZ";
    else if (n == "ch") gate = "cirq.H.controlled()";
    else if (n == "crz") gate = "cirq.rz(" + angle(g.params[0]) + ").controlled()";
    else if (n == "cp") gate = "cirq.CZPowGate(exponent=" + exponent(g.params[0]) + ")";
    else if (n == "swap") gate = "cirq.SWAP";
    else if (n == "ccx") gate = "cirq.CCX";
    else if (n == "cswap") gate = "cirq.CSWAP";
    else unsupported(TargetDialect::CirqSrc, "gate '" + n + "'");
    if (gate.find("**") != std::string::npos) {
        gate = "(" + gate + ")";
    }
    return gate + "(" + operands + ")";
}

}  // namespace

std::string emit_cirq(const Circuit &circuit) {
    constexpr TargetDialect target = TargetDialect::CirqSrc;
    require_native(circuit, target);
    if (circuit.has_conditionals()) {
        unsupported(target, "a classically conditioned gate");
    }
    std::ostringstream out;
    out << "import json\n"
           "import sys\n"
           "from collections import Counter\n"
           "from math import pi\n"
           "\n"
           "import cirq\n"
           "\n"
        << shots_line() << "\n";
    out << "q = cirq.LineQubit.range(" << circuit.num_qubits << ")\n";
    out << "circuit = cirq.Circuit()\n";
    // Every measurement gets its own key; a classical bit holds the value of
    // the last measurement written to it.
    std::vector<std::pair<std::string, std::uint32_t>> keys;
    for (const auto &op : circuit.ops) {
        if (const auto *g = std::get_if<GateOp>(&op)) {
            out << "circuit.append(" << cirq_operation(*g) << ")\n";
        } else if (const auto *m = std::get_if<MeasureOp>(&op)) {
            std::string key = "m" + std::to_string(keys.size());
            keys.emplace_back(key, clbit_of(circuit, *m));
            out << "circuit.append(cirq.measure(q[" << m->qubit << "], key=\"" << key << "\"))\n";
        } else if (const auto *r = std::get_if<ResetOp>(&op)) {
            out << "circuit.append(cirq.ResetChannel().on(q[" << r->qubit << "]))\n";
        }
    }
    std::uint32_t width = circuit.num_clbits();
    if (!circuit.has_measurements()) {
        width = circuit.num_qubits;
        for (Qubit i = 0; i < circuit.num_qubits; ++i) {
            std::string key = "m" + std::to_string(keys.size());
            keys.emplace_back(key, i);
            out << "circuit.append(cirq.measure(q[" << i << "], key=\"" << key << "\"))\n";
        }
    }
    out << "\n"
           "# (key, classical bit) in program order\n"
           "MEASUREMENTS = [";
    for (std::size_t i = 0; i < keys.size(); ++i) {
        out << (i ? ", " : "") << "(\"" << keys[i].first << "\", " << keys[i].second << ")";
    }
    out << "]\n"
        << "WIDTH = " << width << "\n"
        << "\n"
           "result = cirq.Simulator().run(circuit, repetitions=SHOTS)\n"
           "counts = Counter()\n"
           "for shot in range(SHOTS):\n"
           "    bits = [0] * WIDTH\n"
           "    for key, bit in MEASUREMENTS:\n"
           "        bits[bit] = int(result.measurements[key][shot][0])\n"
           "    counts[\"\".join(str(b) for b in reversed(bits))] += 1\n"
        << kPrintCounts;
    return out.str();
}

std::string emit_pyquil(const Circuit &circuit) {
    constexpr TargetDialect target = TargetDialect::PyquilSrc;
    require_native(circuit, target);
    if (circuit.has_conditionals()) {
        unsupported(target, "a classically conditioned gate");
    }
    std::set<std::string> imports;
    std::ostringstream body;
    for (const auto &op : circuit.ops) {
        if (const auto *g = std::get_if<GateOp>(&op)) {
            std::string name(find_quil_gate_for_ir(g->name)->quil);
            imports.insert(name);
            body << "program += " << name << "(";
            bool first = true;
            for (double p : g->params) {
                body << (first ? "" : ", ") << angle(p);
                first = false;
            }
            for (Qubit q : g->qubits) {
                body << (first ? "" : ", ") << q;
                first = false;
            }
            body << ")\n";
        } else if (const auto *m = std::get_if<MeasureOp>(&op)) {
            imports.insert("MEASURE");
            body << "program += MEASURE(" << m->qubit << ", ro[" << clbit_of(circuit, *m) << "])\n";
        } else if (const auto *r = std::get_if<ResetOp>(&op)) {
            imports.insert("RESET");
            body << "program += RESET(" << r->qubit << ")\n";
        }
    }
    std::uint32_t width = circuit.num_clbits();
    if (!circuit.has_measurements()) {
        width = circuit.num_qubits;
        if (width > 0) {
            imports.insert("MEASURE");
        }
        for (Qubit i = 0; i < circuit.num_qubits; ++i) {
            body << "program += MEASURE(" << i << ", ro[" << i << "])\n";
        }
    }
    std::ostringstream out;
    out << "import json\n"
           "import sys\n"
           "from collections import Counter\n"
           "from math import pi\n"
           "\n"
           "from pyquil import Program, get_qc\n";
    if (!imports.empty()) {
        out << "from pyquil.gates import ";
        bool first = true;
        for (const auto &name : imports) {
            out << (first ? "" : ", ") << name;
            first = false;
        }
        out << "\n";
    }
    out << "\n" << shots_line() << "\n";
    out << "program = Program()\n";
    if (width > 0) {
        out << "ro = program.declare(\"ro\", \"BIT\", " << width << ")\n";
    }
    out << body.str();
    out << "program.wrap_in_numshots_loop(SHOTS)\n"
           "\n"
           "qc = get_qc(\""
        << std::max<std::uint32_t>(circuit.num_qubits, 1)
        << "q-qvm\")\n"
           "result = qc.run(qc.compile(program))\n";
    if (width > 0) {
        out << "rows = result.get_register_map()[\"ro\"]\n"
               "counts = Counter(\"\".join(str(int(b)) for b in reversed(row)) for row in rows)\n";
    } else {
        out << "counts = Counter({\"\": SHOTS})\n";
    }
    out << kPrintCounts;
    return out.str();
}

}  // namespace qbridge::detail
