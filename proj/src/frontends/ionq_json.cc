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

#include <algorithm>
#include <numbers>

#include "json_doc.h"
#include "qbridge/frontends.h"

namespace qbridge {

namespace {

using detail::JsonCursor;
using detail::JsonDoc;

std::vector<Qubit> read_qubit_list(const JsonCursor &list, std::uint32_t num_qubits) {
    list.require_array();
    std::vector<Qubit> out;
    for (std::size_t i = 0; i < list.size(); ++i) {
        JsonCursor item = list[i];
        auto q = static_cast<Qubit>(item.as_uint(kMaxParsedQubits));
        if (q >= num_qubits) {
            item.fail(ErrorKind::Semantic,
                      "qubit " + std::to_string(q) + " is out of range for " + std::to_string(num_qubits) +
                          " qubits");
        }
        out.push_back(q);
    }
    return out;
}

std::vector<Qubit> read_operands(const JsonCursor &gate, std::string_view single, std::string_view plural,
                                 std::uint32_t num_qubits) {
    auto one = gate.get(single);
    auto many = gate.get(plural);
    if (one && many) {
        many->fail(ErrorKind::Semantic,
                   "use either \"" + std::string(single) + "\" or \"" + std::string(plural) + "\", not both");
    }
    if (one) {
        auto q = static_cast<Qubit>(one->as_uint(kMaxParsedQubits));
        if (q >= num_qubits) {
            one->fail(ErrorKind::Semantic, "qubit " + std::to_string(q) + " is out of range for " +
                                               std::to_string(num_qubits) + " qubits");
        }
        return {q};
    }
    if (many) {
        auto list = read_qubit_list(*many, num_qubits);
        if (list.empty()) {
            many->fail(ErrorKind::Semantic, many->label() + " must not be empty");
        }
        return list;
    }
    return {};
}

class IonqReader {
   public:
    explicit IonqReader(const JsonDoc &doc) : doc_(doc) {
    }

    Circuit read() {
        JsonCursor top = JsonCursor::root(doc_);
        top.require_object();
        JsonCursor body = top;
        if (auto input = top.get("input")) {
            top.allow_keys({"input", "target", "shots", "name", "lang", "metadata"});
            body = *input;
            if (auto name = top.get("name")) {
                circuit_name_ = name->as_string();
            }
        }
        body.allow_keys({"qubits", "circuit", "gateset", "format", "name"});
        if (auto format = body.get("format"); format && format->as_string() != "ionq.circuit.v0") {
            format->fail(ErrorKind::UnsupportedConstruct,
                         "format \"" + format->as_string() + "\" is not supported (only ionq.circuit.v0)");
        }
        if (auto gateset = body.get("gateset"); gateset && gateset->as_string() != "qis") {
            gateset->fail(ErrorKind::UnsupportedConstruct,
                          "gateset \"" + gateset->as_string() + "\" is not supported (only qis)");
        }
        if (auto name = body.get("name")) {
            circuit_name_ = name->as_string();
        }
        JsonCursor qubits = body.at("qubits");
        num_qubits_ = static_cast<std::uint32_t>(qubits.as_uint(kMaxParsedQubits));
        JsonCursor gates = body.at("circuit");
        gates.require_array();
        Circuit c = Circuit::with_qubits(num_qubits_, circuit_name_);
        for (std::size_t i = 0; i < gates.size(); ++i) {
            read_gate(gates[i], c.ops);
        }
        return c;
    }

   private:
    void read_gate(const JsonCursor &gate, std::vector<Op> &ops) {
        gate.allow_keys({"gate", "target", "targets", "control", "controls", "rotation"});
        JsonCursor name_cursor = gate.at("gate");
        std::string name = name_cursor.as_string();
        if (name == "cnot" || name == "cx") {
            if (!gate.get("control") && !gate.get("controls")) {
                gate.fail(ErrorKind::Semantic, name + " requires a control");
            }
            name = "x";
        } else if (name == "not") {
            name = "x";
        }
        auto targets = read_operands(gate, "target", "targets", num_qubits_);
        auto controls = read_operands(gate, "control", "controls", num_qubits_);
        if (targets.empty()) {
            gate.fail(ErrorKind::Semantic, gate.label() + " has no target");
        }
        static const std::vector<std::string> rotations = {"rx", "ry", "rz"};
        bool is_rotation = std::find(rotations.begin(), rotations.end(), name) != rotations.end();
        std::vector<double> params;
        auto rotation = gate.get("rotation");
        if (is_rotation) {
            if (!rotation) {
                gate.fail(ErrorKind::Semantic, "gate \"" + name + "\" requires a rotation");
            }
            params.push_back(rotation->as_number());
        } else if (rotation) {
            rotation->fail(ErrorKind::Semantic, "gate \"" + name + "\" takes no rotation");
        }

        auto check_distinct = [&](std::vector<Qubit> all) {
            std::sort(all.begin(), all.end());
            if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
                gate.fail(ErrorKind::Semantic, gate.label() + " uses the same qubit twice");
            }
        };

        if (name == "swap") {
            if (targets.size() != 2) {
                gate.fail(ErrorKind::Semantic, "swap requires exactly two targets");
            }
            if (controls.size() > 1) {
                gate.fail(ErrorKind::UnsupportedConstruct, "swap with more than one control is not supported");
            }
            std::vector<Qubit> operands = controls;
            operands.insert(operands.end(), targets.begin(), targets.end());
            check_distinct(operands);
            ops.emplace_back(GateOp{controls.empty() ? "swap" : "cswap", {}, operands});
            return;
        }

        static const std::vector<std::string> single = {"x", "y", "z", "h", "s", "si", "t",
                                                        "ti", "v", "vi", "rx", "ry", "rz"};
        if (std::find(single.begin(), single.end(), name) == single.end()) {
            name_cursor.fail(ErrorKind::UnsupportedConstruct, "gate \"" + name + "\" is not supported");
        }

        if (controls.empty()) {
            std::vector<Qubit> sorted = targets;
            check_distinct(sorted);
            for (Qubit t : targets) {
                emit_single(name, params, t, ops);
            }
            return;
        }
        if (targets.size() != 1) {
            gate.fail(ErrorKind::Semantic, "controlled gates take exactly one target");
        }
        std::vector<Qubit> operands = controls;
        operands.push_back(targets[0]);
        check_distinct(operands);
        std::string controlled;
        if (controls.size() == 1) {
            static const std::vector<std::pair<std::string, std::string>> table = {
                {"x", "cx"}, {"y", "cy"}, {"z", "cz"}, {"h", "ch"}, {"rz", "crz"},
            };
            for (const auto &[from, to] : table) {
                if (from == name) {
                    controlled = to;
                }
            }
            const double pi = std::numbers::pi;
            if (name == "s" || name == "si" || name == "t" || name == "ti") {
                controlled = "cp";
                double angle = (name[0] == 's' ? pi / 2 : pi / 4);
                params = {name.size() == 2 ? -angle : angle};
            }
        } else if (controls.size() == 2 && name == "x") {
            controlled = "ccx";
        }
        if (controlled.empty()) {
            gate.fail(ErrorKind::UnsupportedConstruct,
                      "gate \"" + name + "\" with " + std::to_string(controls.size()) +
                          " control(s) is not supported");
        }
        ops.emplace_back(GateOp{controlled, params, operands});
    }

    static void emit_single(const std::string &name, const std::vector<double> &params, Qubit q,
                            std::vector<Op> &ops) {
        if (name == "vi") {
            ops.emplace_back(GateOp{"h", {}, {q}});
            ops.emplace_back(GateOp{"sdg", {}, {q}});
            ops.emplace_back(GateOp{"h", {}, {q}});
            return;
        }
        std::string ir = name;
        if (name == "si") {
            ir = "sdg";
        } else if (name == "ti") {
            ir = "tdg";
        } else if (name == "v") {
            ir = "sx";
        }
        ops.emplace_back(GateOp{ir, params, {q}});
    }

    const JsonDoc &doc_;
    std::uint32_t num_qubits_ = 0;
    std::string circuit_name_;
};

}  // namespace

Circuit parse_ionq_json(std::string_view source) {
    JsonDoc doc(source, "ionq-json");
    return IonqReader(doc).read();
}

}  // namespace qbridge
