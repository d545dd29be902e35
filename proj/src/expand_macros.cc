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

#include "qbridge/error.h"
#include "qbridge/gates.h"
#include "qbridge/passes.h"

namespace qbridge {

namespace {

class Expander {
   public:
    explicit Expander(const Circuit &c) : circuit_(c) {
    }

    void expand_gate(const GateOp &gate, const ConditionalOp *condition, std::size_t depth,
                     std::vector<Op> &out) {
        if (StandardGateTable::instance().contains(gate.name)) {
            push(condition ? Op{ConditionalOp{condition->creg, condition->value, gate}}
                           : Op{gate},
                 out);
            return;
        }
        const GateDef *def = circuit_.find_gate_def(gate.name);
        if (def == nullptr) {
            throw Error(ErrorKind::UnknownGate, "unknown gate '" + gate.name + "'");
        }
        if (depth >= kMacroRecursionLimit) {
            throw Error(ErrorKind::RecursionLimit,
                        "macro nesting exceeds " + std::to_string(kMacroRecursionLimit) +
                            " levels while expanding '" + gate.name + "'");
        }
        if (def->num_qubits() != gate.qubits.size() || def->num_params() != gate.params.size()) {
            throw Error(ErrorKind::InvalidCircuit, "wrong arity in call to '" + gate.name + "'");
        }
        for (const auto &stmt : def->body) {
            std::vector<Qubit> qubits;
            qubits.reserve(stmt.qubits.size());
            for (auto formal : stmt.qubits) {
                qubits.push_back(gate.qubits.at(formal));
            }
            if (stmt.barrier) {
                if (condition == nullptr) {
                    push(BarrierOp{std::move(qubits)}, out);
                }
                continue;
            }
            GateOp inner{stmt.name, {}, std::move(qubits)};
            inner.params.reserve(stmt.params.size());
            for (const auto &expr : stmt.params) {
                inner.params.push_back(expr.evaluate(gate.params));
            }
            expand_gate(inner, condition, depth + 1, out);
        }
    }

    void push(Op op, std::vector<Op> &out) {
        if (out.size() >= kMaxExpandedOps) {
            throw Error(ErrorKind::ExpansionTooLarge,
                        "macro expansion exceeds " + std::to_string(kMaxExpandedOps) + " ops");
        }
        out.push_back(std::move(op));
    }

   private:
    const Circuit &circuit_;
};

}  // namespace

Circuit expand_macros(const Circuit &circuit) {
    Circuit result = circuit;
    result.gate_defs.clear();
    result.ops.clear();
    if (circuit.gate_defs.empty()) {
        result.ops = circuit.ops;
        return result;
    }
    Expander expander(circuit);
    for (const auto &op : circuit.ops) {
        if (const auto *g = std::get_if<GateOp>(&op)) {
            expander.expand_gate(*g, nullptr, 0, result.ops);
        } else if (const auto *c = std::get_if<ConditionalOp>(&op)) {
            expander.expand_gate(c->gate, c, 0, result.ops);
        } else {
            expander.push(op, result.ops);
        }
    }
    return result;
}

}  // namespace qbridge
