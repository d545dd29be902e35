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

#include <cmath>
#include <set>
#include <sstream>

#include "qbridge/error.h"
#include "qbridge/gates.h"
#include "qbridge/passes.h"

namespace qbridge {

std::string_view diagnostic_code_name(DiagnosticCode code) {
    switch (code) {
        case DiagnosticCode::QubitOutOfRange:
            return "QubitOutOfRange";
        case DiagnosticCode::DuplicateOperand:
            return "DuplicateOperand";
        case DiagnosticCode::UnknownGate:
            return "UnknownGate";
        case DiagnosticCode::ArityMismatch:
            return "ArityMismatch";
        case DiagnosticCode::ParamCountMismatch:
            return "ParamCountMismatch";
        case DiagnosticCode::NonFiniteParam:
            return "NonFiniteParam";
        case DiagnosticCode::UnknownCreg:
            return "UnknownCreg";
        case DiagnosticCode::ClbitOutOfRange:
            return "ClbitOutOfRange";
        case DiagnosticCode::QubitCountMismatch:
            return "QubitCountMismatch";
        case DiagnosticCode::DuplicateRegister:
            return "DuplicateRegister";
        case DiagnosticCode::InvalidGateDef:
            return "InvalidGateDef";
        case DiagnosticCode::MacroCycle:
            return "MacroCycle";
    }
    return "Unknown";
}

namespace {

struct Signature {
    std::size_t num_params;
    std::size_t num_qubits;
};

class Validator {
   public:
    explicit Validator(const Circuit &c) : circuit_(c) {
    }

    std::vector<Diagnostic> run() {
        check_registers();
        check_gate_defs();
        for (std::size_t i = 0; i < circuit_.ops.size(); ++i) {
            check_op(i, circuit_.ops[i]);
        }
        return std::move(out_);
    }

   private:
    void report(DiagnosticCode code, std::string message, std::optional<std::size_t> index) {
        out_.push_back(Diagnostic{code, std::move(message), index});
    }

    void check_registers() {
        std::set<std::string> names;
        std::uint64_t total = 0;
        for (const auto &reg : circuit_.qregs) {
            total += reg.size;
            if (!names.insert(reg.name).second) {
                report(DiagnosticCode::DuplicateRegister, "duplicate register '" + reg.name + "'",
                       std::nullopt);
            }
        }
        if (total != circuit_.num_qubits) {
            report(DiagnosticCode::QubitCountMismatch,
                   "qubit count " + std::to_string(circuit_.num_qubits) +
                       " does not match register total " + std::to_string(total),
                   std::nullopt);
        }
        for (const auto &reg : circuit_.cregs) {
            if (!names.insert(reg.name).second) {
                report(DiagnosticCode::DuplicateRegister, "duplicate register '" + reg.name + "'",
                       std::nullopt);
            }
        }
    }

    /// Resolves names visible to the k-th gate definition (or, for
    /// k == npos, to top-level ops).
    std::optional<Signature> resolve(std::string_view name, std::size_t visible_defs) const {
        if (const auto *g = StandardGateTable::instance().find(name)) {
            return Signature{g->num_params, g->num_qubits};
        }
        for (std::size_t i = 0; i < visible_defs && i < circuit_.gate_defs.size(); ++i) {
            const auto &def = circuit_.gate_defs[i];
            if (def.name == name) {
                return Signature{def.num_params(), def.num_qubits()};
            }
        }
        return std::nullopt;
    }

    bool defined_later(std::string_view name, std::size_t from) const {
        for (std::size_t i = from; i < circuit_.gate_defs.size(); ++i) {
            if (circuit_.gate_defs[i].name == name) {
                return true;
            }
        }
        return false;
    }

    void check_gate_defs() {
        std::set<std::string> seen;
        for (std::size_t k = 0; k < circuit_.gate_defs.size(); ++k) {
            const auto &def = circuit_.gate_defs[k];
            auto bad = [&](const std::string &msg) {
                report(DiagnosticCode::InvalidGateDef, "gate '" + def.name + "': " + msg,
                       std::nullopt);
            };
            if (StandardGateTable::instance().contains(def.name)) {
                bad("name collides with a standard gate");
            }
            if (!seen.insert(def.name).second) {
                bad("defined more than once");
            }
            if (def.num_qubits() == 0) {
                bad("gate must act on at least one qubit");
            }
            for (const auto &op : def.body) {
                std::set<std::size_t> used;
                for (auto q : op.qubits) {
                    if (q >= def.num_qubits()) {
                        bad("body references undefined qubit argument");
                    } else if (!used.insert(q).second) {
                        bad("body repeats a qubit argument");
                    }
                }
                for (const auto &e : op.params) {
                    if (e.arity() > def.num_params()) {
                        bad("body references undefined parameter");
                    }
                }
                if (op.barrier) {
                    continue;
                }
                auto sig = resolve(op.name, k);
                if (!sig) {
                    if (op.name == def.name || defined_later(op.name, k)) {
                        report(DiagnosticCode::MacroCycle,
                               "gate '" + def.name + "' references '" + op.name +
                                   "' which is not defined before it",
                               std::nullopt);
                    } else {
                        report(DiagnosticCode::UnknownGate,
                               "gate '" + def.name + "' uses unknown gate '" + op.name + "'",
                               std::nullopt);
                    }
                    continue;
                }
                if (sig->num_qubits != op.qubits.size() || sig->num_params != op.params.size()) {
                    bad("call to '" + op.name + "' has wrong arity");
                }
            }
        }
    }

    void check_qubits(std::size_t index, const std::vector<Qubit> &qubits) {
        std::set<Qubit> used;
        for (auto q : qubits) {
            if (q >= circuit_.num_qubits) {
                report(DiagnosticCode::QubitOutOfRange,
                       "qubit " + std::to_string(q) + " out of range (circuit has " +
                           std::to_string(circuit_.num_qubits) + ")",
                       index);
            } else if (!used.insert(q).second) {
                report(DiagnosticCode::DuplicateOperand,
                       "qubit " + std::to_string(q) + " used twice in one operation", index);
            }
        }
    }

    void check_gate(std::size_t index, const GateOp &g) {
        auto sig = resolve(g.name, circuit_.gate_defs.size());
        if (!sig) {
            report(DiagnosticCode::UnknownGate, "unknown gate '" + g.name + "'", index);
        } else {
            if (sig->num_qubits != g.qubits.size()) {
                report(DiagnosticCode::ArityMismatch,
                       "gate '" + g.name + "' expects " + std::to_string(sig->num_qubits) +
                           " qubits, got " + std::to_string(g.qubits.size()),
                       index);
            }
            if (sig->num_params != g.params.size()) {
                report(DiagnosticCode::ParamCountMismatch,
                       "gate '" + g.name + "' expects " + std::to_string(sig->num_params) +
                           " parameters, got " + std::to_string(g.params.size()),
                       index);
            }
        }
        for (double p : g.params) {
            if (!std::isfinite(p)) {
                report(DiagnosticCode::NonFiniteParam, "non-finite parameter", index);
            }
        }
        check_qubits(index, g.qubits);
    }

    void check_clbit(std::size_t index, const std::string &creg, std::uint32_t bit) {
        const Register *reg = circuit_.find_creg(creg);
        if (!reg) {
            report(DiagnosticCode::UnknownCreg, "unknown classical register '" + creg + "'",
                   index);
        } else if (bit >= reg->size) {
            report(DiagnosticCode::ClbitOutOfRange,
                   "bit " + std::to_string(bit) + " out of range for '" + creg + "'", index);
        }
    }

    void check_op(std::size_t index, const Op &op) {
        if (const auto *g = std::get_if<GateOp>(&op)) {
            check_gate(index, *g);
        } else if (const auto *m = std::get_if<MeasureOp>(&op)) {
            check_qubits(index, {m->qubit});
            check_clbit(index, m->creg, m->bit);
        } else if (const auto *r = std::get_if<ResetOp>(&op)) {
            check_qubits(index, {r->qubit});
        } else if (const auto *b = std::get_if<BarrierOp>(&op)) {
            check_qubits(index, b->qubits);
        } else if (const auto *c = std::get_if<ConditionalOp>(&op)) {
            if (!circuit_.find_creg(c->creg)) {
                report(DiagnosticCode::UnknownCreg,
                       "unknown classical register '" + c->creg + "'", index);
            }
            check_gate(index, c->gate);
        }
    }

    const Circuit &circuit_;
    std::vector<Diagnostic> out_;
};

}  // namespace

std::vector<Diagnostic> validate(const Circuit &circuit) {
    return Validator(circuit).run();
}

void require_valid(const Circuit &circuit) {
    auto diagnostics = validate(circuit);
    if (diagnostics.empty()) {
        return;
    }
    const auto &d = diagnostics.front();
    std::ostringstream msg;
    msg << diagnostic_code_name(d.code) << ": " << d.message;
    if (d.op_index) {
        msg << " (op " << *d.op_index << ")";
    }
    throw Error(ErrorKind::InvalidCircuit, msg.str());
}

}  // namespace qbridge
