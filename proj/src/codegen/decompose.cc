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

#include <numbers>
#include <set>

#include "qbridge/codegen.h"
#include "qbridge/error.h"
#include "qbridge/gates.h"
#include "qbridge/passes.h"

namespace qbridge {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxRewriteDepth = 16;

const std::set<std::string, std::less<>> kQuilNative = {
    "id", "x", "y", "z", "h", "s", "t", "rx", "ry", "rz", "p", "cx", "cz", "swap", "ccx", "cswap", "cp",
};
const std::set<std::string, std::less<>> kIonqNative = {
    "x", "y", "z", "h", "s", "sdg", "t", "tdg", "sx", "rx", "ry", "rz",
    "cx", "cy", "cz", "ch", "crz", "swap", "cswap", "ccx",
};
const std::set<std::string, std::less<>> kQuirkNative = {
    "x", "y", "z", "h", "s", "sdg", "t", "tdg", "sx", "cx", "cy", "cz", "ch", "swap", "cswap", "ccx",
};

GateOp g(std::string name, std::vector<double> params, std::vector<Qubit> qubits) {
    return GateOp{std::move(name), std::move(params), std::move(qubits)};
}

/// One rewrite step. Returns nullopt when no rule applies.
std::optional<std::vector<GateOp>> rewrite(const GateOp &op, const NativePredicate &native) {
    const auto &q = op.qubits;
    const auto &p = op.params;
    const std::string &n = op.name;
    auto phase = [&](double angle, Qubit target) {
        return native("p") ? g("p", {angle}, {target}) : native("u1") ? g("u1", {angle}, {target})
                                                                      : g("rz", {angle}, {target});
    };
    if (n == "id") {
        return std::vector<GateOp>{};
    }
    if (n == "u3") {
        return std::vector<GateOp>{g("rz", {p[2]}, {q[0]}), g("ry", {p[0]}, {q[0]}), g("rz", {p[1]}, {q[0]})};
    }
    if (n == "u2") {
        return std::vector<GateOp>{g("u3", {kPi / 2, p[0], p[1]}, {q[0]})};
    }
    if (n == "u1") {
        return std::vector<GateOp>{native("p") ? g("p", p, q) : g("rz", p, q)};
    }
    if (n == "p") {
        return std::vector<GateOp>{native("u1") ? g("u1", p, q) : g("rz", p, q)};
    }
    if (n == "rz") {
        return std::vector<GateOp>{native("p") ? g("p", p, q) : g("u1", p, q)};
    }
    if (n == "s") {
        return std::vector<GateOp>{phase(kPi / 2, q[0])};
    }
    if (n == "sdg") {
        return std::vector<GateOp>{phase(-kPi / 2, q[0])};
    }
    if (n == "t") {
        return std::vector<GateOp>{phase(kPi / 4, q[0])};
    }
    if (n == "tdg") {
        return std::vector<GateOp>{phase(-kPi / 4, q[0])};
    }
    if (n == "z") {
        return std::vector<GateOp>{phase(kPi, q[0])};
    }
    if (n == "sx") {
        return std::vector<GateOp>{g("h", {}, q), g("s", {}, q), g("h", {}, q)};
    }
    if (n == "rx") {
        return std::vector<GateOp>{g("h", {}, q), g("rz", p, q), g("h", {}, q)};
    }
    if (n == "ry") {
        return std::vector<GateOp>{g("sdg", {}, q), g("h", {}, q), g("rz", p, q), g("h", {}, q), g("s", {}, q)};
    }
    if (n == "cy") {
        return std::vector<GateOp>{g("sdg", {}, {q[1]}), g("cx", {}, q), g("s", {}, {q[1]})};
    }
    if (n == "cz") {
        return std::vector<GateOp>{g("h", {}, {q[1]}), g("cx", {}, q), g("h", {}, {q[1]})};
    }
    if (n == "ch") {
        return std::vector<GateOp>{g("ry", {kPi / 4}, {q[1]}), g("cx", {}, q), g("ry", {-kPi / 4}, {q[1]})};
    }
    if (n == "crz") {
        return std::vector<GateOp>{g("rz", {p[0] / 2}, {q[1]}), g("cx", {}, q), g("rz", {-p[0] / 2}, {q[1]}),
                                   g("cx", {}, q)};
    }
    if (n == "cp") {
        return std::vector<GateOp>{g("p", {p[0] / 2}, {q[0]}), g("cx", {}, q), g("p", {-p[0] / 2}, {q[1]}),
                                   g("cx", {}, q), g("p", {p[0] / 2}, {q[1]})};
    }
    if (n == "swap") {
        return std::vector<GateOp>{g("cx", {}, {q[0], q[1]}), g("cx", {}, {q[1], q[0]}), g("cx", {}, {q[0], q[1]})};
    }
    if (n == "cswap") {
        return std::vector<GateOp>{g("cx", {}, {q[2], q[1]}), g("ccx", {}, q), g("cx", {}, {q[2], q[1]})};
    }
    if (n == "ccx") {
        const Qubit a = q[0], b = q[1], c = q[2];
        return std::vector<GateOp>{
            g("h", {}, {c}),      g("cx", {}, {b, c}), g("tdg", {}, {c}),    g("cx", {}, {a, c}),
            g("t", {}, {c}),      g("cx", {}, {b, c}), g("tdg", {}, {c}),    g("cx", {}, {a, c}),
            g("t", {}, {b}),      g("t", {}, {c}),     g("h", {}, {c}),      g("cx", {}, {a, b}),
            g("t", {}, {a}),      g("tdg", {}, {b}),   g("cx", {}, {a, b}),
        };
    }
    return std::nullopt;
}

void lower(const GateOp &op, const NativePredicate &native, std::string_view label, int depth,
           std::vector<GateOp> &out) {
    if (native(op.name)) {
        out.push_back(op);
        return;
    }
    auto replacement = depth < kMaxRewriteDepth ? rewrite(op, native) : std::nullopt;
    if (!replacement) {
        throw Error(ErrorKind::UnsupportedForTarget,
                    "gate '" + op.name + "' cannot be expressed in " + std::string(label));
    }
    for (const auto &step : *replacement) {
        lower(step, native, label, depth + 1, out);
    }
}

bool macros_native(const Circuit &circuit, const NativePredicate &native) {
    auto ok = [&](const std::string &name) { return native(name) || circuit.find_gate_def(name) != nullptr; };
    for (const auto &def : circuit.gate_defs) {
        for (const auto &m : def.body) {
            if (!m.barrier && !ok(m.name)) {
                return false;
            }
        }
    }
    for (const auto &op : circuit.ops) {
        if (const auto *gate = std::get_if<GateOp>(&op); gate && !ok(gate->name)) {
            return false;
        }
        if (const auto *cond = std::get_if<ConditionalOp>(&op); cond && !ok(cond->gate.name)) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool is_native(std::string_view gate, TargetDialect target) {
    if (!StandardGateTable::instance().contains(gate)) {
        return false;
    }
    switch (target) {
        case TargetDialect::OpenQasm2:
        case TargetDialect::QiskitSrc:
            return true;
        case TargetDialect::QuantumCircuitJson:
            return gate != "p";
        case TargetDialect::CirqSrc:
            return gate != "u2" && gate != "u3";
        case TargetDialect::Quil2:
        case TargetDialect::PyquilSrc:
            return kQuilNative.contains(gate);
        case TargetDialect::IonqJson:
            return kIonqNative.contains(gate);
        case TargetDialect::QuirkJson:
            return kQuirkNative.contains(gate);
    }
    return false;
}

Circuit decompose_to(const Circuit &circuit, const NativePredicate &native, std::string_view target_label) {
    if (!circuit.gate_defs.empty()) {
        if (macros_native(circuit, native)) {
            return circuit;
        }
        return decompose_to(expand_macros(circuit), native, target_label);
    }
    Circuit out = circuit;
    out.ops.clear();
    std::vector<GateOp> lowered;
    for (const auto &op : circuit.ops) {
        if (const auto *gate = std::get_if<GateOp>(&op)) {
            lowered.clear();
            lower(*gate, native, target_label, 0, lowered);
            for (auto &step : lowered) {
                out.ops.emplace_back(std::move(step));
            }
        } else if (const auto *cond = std::get_if<ConditionalOp>(&op)) {
            lowered.clear();
            lower(cond->gate, native, target_label, 0, lowered);
            for (auto &step : lowered) {
                out.ops.emplace_back(ConditionalOp{cond->creg, cond->value, std::move(step)});
            }
        } else {
            out.ops.push_back(op);
        }
    }
    return out;
}

Circuit decompose_for(const Circuit &circuit, TargetDialect target) {
    if (target != TargetDialect::OpenQasm2 && !circuit.gate_defs.empty()) {
        return decompose_for(expand_macros(circuit), target);
    }
    return decompose_to(circuit, [target](std::string_view gate) { return is_native(gate, target); },
                        dialect_name(target));
}

}  // namespace qbridge
