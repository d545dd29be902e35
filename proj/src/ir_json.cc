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

#include "qbridge/ir_json.h"

#include <initializer_list>
#include <set>

#include "qbridge/error.h"
#include "qbridge/frontends.h"
#include "qbridge/passes.h"

namespace qbridge {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json gate_json(const GateOp &g) {
    ordered_json out;
    out["name"] = g.name;
    out["params"] = g.params;
    out["qubits"] = g.qubits;
    return out;
}

[[noreturn]] void bad(const std::string &message) {
    throw Error(ErrorKind::InvalidArgument, "invalid circuit JSON: " + message);
}

void only_keys(const json &object, std::initializer_list<const char *> allowed,
               const std::string &where) {
    if (!object.is_object()) {
        bad(where + " must be an object");
    }
    std::set<std::string> names(allowed.begin(), allowed.end());
    for (const auto &[key, value] : object.items()) {
        if (!names.contains(key)) {
            bad("unknown field '" + key + "' in " + where);
        }
    }
    for (const auto *name : allowed) {
        if (!object.contains(name)) {
            bad("missing field '" + std::string(name) + "' in " + where);
        }
    }
}

std::uint64_t get_uint(const json &value, const std::string &where) {
    if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
        bad(where + " must be a non-negative integer");
    }
    return value.get<std::uint64_t>();
}

std::uint32_t get_u32(const json &value, const std::string &where) {
    auto v = get_uint(value, where);
    if (v > 0xFFFFFFFFu) {
        bad(where + " is too large");
    }
    return static_cast<std::uint32_t>(v);
}

std::string get_string(const json &value, const std::string &where) {
    if (!value.is_string()) {
        bad(where + " must be a string");
    }
    return value.get<std::string>();
}

GateOp parse_gate(const json &j, const std::string &where, bool with_kind) {
    if (with_kind) {
        only_keys(j, {"kind", "name", "params", "qubits"}, where);
    } else {
        only_keys(j, {"name", "params", "qubits"}, where);
    }
    GateOp g;
    g.name = get_string(j["name"], where + ".name");
    if (!j["params"].is_array()) {
        bad(where + ".params must be an array");
    }
    for (const auto &p : j["params"]) {
        if (!p.is_number()) {
            bad(where + ".params must contain numbers");
        }
        g.params.push_back(p.get<double>());
    }
    if (!j["qubits"].is_array()) {
        bad(where + ".qubits must be an array");
    }
    for (const auto &q : j["qubits"]) {
        g.qubits.push_back(get_u32(q, where + ".qubits"));
    }
    return g;
}

}  // namespace

ordered_json circuit_to_json(const Circuit &circuit) {
    if (!circuit.gate_defs.empty()) {
        throw Error(ErrorKind::InvalidArgument,
                    "circuit JSON cannot carry gate macros; expand them first");
    }
    ordered_json out;
    out["name"] = circuit.name;
    out["qubits"] = circuit.num_qubits;
    out["cregs"] = ordered_json::array();
    for (const auto &reg : circuit.cregs) {
        ordered_json r;
        r["name"] = reg.name;
        r["size"] = reg.size;
        out["cregs"].push_back(r);
    }
    out["ops"] = ordered_json::array();
    for (const auto &op : circuit.ops) {
        ordered_json o;
        if (const auto *g = std::get_if<GateOp>(&op)) {
            o["kind"] = "gate";
            o.update(gate_json(*g));
        } else if (const auto *m = std::get_if<MeasureOp>(&op)) {
            o["kind"] = "measure";
            o["qubit"] = m->qubit;
            o["creg"] = m->creg;
            o["bit"] = m->bit;
        } else if (const auto *r = std::get_if<ResetOp>(&op)) {
            o["kind"] = "reset";
            o["qubit"] = r->qubit;
        } else if (const auto *b = std::get_if<BarrierOp>(&op)) {
            o["kind"] = "barrier";
            o["qubits"] = b->qubits;
        } else if (const auto *c = std::get_if<ConditionalOp>(&op)) {
            o["kind"] = "conditional";
            o["creg"] = c->creg;
            o["value"] = c->value;
            o["gate"] = gate_json(c->gate);
        }
        out["ops"].push_back(std::move(o));
    }
    return out;
}

Circuit circuit_from_json(const json &j) {
    only_keys(j, {"name", "qubits", "cregs", "ops"}, "circuit");
    std::uint32_t qubits = get_u32(j["qubits"], "qubits");
    if (qubits > kMaxParsedQubits) {
        bad("too many qubits");
    }
    Circuit c = Circuit::with_qubits(qubits, get_string(j["name"], "name"));
    if (!j["cregs"].is_array()) {
        bad("cregs must be an array");
    }
    for (const auto &r : j["cregs"]) {
        only_keys(r, {"name", "size"}, "creg");
        c.cregs.push_back(Register{get_string(r["name"], "creg.name"), get_u32(r["size"], "creg.size")});
        if (c.cregs.back().size > kMaxParsedClbits || c.num_clbits() > kMaxParsedClbits) {
            bad("too many classical bits");
        }
    }
    if (!j["ops"].is_array()) {
        bad("ops must be an array");
    }
    std::size_t index = 0;
    for (const auto &o : j["ops"]) {
        std::string where = "ops[" + std::to_string(index++) + "]";
        if (!o.is_object() || !o.contains("kind")) {
            bad(where + " must be an object with a kind");
        }
        std::string kind = get_string(o["kind"], where + ".kind");
        if (kind == "gate") {
            c.ops.emplace_back(parse_gate(o, where, true));
        } else if (kind == "measure") {
            only_keys(o, {"kind", "qubit", "creg", "bit"}, where);
            c.ops.emplace_back(MeasureOp{get_u32(o["qubit"], where + ".qubit"),
                                         get_string(o["creg"], where + ".creg"),
                                         get_u32(o["bit"], where + ".bit")});
        } else if (kind == "reset") {
            only_keys(o, {"kind", "qubit"}, where);
            c.ops.emplace_back(ResetOp{get_u32(o["qubit"], where + ".qubit")});
        } else if (kind == "barrier") {
            only_keys(o, {"kind", "qubits"}, where);
            BarrierOp b;
            if (!o["qubits"].is_array()) {
                bad(where + ".qubits must be an array");
            }
            for (const auto &q : o["qubits"]) {
                b.qubits.push_back(get_u32(q, where + ".qubits"));
            }
            c.ops.emplace_back(std::move(b));
        } else if (kind == "conditional") {
            only_keys(o, {"kind", "creg", "value", "gate"}, where);
            c.ops.emplace_back(ConditionalOp{get_string(o["creg"], where + ".creg"),
                                             get_uint(o["value"], where + ".value"),
                                             parse_gate(o["gate"], where + ".gate", false)});
        } else {
            bad(where + " has unknown kind '" + kind + "'");
        }
    }
    require_valid(c);
    return c;
}

}  // namespace qbridge
