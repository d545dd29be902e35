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
#include <cmath>
#include <map>

#include "common/dialect_tables.h"
#include "expr_parser.h"
#include "json_doc.h"
#include "lexer.h"
#include "qbridge/frontends.h"
#include "qbridge/gates.h"

namespace qbridge {

namespace {

using detail::JsonCursor;
using detail::JsonDoc;

constexpr std::size_t kMaxColumns = std::size_t{1} << 16;

double evaluate_expression_text(const std::string &text) {
    detail::SourceText sub(text, "quantum-circuit-json");
    auto tokens = detail::tokenize(sub, detail::LexerConfig{"", false, ""});
    std::size_t pos = 0;
    auto resolver = [&](const detail::Token &id) -> Expr {
        sub.fail(ErrorKind::Semantic, id.offset, "unknown identifier '" + id.text + "'");
    };
    double v = detail::ExprParser(sub, tokens, pos, resolver).parse().evaluate({});
    if (tokens[pos].kind != detail::TokenKind::End) {
        sub.fail(ErrorKind::Syntax, tokens[pos].offset, "unexpected '" + tokens[pos].text + "'");
    }
    return v;
}

/// Parameter values are numbers or expression strings such as "pi/2".
double read_angle(const JsonCursor &value) {
    if (value.value().is_number()) {
        return value.as_number();
    }
    if (!value.value().is_string()) {
        value.fail(ErrorKind::Semantic, value.label() + " must be a number or an expression string");
    }
    const std::string &text = value.as_string();
    double v = 0;
    try {
        v = evaluate_expression_text(text);
    } catch (const ParseError &e) {
        value.fail(e.kind(), value.label() + ": invalid expression \"" + text + "\": " + e.what());
    }
    if (!std::isfinite(v)) {
        value.fail(ErrorKind::Semantic, value.label() + " does not evaluate to a finite number");
    }
    return v;
}

struct Cell {
    std::uint32_t wire;
    std::uint64_t connector;
    JsonCursor cursor;
};

class QcReader {
   public:
    explicit QcReader(const JsonDoc &doc) : doc_(doc) {
    }

    Circuit read() {
        JsonCursor top = JsonCursor::root(doc_);
        top.allow_keys({"numQubits", "gates", "customGates", "cregs", "params", "options", "name"});
        JsonCursor nq = top.at("numQubits");
        num_qubits_ = static_cast<std::uint32_t>(nq.as_uint(kMaxParsedQubits));
        Circuit c = Circuit::with_qubits(num_qubits_);
        if (auto name = top.get("name")) {
            c.name = name->as_string();
        }
        if (auto custom = top.get("customGates")) {
            if (!(custom->value().is_object() || custom->value().is_array())) {
                custom->fail(ErrorKind::Semantic, "customGates must be an object");
            }
            if (custom->size() != 0) {
                custom->fail(ErrorKind::UnsupportedConstruct, "custom gates are not supported");
            }
        }
        if (auto params = top.get("params")) {
            params->require_array();
            if (params->size() != 0) {
                params->fail(ErrorKind::UnsupportedConstruct, "global circuit parameters are not supported");
            }
        }
        if (auto options = top.get("options")) {
            options->require_object();
        }
        if (auto cregs = top.get("cregs")) {
            read_cregs(*cregs, c);
        }
        JsonCursor gates = top.at("gates");
        gates.require_array();
        if (gates.size() > num_qubits_) {
            gates.fail(ErrorKind::Semantic, "gates has " + std::to_string(gates.size()) + " wires but numQubits is " +
                                                std::to_string(num_qubits_));
        }
        std::size_t columns = 0;
        for (std::size_t w = 0; w < gates.size(); ++w) {
            JsonCursor wire = gates[w];
            wire.require_array();
            if (wire.size() > kMaxColumns) {
                wire.fail(ErrorKind::Semantic, "too many columns");
            }
            columns = std::max(columns, wire.size());
        }
        for (std::size_t col = 0; col < columns; ++col) {
            read_column(gates, col, c);
        }
        return c;
    }

   private:
    void read_cregs(const JsonCursor &cregs, Circuit &c) {
        cregs.require_object();
        std::uint32_t total = 0;
        for (const auto &[name, _] : cregs.value().items()) {
            JsonCursor entry = *cregs.get(name);
            std::uint64_t size = 0;
            if (entry.value().is_array()) {
                size = entry.size();
            } else {
                size = entry.as_uint(kMaxParsedClbits);
            }
            if (size == 0 || total + size > kMaxParsedClbits) {
                entry.fail(ErrorKind::Semantic, "invalid size for classical register \"" + name + "\"");
            }
            if (name.empty()) {
                entry.fail(ErrorKind::Semantic, "classical register names must not be empty");
            }
            total += static_cast<std::uint32_t>(size);
            c.cregs.push_back(Register{name, static_cast<std::uint32_t>(size)});
        }
    }

    void read_column(const JsonCursor &gates, std::size_t col, Circuit &c) {
        // Group cells by id, in order of first appearance from the top wire.
        std::vector<std::string> order;
        std::map<std::string, std::vector<Cell>> groups;
        for (std::size_t w = 0; w < gates.size(); ++w) {
            JsonCursor wire = gates[w];
            if (col >= wire.size()) {
                continue;
            }
            JsonCursor cell = wire[col];
            if (cell.is_null()) {
                continue;
            }
            cell.allow_keys({"id", "name", "connector", "options"});
            JsonCursor id = cell.at("id");
            std::string key;
            if (id.value().is_string()) {
                key = "s:" + id.as_string();
            } else if (id.value().is_number_integer()) {
                key = "n:" + id.value().dump();
            } else {
                id.fail(ErrorKind::Semantic, id.label() + " must be a string or integer");
            }
            std::uint64_t connector = 0;
            if (auto conn = cell.get("connector")) {
                connector = conn->as_uint(3);
            }
            auto &group = groups[key];
            if (group.empty()) {
                order.push_back(key);
            }
            group.push_back(Cell{static_cast<std::uint32_t>(w), connector, cell});
        }
        for (const auto &key : order) {
            read_op(groups[key], c);
        }
    }

    void read_op(std::vector<Cell> &cells, Circuit &c) {
        const JsonCursor &first = cells.front().cursor;
        std::string name = first.at("name").as_string();
        for (const auto &cell : cells) {
            if (cell.cursor.at("name").as_string() != name) {
                cell.cursor.fail(ErrorKind::Semantic, "cells sharing an id must name the same gate");
            }
        }
        std::sort(cells.begin(), cells.end(), [](const Cell &a, const Cell &b) { return a.connector < b.connector; });
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (cells[i].connector != i) {
                cells[i].cursor.fail(ErrorKind::Semantic, "connectors of gate \"" + name + "\" must be 0.." +
                                                              std::to_string(cells.size() - 1) + " without gaps");
            }
        }
        std::vector<Qubit> qubits;
        for (const auto &cell : cells) {
            qubits.push_back(cell.wire);
        }
        std::optional<JsonCursor> options;
        for (const auto &cell : cells) {
            if (auto o = cell.cursor.get("options")) {
                o->require_object();
                if (!options || options->size() == 0) {
                    options = *o;
                }
            }
        }

        if (name == "measure" || name == "reset") {
            if (qubits.size() != 1) {
                first.fail(ErrorKind::Semantic, name + " acts on one wire");
            }
            if (options) {
                options->allow_keys(name == "measure" ? std::initializer_list<std::string_view>{"creg"}
                                                      : std::initializer_list<std::string_view>{});
            }
            if (name == "reset") {
                c.ops.emplace_back(ResetOp{qubits[0]});
                return;
            }
            if (!options || !options->get("creg")) {
                first.fail(ErrorKind::Semantic, "measure requires options.creg");
            }
            JsonCursor creg = options->at("creg");
            creg.allow_keys({"name", "bit"});
            const std::string &creg_name = creg.at("name").as_string();
            JsonCursor bit = creg.at("bit");
            const Register *reg = c.find_creg(creg_name);
            if (reg == nullptr) {
                creg.fail(ErrorKind::Semantic, "undeclared classical register \"" + creg_name + "\"");
            }
            auto b = bit.as_uint(kMaxParsedClbits);
            if (b >= reg->size) {
                bit.fail(ErrorKind::Semantic, "bit " + std::to_string(b) + " out of range for \"" + creg_name + "\"");
            }
            c.ops.emplace_back(MeasureOp{qubits[0], creg_name, static_cast<std::uint32_t>(b)});
            return;
        }

        const auto *table = detail::find_qc_gate(name);
        if (table == nullptr) {
            first.at("name").fail(ErrorKind::UnsupportedConstruct, "gate \"" + name + "\" is not supported");
        }
        const StandardGate *gate = StandardGateTable::instance().find(table->ir);
        if (qubits.size() != gate->num_qubits) {
            first.fail(ErrorKind::Semantic, "gate \"" + name + "\" expects " + std::to_string(gate->num_qubits) +
                                                " wires, got " + std::to_string(qubits.size()));
        }
        GateOp op{std::string(table->ir), {}, qubits};
        if (table->fixed_angle) {
            op.params.push_back(*table->fixed_angle);
        }
        std::optional<JsonCursor> params;
        std::optional<JsonCursor> condition;
        if (options) {
            options->allow_keys({"params", "condition"});
            params = options->get("params");
            condition = options->get("condition");
        }
        if (params) {
            params->require_object();
            for (const auto &[key, _] : params->value().items()) {
                if (std::find(table->param_names.begin(), table->param_names.end(), key) ==
                    table->param_names.end()) {
                    params->get(key)->fail(ErrorKind::Semantic,
                                           "gate \"" + name + "\" has no parameter \"" + key + "\"");
                }
            }
        }
        for (auto pname : table->param_names) {
            std::optional<JsonCursor> value;
            if (params) {
                value = params->get(pname);
            }
            if (!value) {
                first.fail(ErrorKind::Semantic,
                           "gate \"" + name + "\" requires parameter \"" + std::string(pname) + "\"");
            }
            op.params.push_back(read_angle(*value));
        }
        if (condition) {
            condition->allow_keys({"creg", "value"});
            const std::string &creg_name = condition->at("creg").as_string();
            if (c.find_creg(creg_name) == nullptr) {
                condition->fail(ErrorKind::Semantic, "undeclared classical register \"" + creg_name + "\"");
            }
            std::uint64_t value = condition->at("value").as_uint(UINT64_MAX);
            c.ops.emplace_back(ConditionalOp{creg_name, value, std::move(op)});
            return;
        }
        c.ops.emplace_back(std::move(op));
    }

    const JsonDoc &doc_;
    std::uint32_t num_qubits_ = 0;
};

}  // namespace

Circuit parse_quantum_circuit_json(std::string_view source) {
    JsonDoc doc(source, "quantum-circuit-json");
    return QcReader(doc).read();
}

}  // namespace qbridge
