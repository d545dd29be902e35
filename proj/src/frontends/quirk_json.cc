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

#include "common/dialect_tables.h"
#include "json_doc.h"
#include "qbridge/frontends.h"

namespace qbridge {

namespace {

using detail::JsonCursor;
using detail::JsonDoc;

constexpr std::size_t kMaxQuirkColumns = std::size_t{1} << 16;

struct Target {
    Qubit qubit;
    const detail::QuirkSymbol *symbol;
    JsonCursor cursor;
};

class QuirkReader {
   public:
    explicit QuirkReader(const JsonDoc &doc) : doc_(doc) {
    }

    Circuit read() {
        JsonCursor top = JsonCursor::root(doc_);
        top.require_object();
        for (const auto &[key, _] : top.value().items()) {
            if (key != "cols") {
                top.get(key)->fail(ErrorKind::UnsupportedConstruct,
                                   "Quirk key \"" + key + "\" is not supported (only \"cols\")");
            }
        }
        JsonCursor cols = top.at("cols");
        cols.require_array();
        if (cols.size() > kMaxQuirkColumns) {
            cols.fail(ErrorKind::Semantic, "too many columns");
        }
        std::size_t width = 0;
        for (std::size_t i = 0; i < cols.size(); ++i) {
            JsonCursor col = cols[i];
            col.require_array();
            width = std::max(width, col.size());
        }
        if (width > kMaxParsedQubits) {
            cols.fail(ErrorKind::Semantic, "too many qubits");
        }
        Circuit c = Circuit::with_qubits(static_cast<std::uint32_t>(width));
        bool measured = false;
        for (std::size_t i = 0; i < cols.size(); ++i) {
            read_column(cols[i], c, measured);
        }
        if (measured) {
            c.cregs.push_back(Register{"c", c.num_qubits});
        }
        return c;
    }

   private:
    void read_column(const JsonCursor &col, Circuit &c, bool &measured) {
        std::vector<Qubit> controls;
        std::vector<Target> targets;
        for (std::size_t row = 0; row < col.size(); ++row) {
            JsonCursor cell = col[row];
            const auto &v = cell.value();
            if (v.is_number() && v == 1) {
                continue;
            }
            if (!v.is_string()) {
                cell.fail(ErrorKind::UnsupportedConstruct, "only built-in Quirk gate symbols are supported");
            }
            const std::string &symbol = v.get_ref<const std::string &>();
            if (symbol == "•") {
                controls.push_back(static_cast<Qubit>(row));
                continue;
            }
            const auto *entry = detail::find_quirk_symbol(symbol);
            if (entry == nullptr) {
                cell.fail(ErrorKind::UnsupportedConstruct, "Quirk gate \"" + symbol + "\" is not supported");
            }
            targets.push_back(Target{static_cast<Qubit>(row), entry, cell});
        }
        std::vector<Target> swaps;
        std::vector<Target> others;
        for (auto &t : targets) {
            (t.symbol->ir == "swap" ? swaps : others).push_back(t);
        }
        if (!swaps.empty() && swaps.size() != 2) {
            swaps.front().cursor.fail(ErrorKind::Semantic, "a Swap column needs exactly two Swap cells");
        }
        if (targets.empty()) {
            if (!controls.empty()) {
                col.fail(ErrorKind::Semantic, "controls without a target");
            }
            return;
        }
        for (const auto &t : others) {
            if (t.symbol->ir == "measure") {
                if (!controls.empty()) {
                    t.cursor.fail(ErrorKind::UnsupportedConstruct, "controlled measurement is not supported");
                }
                c.ops.emplace_back(MeasureOp{t.qubit, "c", t.qubit});
                measured = true;
                continue;
            }
            add_gate(t.symbol, controls, {t.qubit}, t.cursor, c);
        }
        if (!swaps.empty()) {
            add_gate(swaps[0].symbol, controls, {swaps[0].qubit, swaps[1].qubit}, swaps[0].cursor, c);
        }
    }

    static void add_gate(const detail::QuirkSymbol *symbol, const std::vector<Qubit> &controls,
                         std::vector<Qubit> targets, const JsonCursor &cursor, Circuit &c) {
        std::vector<Qubit> qubits = controls;
        qubits.insert(qubits.end(), targets.begin(), targets.end());
        std::string name(symbol->ir);
        std::vector<double> params;
        if (!controls.empty()) {
            auto controlled = detail::quirk_controlled(symbol->ir, controls.size());
            if (!controlled) {
                cursor.fail(ErrorKind::UnsupportedConstruct,
                            "\"" + std::string(symbol->quirk) + "\" with " + std::to_string(controls.size()) +
                                " control(s) is not supported");
            }
            name = std::string(controlled->first);
            if (controlled->second) {
                params.push_back(*controlled->second);
            }
        }
        c.ops.emplace_back(GateOp{name, params, qubits});
    }

    const JsonDoc &doc_;
};

}  // namespace

Circuit parse_quirk_json(std::string_view source) {
    JsonDoc doc(source, "quirk-json");
    return QuirkReader(doc).read();
}

}  // namespace qbridge
