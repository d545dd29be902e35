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

#include "common/dialect_tables.h"

#include <algorithm>
#include <numbers>

namespace qbridge::detail {

namespace {

constexpr QuilGateName kQuilGates[] = {
    {"I", "id", 0, 1},     {"H", "h", 0, 1},          {"X", "x", 0, 1},        {"Y", "y", 0, 1},
    {"Z", "z", 0, 1},      {"S", "s", 0, 1},          {"T", "t", 0, 1},        {"RX", "rx", 1, 1},
    {"RY", "ry", 1, 1},    {"RZ", "rz", 1, 1},        {"PHASE", "p", 1, 1},    {"CNOT", "cx", 0, 2},
    {"CZ", "cz", 0, 2},    {"SWAP", "swap", 0, 2},    {"CCNOT", "ccx", 0, 3},  {"CSWAP", "cswap", 0, 3},
    {"CPHASE", "cp", 1, 2},
};

const std::vector<QcGateName> &qc_table() {
    constexpr double pi = std::numbers::pi;
    static const std::vector<QcGateName> table = {
        {"id", "id", {}, {}},
        {"x", "x", {}, {}},
        {"y", "y", {}, {}},
        {"z", "z", {}, {}},
        {"h", "h", {}, {}},
        {"s", "s", {}, {}},
        {"sdg", "sdg", {}, {}},
        {"t", "t", {}, {}},
        {"tdg", "tdg", {}, {}},
        {"srn", "sx", {}, {}},
        {"rx", "rx", {"theta"}, {}},
        {"ry", "ry", {"theta"}, {}},
        {"rz", "rz", {"phi"}, {}},
        {"u1", "u1", {"lambda"}, {}},
        {"u2", "u2", {"phi", "lambda"}, {}},
        {"u3", "u3", {"theta", "phi", "lambda"}, {}},
        {"cx", "cx", {}, {}},
        {"cy", "cy", {}, {}},
        {"cz", "cz", {}, {}},
        {"ch", "ch", {}, {}},
        {"crz", "crz", {"phi"}, {}},
        {"cu1", "cp", {"lambda"}, {}},
        {"swap", "swap", {}, {}},
        {"ccx", "ccx", {}, {}},
        {"cswap", "cswap", {}, {}},
        {"r2", "s", {}, {}},
        {"r4", "t", {}, {}},
        {"r8", "p", {}, pi / 8},
        {"cr2", "cp", {}, pi / 2},
        {"cr4", "cp", {}, pi / 4},
        {"cr8", "cp", {}, pi / 8},
    };
    return table;
}

constexpr QuirkSymbol kQuirkSymbols[] = {
    {"H", "h"},        {"X", "x"},         {"Y", "y"},       {"Z", "z"},
    {"Z^½", "s"},      {"Z^-½", "sdg"},    {"Z^¼", "t"},     {"Z^-¼", "tdg"},
    {"X^½", "sx"},     {"Swap", "swap"},   {"Measure", "measure"},
};

}  // namespace

const QuirkSymbol *find_quirk_symbol(std::string_view symbol) {
    for (const auto &s : kQuirkSymbols) {
        if (s.quirk == symbol) {
            return &s;
        }
    }
    return nullptr;
}

const QuirkSymbol *find_quirk_symbol_for_ir(std::string_view ir_name) {
    for (const auto &s : kQuirkSymbols) {
        if (s.ir == ir_name) {
            return &s;
        }
    }
    return nullptr;
}

std::optional<std::pair<std::string_view, std::optional<double>>> quirk_controlled(std::string_view ir,
                                                                                   std::size_t num_controls) {
    constexpr double pi = std::numbers::pi;
    using Result = std::pair<std::string_view, std::optional<double>>;
    if (num_controls == 2 && ir == "x") {
        return Result{"ccx", std::nullopt};
    }
    if (num_controls != 1) {
        return std::nullopt;
    }
    if (ir == "x") return Result{"cx", std::nullopt};
    if (ir == "y") return Result{"cy", std::nullopt};
    if (ir == "z") return Result{"cz", std::nullopt};
    if (ir == "h") return Result{"ch", std::nullopt};
    if (ir == "swap") return Result{"cswap", std::nullopt};
    if (ir == "s") return Result{"cp", pi / 2};
    if (ir == "sdg") return Result{"cp", -pi / 2};
    if (ir == "t") return Result{"cp", pi / 4};
    if (ir == "tdg") return Result{"cp", -pi / 4};
    return std::nullopt;
}

std::optional<std::pair<std::string_view, std::size_t>> quirk_uncontrolled(std::string_view ir) {
    using Result = std::pair<std::string_view, std::size_t>;
    if (ir == "cx") return Result{"x", 1};
    if (ir == "cy") return Result{"y", 1};
    if (ir == "cz") return Result{"z", 1};
    if (ir == "ch") return Result{"h", 1};
    if (ir == "cswap") return Result{"swap", 1};
    if (ir == "ccx") return Result{"x", 2};
    return std::nullopt;
}

std::span<const QuilGateName> quil_gate_names() {
    return kQuilGates;
}

const QuilGateName *find_quil_gate(std::string_view quil_name) {
    auto it = std::find_if(std::begin(kQuilGates), std::end(kQuilGates),
                           [&](const QuilGateName &g) { return g.quil == quil_name; });
    return it == std::end(kQuilGates) ? nullptr : &*it;
}

const QuilGateName *find_quil_gate_for_ir(std::string_view ir_name) {
    auto it = std::find_if(std::begin(kQuilGates), std::end(kQuilGates),
                           [&](const QuilGateName &g) { return g.ir == ir_name; });
    return it == std::end(kQuilGates) ? nullptr : &*it;
}

std::span<const QcGateName> qc_gate_names() {
    return qc_table();
}

const QcGateName *find_qc_gate(std::string_view qc_name) {
    const auto &t = qc_table();
    auto it = std::find_if(t.begin(), t.end(), [&](const QcGateName &g) { return g.qc == qc_name; });
    return it == t.end() ? nullptr : &*it;
}

const QcGateName *find_qc_gate_for_ir(std::string_view ir_name) {
    const auto &t = qc_table();
    auto it = std::find_if(t.begin(), t.end(),
                           [&](const QcGateName &g) { return g.ir == ir_name && !g.fixed_angle; });
    return it == t.end() ? nullptr : &*it;
}

}  // namespace qbridge::detail
