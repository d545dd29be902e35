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

#pragma once

#include <optional>
#include <utility>
#include <span>
#include <string_view>
#include <vector>

namespace qbridge::detail {

/// Gate names shared by a frontend and its emitter.
struct QuilGateName {
    std::string_view quil;
    std::string_view ir;
    std::size_t num_params;
    std::size_t num_qubits;
};

std::span<const QuilGateName> quil_gate_names();
const QuilGateName *find_quil_gate(std::string_view quil_name);
const QuilGateName *find_quil_gate_for_ir(std::string_view ir_name);

/// quantum-circuit gate names. Gates like r8 map to an IR gate with a fixed
/// angle; the rest carry named options.params entries.
struct QcGateName {
    std::string_view qc;
    std::string_view ir;
    std::vector<std::string_view> param_names;
    std::optional<double> fixed_angle;
};

std::span<const QcGateName> qc_gate_names();
const QcGateName *find_qc_gate(std::string_view qc_name);
/// Preferred quantum-circuit spelling of an IR gate (without fixed angles).
const QcGateName *find_qc_gate_for_ir(std::string_view ir_name);

/// Quirk's plain gate symbols. "Measure" maps to the pseudo-name "measure".
struct QuirkSymbol {
    std::string_view quirk;
    std::string_view ir;
};

const QuirkSymbol *find_quirk_symbol(std::string_view symbol);
const QuirkSymbol *find_quirk_symbol_for_ir(std::string_view ir_name);

/// IR gate for a Quirk symbol under `num_controls` controls, with the fixed
/// angle it needs (controlled Z^½ becomes cp(pi/2)).
std::optional<std::pair<std::string_view, std::optional<double>>> quirk_controlled(std::string_view ir,
                                                                                   std::size_t num_controls);

/// Inverse of quirk_controlled for cx, cy, cz, ch, cswap and ccx.
std::optional<std::pair<std::string_view, std::size_t>> quirk_uncontrolled(std::string_view ir);

}  // namespace qbridge::detail
