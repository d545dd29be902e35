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

#include <string>
#include <vector>

#include "qbridge/circuit.h"
#include "qbridge/codegen.h"
#include "qbridge/error.h"

namespace qbridge::detail {

[[noreturn]] void unsupported(TargetDialect target, const std::string &what);

/// Rejects macros and gates the target cannot write directly.
void require_native(const Circuit &circuit, TargetDialect target);

/// Global classical bit index of a measurement.
std::uint32_t clbit_of(const Circuit &circuit, const MeasureOp &m);

/// True when no op follows a measurement on its qubit and there are no
/// conditionals, i.e. measurements only read out the final state.
bool measures_are_terminal(const Circuit &circuit);

/// True when the measurements read every qubit exactly once into the
/// classical bit of the same index, with nothing else classical declared.
bool measures_read_out_all_in_order(const Circuit &circuit);

/// Emitted classical registers: one register "c" holding every bit, or the
/// original registers (renamed only when a name is unusable) when
/// conditionals need to refer to them.
struct ClassicalLayout {
    bool flattened = true;
    std::vector<std::string> names;  // parallel to Circuit::cregs when not flattened

    std::string creg_name(const Circuit &circuit, std::string_view original) const;
};

ClassicalLayout classical_layout(const Circuit &circuit, bool (*usable)(std::string_view),
                                 const std::vector<std::string> &reserved);

}  // namespace qbridge::detail
