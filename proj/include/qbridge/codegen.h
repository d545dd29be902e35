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

#include <functional>
#include <string>
#include <string_view>

#include "qbridge/circuit.h"
#include "qbridge/dialect.h"

namespace qbridge {

/// Default shot count baked into generated framework programs.
inline constexpr int kFrameworkDefaultShots = 1024;

/// Renders a circuit in the target dialect. The circuit must already use
/// only gates native to the target (see decompose_for); macros are only
/// emitted for openqasm2. Output is deterministic, UTF-8 with LF endings.
/// Throws Error(UnsupportedForTarget) for anything the target cannot express.
std::string emit(const Circuit &circuit, TargetDialect target);

/// Whether a standard gate can be written directly in the target.
bool is_native(std::string_view gate, TargetDialect target);

using NativePredicate = std::function<bool(std::string_view)>;

/// Rewrites gates until every one satisfies `native`, using a fixed table of
/// exact (up to global phase) decompositions. Throws UnsupportedForTarget,
/// naming `target_label`, when no rule closes the gap.
Circuit decompose_to(const Circuit &circuit, const NativePredicate &native,
                     std::string_view target_label);

Circuit decompose_for(const Circuit &circuit, TargetDialect target);

/// parse -> expand_macros -> decompose_for -> emit. Errors carry the stage.
std::string convert(SourceDialect from, TargetDialect to, std::string_view source);

}  // namespace qbridge
