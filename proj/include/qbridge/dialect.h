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
#include <span>
#include <string_view>

namespace qbridge {

enum class SourceDialect {
    OpenQasm2,
    Quil2,
    IonqJson,
    QuantumCircuitJson,
    QuirkJson,
};

enum class TargetDialect {
    OpenQasm2,
    Quil2,
    IonqJson,
    QuantumCircuitJson,
    QuirkJson,
    QiskitSrc,
    CirqSrc,
    PyquilSrc,
};

std::string_view dialect_name(SourceDialect dialect);
std::string_view dialect_name(TargetDialect dialect);

// Exact identifiers only ("openqasm2", "ionq-json", ...); no case folding.
std::optional<SourceDialect> parse_source_dialect(std::string_view name);
std::optional<TargetDialect> parse_target_dialect(std::string_view name);

std::span<const SourceDialect> all_source_dialects();
std::span<const TargetDialect> all_target_dialects();

/// Every source dialect can also be emitted.
TargetDialect as_target(SourceDialect dialect);
std::optional<SourceDialect> as_source(TargetDialect dialect);

bool is_textual(SourceDialect dialect);

}  // namespace qbridge
