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

#include "qbridge/dialect.h"

#include <array>
#include <utility>

namespace qbridge {

namespace {

constexpr std::array<std::pair<TargetDialect, std::string_view>, 8> kTargetNames{{
    {TargetDialect::OpenQasm2, "openqasm2"},
    {TargetDialect::Quil2, "quil2"},
    {TargetDialect::IonqJson, "ionq-json"},
    {TargetDialect::QuantumCircuitJson, "quantum-circuit-json"},
    {TargetDialect::QuirkJson, "quirk-json"},
    {TargetDialect::QiskitSrc, "qiskit-src"},
    {TargetDialect::CirqSrc, "cirq-src"},
    {TargetDialect::PyquilSrc, "pyquil-src"},
}};

constexpr std::array<SourceDialect, 5> kSources{
    SourceDialect::OpenQasm2,          SourceDialect::Quil2,     SourceDialect::IonqJson,
    SourceDialect::QuantumCircuitJson, SourceDialect::QuirkJson,
};

constexpr std::array<TargetDialect, 8> kTargets{
    TargetDialect::OpenQasm2, TargetDialect::Quil2,     TargetDialect::IonqJson,
    TargetDialect::QuantumCircuitJson, TargetDialect::QuirkJson, TargetDialect::QiskitSrc,
    TargetDialect::CirqSrc,   TargetDialect::PyquilSrc,
};

}  // namespace

std::string_view dialect_name(TargetDialect dialect) {
    for (const auto &[d, name] : kTargetNames) {
        if (d == dialect) {
            return name;
        }
    }
    return "unknown";
}

std::string_view dialect_name(SourceDialect dialect) {
    return dialect_name(as_target(dialect));
}

std::optional<TargetDialect> parse_target_dialect(std::string_view name) {
    for (const auto &[d, n] : kTargetNames) {
        if (n == name) {
            return d;
        }
    }
    return std::nullopt;
}

std::optional<SourceDialect> parse_source_dialect(std::string_view name) {
    auto target = parse_target_dialect(name);
    if (!target) {
        return std::nullopt;
    }
    return as_source(*target);
}

std::span<const SourceDialect> all_source_dialects() {
    return kSources;
}

std::span<const TargetDialect> all_target_dialects() {
    return kTargets;
}

TargetDialect as_target(SourceDialect dialect) {
    switch (dialect) {
        case SourceDialect::OpenQasm2:
            return TargetDialect::OpenQasm2;
        case SourceDialect::Quil2:
            return TargetDialect::Quil2;
        case SourceDialect::IonqJson:
            return TargetDialect::IonqJson;
        case SourceDialect::QuantumCircuitJson:
            return TargetDialect::QuantumCircuitJson;
        case SourceDialect::QuirkJson:
            return TargetDialect::QuirkJson;
    }
    return TargetDialect::OpenQasm2;
}

std::optional<SourceDialect> as_source(TargetDialect dialect) {
    switch (dialect) {
        case TargetDialect::OpenQasm2:
            return SourceDialect::OpenQasm2;
        case TargetDialect::Quil2:
            return SourceDialect::Quil2;
        case TargetDialect::IonqJson:
            return SourceDialect::IonqJson;
        case TargetDialect::QuantumCircuitJson:
            return SourceDialect::QuantumCircuitJson;
        case TargetDialect::QuirkJson:
            return SourceDialect::QuirkJson;
        default:
            return std::nullopt;
    }
}

bool is_textual(SourceDialect dialect) {
    return dialect == SourceDialect::OpenQasm2 || dialect == SourceDialect::Quil2;
}

}  // namespace qbridge
