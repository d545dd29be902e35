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

#include "codegen/emitters.h"
#include "qbridge/codegen.h"
#include "qbridge/frontends.h"
#include "qbridge/passes.h"

namespace qbridge {

std::string emit(const Circuit &circuit, TargetDialect target) {
    require_valid(circuit);
    switch (target) {
        case TargetDialect::OpenQasm2:
            return detail::emit_openqasm2(circuit);
        case TargetDialect::Quil2:
            return detail::emit_quil2(circuit);
        case TargetDialect::IonqJson:
            return detail::emit_ionq_json(circuit);
        case TargetDialect::QuantumCircuitJson:
            return detail::emit_quantum_circuit_json(circuit);
        case TargetDialect::QuirkJson:
            return detail::emit_quirk_json(circuit);
        case TargetDialect::QiskitSrc:
            return detail::emit_qiskit(circuit);
        case TargetDialect::CirqSrc:
            return detail::emit_cirq(circuit);
        case TargetDialect::PyquilSrc:
            return detail::emit_pyquil(circuit);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown target dialect");
}

namespace {

template <typename F>
auto staged(const char *stage, F &&f) {
    try {
        return f();
    } catch (Error &e) {
        e.set_stage(stage);
        throw;
    }
}

}  // namespace

std::string convert(SourceDialect from, TargetDialect to, std::string_view source) {
    Circuit parsed = staged("parse", [&] { return parse(from, source); });
    Circuit expanded = staged("expand", [&] { return expand_macros(parsed); });
    Circuit lowered = staged("decompose", [&] { return decompose_for(expanded, to); });
    return staged("emit", [&] { return emit(lowered, to); });
}

}  // namespace qbridge
