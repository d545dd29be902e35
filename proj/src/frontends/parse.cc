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

#include "qbridge/frontends.h"
#include "qbridge/passes.h"

namespace qbridge {

Circuit parse(SourceDialect dialect, std::string_view source) {
    Circuit circuit;
    switch (dialect) {
        case SourceDialect::OpenQasm2:
            circuit = parse_openqasm2(source);
            break;
        case SourceDialect::Quil2:
            circuit = parse_quil2(source);
            break;
        case SourceDialect::IonqJson:
            circuit = parse_ionq_json(source);
            break;
        case SourceDialect::QuantumCircuitJson:
            circuit = parse_quantum_circuit_json(source);
            break;
        case SourceDialect::QuirkJson:
            circuit = parse_quirk_json(source);
            break;
    }
    require_valid(circuit);
    return circuit;
}

}  // namespace qbridge
