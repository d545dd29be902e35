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

#include "qbridge/circuit.h"

namespace qbridge::detail {

std::string emit_openqasm2(const Circuit &circuit);
std::string emit_quil2(const Circuit &circuit);
std::string emit_ionq_json(const Circuit &circuit);
std::string emit_quantum_circuit_json(const Circuit &circuit);
std::string emit_quirk_json(const Circuit &circuit);
std::string emit_qiskit(const Circuit &circuit);
std::string emit_cirq(const Circuit &circuit);
std::string emit_pyquil(const Circuit &circuit);

}  // namespace qbridge::detail
