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

#include "json.hpp"

#include "qbridge/circuit.h"

namespace qbridge {

/// Canonical IR JSON:
///   {"name": str, "qubits": int, "cregs": [{"name", "size"}], "ops": [...]}
/// with ops of kind gate, measure, reset, barrier or conditional. The circuit
/// must not contain gate macros; expand them first.
nlohmann::ordered_json circuit_to_json(const Circuit &circuit);

/// Strict inverse of circuit_to_json. Unknown fields, wrong types and
/// invariant violations raise Error(InvalidArgument / InvalidCircuit).
Circuit circuit_from_json(const nlohmann::json &json);

}  // namespace qbridge
