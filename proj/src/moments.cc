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

#include <algorithm>

#include "qbridge/passes.h"

namespace qbridge {

std::vector<std::vector<std::size_t>> moments(const Circuit &circuit) {
    std::vector<std::size_t> qubit_free(circuit.num_qubits, 0);
    std::vector<std::size_t> clbit_free(circuit.num_clbits(), 0);
    std::vector<std::vector<std::size_t>> columns;

    for (std::size_t index = 0; index < circuit.ops.size(); ++index) {
        const Op &op = circuit.ops[index];
        std::vector<Qubit> qubits = op_qubits(op);
        std::vector<std::uint32_t> clbits;
        if (const auto *m = std::get_if<MeasureOp>(&op)) {
            if (auto offset = circuit.creg_offset(m->creg)) {
                clbits.push_back(*offset + m->bit);
            }
        } else if (const auto *c = std::get_if<ConditionalOp>(&op)) {
            auto offset = circuit.creg_offset(c->creg);
            const Register *reg = circuit.find_creg(c->creg);
            if (offset && reg) {
                for (std::uint32_t b = 0; b < reg->size; ++b) {
                    clbits.push_back(*offset + b);
                }
            }
        }

        std::size_t column = 0;
        for (auto q : qubits) {
            if (q < qubit_free.size()) {
                column = std::max(column, qubit_free[q]);
            }
        }
        for (auto b : clbits) {
            if (b < clbit_free.size()) {
                column = std::max(column, clbit_free[b]);
            }
        }
        if (column >= columns.size()) {
            columns.resize(column + 1);
        }
        columns[column].push_back(index);
        for (auto q : qubits) {
            if (q < qubit_free.size()) {
                qubit_free[q] = column + 1;
            }
        }
        for (auto b : clbits) {
            if (b < clbit_free.size()) {
                clbit_free[b] = column + 1;
            }
        }
    }
    return columns;
}

}  // namespace qbridge
