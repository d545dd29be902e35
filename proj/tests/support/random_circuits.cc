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

#include "random_circuits.h"

#include <algorithm>
#include <numbers>

#include "qbridge/gates.h"

namespace testing_support {

using qbridge::Circuit;
using qbridge::GateOp;
using qbridge::MeasureOp;
using qbridge::Qubit;

const std::vector<std::string> &common_gate_set() {
    static const std::vector<std::string> gates = {"x",  "y",  "z",  "h",    "s",   "t",    "rx",
                                                   "ry", "rz", "cx", "cz", "swap", "ccx", "cswap"};
    return gates;
}

Circuit random_circuit(std::mt19937_64 &rng, const RandomCircuitShape &shape) {
    const auto &table = qbridge::StandardGateTable::instance();
    std::vector<std::string> pool = shape.gates;
    if (pool.empty()) {
        for (const auto &g : table.gates()) {
            pool.push_back(g.name);
        }
    }
    std::uniform_int_distribution<std::uint32_t> width(1, shape.max_qubits);
    const std::uint32_t n = width(rng);
    std::vector<std::string> usable;
    for (const auto &name : pool) {
        if (table.find(name)->num_qubits <= n) {
            usable.push_back(name);
        }
    }
    Circuit c = Circuit::with_qubits(n);
    std::uniform_int_distribution<std::size_t> count(0, shape.max_gates);
    std::uniform_int_distribution<std::size_t> pick(0, usable.size() - 1);
    std::uniform_real_distribution<double> angle(-2 * std::numbers::pi, 2 * std::numbers::pi);
    std::vector<Qubit> qubits(n);
    const std::size_t num_gates = count(rng);
    for (std::size_t i = 0; i < num_gates; ++i) {
        const auto *gate = table.find(usable[pick(rng)]);
        for (Qubit q = 0; q < n; ++q) {
            qubits[q] = q;
        }
        std::shuffle(qubits.begin(), qubits.end(), rng);
        GateOp op{gate->name, {}, {qubits.begin(), qubits.begin() + static_cast<long>(gate->num_qubits)}};
        for (std::size_t k = 0; k < gate->num_params; ++k) {
            op.params.push_back(angle(rng));
        }
        c.ops.emplace_back(std::move(op));
    }
    if (shape.terminal_measures) {
        c.cregs.push_back({"c", n});
        std::vector<std::uint32_t> bits(n);
        for (std::uint32_t b = 0; b < n; ++b) {
            bits[b] = b;
        }
        std::shuffle(bits.begin(), bits.end(), rng);
        std::bernoulli_distribution measure_it(0.8);
        for (Qubit q = 0; q < n; ++q) {
            if (measure_it(rng)) {
                c.ops.emplace_back(MeasureOp{q, "c", bits[q]});
            }
        }
    }
    return c;
}

}  // namespace testing_support
