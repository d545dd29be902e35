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
#include <cmath>
#include <stdexcept>

#include "qbridge/simulator.h"

namespace qbridge {

StateVector::StateVector(std::uint32_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits > kMaxQubitsCeiling) {
        throw std::logic_error("state vector wider than the supported ceiling");
    }
    amplitudes_.assign(std::size_t{1} << num_qubits, Complex{0, 0});
    amplitudes_[0] = 1;
}

void StateVector::apply(const Matrix &unitary, std::span<const Qubit> qubits) {
    const std::size_t k = qubits.size();
    if (unitary.dim != (std::size_t{1} << k)) {
        throw std::logic_error("matrix size does not match operand count");
    }
    const std::size_t n = amplitudes_.size();
    Complex *a = amplitudes_.data();

    if (k == 1) {
        const std::size_t stride = std::size_t{1} << qubits[0];
        const Complex u00 = unitary(0, 0), u01 = unitary(0, 1), u10 = unitary(1, 0), u11 = unitary(1, 1);
        for (std::size_t block = 0; block < n; block += 2 * stride) {
            for (std::size_t i = block; i < block + stride; ++i) {
                const Complex x0 = a[i];
                const Complex x1 = a[i + stride];
                a[i] = u00 * x0 + u01 * x1;
                a[i + stride] = u10 * x0 + u11 * x1;
            }
        }
        return;
    }

    const std::size_t dim = unitary.dim;
    std::vector<std::size_t> offsets(dim, 0);
    for (std::size_t m = 0; m < dim; ++m) {
        for (std::size_t j = 0; j < k; ++j) {
            if ((m >> j) & 1) {
                offsets[m] |= std::size_t{1} << qubits[j];
            }
        }
    }
    std::vector<Qubit> sorted(qubits.begin(), qubits.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<Complex> in(dim), out(dim);
    const std::size_t groups = n >> k;
    for (std::size_t g = 0; g < groups; ++g) {
        // Spread the group counter over the non-operand bit positions.
        std::size_t base = g;
        for (Qubit q : sorted) {
            const std::size_t low = base & ((std::size_t{1} << q) - 1);
            base = ((base >> q) << (q + 1)) | low;
        }
        for (std::size_t m = 0; m < dim; ++m) {
            in[m] = a[base + offsets[m]];
        }
        for (std::size_t r = 0; r < dim; ++r) {
            Complex acc{0, 0};
            const Complex *row = &unitary.data[r * dim];
            for (std::size_t c = 0; c < dim; ++c) {
                acc += row[c] * in[c];
            }
            out[r] = acc;
        }
        for (std::size_t m = 0; m < dim; ++m) {
            a[base + offsets[m]] = out[m];
        }
    }
}

double StateVector::norm_squared() const {
    double total = 0;
    for (const auto &amp : amplitudes_) {
        total += std::norm(amp);
    }
    return total;
}

double StateVector::probability_one(Qubit qubit) const {
    const std::size_t bit = std::size_t{1} << qubit;
    double total = 0;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        if (i & bit) {
            total += std::norm(amplitudes_[i]);
        }
    }
    return total;
}

void StateVector::collapse(Qubit qubit, int outcome, double outcome_probability) {
    const std::size_t bit = std::size_t{1} << qubit;
    const double scale = outcome_probability > 0 ? 1.0 / std::sqrt(outcome_probability) : 0.0;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        const bool one = (i & bit) != 0;
        if (one == (outcome == 1)) {
            amplitudes_[i] *= scale;
        } else {
            amplitudes_[i] = 0;
        }
    }
}

void apply_gate(StateVector &state, const StandardGate &gate, std::span<const double> params,
                std::span<const Qubit> qubits) {
    if (qubits.size() != gate.num_qubits) {
        throw std::logic_error("gate '" + gate.name + "' applied to the wrong number of qubits");
    }
    if (params.size() != gate.num_params) {
        throw std::logic_error("gate '" + gate.name + "' given the wrong number of parameters");
    }
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        if (qubits[i] >= state.num_qubits()) {
            throw std::logic_error("qubit index out of range");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (qubits[i] == qubits[j]) {
                throw std::logic_error("repeated qubit operand");
            }
        }
    }
    state.apply(gate.matrix(params), qubits);
}

}  // namespace qbridge
