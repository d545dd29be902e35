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

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qbridge {

using Complex = std::complex<double>;

/// Dense row-major square matrix over a gate's local qubits.
///
/// Local basis index bit j corresponds to the j-th operand of the gate
/// (first operand is the least significant bit). For cx, operand 0 is the
/// control and operand 1 the target.
struct Matrix {
    std::size_t dim = 0;
    std::vector<Complex> data;

    Matrix() = default;
    explicit Matrix(std::size_t d) : dim(d), data(d * d) {
    }

    Complex &operator()(std::size_t row, std::size_t col) {
        return data[row * dim + col];
    }
    const Complex &operator()(std::size_t row, std::size_t col) const {
        return data[row * dim + col];
    }

    static Matrix identity(std::size_t d);
    Matrix operator*(const Matrix &rhs) const;
    Matrix adjoint() const;
    /// max |(U^dagger U - I)_ij|
    double unitarity_error() const;
};

struct StandardGate {
    std::string name;
    std::size_t num_params = 0;
    std::size_t num_qubits = 0;
    std::function<Matrix(std::span<const double>)> matrix;
};

/// The qelib1-equivalent built-in gate library.
class StandardGateTable {
   public:
    static const StandardGateTable &instance();

    const StandardGate *find(std::string_view name) const;
    bool contains(std::string_view name) const {
        return find(name) != nullptr;
    }
    const std::vector<StandardGate> &gates() const {
        return gates_;
    }

   private:
    StandardGateTable();
    std::vector<StandardGate> gates_;
};

}  // namespace qbridge
