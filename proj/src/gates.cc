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

#include "qbridge/gates.h"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qbridge {

Matrix Matrix::identity(std::size_t d) {
    Matrix m(d);
    for (std::size_t i = 0; i < d; ++i) {
        m(i, i) = 1;
    }
    return m;
}

Matrix Matrix::operator*(const Matrix &rhs) const {
    Matrix out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t k = 0; k < dim; ++k) {
            Complex a = (*this)(i, k);
            if (a == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < dim; ++j) {
                out(i, j) += a * rhs(k, j);
            }
        }
    }
    return out;
}

Matrix Matrix::adjoint() const {
    Matrix out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

double Matrix::unitarity_error() const {
    Matrix product = adjoint() * (*this);
    double worst = 0;
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            Complex expected = i == j ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(product(i, j) - expected));
        }
    }
    return worst;
}

namespace {

using namespace std::complex_literals;
constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Matrix single(Complex a, Complex b, Complex c, Complex d) {
    Matrix m(2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

Matrix u3_matrix(double theta, double phi, double lambda) {
    double c = std::cos(theta / 2);
    double s = std::sin(theta / 2);
    return single(c, -std::polar(1.0, lambda) * s, std::polar(1.0, phi) * s,
                  std::polar(1.0, phi + lambda) * c);
}

Matrix rz_matrix(double theta) {
    return single(std::polar(1.0, -theta / 2), 0, 0, std::polar(1.0, theta / 2));
}

Matrix phase_matrix(double theta) {
    return single(1, 0, 0, std::polar(1.0, theta));
}

/// The first `num_controls` operands control `target`, which acts on the
/// remaining operands.
Matrix controlled(const Matrix &target, std::size_t num_controls) {
    std::size_t control_dim = std::size_t{1} << num_controls;
    std::size_t dim = control_dim * target.dim;
    Matrix m = Matrix::identity(dim);
    std::size_t all_on = control_dim - 1;
    for (std::size_t r = 0; r < target.dim; ++r) {
        for (std::size_t s = 0; s < target.dim; ++s) {
            m(all_on | (r << num_controls), all_on | (s << num_controls)) = target(r, s);
        }
    }
    return m;
}

Matrix swap_matrix() {
    Matrix m(4);
    m(0, 0) = 1;
    m(1, 2) = 1;
    m(2, 1) = 1;
    m(3, 3) = 1;
    return m;
}

}  // namespace

StandardGateTable::StandardGateTable() {
    auto add = [&](std::string name, std::size_t params, std::size_t qubits,
                   std::function<Matrix(std::span<const double>)> fn) {
        gates_.push_back(StandardGate{std::move(name), params, qubits, std::move(fn)});
    };
    auto constant = [&](std::string name, std::size_t qubits, Matrix m) {
        add(std::move(name), 0, qubits, [m](std::span<const double>) { return m; });
    };

    const Matrix x = single(0, 1, 1, 0);
    const Matrix y = single(0, -1i, 1i, 0);
    const Matrix z = single(1, 0, 0, -1);
    const Matrix h = single(kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2);

    constant("id", 1, Matrix::identity(2));
    constant("x", 1, x);
    constant("y", 1, y);
    constant("z", 1, z);
    constant("h", 1, h);
    constant("s", 1, single(1, 0, 0, 1i));
    constant("sdg", 1, single(1, 0, 0, -1i));
    constant("t", 1, phase_matrix(kPi / 4));
    constant("tdg", 1, phase_matrix(-kPi / 4));
    constant("sx", 1, single(0.5 + 0.5i, 0.5 - 0.5i, 0.5 - 0.5i, 0.5 + 0.5i));
    add("rx", 1, 1, [](std::span<const double> p) {
        double c = std::cos(p[0] / 2);
        double s = std::sin(p[0] / 2);
        return single(c, -1i * s, -1i * s, c);
    });
    add("ry", 1, 1, [](std::span<const double> p) {
        double c = std::cos(p[0] / 2);
        double s = std::sin(p[0] / 2);
        return single(c, -s, s, c);
    });
    add("rz", 1, 1, [](std::span<const double> p) { return rz_matrix(p[0]); });
    add("p", 1, 1, [](std::span<const double> p) { return phase_matrix(p[0]); });
    add("u1", 1, 1, [](std::span<const double> p) { return phase_matrix(p[0]); });
    add("u2", 2, 1, [](std::span<const double> p) { return u3_matrix(kPi / 2, p[0], p[1]); });
    add("u3", 3, 1, [](std::span<const double> p) { return u3_matrix(p[0], p[1], p[2]); });
    constant("cx", 2, controlled(x, 1));
    constant("cy", 2, controlled(y, 1));
    constant("cz", 2, controlled(z, 1));
    constant("ch", 2, controlled(h, 1));
    constant("swap", 2, swap_matrix());
    add("crz", 1, 2, [](std::span<const double> p) { return controlled(rz_matrix(p[0]), 1); });
    add("cp", 1, 2, [](std::span<const double> p) { return controlled(phase_matrix(p[0]), 1); });
    constant("ccx", 3, controlled(x, 2));
    constant("cswap", 3, controlled(swap_matrix(), 1));
}

const StandardGateTable &StandardGateTable::instance() {
    static const StandardGateTable table;
    return table;
}

const StandardGate *StandardGateTable::find(std::string_view name) const {
    for (const auto &gate : gates_) {
        if (gate.name == name) {
            return &gate;
        }
    }
    return nullptr;
}

}  // namespace qbridge
