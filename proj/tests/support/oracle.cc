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

#include "oracle.h"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace oracle {

namespace {

using namespace std::complex_literals;
constexpr double kPi = std::numbers::pi;

Dense m2(C a, C b, C c, C d) {
    Dense m(2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
}

const Dense I2 = m2(1, 0, 0, 1);
const Dense X = m2(0, 1, 1, 0);
const Dense Y = m2(0, -1i, 1i, 0);
const Dense Z = m2(1, 0, 0, -1);
const Dense P0 = m2(1, 0, 0, 0);
const Dense P1 = m2(0, 0, 0, 1);
const Dense Hd = m2(1, 1, 1, -1).scaled(1 / std::sqrt(2.0));

Dense phase(double l) {
    return m2(1, 0, 0, std::exp(1i * l));
}

Dense rx(double t) {
    return m2(std::cos(t / 2), -1i * std::sin(t / 2), -1i * std::sin(t / 2), std::cos(t / 2));
}

Dense ry(double t) {
    return m2(std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2));
}

Dense rz(double t) {
    return m2(std::exp(-0.5i * t), 0, 0, std::exp(0.5i * t));
}

Dense u3(double t, double p, double l) {
    return m2(std::cos(t / 2), -std::exp(1i * l) * std::sin(t / 2), std::exp(1i * p) * std::sin(t / 2),
              std::exp(1i * (p + l)) * std::cos(t / 2));
}

std::vector<Term> single(const Dense &m) {
    return {{1, {m}}};
}

/// |0><0| (x) 1 + |1><1| (x) U, with U on the last operands.
std::vector<Term> controlled(const std::vector<Term> &u) {
    std::size_t k = u.front().factors.size();
    std::vector<Term> out;
    Term off{1, {P0}};
    for (std::size_t i = 0; i < k; ++i) {
        off.factors.push_back(I2);
    }
    out.push_back(off);
    for (const auto &t : u) {
        Term on{t.coeff, {P1}};
        on.factors.insert(on.factors.end(), t.factors.begin(), t.factors.end());
        out.push_back(on);
    }
    return out;
}

/// SWAP = (II + XX + YY + ZZ) / 2
std::vector<Term> swap_terms() {
    return {{0.5, {I2, I2}}, {0.5, {X, X}}, {0.5, {Y, Y}}, {0.5, {Z, Z}}};
}

}  // namespace

Dense Dense::eye(std::size_t d) {
    Dense m(d);
    for (std::size_t i = 0; i < d; ++i) {
        m.at(i, i) = 1;
    }
    return m;
}

Dense Dense::operator*(const Dense &rhs) const {
    Dense out(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t k = 0; k < dim; ++k) {
            C v = at(r, k);
            if (v == C{}) {
                continue;
            }
            for (std::size_t c = 0; c < dim; ++c) {
                out.at(r, c) += v * rhs.at(k, c);
            }
        }
    }
    return out;
}

Dense Dense::operator+(const Dense &rhs) const {
    Dense out(dim);
    for (std::size_t i = 0; i < a.size(); ++i) {
        out.a[i] = a[i] + rhs.a[i];
    }
    return out;
}

Dense Dense::scaled(C s) const {
    Dense out = *this;
    for (auto &v : out.a) {
        v *= s;
    }
    return out;
}

Dense kron(const Dense &lhs, const Dense &rhs) {
    Dense out(lhs.dim * rhs.dim);
    for (std::size_t i = 0; i < lhs.dim; ++i) {
        for (std::size_t j = 0; j < lhs.dim; ++j) {
            for (std::size_t k = 0; k < rhs.dim; ++k) {
                for (std::size_t l = 0; l < rhs.dim; ++l) {
                    out.at(i * rhs.dim + k, j * rhs.dim + l) = lhs.at(i, j) * rhs.at(k, l);
                }
            }
        }
    }
    return out;
}

std::vector<Term> gate_terms(const std::string &name, const std::vector<double> &p) {
    static const std::map<std::string, std::function<std::vector<Term>(const std::vector<double> &)>> table = {
        {"id", [](auto &) { return single(I2); }},
        {"x", [](auto &) { return single(X); }},
        {"y", [](auto &) { return single(Y); }},
        {"z", [](auto &) { return single(Z); }},
        {"h", [](auto &) { return single(Hd); }},
        {"s", [](auto &) { return single(m2(1, 0, 0, 1i)); }},
        {"sdg", [](auto &) { return single(m2(1, 0, 0, -1i)); }},
        {"t", [](auto &) { return single(phase(kPi / 4)); }},
        {"tdg", [](auto &) { return single(phase(-kPi / 4)); }},
        {"sx", [](auto &) { return single(m2(1.0 + 1i, 1.0 - 1i, 1.0 - 1i, 1.0 + 1i).scaled(0.5)); }},
        {"rx", [](auto &v) { return single(rx(v[0])); }},
        {"ry", [](auto &v) { return single(ry(v[0])); }},
        {"rz", [](auto &v) { return single(rz(v[0])); }},
        {"p", [](auto &v) { return single(phase(v[0])); }},
        {"u1", [](auto &v) { return single(phase(v[0])); }},
        {"u2", [](auto &v) { return single(u3(kPi / 2, v[0], v[1])); }},
        {"u3", [](auto &v) { return single(u3(v[0], v[1], v[2])); }},
        {"cx", [](auto &) { return controlled(single(X)); }},
        {"cy", [](auto &) { return controlled(single(Y)); }},
        {"cz", [](auto &) { return controlled(single(Z)); }},
        {"ch", [](auto &) { return controlled(single(Hd)); }},
        {"crz", [](auto &v) { return controlled(single(rz(v[0]))); }},
        {"cp", [](auto &v) { return controlled(single(phase(v[0]))); }},
        {"swap", [](auto &) { return swap_terms(); }},
        {"ccx", [](auto &) { return controlled(controlled(single(X))); }},
        {"cswap", [](auto &) { return controlled(swap_terms()); }},
    };
    auto it = table.find(name);
    if (it == table.end()) {
        throw std::invalid_argument("oracle has no definition for gate " + name);
    }
    return it->second(p);
}

Dense embed(const std::vector<Term> &terms, const std::vector<qbridge::Qubit> &qubits, std::uint32_t n) {
    Dense total(std::size_t{1} << n);
    for (const auto &term : terms) {
        Dense acc = Dense::eye(1);
        for (std::uint32_t q = n; q-- > 0;) {
            const Dense *factor = &I2;
            for (std::size_t k = 0; k < qubits.size(); ++k) {
                if (qubits[k] == q) {
                    factor = &term.factors[k];
                }
            }
            acc = kron(acc, *factor);
        }
        total = total + acc.scaled(term.coeff);
    }
    return total;
}

Dense circuit_unitary(const qbridge::Circuit &circuit) {
    Dense u = Dense::eye(std::size_t{1} << circuit.num_qubits);
    for (const auto &op : circuit.ops) {
        if (const auto *g = std::get_if<qbridge::GateOp>(&op)) {
            u = embed(gate_terms(g->name, g->params), g->qubits, circuit.num_qubits) * u;
        }
    }
    return u;
}

std::vector<C> final_state(const qbridge::Circuit &circuit) {
    Dense u = circuit_unitary(circuit);
    std::vector<C> psi(u.dim);
    for (std::size_t r = 0; r < u.dim; ++r) {
        psi[r] = u.at(r, 0);
    }
    return psi;
}

namespace {

std::string key_of(std::uint64_t value, std::size_t width) {
    std::string s;
    for (std::size_t i = width; i-- > 0;) {
        s += ((value >> i) & 1) ? '1' : '0';
    }
    return s;
}

std::string key_of_bits(const std::vector<int> &bits) {
    std::string s;
    for (std::size_t i = bits.size(); i-- > 0;) {
        s += bits[i] ? '1' : '0';
    }
    return s;
}

struct ClassicalMap {
    std::map<std::string, std::size_t> offset;
    std::size_t width = 0;
};

ClassicalMap classical_map(const qbridge::Circuit &circuit) {
    ClassicalMap m;
    for (const auto &reg : circuit.cregs) {
        m.offset[reg.name] = m.width;
        m.width += reg.size;
    }
    return m;
}

std::vector<C> mat_vec(const Dense &m, const std::vector<C> &v) {
    std::vector<C> out(v.size());
    for (std::size_t r = 0; r < m.dim; ++r) {
        C acc{};
        for (std::size_t c = 0; c < m.dim; ++c) {
            acc += m.at(r, c) * v[c];
        }
        out[r] = acc;
    }
    return out;
}

double norm2(const std::vector<C> &v) {
    double s = 0;
    for (auto x : v) {
        s += std::norm(x);
    }
    return s;
}

struct Branch {
    std::vector<C> psi;  // unnormalized; its squared norm is the branch weight
    std::vector<int> bits;
};

}  // namespace

std::map<std::string, double> full_state_distribution(const qbridge::Circuit &circuit) {
    std::map<std::string, double> out;
    auto psi = final_state(circuit);
    for (std::size_t i = 0; i < psi.size(); ++i) {
        double p = std::norm(psi[i]);
        if (p > 1e-14) {
            out[key_of(i, circuit.num_qubits)] = p;
        }
    }
    return out;
}

std::map<std::string, double> terminal_measure_distribution(const qbridge::Circuit &circuit) {
    ClassicalMap cm = classical_map(circuit);
    std::vector<int> source(cm.width, -1);
    for (const auto &op : circuit.ops) {
        if (const auto *m = std::get_if<qbridge::MeasureOp>(&op)) {
            source[cm.offset.at(m->creg) + m->bit] = static_cast<int>(m->qubit);
        }
    }
    std::map<std::string, double> out;
    auto psi = final_state(circuit);
    for (std::size_t i = 0; i < psi.size(); ++i) {
        std::vector<int> bits(cm.width, 0);
        for (std::size_t b = 0; b < cm.width; ++b) {
            if (source[b] >= 0) {
                bits[b] = static_cast<int>((i >> source[b]) & 1);
            }
        }
        out[key_of_bits(bits)] += std::norm(psi[i]);
    }
    std::erase_if(out, [](const auto &kv) { return kv.second <= 1e-14; });
    return out;
}

std::map<std::string, double> collapse_tree_distribution(const qbridge::Circuit &circuit) {
    const std::uint32_t n = circuit.num_qubits;
    ClassicalMap cm = classical_map(circuit);
    std::vector<C> zero(std::size_t{1} << n);
    zero[0] = 1;
    std::vector<Branch> branches{{zero, std::vector<int>(cm.width, 0)}};
    auto projector = [&](qbridge::Qubit q, int outcome) {
        return embed({{1, {outcome ? P1 : P0}}}, {q}, n);
    };
    for (const auto &op : circuit.ops) {
        std::vector<Branch> next;
        for (auto &br : branches) {
            if (const auto *g = std::get_if<qbridge::GateOp>(&op)) {
                br.psi = mat_vec(embed(gate_terms(g->name, g->params), g->qubits, n), br.psi);
                next.push_back(std::move(br));
            } else if (const auto *m = std::get_if<qbridge::MeasureOp>(&op)) {
                for (int outcome = 0; outcome < 2; ++outcome) {
                    Branch child{mat_vec(projector(m->qubit, outcome), br.psi), br.bits};
                    if (norm2(child.psi) < 1e-15) {
                        continue;
                    }
                    child.bits[cm.offset.at(m->creg) + m->bit] = outcome;
                    next.push_back(std::move(child));
                }
            } else if (const auto *r = std::get_if<qbridge::ResetOp>(&op)) {
                for (int outcome = 0; outcome < 2; ++outcome) {
                    Branch child{mat_vec(projector(r->qubit, outcome), br.psi), br.bits};
                    if (norm2(child.psi) < 1e-15) {
                        continue;
                    }
                    if (outcome == 1) {
                        child.psi = mat_vec(embed(single(X), {r->qubit}, n), child.psi);
                    }
                    next.push_back(std::move(child));
                }
            } else if (const auto *c = std::get_if<qbridge::ConditionalOp>(&op)) {
                std::uint64_t value = 0;
                const std::size_t off = cm.offset.at(c->creg);
                for (const auto &reg : circuit.cregs) {
                    if (reg.name == c->creg) {
                        for (std::size_t b = 0; b < reg.size; ++b) {
                            value += static_cast<std::uint64_t>(br.bits[off + b]) << b;
                        }
                    }
                }
                if (value == c->value) {
                    br.psi = mat_vec(embed(gate_terms(c->gate.name, c->gate.params), c->gate.qubits, n), br.psi);
                }
                next.push_back(std::move(br));
            } else {
                next.push_back(std::move(br));
            }
        }
        branches = std::move(next);
    }
    std::map<std::string, double> out;
    for (const auto &br : branches) {
        out[key_of_bits(br.bits)] += norm2(br.psi);
    }
    std::erase_if(out, [](const auto &kv) { return kv.second <= 1e-14; });
    return out;
}

double linf(const std::map<std::string, double> &a, const std::map<std::string, double> &b) {
    double worst = 0;
    for (const auto &[k, v] : a) {
        auto it = b.find(k);
        worst = std::max(worst, std::abs(v - (it == b.end() ? 0.0 : it->second)));
    }
    for (const auto &[k, v] : b) {
        if (!a.contains(k)) {
            worst = std::max(worst, std::abs(v));
        }
    }
    return worst;
}

double distance_up_to_phase(const Dense &a, const Dense &b) {
    // Align on the largest entry of b, then compare entrywise.
    std::size_t pivot = 0;
    for (std::size_t i = 0; i < b.a.size(); ++i) {
        if (std::abs(b.a[i]) > std::abs(b.a[pivot])) {
            pivot = i;
        }
    }
    C ph = std::abs(b.a[pivot]) > 0 && std::abs(a.a[pivot]) > 0 ? a.a[pivot] / b.a[pivot] : C{1};
    ph /= std::abs(ph);
    double worst = 0;
    for (std::size_t i = 0; i < a.a.size(); ++i) {
        worst = std::max(worst, std::abs(a.a[i] - ph * b.a[i]));
    }
    return worst;
}

}  // namespace oracle
