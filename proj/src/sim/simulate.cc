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
#include <random>
#include <unordered_map>

#include "qbridge/error.h"
#include "qbridge/passes.h"
#include "qbridge/prng.h"
#include "qbridge/simulator.h"

namespace qbridge {

namespace {

constexpr double kDropBelow = 1e-14;

std::uint64_t fresh_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

std::string basis_string(std::uint64_t index, std::uint32_t width) {
    std::string s(width, '0');
    for (std::uint32_t b = 0; b < width; ++b) {
        if ((index >> b) & 1) {
            s[width - 1 - b] = '1';
        }
    }
    return s;
}

std::string bits_string(const std::vector<std::uint8_t> &bits) {
    std::string s(bits.size(), '0');
    for (std::size_t b = 0; b < bits.size(); ++b) {
        if (bits[b]) {
            s[bits.size() - 1 - b] = '1';
        }
    }
    return s;
}

/// Execution plan: ops in moment order plus the positions where moments end.
struct Plan {
    std::vector<std::size_t> order;
    std::vector<std::size_t> moment_ends;
};

Plan make_plan(const Circuit &circuit) {
    Plan plan;
    for (const auto &column : moments(circuit)) {
        plan.order.insert(plan.order.end(), column.begin(), column.end());
        plan.moment_ends.push_back(plan.order.size());
    }
    return plan;
}

bool is_unitary_step(const Op &op) {
    return std::holds_alternative<GateOp>(op) || std::holds_alternative<BarrierOp>(op);
}

void apply_gate_op(StateVector &state, const GateOp &g) {
    const StandardGate *gate = StandardGateTable::instance().find(g.name);
    if (gate == nullptr) {
        throw Error(ErrorKind::UnknownGate, "gate '" + g.name + "' is not a standard gate");
    }
    apply_gate(state, *gate, g.params, g.qubits);
}

std::vector<double> marginals(const StateVector &state) {
    std::vector<double> out(state.num_qubits(), 0.0);
    auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        double p = std::norm(amps[i]);
        if (p == 0) {
            continue;
        }
        for (std::uint32_t q = 0; q < state.num_qubits(); ++q) {
            if ((i >> q) & 1) {
                out[q] += p;
            }
        }
    }
    return out;
}

class Runner {
   public:
    Runner(const Circuit &circuit, const RunOptions &options)
        : circuit_(circuit), options_(options), plan_(make_plan(circuit)) {
    }

    SimResult run() {
        SimResult result;
        result.seed = options_.seed ? *options_.seed : fresh_seed();
        if (options_.capture_snapshots) {
            result.snapshots.emplace();
        }
        if (requires_trajectories(circuit_)) {
            run_trajectories(result);
        } else {
            run_exact(result);
        }
        return result;
    }

   private:
    /// Executes plan positions [begin, end). Snapshots are added into
    /// `snapshot_sums` at every moment boundary crossed.
    void execute(StateVector &state, std::size_t begin, std::size_t end, SplitMix64 *rng,
                 std::vector<std::uint8_t> &clbits, std::vector<std::vector<double>> *snapshot_sums) const {
        auto boundary = std::lower_bound(plan_.moment_ends.begin(), plan_.moment_ends.end(), begin + 1);
        for (std::size_t pos = begin; pos < end; ++pos) {
            const Op &op = circuit_.ops[plan_.order[pos]];
            if (const auto *g = std::get_if<GateOp>(&op)) {
                apply_gate_op(state, *g);
            } else if (const auto *m = std::get_if<MeasureOp>(&op)) {
                int outcome = measure(state, m->qubit, *rng);
                clbits[*circuit_.creg_offset(m->creg) + m->bit] = static_cast<std::uint8_t>(outcome);
            } else if (const auto *r = std::get_if<ResetOp>(&op)) {
                if (rng != nullptr) {
                    if (measure(state, r->qubit, *rng) == 1) {
                        apply_gate_op(state, GateOp{"x", {}, {r->qubit}});
                    }
                }
            } else if (const auto *c = std::get_if<ConditionalOp>(&op)) {
                if (register_value(c->creg, clbits) == c->value) {
                    apply_gate_op(state, c->gate);
                }
            }
            if (snapshot_sums != nullptr && boundary != plan_.moment_ends.end() && *boundary == pos + 1) {
                auto idx = static_cast<std::size_t>(boundary - plan_.moment_ends.begin());
                auto m = marginals(state);
                auto &sum = (*snapshot_sums)[idx];
                for (std::size_t q = 0; q < m.size(); ++q) {
                    sum[q] += m[q];
                }
                ++boundary;
            }
        }
    }

    static int measure(StateVector &state, Qubit q, SplitMix64 &rng) {
        double p1 = std::clamp(state.probability_one(q), 0.0, 1.0);
        int outcome = rng.uniform() < p1 ? 1 : 0;
        state.collapse(q, outcome, outcome ? p1 : 1.0 - p1);
        return outcome;
    }

    std::uint64_t register_value(const std::string &creg, const std::vector<std::uint8_t> &clbits) const {
        const Register *reg = circuit_.find_creg(creg);
        std::uint32_t offset = *circuit_.creg_offset(creg);
        std::uint64_t value = 0;
        for (std::uint32_t b = 0; b < reg->size; ++b) {
            if (!clbits[offset + b]) {
                continue;
            }
            if (b >= 64) {
                return UINT64_MAX;  // cannot equal any representable comparison value
            }
            value |= std::uint64_t{1} << b;
        }
        return value;
    }

    std::vector<std::vector<double>> empty_snapshots() const {
        return std::vector<std::vector<double>>(plan_.moment_ends.size(),
                                                std::vector<double>(circuit_.num_qubits, 0.0));
    }

    void run_exact(SimResult &result) {
        result.mode = SimMode::Exact;
        StateVector state(circuit_.num_qubits);
        auto snaps = empty_snapshots();
        // Measurements are terminal here, so they are read off the final
        // state instead of being sampled.
        for (std::size_t pos = 0; pos < plan_.order.size(); ++pos) {
            const Op &op = circuit_.ops[plan_.order[pos]];
            if (const auto *g = std::get_if<GateOp>(&op)) {
                apply_gate_op(state, *g);
            }
            if (options_.capture_snapshots) {
                auto it = std::find(plan_.moment_ends.begin(), plan_.moment_ends.end(), pos + 1);
                if (it != plan_.moment_ends.end()) {
                    snaps[static_cast<std::size_t>(it - plan_.moment_ends.begin())] = marginals(state);
                }
            }
        }
        if (options_.capture_snapshots) {
            result.snapshots = std::move(snaps);
        }

        auto amps = state.amplitudes();
        if (!circuit_.has_measurements()) {
            std::map<std::string, double> full;
            for (std::size_t i = 0; i < amps.size(); ++i) {
                double p = std::norm(amps[i]);
                if (p > kDropBelow) {
                    full[basis_string(i, circuit_.num_qubits)] = p;
                }
            }
            if (options_.shots > 0) {
                result.shots = sample(full, options_.shots, result.seed);
            }
            result.full_state_probabilities = std::move(full);
            return;
        }

        // Final writer of each classical bit.
        const std::uint32_t width = circuit_.num_clbits();
        std::vector<std::optional<Qubit>> source(width);
        for (const auto &op : circuit_.ops) {
            if (const auto *m = std::get_if<MeasureOp>(&op)) {
                source[*circuit_.creg_offset(m->creg) + m->bit] = m->qubit;
            }
        }
        auto outcome_bits = [&](std::size_t index) {
            std::vector<std::uint8_t> bits(width, 0);
            for (std::uint32_t b = 0; b < width; ++b) {
                if (source[b]) {
                    bits[b] = static_cast<std::uint8_t>((index >> *source[b]) & 1);
                }
            }
            return bits;
        };
        std::map<std::string, double> probs;
        if (width <= 64) {
            std::unordered_map<std::uint64_t, double> acc;
            for (std::size_t i = 0; i < amps.size(); ++i) {
                double p = std::norm(amps[i]);
                if (p == 0) {
                    continue;
                }
                std::uint64_t key = 0;
                for (std::uint32_t b = 0; b < width; ++b) {
                    if (source[b] && ((i >> *source[b]) & 1)) {
                        key |= std::uint64_t{1} << b;
                    }
                }
                acc[key] += p;
            }
            for (const auto &[key, p] : acc) {
                if (p > kDropBelow) {
                    probs[basis_string(key, width)] = p;
                }
            }
        } else {
            for (std::size_t i = 0; i < amps.size(); ++i) {
                double p = std::norm(amps[i]);
                if (p != 0) {
                    probs[bits_string(outcome_bits(i))] += p;
                }
            }
            std::erase_if(probs, [](const auto &kv) { return kv.second <= kDropBelow; });
        }
        if (options_.shots > 0) {
            result.shots = sample(probs, options_.shots, result.seed);
        }
        result.probabilities = std::move(probs);
    }

    void run_trajectories(SimResult &result) {
        result.mode = SimMode::Trajectory;
        if (options_.shots == 0) {
            throw Error(ErrorKind::ShotsRequired,
                        "this circuit has mid-circuit measurement, reset or classical control; "
                        "set a shot count to sample it");
        }
        const std::uint64_t shots = options_.shots;
        std::size_t prefix = 0;
        while (prefix < plan_.order.size() && is_unitary_step(circuit_.ops[plan_.order[prefix]])) {
            ++prefix;
        }
        std::vector<std::uint8_t> clbits(circuit_.num_clbits(), 0);
        auto prefix_snaps = empty_snapshots();
        auto shot_snaps = empty_snapshots();
        StateVector base(circuit_.num_qubits);
        execute(base, 0, prefix, nullptr, clbits, options_.capture_snapshots ? &prefix_snaps : nullptr);

        const bool measured = circuit_.has_measurements();
        SplitMix64 root(result.seed);
        std::map<std::string, std::uint64_t> counts;
        std::vector<double> full_sum;
        if (!measured) {
            full_sum.assign(base.amplitudes().size(), 0.0);
        }
        for (std::uint64_t shot = 0; shot < shots; ++shot) {
            SplitMix64 rng = root.split();
            StateVector state = base;
            std::fill(clbits.begin(), clbits.end(), 0);
            execute(state, prefix, plan_.order.size(), &rng, clbits,
                    options_.capture_snapshots ? &shot_snaps : nullptr);
            if (measured) {
                ++counts[bits_string(clbits)];
            } else {
                auto amps = state.amplitudes();
                double u = rng.uniform();
                double cumulative = 0;
                std::size_t pick = amps.size();
                for (std::size_t i = 0; i < amps.size(); ++i) {
                    double p = std::norm(amps[i]);
                    full_sum[i] += p;
                    cumulative += p;
                    if (pick == amps.size() && u < cumulative) {
                        pick = i;
                    }
                }
                if (pick == amps.size()) {
                    pick = amps.size() - 1;
                }
                ++counts[basis_string(pick, circuit_.num_qubits)];
            }
        }
        if (options_.capture_snapshots) {
            std::vector<std::vector<double>> snaps = empty_snapshots();
            for (std::size_t m = 0; m < snaps.size(); ++m) {
                bool in_prefix = plan_.moment_ends[m] <= prefix;
                for (std::size_t q = 0; q < circuit_.num_qubits; ++q) {
                    snaps[m][q] = in_prefix ? prefix_snaps[m][q] : shot_snaps[m][q] / static_cast<double>(shots);
                }
            }
            result.snapshots = std::move(snaps);
        }
        if (measured) {
            for (const auto &[key, n] : counts) {
                result.probabilities[key] = static_cast<double>(n) / static_cast<double>(shots);
            }
        } else {
            std::map<std::string, double> full;
            for (std::size_t i = 0; i < full_sum.size(); ++i) {
                double p = full_sum[i] / static_cast<double>(shots);
                if (p > kDropBelow) {
                    full[basis_string(i, circuit_.num_qubits)] = p;
                }
            }
            result.full_state_probabilities = std::move(full);
        }
        result.shots = std::move(counts);
    }

    const Circuit &circuit_;
    const RunOptions &options_;
    Plan plan_;
};

}  // namespace

bool requires_trajectories(const Circuit &circuit) {
    std::vector<bool> touched(circuit.num_qubits, false);
    std::vector<bool> measured(circuit.num_qubits, false);
    for (const auto &op : circuit.ops) {
        if (std::holds_alternative<ConditionalOp>(op)) {
            return true;
        }
        if (std::holds_alternative<BarrierOp>(op)) {
            continue;
        }
        if (const auto *r = std::get_if<ResetOp>(&op)) {
            if (touched[r->qubit]) {
                return true;
            }
            continue;
        }
        for (Qubit q : op_qubits(op)) {
            if (measured[q]) {
                return true;
            }
            touched[q] = true;
        }
        if (const auto *m = std::get_if<MeasureOp>(&op)) {
            measured[m->qubit] = true;
        }
    }
    return false;
}

SimResult simulate(const Circuit &input, const RunOptions &options) {
    if (options.max_qubits > kMaxQubitsCeiling) {
        throw Error(ErrorKind::InvalidArgument,
                    "max_qubits must be at most " + std::to_string(kMaxQubitsCeiling));
    }
    if (options.shots > kMaxShots) {
        throw Error(ErrorKind::InvalidArgument, "shots must be at most " + std::to_string(kMaxShots));
    }
    if (input.num_qubits > options.max_qubits) {
        throw Error(ErrorKind::TooManyQubits, "circuit uses " + std::to_string(input.num_qubits) +
                                                  " qubits; the limit is " + std::to_string(options.max_qubits));
    }
    require_valid(input);
    if (!input.gate_defs.empty()) {
        Circuit expanded = expand_macros(input);
        return Runner(expanded, options).run();
    }
    return Runner(input, options).run();
}

StateVector final_state(const Circuit &input) {
    Circuit circuit = input.gate_defs.empty() ? input : expand_macros(input);
    if (requires_trajectories(circuit)) {
        throw Error(ErrorKind::InvalidArgument, "the circuit has no single final state");
    }
    if (circuit.num_qubits > kMaxQubitsCeiling) {
        throw Error(ErrorKind::TooManyQubits, "circuit is too wide to simulate");
    }
    StateVector state(circuit.num_qubits);
    for (const auto &op : circuit.ops) {
        if (const auto *g = std::get_if<GateOp>(&op)) {
            apply_gate_op(state, *g);
        }
    }
    return state;
}

std::map<std::string, std::uint64_t> sample(const std::map<std::string, double> &probabilities,
                                            std::uint64_t shots, std::uint64_t seed) {
    std::map<std::string, std::uint64_t> counts;
    if (shots == 0 || probabilities.empty()) {
        return counts;
    }
    std::vector<const std::string *> keys;
    std::vector<double> cumulative;
    double total = 0;
    for (const auto &[key, p] : probabilities) {
        if (p <= 0) {
            continue;
        }
        total += p;
        keys.push_back(&key);
        cumulative.push_back(total);
    }
    if (keys.empty()) {
        return counts;
    }
    SplitMix64 rng(seed);
    std::vector<std::uint64_t> tally(keys.size(), 0);
    for (std::uint64_t s = 0; s < shots; ++s) {
        double u = rng.uniform() * total;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        std::size_t idx = it == cumulative.end() ? keys.size() - 1 : static_cast<std::size_t>(it - cumulative.begin());
        ++tally[idx];
    }
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (tally[i] > 0) {
            counts[*keys[i]] = tally[i];
        }
    }
    return counts;
}

}  // namespace qbridge
