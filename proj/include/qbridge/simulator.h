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

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "qbridge/circuit.h"
#include "qbridge/gates.h"

namespace qbridge {

/// 2^n amplitudes; qubit 0 is the least significant bit of the basis index.
class StateVector {
   public:
    explicit StateVector(std::uint32_t num_qubits);

    std::uint32_t num_qubits() const {
        return num_qubits_;
    }
    std::span<const Complex> amplitudes() const {
        return amplitudes_;
    }
    std::span<Complex> amplitudes() {
        return amplitudes_;
    }

    /// Applies a local unitary to the listed qubits (operand j is bit j of
    /// the matrix index) by strided iteration over amplitude groups.
    void apply(const Matrix &unitary, std::span<const Qubit> qubits);

    double norm_squared() const;
    /// P(qubit = 1)
    double probability_one(Qubit qubit) const;
    /// Projects `qubit` onto `outcome` and renormalizes.
    void collapse(Qubit qubit, int outcome, double outcome_probability);

   private:
    std::uint32_t num_qubits_;
    std::vector<Complex> amplitudes_;
};

/// Evaluates a standard gate's matrix and applies it. Arity or range
/// violations are contract failures (std::logic_error).
void apply_gate(StateVector &state, const StandardGate &gate, std::span<const double> params,
                std::span<const Qubit> qubits);

inline constexpr std::uint64_t kMaxShots = std::uint64_t{1} << 26;
inline constexpr std::uint32_t kMaxQubitsCeiling = 30;

struct RunOptions {
    std::uint64_t shots = 0;  // 0 = exact probabilities only
    std::optional<std::uint64_t> seed;
    bool capture_snapshots = false;
    std::uint32_t max_qubits = 24;
};

enum class SimMode { Exact, Trajectory };

/// Bitstrings are rendered most-significant first: for classical outcomes
/// the highest global classical bit is the leftmost character, for full-state
/// outcomes qubit n-1 is leftmost (so "01" means qubit 0 is 1).
struct SimResult {
    SimMode mode = SimMode::Exact;
    std::map<std::string, double> probabilities;
    std::optional<std::map<std::string, double>> full_state_probabilities;
    std::optional<std::map<std::string, std::uint64_t>> shots;
    /// After each moment, P(qubit = 1) for every qubit.
    std::optional<std::vector<std::vector<double>>> snapshots;
    std::uint64_t seed = 0;
};

/// Runs a circuit. Exact marginalization is used when every measurement is
/// terminal and there are no conditionals or resets of used qubits;
/// otherwise `shots` independent trajectories with per-shot collapse are
/// sampled. Throws TooManyQubits, ShotsRequired or InvalidArgument.
SimResult simulate(const Circuit &circuit, const RunOptions &options = {});

/// Whether simulate() would need trajectory sampling for this circuit.
bool requires_trajectories(const Circuit &circuit);

/// Final state of a circuit made only of gates, barriers and terminal
/// measurements (measurements are ignored).
StateVector final_state(const Circuit &circuit);

/// Multinomial sampling with the seeded generator; counts sum to `shots`.
std::map<std::string, std::uint64_t> sample(const std::map<std::string, double> &probabilities,
                                            std::uint64_t shots, std::uint64_t seed);

nlohmann::ordered_json sim_result_to_json(const SimResult &result);

}  // namespace qbridge
