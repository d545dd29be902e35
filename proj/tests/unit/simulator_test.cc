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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracle.h"
#include "qbridge/error.h"
#include "qbridge/frontends.h"
#include "qbridge/simulator.h"
#include "random_circuits.h"

namespace {

using namespace qbridge;

Circuit qasm(const std::string &body) {
    return parse_openqasm2("OPENQASM 2.0;\ninclude \"qelib1.inc\";\n" + body);
}

TEST(Simulator, BellIsExact) {
    auto r = simulate(qasm("qreg q[2]; creg c[2]; h q[0]; cx q[0],q[1]; measure q -> c;"));
    EXPECT_EQ(r.mode, SimMode::Exact);
    ASSERT_EQ(r.probabilities.size(), 2u);
    EXPECT_NEAR(r.probabilities.at("00"), 0.5, 1e-12);
    EXPECT_NEAR(r.probabilities.at("11"), 0.5, 1e-12);
    EXPECT_FALSE(r.shots.has_value());
    EXPECT_FALSE(r.full_state_probabilities.has_value());
}

TEST(Simulator, BitOrderIsLittleEndian) {
    auto r = simulate(qasm("qreg q[2]; creg c[2]; x q[0]; measure q -> c;"));
    EXPECT_NEAR(r.probabilities.at("01"), 1.0, 1e-12);
    auto swapped = simulate(qasm("qreg q[2]; creg c[2]; x q[0]; measure q[0] -> c[1]; measure q[1] -> c[0];"));
    EXPECT_NEAR(swapped.probabilities.at("10"), 1.0, 1e-12);
    auto full = simulate(qasm("qreg q[3]; x q[1];"));
    EXPECT_TRUE(full.probabilities.empty());
    EXPECT_NEAR(full.full_state_probabilities->at("010"), 1.0, 1e-12);
}

TEST(Simulator, UnmeasuredBitsReadZero) {
    auto r = simulate(qasm("qreg q[2]; creg c[3]; x q[0]; x q[1]; measure q[1] -> c[2];"));
    ASSERT_EQ(r.probabilities.size(), 1u);
    EXPECT_NEAR(r.probabilities.at("100"), 1.0, 1e-12);
}

TEST(Simulator, MatchesDenseOracleOnRandomCircuits) {
    std::mt19937_64 rng(99);
    testing_support::RandomCircuitShape shape;
    for (int i = 0; i < 60; ++i) {
        Circuit c = testing_support::random_circuit(rng, shape);
        auto r = simulate(c);
        auto expected = c.has_measurements() ? oracle::terminal_measure_distribution(c)
                                             : oracle::full_state_distribution(c);
        const auto &got = c.has_measurements() ? r.probabilities : *r.full_state_probabilities;
        EXPECT_LE(oracle::linf(got, expected), 1e-9) << "circuit " << i;
    }
}

TEST(Simulator, StateVectorKernelMatchesOracleOnWideCircuits) {
    std::mt19937_64 rng(5);
    testing_support::RandomCircuitShape shape;
    shape.max_qubits = 6;
    shape.max_gates = 30;
    shape.terminal_measures = false;
    for (int i = 0; i < 10; ++i) {
        Circuit c = testing_support::random_circuit(rng, shape);
        StateVector got = final_state(c);
        auto expected = oracle::final_state(c);
        ASSERT_EQ(got.amplitudes().size(), expected.size());
        for (std::size_t k = 0; k < expected.size(); ++k) {
            EXPECT_LE(std::abs(got.amplitudes()[k] - expected[k]), 1e-10);
        }
        EXPECT_NEAR(got.norm_squared(), 1.0, 1e-12);
    }
}

TEST(Simulator, SampleStaysNearTheDistribution) {
    auto counts = sample({{"00", 0.5}, {"11", 0.5}}, 4096, 1);
    EXPECT_EQ(counts.size(), 2u);
    EXPECT_GE(counts["00"], 1792u);
    EXPECT_LE(counts["00"], 2304u);
    EXPECT_GE(counts["11"], 1792u);
    EXPECT_LE(counts["11"], 2304u);
    EXPECT_EQ(counts["00"] + counts["11"], 4096u);
}

TEST(Simulator, SamplingIsReproducible) {
    std::map<std::string, double> p{{"0", 0.1}, {"1", 0.9}};
    EXPECT_EQ(sample(p, 1000, 42), sample(p, 1000, 42));
    EXPECT_TRUE(sample(p, 0, 42).empty());
    auto r1 = simulate(qasm("qreg q[1]; creg c[1]; h q[0]; measure q[0] -> c[0];"), {.shots = 100, .seed = 3});
    auto r2 = simulate(qasm("qreg q[1]; creg c[1]; h q[0]; measure q[0] -> c[0];"), {.shots = 100, .seed = 3});
    EXPECT_EQ(r1.shots, r2.shots);
    EXPECT_EQ(r1.seed, 3u);
}

TEST(Simulator, ModeSelection) {
    EXPECT_FALSE(requires_trajectories(qasm("qreg q[2]; creg c[2]; h q[0]; measure q -> c;")));
    EXPECT_FALSE(requires_trajectories(qasm("qreg q[1]; reset q[0]; h q[0];")));
    EXPECT_TRUE(requires_trajectories(qasm("qreg q[1]; h q[0]; reset q[0];")));
    EXPECT_TRUE(requires_trajectories(qasm("qreg q[1]; creg c[1]; measure q[0] -> c[0]; h q[0];")));
    EXPECT_TRUE(requires_trajectories(qasm("qreg q[1]; creg c[1]; if(c==0) x q[0];")));
    EXPECT_FALSE(requires_trajectories(
        qasm("qreg q[2]; creg c[2]; measure q[0] -> c[0]; barrier q; h q[1]; measure q[1] -> c[1];")));
}

TEST(Simulator, TrajectoriesNeedShots) {
    Circuit c = qasm("qreg q[1]; creg c[1]; h q[0]; measure q[0] -> c[0]; if(c==1) x q[0];");
    try {
        simulate(c);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::ShotsRequired);
    }
}

TEST(Simulator, TrajectoriesMatchCollapseTree) {
    Circuit c = qasm(
        "qreg q[3]; creg m0[1]; creg m1[1]; creg out[1];"
        "u3(0.8,0.3,0.1) q[0]; h q[1]; cx q[1],q[2]; cx q[0],q[1]; h q[0];"
        "measure q[0] -> m0[0]; measure q[1] -> m1[0];"
        "if(m1==1) x q[2]; if(m0==1) z q[2]; measure q[2] -> out[0];");
    const std::uint64_t shots = 20000;
    auto r = simulate(c, {.shots = shots, .seed = 11});
    EXPECT_EQ(r.mode, SimMode::Trajectory);
    auto expected = oracle::collapse_tree_distribution(c);
    double total = 0;
    for (const auto &[k, n] : *r.shots) {
        total += static_cast<double>(n);
        EXPECT_TRUE(expected.contains(k)) << k;
    }
    EXPECT_EQ(total, static_cast<double>(shots));
    for (const auto &[k, p] : expected) {
        double freq = r.probabilities.contains(k) ? r.probabilities.at(k) : 0.0;
        double sigma = std::sqrt(p * (1 - p) / static_cast<double>(shots));
        EXPECT_LE(std::abs(freq - p), 5 * sigma + 1e-12) << k;
    }
    // Teleported qubit: P(out=1) = sin^2(0.4).
    double p_out1 = 0;
    for (const auto &[k, p] : expected) {
        if (k[0] == '1') {
            p_out1 += p;
        }
    }
    EXPECT_NEAR(p_out1, std::pow(std::sin(0.4), 2), 1e-12);
}

TEST(Simulator, ResetReturnsQubitToZero) {
    Circuit c = qasm("qreg q[1]; creg c[2]; h q[0]; measure q[0] -> c[0]; reset q[0]; measure q[0] -> c[1];");
    auto r = simulate(c, {.shots = 2000, .seed = 1});
    for (const auto &[k, n] : *r.shots) {
        EXPECT_EQ(k[0], '0') << k;
    }
    auto expected = oracle::collapse_tree_distribution(c);
    EXPECT_NEAR(expected.at("00"), 0.5, 1e-12);
    EXPECT_NEAR(expected.at("01"), 0.5, 1e-12);
}

TEST(Simulator, SnapshotsFollowMoments) {
    auto r = simulate(qasm("qreg q[2]; h q[0]; cx q[0],q[1]; x q[0];"), {.capture_snapshots = true});
    ASSERT_TRUE(r.snapshots.has_value());
    ASSERT_EQ(r.snapshots->size(), 3u);
    EXPECT_NEAR((*r.snapshots)[0][0], 0.5, 1e-12);
    EXPECT_NEAR((*r.snapshots)[0][1], 0.0, 1e-12);
    EXPECT_NEAR((*r.snapshots)[1][1], 0.5, 1e-12);
    EXPECT_NEAR((*r.snapshots)[2][0], 0.5, 1e-12);
}

TEST(Simulator, Limits) {
    Circuit wide = Circuit::with_qubits(25);
    try {
        simulate(wide);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::TooManyQubits);
    }
    try {
        simulate(Circuit::with_qubits(1), {.max_qubits = 31});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
    }
    try {
        simulate(Circuit::with_qubits(1), {.shots = kMaxShots + 1});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
    }
    auto empty = simulate(Circuit::with_qubits(0));
    ASSERT_TRUE(empty.full_state_probabilities.has_value());
    EXPECT_NEAR(empty.full_state_probabilities->at(""), 1.0, 1e-15);
}

TEST(Simulator, MacrosAreExpandedFirst) {
    auto r = simulate(qasm("gate bell a,b { h a; cx a,b; } qreg q[2]; creg c[2]; bell q[0],q[1]; measure q -> c;"));
    EXPECT_NEAR(r.probabilities.at("11"), 0.5, 1e-12);
}

TEST(Simulator, ResultJson) {
    auto r = simulate(qasm("qreg q[1]; creg c[1]; h q[0]; measure q[0] -> c[0];"), {.shots = 10, .seed = 9});
    auto j = sim_result_to_json(r);
    EXPECT_EQ(j["mode"], "exact");
    EXPECT_EQ(j["seed"], 9);
    EXPECT_TRUE(j.contains("shots"));
    EXPECT_FALSE(j.contains("snapshots"));
    EXPECT_NEAR(j["probabilities"]["0"].get<double>(), 0.5, 1e-12);
    std::vector<std::string> keys;
    for (const auto &[k, v] : j.items()) {
        keys.push_back(k);
    }
    EXPECT_EQ(keys, (std::vector<std::string>{"mode", "probabilities", "shots", "seed"}));
}

}  // namespace
