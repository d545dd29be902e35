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

#include "qbridge/examples_catalog.h"

namespace qbridge {

namespace {

const char *const kBell = R"(OPENQASM 2.0;
include "qelib1.inc";
qreg q[2];
creg c[2];
h q[0];
cx q[0],q[1];
measure q[0] -> c[0];
measure q[1] -> c[1];
)";

const char *const kGhz3 = R"(OPENQASM 2.0;
include "qelib1.inc";
qreg q[3];
creg c[3];
h q[0];
cx q[0],q[1];
cx q[1],q[2];
measure q -> c;
)";

const char *const kQft2 = R"(OPENQASM 2.0;
include "qelib1.inc";
// two-qubit quantum Fourier transform applied to |00>
qreg q[2];
creg c[2];
h q[1];
cp(pi/2) q[0],q[1];
h q[0];
swap q[0],q[1];
measure q -> c;
)";

const char *const kTeleportation = R"(OPENQASM 2.0;
include "qelib1.inc";
// teleport the state u3(0.8,0.3,0.1)|0> from q[0] to q[2]
qreg q[3];
creg m0[1];
creg m1[1];
creg out[1];
u3(0.8,0.3,0.1) q[0];
h q[1];
cx q[1],q[2];
cx q[0],q[1];
h q[0];
measure q[0] -> m0[0];
measure q[1] -> m1[0];
if(m1==1) x q[2];
if(m0==1) z q[2];
measure q[2] -> out[0];
)";

}  // namespace

const std::vector<CatalogExample> &examples_catalog() {
    static const std::vector<CatalogExample> catalog = {
        {"bell", SourceDialect::OpenQasm2, "Bell pair: H then CNOT, both qubits measured", kBell, 0},
        {"ghz-3", SourceDialect::OpenQasm2, "Three-qubit GHZ state", kGhz3, 0},
        {"qft-2", SourceDialect::OpenQasm2, "Two-qubit quantum Fourier transform on |00>", kQft2, 0},
        {"teleportation", SourceDialect::OpenQasm2,
         "Quantum teleportation with classically controlled corrections", kTeleportation, 4096},
    };
    return catalog;
}

const CatalogExample *find_example(std::string_view name) {
    for (const auto &example : examples_catalog()) {
        if (example.name == name) {
            return &example;
        }
    }
    return nullptr;
}

}  // namespace qbridge
