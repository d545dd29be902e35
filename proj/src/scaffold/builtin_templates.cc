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

#include "qbridge/scaffold.h"

namespace qbridge {

namespace {

const char *const kHelloReadme = R"(# #{project_name}

A Qiskit starter project created by #{author} on #{date_iso}.

It prepares the Bell state (|00> + |11>)/sqrt(2) and measures both qubits.
About half of the shots should read `00` and the other half `11`.

## Files

- `main.py` builds the circuit in Qiskit and samples it on the Aer simulator.
- `bell.qasm` is the same circuit in OpenQASM 2.0. Run it locally with
  `qbridge run bell.qasm`, or turn it into another framework with
  `qbridge convert bell.qasm --from openqasm2 --to cirq-src`.

## Running

    pip install -r requirements.txt
    python main.py
)";

const char *const kHelloMain = R"("""#{project_name}: prepare and measure a Bell pair with Qiskit."""

from qiskit import QuantumCircuit, transpile
from qiskit_aer import AerSimulator

SHOTS = 1024


def bell_circuit() -> QuantumCircuit:
    qc = QuantumCircuit(2, 2)
    qc.h(0)
    qc.cx(0, 1)
    qc.measure([0, 1], [0, 1])
    return qc


def main() -> None:
    qc = bell_circuit()
    print(qc.draw())
    simulator = AerSimulator()
    result = simulator.run(transpile(qc, simulator), shots=SHOTS).result()
    print(result.get_counts())


if __name__ == "__main__":
    main()
)";

const char *const kHelloQasm = R"(OPENQASM 2.0;
include "qelib1.inc";
qreg q[2];
creg c[2];
h q[0];
cx q[0],q[1];
measure q[0] -> c[0];
measure q[1] -> c[1];
)";

const char *const kHelloRequirements = "qiskit>=1.0\nqiskit-aer>=0.13\n";

}  // namespace

const std::vector<ProjectTemplate> &builtin_templates() {
    static const std::vector<ProjectTemplate> templates = [] {
        ProjectTemplate hello;
        hello.name = "qiskit-hello-world";
        hello.description = "Qiskit project that prepares and samples a Bell state";
        hello.variables = {{"author", "anonymous"}};
        hello.files = {
            {"README.md", kHelloReadme},
            {"main.py", kHelloMain},
            {"bell.qasm", kHelloQasm},
            {"requirements.txt", kHelloRequirements},
        };
        hello.builtin = true;
        return std::vector<ProjectTemplate>{hello};
    }();
    return templates;
}

}  // namespace qbridge
