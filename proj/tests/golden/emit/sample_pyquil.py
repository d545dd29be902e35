import json
import sys
from collections import Counter
from math import pi

from pyquil import Program, get_qc
from pyquil.gates import CNOT, H, MEASURE, RZ

SHOTS = int(sys.argv[1]) if len(sys.argv) > 1 else 1024

program = Program()
ro = program.declare("ro", "BIT", 2)
program += H(0)
program += CNOT(0, 1)
program += RZ(pi/4, 1)
program += MEASURE(0, ro[0])
program += MEASURE(1, ro[1])
program.wrap_in_numshots_loop(SHOTS)

qc = get_qc("2q-qvm")
result = qc.run(qc.compile(program))
rows = result.get_register_map()["ro"]
counts = Counter("".join(str(int(b)) for b in reversed(row)) for row in rows)
print(json.dumps(dict(sorted(counts.items()))))
