"""The file formats and the command line, end to end.

Writes a DIMACS problem and a TPTP problem to a temp directory, proves both
through the CLI entry point, verifies the emitted trace with `check`, and
cross-examines with the brute-force `oracle` subcommand.
"""

import tempfile
from pathlib import Path

from trisep.cli import main as trisep

DIMACS = """\
c four clauses over variables 1, 3, 4
p cnf 4 4
1 0
-1 4 0
3 -4 0
-1 -3 0
"""

TPTP = """\
% a first-order chain that needs two rounds
cnf(c1, axiom, (~p1(X11) | p2(X11))).
cnf(c2, axiom, (~p1(X21) | p3(X21))).
cnf(c3, axiom, (~p3(X31) | p4(X31) | p5(X31))).
cnf(c4, axiom, (~p4(X41) | p3(f(X41)))).
cnf(c5, axiom, p1(X51)).
cnf(c6, axiom, ~p5(X61)).
cnf(c7, axiom, ~p3(f(X71))).
"""

with tempfile.TemporaryDirectory() as tmp:
    root = Path(tmp)
    cnf = root / "four.cnf"
    cnf.write_text(DIMACS)
    problem = root / "chain.p"
    problem.write_text(TPTP)
    trace_path = root / "four.trace"

    print("== prove (DIMACS), writing a trace document ==")
    code = trisep(["prove", str(cnf), "--trace", str(trace_path), "--quiet"])
    print("exit code:", code)
    print()

    print("== the written trace's machine section ==")
    text = trace_path.read_text()
    in_section = False
    for line in text.splitlines():
        if line.startswith("TRACE\t"):
            in_section = not in_section and line.endswith("BEGIN")
            print(line)
            continue
        if in_section:
            print(line)
    print()

    print("== check: independent verification of the trace ==")
    code = trisep(["check", str(cnf), "--trace", str(trace_path)])
    print("exit code:", code)
    print()

    print("== oracle: brute-force second opinion ==")
    code = trisep(["oracle", str(cnf)])
    print("exit code:", code)
    print()

    print("== prove (TPTP, auto-detected format) ==")
    code = trisep(["prove", str(problem), "--quiet"])
    print("exit code:", code)
