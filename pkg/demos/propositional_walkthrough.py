"""Build a multi-clause contradiction by hand, column by column.

Four clauses over p1, p3, p4. Each selected clause contributes one literal to
the main boundary line; every complement of an earlier boundary literal the
clause happens to hold is pulled inside the contradiction. The closing clause
consists entirely of boundary complements here, so nothing is left over and
the separated clause is empty: the set is refuted in a single round.
"""

from trisep import (
    Clause,
    clause_set,
    close,
    extend,
    is_standard_contradiction,
    is_unsatisfiable_bruteforce,
    neg,
    pos,
    prove,
    render_trace,
    start,
    verify_trace,
)

s = clause_set([
    [pos("p1")],
    [neg("p1"), pos("p4")],
    [pos("p3"), neg("p4")],
    [neg("p1"), neg("p3")],
])
c1, c2, c3, c4 = s.clauses

print("clause set:", s)
print()

# -- manual construction ------------------------------------------------------

state = start(c1, pos("p1"))
state = extend(state, c2, pos("p4"))     # pulls ~p1 inside
state = extend(state, c3, pos("p3"))     # pulls ~p4 inside
state = close(state, c4)                 # ~p1 and ~p3 are both boundary complements

print("boundary line:", ", ".join(str(b) for b in state.boundary))
for i in range(len(state.columns)):
    print(f"  column {i + 1} (clause {state.columns[i].clause_id}): "
          f"inside {[str(l) for l in state.d_minus(i)]}, "
          f"leftover {[str(l) for l in state.d_plus(i)]}")
print("separated clause:", [str(l) for l in state.csc] or "empty -> refuted")
print()

# the brute-force oracle confirms the inside parts really form a contradiction
columns = [Clause(i + 1, state.d_minus(i)) for i in range(4)]
print("oracle: inside parts are a standard contradiction?",
      is_standard_contradiction(columns))
print("oracle: clause set unsatisfiable by truth table?",
      is_unsatisfiable_bruteforce(s))
print()

# -- the engine finds the same refutation on its own ---------------------------

outcome, trace = prove(s)
print("engine verdict:", outcome.verdict, "in", len(trace.rounds), "round(s)")
print("trace verified:", bool(verify_trace(s, trace)))
print()
print(render_trace(trace, problem="walkthrough", verified=True))
