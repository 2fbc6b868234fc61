"""DIMACS CNF reading and writing.

Variable i maps to the 0-ary predicate x<i>; negative integers give negative
literals; duplicate literals within a clause merge.
"""

from __future__ import annotations

import re
from typing import List

from .errors import ParseError
from .logic import Clause, ClauseSet, Literal, PROPOSITIONAL


def parse_dimacs(text: str) -> ClauseSet:
    header = None
    clauses: List[Clause] = []
    pending: List[Literal] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            if header is not None:
                raise ParseError("duplicate header", line=line_no)
            fields = line.split()
            if len(fields) != 4 or fields[0] != "p" or fields[1] != "cnf":
                raise ParseError(f"malformed header {line!r}", line=line_no)
            try:
                header = (int(fields[2]), int(fields[3]))
            except ValueError:
                raise ParseError(f"malformed header {line!r}", line=line_no) from None
            if header[0] < 0 or header[1] < 0:
                raise ParseError(f"malformed header {line!r}", line=line_no)
            continue
        if header is None:
            raise ParseError("clause data before the 'p cnf' header", line=line_no)
        for token in line.split():
            try:
                value = int(token)
            except ValueError:
                raise ParseError(f"unexpected token {token!r}", line=line_no) from None
            if value == 0:
                clauses.append(Clause(len(clauses) + 1, pending))
                pending = []
                continue
            if abs(value) > header[0]:
                raise ParseError(
                    f"literal {value} exceeds the declared {header[0]} variables",
                    line=line_no)
            pending.append(Literal(value > 0, f"x{abs(value)}"))
    if header is None:
        raise ParseError("missing 'p cnf' header")
    if pending:
        raise ParseError("last clause is missing its terminating 0")
    return ClauseSet(clauses, mode=PROPOSITIONAL)


_VAR_NAME = re.compile(r"^x([1-9][0-9]*)$")


def render_dimacs(clause_set: ClauseSet) -> str:
    """Inverse of parse_dimacs on its own output; other propositional sets get
    variables numbered by first occurrence, with the name map in comments."""
    if not clause_set.is_propositional:
        raise ValueError("DIMACS output needs a propositional clause set")
    names = clause_set.predicates()
    matches = {name: _VAR_NAME.match(name) for name in names}
    lines = []
    if all(matches.values()):
        index = {name: int(m.group(1)) for name, m in matches.items()}
        nvars = max(index.values(), default=0)
    else:
        index = {name: i + 1 for i, name in enumerate(names)}
        nvars = len(names)
        for name, i in index.items():
            lines.append(f"c var {i} = {name}")
    lines.append(f"p cnf {nvars} {len(clause_set.clauses)}")
    for clause in clause_set.clauses:
        body = " ".join(str(index[l.predicate] if l.positive else -index[l.predicate])
                        for l in clause.literals)
        lines.append(f"{body} 0".strip())
    return "\n".join(lines) + "\n"
