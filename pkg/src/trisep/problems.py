"""Problem ingestion: one container for a parsed problem and its provenance."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional

from .dimacs import parse_dimacs
from .logic import ClauseSet
from .tptp import parse_tptp_cnf

DIMACS = "dimacs"
TPTP_CNF = "tptp-cnf"


def detect_format(text: str) -> str:
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith(("c ", "%")) or stripped == "c":
            continue
        if stripped.startswith("p "):
            return DIMACS
        return TPTP_CNF
    return DIMACS


@dataclass(frozen=True)
class ProblemSource:
    """A problem as read: the raw text, its format, the parsed clauses, and
    the external-name -> internal-symbol table (DIMACS integers map onto the
    x<i> predicates; TPTP names are their own symbols)."""

    text: str
    format: str
    clauses: ClauseSet
    symbols: Dict[str, str]
    path: Optional[str] = None


def load_problem(text: str, fmt: str = "auto", path: Optional[str] = None) -> ProblemSource:
    if fmt == "auto":
        fmt = detect_format(text)
    if fmt == DIMACS:
        clauses = parse_dimacs(text)
        symbols = {name[1:]: name for name in clauses.predicates()}
    elif fmt == TPTP_CNF:
        clauses = parse_tptp_cnf(text)
        symbols = {name: name for name in clauses.predicates()}
    else:
        raise ValueError(f"unknown problem format {fmt!r}")
    return ProblemSource(text, fmt, clauses, symbols, path)


def load_problem_file(path: str, fmt: str = "auto") -> ProblemSource:
    with open(path, "r", encoding="utf-8") as handle:
        return load_problem(handle.read(), fmt, path=path)
