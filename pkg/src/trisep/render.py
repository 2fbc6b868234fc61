"""Trace documents: tabular rendering plus a machine-readable section.

The table puts the latest-selected clause leftmost, one row per boundary
position (first selection at the bottom), complements row-aligned with their
boundary partner, and leftover literals in a band above the boundary rows.

The machine section is line-oriented UTF-8, one tab-separated record per
line (tags: ROUND, COL, BOUND, CSC, VERDICT, and MODEL for satisfiable
outcomes). It alone carries everything verify_trace needs; variables are
written with a '?' sigil so parsing never depends on case conventions.
"""

from __future__ import annotations

import re
from typing import Dict, List, Optional

from .errors import ParseError
from .logic import (Clause, Constant, Function, Literal, Variable,
                    literal_variables, merge_duplicate_literals)
from .triangle import Column
from .unify import Substitution, apply_literal
from .engine import ProofTrace, RoundRecord

SZS_BY_VERDICT = {
    "unsatisfiable": "Unsatisfiable",
    "satisfiable": "Satisfiable",
    "unknown": "GaveUp",
}


# -- machine-level term and literal syntax -----------------------------------


def format_term(term) -> str:
    if isinstance(term, Variable):
        return f"?{term.name}"
    if isinstance(term, Constant):
        return term.name
    return f"{term.name}({','.join(format_term(a) for a in term.args)})"


def format_literal(lit: Literal) -> str:
    sign = "" if lit.positive else "~"
    if not lit.args:
        return f"{sign}{lit.predicate}"
    return f"{sign}{lit.predicate}({','.join(format_term(a) for a in lit.args)})"


_NAME = re.compile(r"[A-Za-z0-9_$#@']+")


class _TermScanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message):
        raise ParseError(f"{message} in {self.text!r} at offset {self.pos}")

    def eat(self, char: str) -> bool:
        if self.pos < len(self.text) and self.text[self.pos] == char:
            self.pos += 1
            return True
        return False

    def name(self) -> str:
        match = _NAME.match(self.text, self.pos)
        if not match:
            self.error("expected a name")
        self.pos = match.end()
        return match.group()

    def term(self):
        if self.eat("?"):
            return Variable(self.name())
        name = self.name()
        if self.eat("("):
            args = [self.term()]
            while self.eat(","):
                args.append(self.term())
            if not self.eat(")"):
                self.error("expected ')'")
            return Function(name, tuple(args))
        return Constant(name)

    def literal(self) -> Literal:
        positive = not self.eat("~")
        name = self.name()
        args: tuple = ()
        if self.eat("("):
            parsed = [self.term()]
            while self.eat(","):
                parsed.append(self.term())
            if not self.eat(")"):
                self.error("expected ')'")
            args = tuple(parsed)
        return Literal(positive, name, args)


def parse_literal_text(text: str) -> Literal:
    scanner = _TermScanner(text.strip())
    lit = scanner.literal()
    if scanner.pos != len(scanner.text):
        scanner.error("trailing input")
    return lit


def _format_literals(literals) -> str:
    return ";".join(format_literal(l) for l in literals) if literals else "-"


def _parse_literals(field: str) -> tuple:
    if field == "-":
        return ()
    return tuple(parse_literal_text(part) for part in field.split(";"))


def _format_sigma(sigma: Substitution) -> str:
    if sigma.is_empty():
        return "-"
    return ";".join(f"?{name}:={format_term(term)}"
                    for name, term in sorted(sigma.items()))


def _parse_sigma(field: str) -> Substitution:
    if field == "-":
        return Substitution()
    bindings = {}
    for part in field.split(";"):
        if ":=" not in part or not part.startswith("?"):
            raise ParseError(f"malformed binding {part!r}")
        name, text = part.split(":=", 1)
        scanner = _TermScanner(text)
        term = scanner.term()
        if scanner.pos != len(scanner.text):
            scanner.error("trailing input")
        bindings[name[1:]] = term
    return Substitution(bindings)


# -- tabular rendering ---------------------------------------------------------


def _column_label(state, index) -> str:
    return f"C{state.columns[index].clause_id}"


def render_round_table(state) -> str:
    columns = list(range(len(state.columns)))
    boundary_position: Dict[int, int] = {}
    boundary_literals: List[Literal] = []
    for i in columns:
        col = state.columns[i]
        if col.boundary_source is not None:
            boundary_position[i] = len(boundary_literals)
            boundary_literals.append(apply_literal(state.sigma, col.boundary_source))
    band_height = max((len(state.d_plus(i)) for i in columns), default=0)
    n_rows = band_height + len(boundary_literals)
    render_order = list(reversed(columns))
    grid = [["" for _ in render_order] for _ in range(n_rows)]

    def boundary_row(position: int) -> int:
        # position 0 (first selected) renders at the bottom
        return band_height + (len(boundary_literals) - 1 - position)

    for out_idx, i in enumerate(render_order):
        for r, lit in enumerate(reversed(state.d_plus(i))):
            grid[band_height - 1 - r][out_idx] = str(lit)
        own_position = boundary_position.get(i)
        for lit in state.d_minus(i):
            if own_position is not None and lit == boundary_literals[own_position]:
                grid[boundary_row(own_position)][out_idx] = str(lit)
                continue
            for position, blit in enumerate(boundary_literals):
                if lit == blit.complement():
                    grid[boundary_row(position)][out_idx] = str(lit)
                    break

    headers = [_column_label(state, i) for i in render_order]
    sigma_row = None
    if not state.sigma.is_empty() or any(
            a for i in columns for l in state.columns[i].source_literals for a in l.args):
        sigma_row = []
        for i in render_order:
            names = set()
            for lit in state.columns[i].source_literals:
                names.update(v.name for v in literal_variables(lit))
            sigma = state.sigma.restrict(names) if hasattr(state.sigma, "restrict") else state.sigma
            sigma_row.append("s=" + ("{}" if sigma.is_empty() else str(sigma)))
    table_rows = [headers] + ([sigma_row] if sigma_row else []) + grid
    widths = [max(len(row[c]) for row in table_rows) for c in range(len(render_order))]
    lines = []
    for r, row in enumerate(table_rows):
        line = "  ".join(cell.ljust(widths[c]) for c, cell in enumerate(row)).rstrip()
        lines.append(line)
        if r == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines)


# -- the full document ---------------------------------------------------------


def _column_kind(col: Column) -> str:
    if col.closing:
        return "C"
    return "B" if col.boundary_source is not None else "S"


def render_trace(trace: ProofTrace, problem: str = "", config_note: str = "",
                 verified: Optional[bool] = None) -> str:
    lines = []
    lines.append(f"# problem: {problem or '(unnamed)'}")
    if config_note:
        lines.append(f"# config: {config_note}")
    status = {True: "verified", False: "VERIFICATION FAILED", None: "unverified"}[verified]
    lines.append(f"# verdict: {trace.verdict} ({status})")
    lines.append("")
    for record in trace.rounds:
        state = record.state
        lines.append(f"== round {record.round_index} "
                     f"(clauses {', '.join(str(c) for c in record.clause_ids_used)}) ==")
        lines.append(render_round_table(state))
        csc_text = " | ".join(str(l) for l in record.csc.literals) or "⊥"
        lines.append(f"separated clause {record.csc.id}: {csc_text}")
        lines.append("")
    if trace.verdict == "satisfiable" and trace.model is not None:
        body = ", ".join(f"{name}={'true' if value else 'false'}"
                         for name, value in sorted(trace.model.items()))
        lines.append(f"model: {body}")
        lines.append("")
    if trace.verdict == "unknown" and trace.reason:
        lines.append(f"reason: {trace.reason}")
        lines.append("")

    # machine-readable section
    lines.append("TRACE\tBEGIN")
    for record in trace.rounds:
        state = record.state
        lines.append(f"ROUND\t{record.round_index}")
        for pos, col in enumerate(state.columns):
            names = set()
            for lit in col.source_literals:
                names.update(v.name for v in literal_variables(lit))
            sigma = state.sigma.restrict(names)
            boundary = (format_literal(col.boundary_source)
                        if col.boundary_source is not None else "-")
            lines.append("\t".join([
                "COL", str(pos + 1), str(col.clause_id), _column_kind(col), boundary,
                _format_sigma(sigma),
                _format_literals(col.source_literals),
                _format_literals(state.d_minus(pos)),
                _format_literals(state.d_plus(pos)),
            ]))
        boundary_lits = [apply_literal(state.sigma, col.boundary_source)
                         for col in state.columns if col.boundary_source is not None]
        lines.append("BOUND\t" + _format_literals(boundary_lits))
        lines.append(f"CSC\t{record.csc.id}\t{_format_literals(record.csc.literals)}")
    lines.append(f"VERDICT\t{trace.verdict}")
    if trace.model is not None:
        body = ";".join(f"{name}={'true' if value else 'false'}"
                        for name, value in sorted(trace.model.items()))
        lines.append(f"MODEL\t{body or '-'}")
    lines.append("TRACE\tEND")
    return "\n".join(lines) + "\n"


# -- machine-section parsing ----------------------------------------------------


class RawState:
    """A parsed round state: recorded partitions are authoritative, the
    contradiction and partition checks in verify_trace recompute the rest."""

    def __init__(self, columns, column_sigmas, d_minus_parts, d_plus_parts):
        self.columns = tuple(columns)
        self._column_sigmas = tuple(column_sigmas)
        self._d_minus = tuple(d_minus_parts)
        self._d_plus = tuple(d_plus_parts)
        self.closed = True

    @property
    def sigma(self) -> Substitution:
        # column sigmas are restrictions to pairwise disjoint variable sets
        merged = {}
        for sub in self._column_sigmas:
            merged.update(dict(sub.items()))
        return Substitution(merged)

    def d_minus(self, index):
        return self._d_minus[index]

    def d_plus(self, index):
        return self._d_plus[index]

    @property
    def csc(self):
        return merge_duplicate_literals(l for part in self._d_plus for l in part)

    def clause_ids(self):
        return tuple(col.clause_id for col in self.columns)


def parse_trace_document(text: str) -> ProofTrace:
    in_section = False
    rounds: List[RoundRecord] = []
    current_round = None
    columns: List[Column] = []
    sigmas: List[Substitution] = []
    d_minus_parts: List[tuple] = []
    d_plus_parts: List[tuple] = []
    verdict = "unknown"
    model = None

    def flush_round(csc_id: int, csc_literals: tuple):
        nonlocal columns, sigmas, d_minus_parts, d_plus_parts
        if current_round is None:
            raise ParseError("CSC record before any ROUND record")
        state = RawState(columns, sigmas, d_minus_parts, d_plus_parts)
        csc = Clause(csc_id, csc_literals, derived_in=current_round)
        rounds.append(RoundRecord(current_round, state, csc))
        columns, sigmas, d_minus_parts, d_plus_parts = [], [], [], []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        if raw.startswith("TRACE\tBEGIN"):
            in_section = True
            continue
        if raw.startswith("TRACE\tEND"):
            in_section = False
            continue
        if not in_section or not raw.strip():
            continue
        fields = raw.split("\t")
        tag = fields[0]
        try:
            if tag == "ROUND":
                current_round = int(fields[1])
            elif tag == "COL":
                _, pos, clause_id, kind, boundary, sigma, sources, d_minus, d_plus = fields
                boundary_lit = None if boundary == "-" else parse_literal_text(boundary)
                columns.append(Column(int(clause_id), _parse_literals(sources),
                                      boundary_lit, closing=kind == "C"))
                sigmas.append(_parse_sigma(sigma))
                d_minus_parts.append(_parse_literals(d_minus))
                d_plus_parts.append(_parse_literals(d_plus))
            elif tag == "BOUND":
                pass  # redundant with the COL records
            elif tag == "CSC":
                flush_round(int(fields[1]), _parse_literals(fields[2]))
            elif tag == "VERDICT":
                verdict = fields[1]
            elif tag == "MODEL":
                model = {}
                if fields[1] != "-":
                    for part in fields[1].split(";"):
                        name, value = part.split("=")
                        model[name] = value == "true"
            else:
                raise ParseError(f"unknown record tag {tag!r}", line=line_no)
        except (IndexError, ValueError) as exc:
            raise ParseError(f"malformed {tag} record: {exc}", line=line_no) from None
    if columns:
        raise ParseError("trailing COL records without a CSC record")
    return ProofTrace(tuple(rounds), verdict, model=model)
