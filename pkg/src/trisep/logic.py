"""Terms, literals, clauses, and clause sets.

One syntax tree serves both logics: a propositional variable is a 0-ary
predicate, so the propositional engine is the substitution-free special case
of the first-order one. All values are immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Union

from .errors import ArityError

PROPOSITIONAL = "propositional"
FIRST_ORDER = "first-order"


@dataclass(frozen=True)
class Variable:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Constant:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Function:
    name: str
    args: tuple

    def __str__(self):
        return f"{self.name}({','.join(str(a) for a in self.args)})"


Term = Union[Variable, Constant, Function]


@dataclass(frozen=True)
class Literal:
    """A possibly negated atom. ``args`` is empty in propositional problems."""

    positive: bool
    predicate: str
    args: tuple = ()

    def complement(self) -> "Literal":
        return Literal(not self.positive, self.predicate, self.args)

    @property
    def atom(self) -> tuple:
        return (self.predicate, self.args)

    def __str__(self):
        sign = "" if self.positive else "~"
        if not self.args:
            return f"{sign}{self.predicate}"
        return f"{sign}{self.predicate}({','.join(str(a) for a in self.args)})"


def pos(predicate: str, *args: Term) -> Literal:
    return Literal(True, predicate, tuple(args))


def neg(predicate: str, *args: Term) -> Literal:
    return Literal(False, predicate, tuple(args))


def complement(literal: Literal) -> Literal:
    """Flip the sign; predicate and arguments are untouched."""
    return literal.complement()


def merge_duplicate_literals(literals: Iterable[Literal]) -> tuple:
    """Drop exact duplicates, keeping first-occurrence order for deterministic rendering."""
    seen = set()
    out = []
    for lit in literals:
        if lit not in seen:
            seen.add(lit)
            out.append(lit)
    return tuple(out)


def term_variables(term: Term) -> Iterator[Variable]:
    if isinstance(term, Variable):
        yield term
    elif isinstance(term, Function):
        for arg in term.args:
            yield from term_variables(arg)


def literal_variables(literal: Literal) -> Iterator[Variable]:
    for arg in literal.args:
        yield from term_variables(arg)


def variables_of(literals: Iterable[Literal]) -> tuple:
    """Distinct variables in first-occurrence order."""
    seen = set()
    out = []
    for lit in literals:
        for var in literal_variables(lit):
            if var not in seen:
                seen.add(var)
                out.append(var)
    return tuple(out)


def is_ground(literals: Iterable[Literal]) -> bool:
    return not variables_of(literals)


class Clause:
    """A duplicate-free disjunction of literals.

    The empty clause is permitted and is always false. Equality and hashing
    ignore the id and origin: two clauses are equal when their literal sets
    are, which is what subsumption and duplicate detection want.
    """

    __slots__ = ("id", "literals", "derived_in", "_literal_set", "_hash")

    def __init__(self, cid: int, literals: Iterable[Literal], derived_in: Optional[int] = None):
        merged = merge_duplicate_literals(literals)
        object.__setattr__(self, "id", cid)
        object.__setattr__(self, "literals", merged)
        object.__setattr__(self, "derived_in", derived_in)
        object.__setattr__(self, "_literal_set", frozenset(merged))
        object.__setattr__(self, "_hash", hash(self._literal_set))

    def __setattr__(self, name, value):
        raise AttributeError("Clause is immutable")

    @property
    def origin(self) -> str:
        if self.derived_in is None:
            return "input"
        return f"derived(round {self.derived_in})"

    @property
    def literal_set(self) -> frozenset:
        return self._literal_set

    def is_empty(self) -> bool:
        return not self.literals

    def __len__(self):
        return len(self.literals)

    def __iter__(self):
        return iter(self.literals)

    def __contains__(self, literal):
        return literal in self.literals

    def __eq__(self, other):
        if not isinstance(other, Clause):
            return NotImplemented
        return self._literal_set == other._literal_set

    def __hash__(self):
        return self._hash

    def __str__(self):
        if not self.literals:
            return "<empty>"
        return " | ".join(str(lit) for lit in self.literals)

    def __repr__(self):
        return f"Clause({self.id}, {self})"


def is_tautology(clause) -> bool:
    """True iff the clause holds a literal and its complement (syntactic check only)."""
    literals = clause.literals if isinstance(clause, Clause) else tuple(clause)
    lits = set(literals)
    return any(lit.complement() in lits for lit in lits)


def _check_symbol_tables(clauses) -> None:
    pred_arity = {}
    fun_arity = {}
    var_names = set()
    nonvar_names = set()

    def walk(term):
        if isinstance(term, Variable):
            var_names.add(term.name)
        elif isinstance(term, Constant):
            nonvar_names.add(term.name)
        else:
            seen = fun_arity.setdefault(term.name, len(term.args))
            if seen != len(term.args):
                raise ArityError(
                    f"function '{term.name}' used with arity {len(term.args)} and {seen}")
            nonvar_names.add(term.name)
            for arg in term.args:
                walk(arg)

    for clause in clauses:
        for lit in clause.literals:
            seen = pred_arity.setdefault(lit.predicate, len(lit.args))
            if seen != len(lit.args):
                raise ArityError(
                    f"predicate '{lit.predicate}' used with arity {len(lit.args)} and {seen}")
            for arg in lit.args:
                walk(arg)

    clash = var_names & nonvar_names
    if clash:
        raise ArityError(f"names used both as variable and constant/function: {sorted(clash)}")


class ClauseSet:
    """An ordered collection of clauses with a consistent mode and unique ids."""

    __slots__ = ("clauses", "mode")

    def __init__(self, clauses: Iterable[Clause], mode: Optional[str] = None):
        clauses = tuple(clauses)
        ids = [c.id for c in clauses]
        if len(set(ids)) != len(ids):
            raise ValueError("clause ids must be unique")
        _check_symbol_tables(clauses)
        inferred = PROPOSITIONAL if all(
            not lit.args for c in clauses for lit in c.literals) else FIRST_ORDER
        if mode is None:
            mode = inferred
        elif mode != inferred:
            raise ValueError(f"declared mode {mode!r} but literals say {inferred!r}")
        object.__setattr__(self, "clauses", clauses)
        object.__setattr__(self, "mode", mode)

    def __setattr__(self, name, value):
        raise AttributeError("ClauseSet is immutable")

    @property
    def is_propositional(self) -> bool:
        return self.mode == PROPOSITIONAL

    def __iter__(self):
        return iter(self.clauses)

    def __len__(self):
        return len(self.clauses)

    def by_id(self, cid: int) -> Clause:
        for clause in self.clauses:
            if clause.id == cid:
                return clause
        raise KeyError(cid)

    def next_id(self) -> int:
        return max((c.id for c in self.clauses), default=0) + 1

    def predicates(self) -> tuple:
        seen = set()
        out = []
        for clause in self.clauses:
            for lit in clause.literals:
                if lit.predicate not in seen:
                    seen.add(lit.predicate)
                    out.append(lit.predicate)
        return tuple(out)

    def __str__(self):
        return "{" + ", ".join(str(c) for c in self.clauses) + "}"


def clause_set(literal_lists, mode=None, start_id=1) -> ClauseSet:
    """Convenience builder: number clauses start_id, start_id+1, ..."""
    clauses = [Clause(start_id + i, lits) for i, lits in enumerate(literal_lists)]
    return ClauseSet(clauses, mode=mode)
