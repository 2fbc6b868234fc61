"""Substitutions, most general unifiers, and variable renaming."""

from __future__ import annotations

from typing import Iterable, Optional, Tuple

from .logic import (
    Clause,
    Constant,
    Function,
    Literal,
    Variable,
    literal_variables,
    merge_duplicate_literals,
    term_variables,
)


class Substitution:
    """A finite map from variable names to terms.

    Identity bindings are dropped on construction and a variable may never map
    to a term containing itself. Substitutions produced by mgu() and by the
    engine's composition chains are idempotent; compose() itself follows the
    apply contract and does not force idempotence by closure.
    """

    __slots__ = ("_map",)

    def __init__(self, bindings=None):
        cleaned = {}
        for name, term in dict(bindings or {}).items():
            if isinstance(name, Variable):
                name = name.name
            if isinstance(term, Variable) and term.name == name:
                continue
            if any(v.name == name for v in term_variables(term)):
                raise ValueError(f"binding {name} -> {term} fails the occurs check")
            cleaned[name] = term
        object.__setattr__(self, "_map", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("Substitution is immutable")

    def get(self, name: str):
        return self._map.get(name)

    def items(self):
        return self._map.items()

    @property
    def domain(self) -> tuple:
        return tuple(self._map)

    def is_empty(self) -> bool:
        return not self._map

    def __bool__(self):
        return bool(self._map)

    def __len__(self):
        return len(self._map)

    def __eq__(self, other):
        if not isinstance(other, Substitution):
            return NotImplemented
        return self._map == other._map

    def __hash__(self):
        return hash(frozenset(self._map.items()))

    def restrict(self, names: Iterable[str]) -> "Substitution":
        names = set(names)
        return Substitution({k: v for k, v in self._map.items() if k in names})

    def __str__(self):
        if not self._map:
            return "{}"
        inner = ", ".join(f"{k} -> {v}" for k, v in sorted(self._map.items()))
        return "{" + inner + "}"

    __repr__ = __str__


EMPTY = Substitution()


def apply_term(sub: Substitution, term):
    if isinstance(term, Variable):
        bound = sub.get(term.name)
        return term if bound is None else bound
    if isinstance(term, Function):
        return Function(term.name, tuple(apply_term(sub, a) for a in term.args))
    return term


def apply_literal(sub: Substitution, literal: Literal) -> Literal:
    if not literal.args or sub.is_empty():
        return literal
    return Literal(literal.positive, literal.predicate,
                   tuple(apply_term(sub, a) for a in literal.args))


def apply_literals(sub: Substitution, literals: Iterable[Literal]) -> tuple:
    """Substitute, then merge literals that became identical."""
    return merge_duplicate_literals(apply_literal(sub, lit) for lit in literals)


def apply(sub: Substitution, target):
    """Apply a substitution to a term, literal, literal tuple, or clause."""
    if isinstance(target, (Variable, Constant, Function)):
        return apply_term(sub, target)
    if isinstance(target, Literal):
        return apply_literal(sub, target)
    if isinstance(target, Clause):
        return Clause(target.id, apply_literals(sub, target.literals), target.derived_in)
    return apply_literals(sub, target)


def compose(outer: Substitution, inner: Substitution) -> Substitution:
    """The substitution equivalent to applying inner first, then outer."""
    merged = {name: apply_term(outer, term) for name, term in inner.items()}
    for name, term in outer.items():
        if name not in merged:
            merged[name] = term
    return Substitution(merged)


def _resolve(term, bindings):
    """Follow variable bindings to a representative term (not a deep walk)."""
    while isinstance(term, Variable) and term.name in bindings:
        term = bindings[term.name]
    return term


def _occurs(name: str, term, bindings) -> bool:
    term = _resolve(term, bindings)
    if isinstance(term, Variable):
        return term.name == name
    if isinstance(term, Function):
        return any(_occurs(name, a, bindings) for a in term.args)
    return False


def _unify_terms(a, b, bindings) -> bool:
    a = _resolve(a, bindings)
    b = _resolve(b, bindings)
    if isinstance(a, Variable):
        if isinstance(b, Variable) and a.name == b.name:
            return True
        if _occurs(a.name, b, bindings):
            return False
        bindings[a.name] = b
        return True
    if isinstance(b, Variable):
        if _occurs(b.name, a, bindings):
            return False
        bindings[b.name] = a
        return True
    if isinstance(a, Constant) and isinstance(b, Constant):
        return a.name == b.name
    if isinstance(a, Function) and isinstance(b, Function):
        if a.name != b.name or len(a.args) != len(b.args):
            return False
        return all(_unify_terms(x, y, bindings) for x, y in zip(a.args, b.args))
    return False


def _ground_out(bindings) -> Substitution:
    """Resolve every binding fully; acyclic by the occurs check, so this terminates."""

    def deep(term):
        term = _resolve(term, bindings)
        if isinstance(term, Function):
            return Function(term.name, tuple(deep(a) for a in term.args))
        return term

    return Substitution({name: deep(Variable(name)) for name in bindings})


def mgu(a: Literal, b: Literal) -> Optional[Substitution]:
    """Most general unifier of two literals of the same sign, or None.

    The result is idempotent, and any other unifier of the pair factors
    through it.
    """
    if a.positive != b.positive or a.predicate != b.predicate or len(a.args) != len(b.args):
        return None
    bindings = {}
    for x, y in zip(a.args, b.args):
        if not _unify_terms(x, y, bindings):
            return None
    return _ground_out(bindings)


def mgu_terms(a, b) -> Optional[Substitution]:
    bindings = {}
    if not _unify_terms(a, b, bindings):
        return None
    return _ground_out(bindings)


def rename_clause(clause: Clause, tag) -> Tuple[Clause, Substitution]:
    """Suffix every variable with '#tag'; injective, so the result is a variant."""
    renaming = {}
    for lit in clause.literals:
        for var in literal_variables(lit):
            if var.name not in renaming:
                renaming[var.name] = Variable(f"{var.name}#{tag}")
    sub = Substitution(renaming)
    return apply(sub, clause), sub


def rename_apart(clauses: Iterable[Clause]):
    """Rename so the clauses pairwise share no variable.

    Clauses that already share nothing pass through with identity renamings;
    a colliding clause k (1-based) gets the '#k' suffix, escalated in the
    unlikely event the suffixed names are themselves taken. Returns the
    renamed clauses and the per-clause renamings.
    """
    renamed = []
    subs = []
    used = set()
    for k, clause in enumerate(clauses, start=1):
        names = {v.name for lit in clause.literals for v in literal_variables(lit)}
        if names & used:
            tag, bump = str(k), 1
            new, sub = rename_clause(clause, tag)
            while {v.name for lit in new.literals for v in literal_variables(lit)} & used:
                bump += 1
                tag = f"{k}_{bump}"
                new, sub = rename_clause(clause, tag)
            names = {v.name for lit in new.literals for v in literal_variables(lit)}
            clause, renaming = new, sub
        else:
            renaming = EMPTY
        used |= names
        renamed.append(clause)
        subs.append(renaming)
    return renamed, subs
