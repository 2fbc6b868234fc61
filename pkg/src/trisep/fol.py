"""First-order construction: the propositional state machine lifted with
unification.

Columns keep their renamed, pre-instantiation literals; the state's single
global substitution is the composition of every unifier applied during the
round. When a new unifier instantiates variables of earlier columns, composing
it into the global substitution re-instantiates the whole state, which is how
backward-propagating substitutions are realized.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .logic import (
    Clause,
    ClauseSet,
    Constant,
    Function,
    Literal,
    Variable,
    is_tautology,
    literal_variables,
    variables_of,
)
from .errors import ConstructionError
from .triangle import Column, Triangle
from .unify import EMPTY, Substitution, apply_literal, compose, mgu, rename_apart


# -- variants ----------------------------------------------------------------


def _blind_term_key(term):
    if isinstance(term, Variable):
        return ("V",)
    if isinstance(term, Constant):
        return ("C", term.name)
    return ("F", term.name, tuple(_blind_term_key(a) for a in term.args))


def _blind_literal_key(lit):
    return (lit.predicate, not lit.positive, tuple(_blind_term_key(a) for a in lit.args))


def variant_key(literals: Iterable[Literal]) -> frozenset:
    """A canonical form equal for alphabetic variants (conservative for
    symmetric clauses, which only means a missed dedup, never a wrong one)."""
    ordered = sorted(literals, key=_blind_literal_key)
    renaming = {}

    def canon(term):
        if isinstance(term, Variable):
            if term.name not in renaming:
                renaming[term.name] = Variable(f"v{len(renaming)}")
            return renaming[term.name]
        if isinstance(term, Function):
            return Function(term.name, tuple(canon(a) for a in term.args))
        return term

    return frozenset(
        Literal(l.positive, l.predicate, tuple(canon(a) for a in l.args)) for l in ordered)


def positional_variant(src: Iterable[Literal], orig: Iterable[Literal]) -> bool:
    """True when src is orig with variables renamed injectively, literal by
    literal in order. Engine traces always record literals positionally."""
    src, orig = tuple(src), tuple(orig)
    if len(src) != len(orig):
        return False
    fwd = {}
    bwd = {}

    def match(a, b) -> bool:
        if isinstance(a, Variable) and isinstance(b, Variable):
            if fwd.setdefault(a.name, b.name) != b.name:
                return False
            if bwd.setdefault(b.name, a.name) != a.name:
                return False
            return True
        if isinstance(a, Constant) and isinstance(b, Constant):
            return a.name == b.name
        if isinstance(a, Function) and isinstance(b, Function):
            return (a.name == b.name and len(a.args) == len(b.args)
                    and all(match(x, y) for x, y in zip(a.args, b.args)))
        return False

    for la, lb in zip(src, orig):
        if la.positive != lb.positive or la.predicate != lb.predicate:
            return False
        if len(la.args) != len(lb.args):
            return False
        if not all(match(x, y) for x, y in zip(la.args, lb.args)):
            return False
    return True


# -- preprocessing -------------------------------------------------------------


def preprocess(clause_set: ClauseSet) -> ClauseSet:
    """Deletion strategy plus renaming: drop tautologies and alphabetic
    duplicates, then rename the survivors apart. Ids are preserved."""
    kept = []
    seen = set()
    for clause in clause_set.clauses:
        if is_tautology(clause):
            continue
        key = variant_key(clause.literals)
        if key in seen:
            continue
        seen.add(key)
        kept.append(clause)
    renamed, _ = rename_apart(kept)
    return ClauseSet(renamed, mode=clause_set.mode)


# -- unifier search -------------------------------------------------------------


def _source_var_names(columns) -> set:
    names = set()
    for col in columns:
        for lit in col.source_literals:
            names.update(v.name for v in literal_variables(lit))
    return names


def greedy_pull(state: Triangle, literals, exclude: Optional[Literal],
                 seed: Substitution) -> Substitution:
    """Grow seed so that as many of the clause's literals as possible become
    syntactic complements of boundary literals. Boundary positions are tried
    in order, passes repeat to a fixpoint, and bindings may instantiate
    earlier columns (backward propagation is the caller's concern)."""
    increment = seed
    total = compose(seed, state.sigma)
    boundary_sources = [col.boundary_source for col in state.columns
                        if col.boundary_source is not None]
    changed = True
    while changed:
        changed = False
        for b_src in boundary_sources:
            for lit in literals:
                if exclude is not None and lit == exclude:
                    continue
                target = apply_literal(total, b_src).complement()
                inst = apply_literal(total, lit)
                if inst == target:
                    continue
                unifier = mgu(inst, target)
                if unifier is None:
                    continue
                increment = compose(unifier, increment)
                total = compose(unifier, total)
                changed = True
    return increment


def _with_column(state: Triangle, column: Column, increment: Substitution,
                 closed: bool) -> Optional[Triangle]:
    try:
        return Triangle(state.columns + (column,), compose(increment, state.sigma),
                        closed=closed)
    except ConstructionError:
        return None


def _check_renamed_apart(state: Triangle, clause: Clause) -> None:
    overlap = {v.name for v in variables_of(clause.literals)} & _source_var_names(state.columns)
    if overlap:
        raise ConstructionError(
            f"clause {clause.id} shares variables with the state: {sorted(overlap)}")


# -- construction steps ---------------------------------------------------------


def start_fol(first_clause: Clause, boundary_literal: Literal,
              sigma: Substitution = EMPTY) -> Triangle:
    if boundary_literal not in first_clause.literals:
        raise ConstructionError(
            f"literal {boundary_literal} is not in clause {first_clause.id}")
    col = Column(first_clause.id, first_clause.literals, boundary_literal)
    return Triangle((col,), sigma)


def extend_fol(state: Triangle, clause: Clause, boundary_literal: Literal,
               sigma: Optional[Substitution] = None) -> Optional[Triangle]:
    """Add a clause with a chosen boundary literal.

    With sigma=None the unifier is searched greedily (most literals pulled
    into the contradiction; earliest boundary positions first). An explicit
    sigma is composed in as given. Returns None when no legal state results.
    """
    if state.closed:
        raise ConstructionError("cannot extend a closed state")
    if boundary_literal not in clause.literals:
        raise ConstructionError(f"literal {boundary_literal} is not in clause {clause.id}")
    _check_renamed_apart(state, clause)
    column = Column(clause.id, clause.literals, boundary_literal)
    if sigma is not None:
        return _with_column(state, column, sigma, closed=False)
    searched = greedy_pull(state, clause.literals, boundary_literal, EMPTY)
    result = _with_column(state, column, searched, closed=False)
    if result is None and not searched.is_empty():
        result = _with_column(state, column, EMPTY, closed=False)
    return result


def extend_stair(state: Triangle, clause: Clause,
                 sigma: Optional[Substitution] = None) -> Optional[Triangle]:
    """Place a clause whose every literal complements an earlier boundary
    literal; it contributes nothing above the boundary and no boundary literal."""
    if state.closed:
        raise ConstructionError("cannot extend a closed state")
    _check_renamed_apart(state, clause)
    column = Column(clause.id, clause.literals, None)
    if sigma is not None:
        return _with_column(state, column, sigma, closed=False)
    searched = greedy_pull(state, clause.literals, None, EMPTY)
    return _with_column(state, column, searched, closed=False)


def close_fol(state: Triangle, clause: Clause,
              sigma: Optional[Substitution] = None) -> Optional[Triangle]:
    """Close the round: some nonempty subset of the clause's literals must
    unify into boundary complements. Greedy search when sigma is None."""
    if state.closed:
        raise ConstructionError("state is already closed")
    _check_renamed_apart(state, clause)
    column = Column(clause.id, clause.literals, None, closing=True)
    if sigma is not None:
        return _with_column(state, column, sigma, closed=True)
    searched = greedy_pull(state, clause.literals, None, EMPTY)
    return _with_column(state, column, searched, closed=True)


# -- in-place substitution strategies -------------------------------------------


def fall_in(state: Triangle, max_affected: int = 2) -> Triangle:
    """Pull leftover literals into the contradiction by further instantiation.

    Greedy to a fixpoint: each accepted substitution unifies one leftover
    with a boundary complement and is applied to the whole state. A candidate
    is rejected when it would instantiate more than max_affected other
    columns, or when the resulting state breaks an invariant.
    """
    current = state
    progress = True
    while progress:
        progress = False
        for i in range(len(current.columns)):
            for lit in current.d_plus(i):
                for b in current.boundary:
                    unifier = mgu(lit, b.complement())
                    if unifier is None or unifier.is_empty():
                        continue
                    touched = set(unifier.domain)
                    affected = 0
                    for j in range(len(current.columns)):
                        if j == i:
                            continue
                        names = {v.name
                                 for l in current.instantiated(j)
                                 for v in literal_variables(l)}
                        if names & touched:
                            affected += 1
                    if affected > max_affected:
                        continue
                    try:
                        candidate = Triangle(current.columns,
                                             compose(unifier, current.sigma),
                                             closed=current.closed)
                    except ConstructionError:
                        continue
                    current = candidate
                    progress = True
                    break
                if progress:
                    break
            if progress:
                break
    return current


def redundancy_guard(candidate_sigma: Substitution, clause: Clause,
                     clause_set: ClauseSet) -> bool:
    """False (reject) when the instance is a tautology or carries some other
    clause's literals wholesale (syntactic-superset subsumption only)."""
    from .unify import apply
    instance = apply(candidate_sigma, clause)
    if is_tautology(instance):
        return False
    instance_lits = set(instance.literals)
    for other in clause_set.clauses:
        if other.id == clause.id:
            continue
        if set(other.literals) <= instance_lits:
            return False
    return True
