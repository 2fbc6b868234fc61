"""Column-by-column contradiction construction around a main boundary line.

A construction state is a sequence of columns, one per selected clause.
Each non-closing, non-stair column contributes one boundary literal; the
boundary may never contain a complementary pair. A column's literals split
into the part inside the contradiction (d_minus: the boundary literal plus
every complement of an earlier boundary literal the clause happens to hold)
and the leftovers above it (d_plus). Closing pulls a nonempty set of boundary
complements from the last clause; the union of all d_plus parts is the
separated clause the round derives.

The same state serves the first-order engine: columns keep their pre-
instantiation literals and the state carries one global substitution, so
partitions are always re-derived from scratch after any unification.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from .errors import ConstructionError
from .logic import Clause, ClauseSet, Literal, merge_duplicate_literals
from .oracle import Assignment
from .unify import EMPTY, Substitution, apply_literal, apply_literals, mgu


@dataclass(frozen=True)
class Column:
    """One selected clause. boundary_source is None for stair and closing columns."""

    clause_id: int
    source_literals: tuple
    boundary_source: Optional[Literal] = None
    closing: bool = False


@dataclass(frozen=True)
class BuildConfig:
    mode: str = "unsat"                      # "unsat" | "sat"
    literal_threshold: Optional[int] = None  # cap on the separated clause's width
    allow_boundary_repeats: bool = False
    max_columns: int = 64


class Triangle:
    """Immutable construction state; every operation returns a new one.

    Derived data (instantiated literals, partitions, boundary, csc) is
    computed eagerly from the columns and the global substitution.
    """

    __slots__ = ("columns", "sigma", "closed", "boundary", "parts", "_instantiated")

    def __init__(self, columns: Iterable[Column], sigma: Substitution = EMPTY,
                 closed: bool = False):
        columns = tuple(columns)
        object.__setattr__(self, "columns", columns)
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "closed", closed)
        boundary: List[Literal] = []
        parts: List[Tuple[tuple, tuple]] = []
        instantiated: List[tuple] = []
        problems: List[str] = []
        closing_seen = 0
        for pos, col in enumerate(columns, start=1):
            lits = apply_literals(sigma, col.source_literals)
            instantiated.append(lits)
            complements = {b.complement() for b in boundary}
            if col.boundary_source is not None:
                if col.closing:
                    problems.append(f"column {pos}: closing column carries a boundary literal")
                blit = apply_literal(sigma, col.boundary_source)
                if blit not in lits:
                    problems.append(f"column {pos}: boundary literal {blit} not in the clause")
                if blit in complements:
                    problems.append(
                        f"column {pos}: boundary literal {blit} completes a complementary pair")
                d_minus = (blit,) + tuple(
                    l for l in lits if l in complements and l != blit)
                boundary.append(blit)
            else:
                if closing_seen and col.closing:
                    problems.append(f"column {pos}: second closing column")
                d_minus = tuple(l for l in lits if l in complements)
                if not d_minus:
                    kind = "closing" if col.closing else "stair"
                    problems.append(
                        f"column {pos}: {kind} column holds no complement of a boundary literal")
            d_plus = tuple(l for l in lits if l not in set(d_minus))
            if col.boundary_source is None and not col.closing and d_plus:
                problems.append(
                    f"column {pos}: stair column leaves literals outside the contradiction")
            if col.closing:
                closing_seen += 1
            parts.append((d_minus, d_plus))
        if closed and closing_seen != 1:
            problems.append("closed state must hold exactly one closing column")
        if not closed and closing_seen:
            problems.append("open state holds a closing column")
        if problems:
            raise ConstructionError("; ".join(problems))
        object.__setattr__(self, "boundary", tuple(boundary))
        object.__setattr__(self, "parts", tuple(parts))
        object.__setattr__(self, "_instantiated", tuple(instantiated))

    def __setattr__(self, name, value):
        raise AttributeError("Triangle is immutable")

    # -- views -------------------------------------------------------------

    def instantiated(self, index: int) -> tuple:
        return self._instantiated[index]

    def d_minus(self, index: int) -> tuple:
        return self.parts[index][0]

    def d_plus(self, index: int) -> tuple:
        return self.parts[index][1]

    @property
    def boundary_complements(self) -> set:
        return {b.complement() for b in self.boundary}

    @property
    def leftovers(self) -> tuple:
        """Current union of the d_plus parts, duplicate-free, column order."""
        return merge_duplicate_literals(
            lit for _, d_plus in self.parts for lit in d_plus)

    @property
    def csc(self) -> Optional[tuple]:
        """The separated clause's literals once closed, else None."""
        return self.leftovers if self.closed else None

    @property
    def closing_index(self) -> Optional[int]:
        for i, col in enumerate(self.columns):
            if col.closing:
                return i
        return None

    def column_sigma(self, index: int) -> Substitution:
        """The global substitution restricted to this column's own variables."""
        from .logic import variables_of
        names = {v.name for v in variables_of(self.columns[index].source_literals)}
        return self.sigma.restrict(names)

    def clause_ids(self) -> tuple:
        return tuple(col.clause_id for col in self.columns)

    def is_stair(self, index: int) -> bool:
        col = self.columns[index]
        return col.boundary_source is None and not col.closing

    def __str__(self):
        bits = []
        for i, col in enumerate(self.columns):
            d_minus, d_plus = self.parts[i]
            tag = "closing" if col.closing else ("stair" if self.is_stair(i) else
                                                 str(apply_literal(self.sigma, col.boundary_source)))
            bits.append(f"[{col.clause_id}:{tag} -| {','.join(map(str, d_minus))}"
                        f" |+ {','.join(map(str, d_plus))}]")
        state = "closed" if self.closed else "open"
        return f"Triangle({state}; " + " ".join(bits) + ")"


# -- propositional construction steps ---------------------------------------


def start(first_clause: Clause, boundary_literal: Literal) -> Triangle:
    """Open a construction with one clause and its boundary literal."""
    if boundary_literal not in first_clause.literals:
        raise ConstructionError(
            f"literal {boundary_literal} is not in clause {first_clause.id}")
    col = Column(first_clause.id, first_clause.literals, boundary_literal)
    return Triangle((col,))


def extend(state: Triangle, clause: Clause, boundary_literal: Optional[Literal]) -> Triangle:
    """Add a clause. boundary_literal None adds a stair column, which is only
    legal when every literal of the clause complements an earlier boundary
    literal."""
    if state.closed:
        raise ConstructionError("cannot extend a closed state")
    if boundary_literal is not None and boundary_literal not in clause.literals:
        raise ConstructionError(f"literal {boundary_literal} is not in clause {clause.id}")
    col = Column(clause.id, clause.literals, boundary_literal)
    return Triangle(state.columns + (col,), state.sigma)


def close(state: Triangle, last_clause: Clause) -> Triangle:
    """Close the construction; the clause must hold a boundary complement."""
    if state.closed:
        raise ConstructionError("state is already closed")
    col = Column(last_clause.id, last_clause.literals, None, closing=True)
    return Triangle(state.columns + (col,), state.sigma, closed=True)


# -- stop conditions ---------------------------------------------------------


def should_stop(state: Triangle, config: BuildConfig,
                clause_set: ClauseSet) -> Tuple[bool, Optional[str]]:
    """Whether a (tentatively) closed state is an acceptable stopping point.

    Reasons, strongest first: the closing column absorbed its whole clause
    (empty_dplus); some leftover literal has no complement partner anywhere in
    the clause set (no_complement_partner); the separated clause outgrew the
    configured threshold (threshold).
    """
    if not state.closed:
        raise ConstructionError("should_stop expects a closed (or tentatively closed) state")
    k = state.closing_index
    if not state.d_plus(k):
        return True, "empty_dplus"
    all_literals = {lit for clause in clause_set.clauses for lit in clause.literals}
    prop = clause_set.is_propositional
    for lit in state.d_plus(k):
        comp = lit.complement()
        if prop:
            present = comp in all_literals
        else:
            present = any(mgu(comp, other) is not None for other in all_literals)
        if not present:
            return True, "no_complement_partner"
    threshold = config.literal_threshold
    if threshold is not None and len(state.csc) > threshold and state.d_minus(k):
        return True, "threshold"
    return False, None


# -- deduction-preserving transformations ------------------------------------


def normalize_stairs(state: Triangle) -> Triangle:
    """Move stair columns to the leftmost region of the rendered table (the
    end of the selection order). The separated clause is unchanged."""
    if not state.closed:
        raise ConstructionError("normalize_stairs expects a closed state")
    stairs = [col for i, col in enumerate(state.columns) if state.is_stair(i)]
    if not stairs:
        return state
    rest = [col for i, col in enumerate(state.columns) if not state.is_stair(i)]
    return Triangle(tuple(rest) + tuple(stairs), state.sigma, closed=True)


def prune_redundant_columns(state: Triangle) -> Triangle:
    """Drop columns that carry no deductive weight.

    Removed, to a fixpoint: every stair column, and every boundary column
    whose boundary literal has no complement anywhere in a later column. The
    separated clause loses exactly the pruned columns' leftovers.
    """
    if not state.closed:
        raise ConstructionError("prune_redundant_columns expects a closed state")
    current = state
    while True:
        drop = set()
        for i, col in enumerate(current.columns):
            if current.is_stair(i):
                drop.add(i)
            elif col.boundary_source is not None:
                blit = apply_literal(current.sigma, col.boundary_source)
                comp = blit.complement()
                if not any(comp in current.instantiated(j)
                           for j in range(i + 1, len(current.columns))):
                    drop.add(i)
        if not drop:
            return current
        kept = tuple(col for i, col in enumerate(current.columns) if i not in drop)
        current = Triangle(kept, current.sigma, closed=True)


# -- model extraction ---------------------------------------------------------


def extract_model(state: Triangle, clause_set: ClauseSet) -> Optional[Assignment]:
    """Read a satisfying assignment off a closed covering construction.

    Requires: the closing column kept a leftover literal, and every clause of
    the set sits in some boundary-bearing or closing column (stair columns do
    not count: the boundary assignment falsifies them). The assignment makes
    the boundary literals and one closing leftover true, everything else
    false. Returns None when the preconditions fail.
    """
    if not state.closed or not clause_set.is_propositional:
        return None
    k = state.closing_index
    closing_plus = state.d_plus(k)
    if not closing_plus:
        return None
    covered = {col.clause_id for i, col in enumerate(state.columns) if not state.is_stair(i)}
    if any(clause.id not in covered for clause in clause_set.clauses):
        return None
    witness = closing_plus[0]
    required = {}
    for lit in state.boundary + (witness,):
        if required.get(lit.predicate, lit.positive) != lit.positive:
            # Unreachable: the boundary holds no complementary pair and the
            # witness's complement would have been pulled into the closing column.
            raise ConstructionError(f"conflicting truth requirement for {lit.predicate}")
        required[lit.predicate] = lit.positive
    assignment: Assignment = {name: False for name in clause_set.predicates()}
    assignment.update(required)
    return assignment


# -- clause and literal selection ---------------------------------------------


def _occurrence_counts(clause_set: ClauseSet, prop: bool):
    """clause-count of each literal and of its complement across the set."""
    literal_sets = [set(clause.literals) for clause in clause_set.clauses]

    def clauses_containing(target: Literal) -> int:
        if prop:
            return sum(1 for lits in literal_sets if target in lits)
        return sum(1 for lits in literal_sets
                   if any(mgu(target, other) is not None for other in lits))

    return clauses_containing


def select_candidates(state: Optional[Triangle], clause_set: ClauseSet,
                      config: BuildConfig) -> List[Tuple[Clause, Literal]]:
    """Rank (clause, boundary literal) extension candidates.

    Order: unit clauses first; then literals already left above the boundary;
    then, in unsat mode, literals whose complement occurs in more clauses
    (in sat mode, literals occurring more themselves, complement occurring
    less); ties fall back to clause id, then literal position.
    """
    prop = clause_set.is_propositional
    clauses_containing = _occurrence_counts(clause_set, prop)
    boundary = set(state.boundary) if state is not None else set()
    complements = state.boundary_complements if state is not None else set()
    leftovers = set(state.leftovers) if state is not None else set()
    placed = set()
    if state is not None:
        for i, col in enumerate(state.columns):
            if col.boundary_source is not None:
                placed.add((col.clause_id, apply_literal(state.sigma, col.boundary_source)))

    scored = []
    for clause in clause_set.clauses:
        for idx, lit in enumerate(clause.literals):
            if lit in complements:
                continue  # would put a complementary pair on the boundary
            if not config.allow_boundary_repeats and lit in boundary:
                continue
            if (clause.id, lit) in placed:
                continue  # identical column already present
            own = clauses_containing(lit)
            comp = clauses_containing(lit.complement())
            if config.mode == "sat":
                count_key = (-own, comp)
            else:
                count_key = (-comp,)
            key = (0 if len(clause) == 1 else 1,
                   0 if lit in leftovers else 1,
                   count_key,
                   clause.id,
                   idx)
            scored.append((key, clause, lit))
    scored.sort(key=lambda item: item[0])
    return [(clause, lit) for _, clause, lit in scored]
