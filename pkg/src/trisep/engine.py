"""The outer deduction loop, proof-trace verification, and the bridge from
linear resolution.

One round builds one closed construction, separates its leftover clause, and
feeds it back into the working set. An empty separated clause refutes the
input. A propositional round that covers every input clause and keeps a
leftover in its closing column yields a model instead. Stalls restart the
round with perturbed tie-breaking; when restarts run out, a two-column
saturation (binary resolution as the k=2 special case, with subsumption)
settles propositional inputs and makes a bounded best effort on first-order
ones.
"""

from __future__ import annotations

import heapq
import random
import time
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import ConstructionError
from .logic import (
    Clause,
    ClauseSet,
    Literal,
    is_tautology,
    merge_duplicate_literals,
)
from .oracle import (
    Assignment,
    is_standard_contradiction,
    shadow_contradiction_check,
    verify_model,
)
from .triangle import (
    BuildConfig,
    Triangle,
    close,
    extend,
    extract_model,
    prune_redundant_columns,
    should_stop,
    start,
)
from .fol import (
    greedy_pull,
    close_fol,
    extend_fol,
    fall_in,
    positional_variant,
    preprocess,
    redundancy_guard,
    start_fol,
    variant_key,
)
from .unify import EMPTY, apply_literals, compose, mgu, rename_clause

UNSATISFIABLE = "unsatisfiable"
SATISFIABLE = "satisfiable"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class Outcome:
    verdict: str
    model: Optional[Assignment] = None
    reason: Optional[str] = None

    @property
    def unsatisfiable(self):
        return self.verdict == UNSATISFIABLE

    @property
    def satisfiable(self):
        return self.verdict == SATISFIABLE


@dataclass(frozen=True)
class RoundRecord:
    round_index: int
    state: Triangle
    csc: Clause

    @property
    def clause_ids_used(self) -> tuple:
        return self.state.clause_ids()


@dataclass(frozen=True)
class ProofTrace:
    rounds: tuple
    verdict: str
    model: Optional[Assignment] = None
    reason: Optional[str] = None


@dataclass(frozen=True)
class EngineConfig:
    mode: str = "auto"                        # "unsat" | "sat" | "auto"
    literal_threshold: Optional[int] = None   # None: 2 x widest input clause
    allow_boundary_repeats: Optional[bool] = None  # None: by mode (sat: yes)
    max_columns: Optional[int] = None         # None: 4 x |S|, floor 8
    max_rounds: int = 40
    max_restarts: int = 6
    fallback_enabled: bool = True
    time_budget: float = 10.0
    seed: int = 0


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    diagnostic: str = ""

    def __bool__(self):
        return self.ok


# ---------------------------------------------------------------------------
# Round construction
# ---------------------------------------------------------------------------


class _RoundBuilder:
    """Strategy-guided construction of one closed state.

    Selection order: unit clauses first; then extensions after which some
    clause would close fully absorbed; then extensions leaving the fewest new
    leftovers; then literals already left above the boundary; then the
    mode-specific occurrence counts; clause id and literal position settle
    ties, optionally shuffled within tie groups on restarts.
    """

    def __init__(self, working: Sequence[Clause], config: BuildConfig, prop: bool,
                 rng: Optional[random.Random], deadline: float, goal: str):
        self.working = list(working)
        self.working_set = ClauseSet(self.working)
        self.config = config
        self.prop = prop
        self.rng = rng
        self.deadline = deadline
        self.goal = goal  # "unsat" | "sat"
        self._counts: Dict[Literal, int] = {}

    # -- helpers ------------------------------------------------------------

    def _count_clauses_with(self, literal: Literal) -> int:
        cached = self._counts.get(literal)
        if cached is not None:
            return cached
        if self.prop:
            n = sum(1 for c in self.working if literal in c.literals)
        else:
            n = sum(1 for c in self.working
                    if any(mgu(literal, other) is not None for other in c.literals))
        self._counts[literal] = n
        return n

    def _place(self, state: Optional[Triangle], clause: Clause, literal_index: int,
               ) -> Optional[Triangle]:
        pos = 1 if state is None else len(state.columns) + 1
        if self.prop:
            placed, lit = clause, clause.literals[literal_index]
        else:
            placed, _ = rename_clause(clause, pos)
            lit = placed.literals[literal_index]
        try:
            if state is None:
                return start_fol(placed, lit) if not self.prop else start(placed, lit)
            if self.prop:
                return extend(state, placed, lit)
            result = extend_fol(state, placed, lit)
            if result is not None:
                applied = result.column_sigma(len(result.columns) - 1)
                if not applied.is_empty() and not redundancy_guard(
                        applied, placed, self.working_set):
                    # the eager unifier makes a redundant instance: fall back
                    # to placing the clause uninstantiated
                    result = extend_fol(state, placed, lit, sigma=EMPTY)
            return result
        except ConstructionError:
            return None

    def _close_states(self, state: Triangle, clause: Clause):
        """Closed states for one clause: the greedy close plus, first-order,
        one per seeded (clause literal, boundary complement) unifier, since
        the greedy pull order can miss the useful instantiation."""
        if self.prop:
            try:
                yield close(state, clause)
            except ConstructionError:
                return
            return
        placed, _ = rename_clause(clause, len(state.columns) + 1)
        seen_parts = set()
        greedy = close_fol(state, placed)
        if greedy is not None:
            k = greedy.closing_index
            seen_parts.add((frozenset(greedy.d_minus(k)), frozenset(greedy.d_plus(k))))
            yield greedy
        total = state.sigma
        boundary_targets = [lit.complement() for lit in state.boundary]
        for lit in placed.literals:
            for target in boundary_targets:
                seed = mgu(apply_literals(total, (lit,))[0], target)
                if seed is None or seed.is_empty():
                    continue
                full = greedy_pull(state, placed.literals, None, seed)
                closed = close_fol(state, placed, sigma=full)
                if closed is None:
                    continue
                k = closed.closing_index
                key = (frozenset(closed.d_minus(k)), frozenset(closed.d_plus(k)))
                if key in seen_parts:
                    continue
                seen_parts.add(key)
                yield closed

    def _best_closure(self, state: Triangle) -> Optional[Triangle]:
        if self.prop:
            complements = frozenset(state.boundary_complements)
            best_key = None
            best_clause = None
            for clause in self.working:
                inside = len(clause.literal_set & complements)
                if not inside:
                    continue
                outside = len(clause.literal_set) - inside
                if self.goal == "sat":
                    key = (0 if outside else 1, -inside, clause.id)
                else:
                    key = (outside, -inside, clause.id)
                if best_key is None or key < best_key:
                    best_key, best_clause = key, clause
            return close(state, best_clause) if best_clause is not None else None
        best_key = None
        best = None
        for clause in self.working:
            for closed in self._close_states(state, clause):
                k = closed.closing_index
                d_plus = closed.d_plus(k)
                if self.goal == "sat":
                    key = (0 if d_plus else 1, -len(closed.d_minus(k)), clause.id)
                else:
                    key = (len(d_plus), -len(closed.d_minus(k)), clause.id)
                if best_key is None or key < best_key:
                    best_key, best = key, closed
        return best

    def _full_close_available(self, state: Triangle) -> bool:
        if self.prop:
            complements = frozenset(state.boundary_complements)
            return any(clause.literals and clause.literal_set <= complements
                       for clause in self.working)
        for clause in self.working:
            for closed in self._close_states(state, clause):
                if not closed.d_plus(closed.closing_index):
                    return True
        return False

    def _apply_ties(self, scored: list) -> list:
        scored.sort(key=lambda item: item[0])
        if self.rng is None:
            return scored
        out = []
        i = 0
        while i < len(scored):
            j = i
            while j < len(scored) and scored[j][0][:-2] == scored[i][0][:-2]:
                j += 1
            group = scored[i:j]
            self.rng.shuffle(group)
            out.extend(group)
            i = j
        return out

    def _column_signature(self, state: Triangle, index: int):
        col = state.columns[index]
        boundary_idx = None
        if col.boundary_source is not None:
            boundary_idx = col.source_literals.index(col.boundary_source)
        lits = state.instantiated(index)
        body = frozenset(lits) if self.prop else variant_key(lits)
        return (col.clause_id, boundary_idx, body)

    def _extensions(self, state: Optional[Triangle]) -> List[Tuple[tuple, Triangle]]:
        boundary = set(state.boundary) if state is not None else set()
        leftovers = set(state.leftovers) if state is not None else set()
        placed_ids = set()
        existing_signatures = set()
        if state is not None:
            placed_ids = set(state.clause_ids())
            existing_signatures = {self._column_signature(state, i)
                                   for i in range(len(state.columns))}
        scored = []
        for clause in self.working:
            for idx, lit in enumerate(clause.literals):
                if self.prop and not self.config.allow_boundary_repeats and lit in boundary:
                    continue
                candidate = self._place(state, clause, idx)
                if candidate is None:
                    continue
                if not self.config.allow_boundary_repeats and not self.prop \
                        and candidate.boundary[-1] in boundary:
                    continue
                if state is not None and self._column_signature(
                        candidate, len(candidate.columns) - 1) in existing_signatures:
                    continue
                new_col = len(candidate.columns) - 1
                new_plus = len(candidate.d_plus(new_col))
                unit = 0 if len(clause) == 1 else 1
                pref = 0 if lit in leftovers else 1
                own = self._count_clauses_with(lit)
                comp = self._count_clauses_with(lit.complement())
                if self.goal == "sat":
                    unplaced = 0 if clause.id not in placed_ids else 1
                    key = (unit, unplaced, -own, comp, clause.id, idx)
                else:
                    # an extension after which an empty separation is one close away
                    look = 1
                    if not candidate.leftovers and self._full_close_available(candidate):
                        look = 0
                    key = (unit, look, new_plus, pref, -comp, clause.id, idx)
                scored.append((key, candidate))
        return self._apply_ties(scored)

    # -- main ---------------------------------------------------------------

    def build(self) -> Optional[Triangle]:
        state: Optional[Triangle] = None
        max_columns = self.config.max_columns
        while time.monotonic() < self.deadline:
            if state is not None:
                best = self._best_closure(state)
                if best is not None:
                    if self.goal == "sat":
                        placed = {c.clause_id for i, c in enumerate(best.columns)
                                  if not best.is_stair(i)}
                        covered = all(c.id in placed for c in self.working
                                      if c.derived_in is None)
                        if covered and best.d_plus(best.closing_index):
                            return best
                        if not best.csc:
                            return best  # an empty separation settles it regardless
                    else:
                        stop, _reason = should_stop(best, self.config, self.working_set)
                        if stop:
                            return best
                if len(state.columns) >= max_columns:
                    return best
            extensions = self._extensions(state)
            if not extensions:
                if state is None:
                    return None
                return self._best_closure(state)
            state = extensions[0][1]
        return None


# ---------------------------------------------------------------------------
# Two-column saturation fallback
# ---------------------------------------------------------------------------

_SATURATION_CLAUSE_CAP = 20000


def _two_column_rounds(a: Clause, b: Clause, prop: bool) -> List[Triangle]:
    """All k=2 closed states with a's literal on the boundary, closed by b."""
    out = []
    if prop:
        b_lits = set(b.literals)
        for lit in a.literals:
            if lit.complement() not in b_lits:
                continue
            try:
                out.append(close(start(a, lit), b))
            except ConstructionError:
                continue
        return out
    a1, _ = rename_clause(a, 1)
    b2, _ = rename_clause(b, 2)
    for lit in a1.literals:
        opened = start_fol(a1, lit)
        for other in b2.literals:
            seed = mgu(other, lit.complement())
            if seed is None:
                continue
            full = greedy_pull(opened, b2.literals, None, seed)
            closed = close_fol(opened, b2, sigma=full)
            if closed is not None:
                out.append(closed)
    return out


def _dp_model(clauses: Sequence[Clause], predicates: Sequence[str]) -> Assignment:
    """Model of a resolution-closed, empty-clause-free propositional set.

    Backward pass of Davis-Putnam elimination: variables are eliminated in
    sorted order; assigning in reverse, a variable is true iff some clause
    over the remaining variables holds it positively with every other literal
    already false. Closure under resolution (modulo subsumption) makes the
    choice conflict-free.
    """
    order = sorted(predicates)
    position = {name: i for i, name in enumerate(order)}
    assign: Assignment = {}
    for i in range(len(order) - 1, -1, -1):
        name = order[i]
        forced = False
        for clause in clauses:
            preds = [lit.predicate for lit in clause.literals]
            if name not in preds:
                continue
            if any(position[p] < i for p in preds):
                continue
            others = [lit for lit in clause.literals if lit.predicate != name]
            if all(assign[lit.predicate] != lit.positive for lit in others):
                if any(lit.positive for lit in clause.literals if lit.predicate == name):
                    forced = True
                    break
        assign[name] = forced
    return assign


def _saturate(working: Sequence[Clause], next_id: int, prop: bool, deadline: float,
              existing_rounds: Sequence[RoundRecord], round_base: int):
    """Exhaustive two-column rounds with subsumption, smallest clauses first.

    Returns (verdict, rounds, model, reason): verdict is UNSATISFIABLE with the
    derivation chain, SATISFIABLE with a model (propositional saturation only),
    or UNKNOWN on budget or cap exhaustion. Propositional resolvents are
    computed at the literal-set level; the replayable round state is built
    only for clauses that are actually kept.
    """
    def dedup_key(clause):
        return clause.literal_set if prop else variant_key(clause.literals)

    seen = set()
    heap: List[tuple] = []
    tick = 0
    for clause in working:
        if is_tautology(clause):
            continue
        key = dedup_key(clause)
        if key in seen:
            continue
        seen.add(key)
        heapq.heappush(heap, (len(clause), tick, clause))
        tick += 1
    processed: List[Clause] = []
    records: Dict[int, RoundRecord] = {}
    round_no = round_base

    def finish_unsat(empty_record: RoundRecord):
        # keep only the ancestor rounds of the empty clause, then renumber
        pool = {rec.csc.id: rec for rec in list(existing_rounds) + list(records.values())}
        needed = set(empty_record.clause_ids_used)
        chain = [empty_record]
        frontier = list(needed)
        while frontier:
            cid = frontier.pop()
            rec = pool.get(cid)
            if rec is None or rec in chain:
                continue
            chain.append(rec)
            for used in rec.clause_ids_used:
                if used not in needed:
                    needed.add(used)
                    frontier.append(used)
        chain.sort(key=lambda r: r.round_index)
        renumbered = []
        for i, rec in enumerate(chain, start=1):
            csc = Clause(rec.csc.id, rec.csc.literals, derived_in=i)
            renumbered.append(RoundRecord(i, rec.state, csc))
        return UNSATISFIABLE, renumbered, None, None

    def record_round(state: Triangle, lits) -> Optional[RoundRecord]:
        nonlocal next_id, round_no
        csc = Clause(next_id, lits, derived_in=round_no)
        record = RoundRecord(round_no, state, csc)
        records[csc.id] = record
        next_id += 1
        round_no += 1
        return record

    while heap:
        if time.monotonic() > deadline:
            return UNKNOWN, [], None, "time budget exhausted during saturation"
        if len(processed) > _SATURATION_CLAUSE_CAP:
            return UNKNOWN, [], None, "saturation clause cap exceeded"
        _, _, given = heapq.heappop(heap)
        given_set = given.literal_set
        if any(p.literal_set <= given_set for p in processed):
            continue
        processed[:] = [p for p in processed if not given_set < p.literal_set]
        partners = list(processed)
        processed.append(given)
        if prop:
            partner_sets = [(p, p.literal_set) for p in partners]
            for lit in given.literals:
                comp = lit.complement()
                for other, other_set in partner_sets:
                    if comp not in other_set:
                        continue
                    resolvent = (given_set - {lit}) | (other_set - {comp})
                    if any(l.complement() in resolvent for l in resolvent):
                        continue  # tautology
                    key = frozenset(resolvent)
                    if key in seen:
                        continue
                    if not resolvent:
                        state = close(start(given, lit), other)
                        return finish_unsat(record_round(state, ()))
                    if any(p.literal_set <= resolvent for p in processed):
                        continue
                    seen.add(key)
                    state = close(start(given, lit), other)
                    record = record_round(state, tuple(state.csc))
                    heapq.heappush(heap, (len(resolvent), tick, record.csc))
                    tick += 1
        else:
            for other in partners + [given]:
                for pair in ((given, other), (other, given)):
                    for closed in _two_column_rounds(pair[0], pair[1], prop):
                        lits = closed.csc
                        if is_tautology(lits):
                            continue
                        key = variant_key(lits)
                        if key in seen:
                            continue
                        if not lits:
                            return finish_unsat(record_round(closed, ()))
                        lit_set = frozenset(lits)
                        if any(p.literal_set <= lit_set for p in processed):
                            continue
                        seen.add(key)
                        record = record_round(closed, lits)
                        heapq.heappush(heap, (len(lits), tick, record.csc))
                        tick += 1
    if prop:
        predicates = sorted({lit.predicate for c in processed for lit in c.literals}
                            | {lit.predicate for c in working for lit in c.literals})
        model = _dp_model(processed, predicates)
        return SATISFIABLE, [], model, None
    return UNKNOWN, [], None, "first-order saturation completed without the empty clause"


# ---------------------------------------------------------------------------
# prove
# ---------------------------------------------------------------------------


def _resolved_build_config(clause_set: ClauseSet, config: EngineConfig,
                           goal: str) -> BuildConfig:
    widest = max((len(c) for c in clause_set.clauses), default=1)
    threshold = config.literal_threshold
    if threshold is None:
        threshold = 2 * widest
    repeats = config.allow_boundary_repeats
    if repeats is None:
        repeats = goal == "sat"
    max_columns = config.max_columns
    if max_columns is None:
        max_columns = max(8, 4 * len(clause_set.clauses))
    return BuildConfig(mode=goal, literal_threshold=threshold,
                       allow_boundary_repeats=repeats, max_columns=max_columns)


def _complete_model(model: Assignment, clause_set: ClauseSet) -> Assignment:
    full = {name: False for name in clause_set.predicates()}
    full.update(model)
    return full


def prove(clause_set: ClauseSet, config: Optional[EngineConfig] = None
          ) -> Tuple[Outcome, ProofTrace]:
    if not clause_set.clauses:
        raise ValueError("empty input clause set")
    config = config or EngineConfig()
    started = time.monotonic()
    deadline = started + config.time_budget
    # reserve half the budget for the saturation fallback when it is enabled
    main_deadline = (started + config.time_budget * 0.5
                     if config.fallback_enabled else deadline)
    prop = clause_set.is_propositional

    if any(c.is_empty() for c in clause_set.clauses):
        trace = ProofTrace((), UNSATISFIABLE)
        return Outcome(UNSATISFIABLE), trace

    if prop:
        working: List[Clause] = []
        seen_inputs = set()
        for clause in clause_set.clauses:
            if is_tautology(clause):
                continue
            key = frozenset(clause.literals)
            if key in seen_inputs:
                continue
            seen_inputs.add(key)
            working.append(clause)
    else:
        working = list(preprocess(clause_set).clauses)

    if not working:
        # every input clause was a tautology
        if prop:
            model = {name: False for name in clause_set.predicates()}
            return (Outcome(SATISFIABLE, model=model),
                    ProofTrace((), SATISFIABLE, model=model))
        reason = "all clauses deleted in preprocessing"
        return Outcome(UNKNOWN, reason=reason), ProofTrace((), UNKNOWN, reason=reason)

    inputs_for_coverage = ClauseSet(working, mode=clause_set.mode)
    goal = "sat" if config.mode == "sat" and prop else "unsat"
    build_cfg = _resolved_build_config(clause_set, config, goal)
    next_id = max(c.id for c in clause_set.clauses) + 1
    known = {(frozenset(c.literals) if prop else variant_key(c.literals)): c.id
             for c in working}
    rounds: List[RoundRecord] = []
    round_no = 1
    restart_streak = 0

    while round_no <= config.max_rounds and time.monotonic() < main_deadline:
        rng = (random.Random(config.seed * 1000003 + restart_streak)
               if restart_streak else None)
        builder = _RoundBuilder(working, build_cfg, prop, rng, main_deadline, goal)
        state = builder.build()
        if state is None:
            restart_streak += 1
            if restart_streak > config.max_restarts:
                break
            continue
        if not prop:
            state = fall_in(state)
        raw_state = state
        if goal == "unsat":
            state = prune_redundant_columns(state)
        csc_lits = state.csc
        csc = Clause(next_id, csc_lits, derived_in=round_no)
        if not csc_lits:
            rounds.append(RoundRecord(round_no, state, csc))
            return Outcome(UNSATISFIABLE), ProofTrace(tuple(rounds), UNSATISFIABLE)
        if prop and config.mode in ("sat", "auto"):
            model = extract_model(raw_state, inputs_for_coverage)
            if model is not None:
                model = _complete_model(model, clause_set)
                if verify_model(clause_set, model):
                    trace = ProofTrace(tuple(rounds), SATISFIABLE, model=model)
                    return Outcome(SATISFIABLE, model=model), trace
        key = frozenset(csc_lits) if prop else variant_key(csc_lits)
        stalled = (key in known or is_tautology(csc_lits)
                   or any(set(c.literals) <= set(csc_lits) for c in working))
        if stalled:
            restart_streak += 1
            if restart_streak > config.max_restarts:
                break
            continue
        rounds.append(RoundRecord(round_no, state, csc))
        known[key] = csc.id
        working.append(csc)
        next_id += 1
        round_no += 1
        restart_streak = 0

    if config.fallback_enabled and time.monotonic() < deadline:
        verdict, fb_rounds, model, reason = _saturate(
            working, next_id, prop, deadline, rounds, round_no)
        if verdict == UNSATISFIABLE:
            return Outcome(UNSATISFIABLE), ProofTrace(tuple(fb_rounds), UNSATISFIABLE)
        if verdict == SATISFIABLE:
            model = _complete_model(model, clause_set)
            trace = ProofTrace(tuple(rounds), SATISFIABLE, model=model)
            return Outcome(SATISFIABLE, model=model), trace
        reason = reason or "gave up"
    else:
        reason = ("time budget exhausted" if time.monotonic() >= deadline
                  else "round or restart budget exhausted, fallback disabled")
    trace = ProofTrace(tuple(rounds), UNKNOWN, reason=reason)
    return Outcome(UNKNOWN, reason=reason), trace


# ---------------------------------------------------------------------------
# Trace verification
# ---------------------------------------------------------------------------


def verify_trace(clause_set: ClauseSet, trace: ProofTrace) -> VerificationResult:
    """Certify every round as a contradiction-separation step.

    Checks per round: cited clauses are inputs or earlier separated clauses;
    each column's pre-instantiation literals are a (positional) variant of the
    cited clause; the recorded partition re-derives from the substitution and
    is disjoint with a nonempty inside part; the inside parts pass the
    brute-force standard-contradiction check (grounded first); the separated
    clause is exactly the union of the leftovers. Finally the verdict must
    match the last round.
    """
    registry: Dict[int, Clause] = {c.id: c for c in clause_set.clauses}
    prop = clause_set.is_propositional

    def fail(round_index, message):
        return VerificationResult(False, f"round {round_index}: {message}")

    for number, record in enumerate(trace.rounds, start=1):
        state = record.state
        if not state.closed:
            return fail(number, "state is not closed")
        for pos, col in enumerate(state.columns):
            origin = registry.get(col.clause_id)
            if origin is None:
                return fail(number, f"column {pos + 1} cites unknown clause {col.clause_id}")
            if not positional_variant(col.source_literals, origin.literals):
                return fail(number, f"column {pos + 1} is not a variant of clause "
                                    f"{col.clause_id}")
            inst = set(apply_literals(state.sigma, col.source_literals))
            d_minus, d_plus = set(state.d_minus(pos)), set(state.d_plus(pos))
            if d_minus & d_plus:
                return fail(number, f"column {pos + 1} partition overlaps")
            if not d_minus:
                return fail(number, f"column {pos + 1} has an empty inside part")
            if inst != d_minus | d_plus:
                return fail(number, f"column {pos + 1} partition does not match the "
                                    "instantiated clause")
        inside = [Clause(i + 1, state.d_minus(i)) for i in range(len(state.columns))]
        contradiction = (is_standard_contradiction(inside) if prop
                         else shadow_contradiction_check(inside))
        if not contradiction:
            return fail(number, "inside parts are not a standard contradiction")
        if set(record.csc.literals) != set(state.csc):
            return fail(number, "separated clause does not equal the leftover union")
        if record.csc.id in registry:
            return fail(number, f"separated clause id {record.csc.id} already used")
        registry[record.csc.id] = record.csc

    if trace.verdict == UNSATISFIABLE:
        if trace.rounds:
            if trace.rounds[-1].csc.literals:
                return VerificationResult(
                    False, "verdict unsatisfiable but the last separated clause is nonempty")
        elif not any(c.is_empty() for c in clause_set.clauses):
            return VerificationResult(
                False, "verdict unsatisfiable with no rounds and no empty input clause")
    elif trace.verdict == SATISFIABLE:
        if not prop:
            return VerificationResult(False, "satisfiable verdict on a first-order problem")
        if trace.model is None:
            return VerificationResult(False, "satisfiable verdict without a model")
        model = _complete_model(trace.model, clause_set)
        if not verify_model(clause_set, model):
            return VerificationResult(False, "recorded model does not satisfy the input")
    return VerificationResult(True)


# ---------------------------------------------------------------------------
# Linear deduction bridge
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LinearDeduction:
    """A resolution chain: the top clause is resolved with each side clause in
    turn on the given pivot (the pivot sits in the side clause, its complement
    in the running resolvent)."""

    top_clause: Clause
    side_clauses: tuple
    pivots: tuple
    unifiers: Optional[tuple] = None  # per-step, composed and applied up front

    def __post_init__(self):
        if len(self.side_clauses) != len(self.pivots):
            raise ValueError("one pivot per side clause")
        if self.unifiers is not None and len(self.unifiers) != len(self.pivots):
            raise ValueError("one unifier per step when given")


def _instantiate_linear(ld: LinearDeduction):
    if not ld.unifiers:
        return ld.top_clause, list(ld.side_clauses), list(ld.pivots)
    from .unify import apply, apply_literal
    total = EMPTY
    for sub in ld.unifiers:
        total = compose(sub, total)
    top = apply(total, ld.top_clause)
    sides = [apply(total, c) for c in ld.side_clauses]
    pivots = [apply_literal(total, p) for p in ld.pivots]
    return top, sides, pivots


def linear_resolvent(ld: LinearDeduction) -> tuple:
    """Fold the chain to its final resolvent; raises on a malformed step."""
    top, sides, pivots = _instantiate_linear(ld)
    running = set(top.literals)
    for step, (side, pivot) in enumerate(zip(sides, pivots), start=1):
        if pivot not in side.literals:
            raise ConstructionError(f"step {step}: pivot {pivot} not in side clause "
                                    f"{side.id}")
        if pivot.complement() not in running:
            raise ConstructionError(f"step {step}: resolvent lacks {pivot.complement()}")
        running = (running - {pivot.complement()}) | (set(side.literals) - {pivot})
    return merge_duplicate_literals(sorted(running, key=str))


def linear_to_etc(ld: LinearDeduction, start_id: Optional[int] = None) -> List[RoundRecord]:
    """Realize a linear chain as separation rounds.

    Complement-free pivots give a single round whose separated clause is the
    final resolvent. Otherwise the chain splits into maximal complement-free
    pivot segments, scanned from the top end; each segment becomes one round
    whose separated clause feeds the next as its top clause.
    """
    linear_resolvent(ld)  # validates every step
    top, sides, pivots = _instantiate_linear(ld)
    if start_id is None:
        start_id = max([top.id] + [c.id for c in sides]) + 1
    rounds: List[RoundRecord] = []
    round_no = 1
    while sides:
        seen = set()
        seg = 0
        while seg < len(pivots):
            pivot = pivots[seg]
            if pivot.complement() in seen:
                break
            seen.add(pivot)
            seg += 1
        state = start(sides[seg - 1], pivots[seg - 1])
        for j in range(seg - 2, -1, -1):
            state = extend(state, sides[j], pivots[j])
        state = close(state, top)
        csc = Clause(start_id, state.csc, derived_in=round_no)
        rounds.append(RoundRecord(round_no, state, csc))
        top = csc
        sides = sides[seg:]
        pivots = pivots[seg:]
        start_id += 1
        round_no += 1
    return rounds
