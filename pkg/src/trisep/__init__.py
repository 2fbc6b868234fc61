"""trisep: contradiction-separation deduction over propositional and
first-order clause sets.

The construction engine builds multi-clause contradictions column by column
around a main boundary line and separates the leftover literals into a new
clause; a deliberately naive brute-force oracle certifies every derived
contradiction, model, and trace independently.
"""

__version__ = "0.1.0"

from .logic import (
    Clause,
    ClauseSet,
    Constant,
    FIRST_ORDER,
    Function,
    Literal,
    PROPOSITIONAL,
    Variable,
    clause_set,
    complement,
    is_tautology,
    merge_duplicate_literals,
    neg,
    pos,
)
from .unify import Substitution, apply, compose, mgu, rename_apart, rename_clause
from .oracle import (
    is_standard_contradiction,
    is_unsatisfiable_bruteforce,
    propositional_shadow,
    shadow_contradiction_check,
    standard_contradiction_counterexample,
    verify_model,
)
from .triangle import (
    BuildConfig,
    Column,
    Triangle,
    close,
    extend,
    extract_model,
    normalize_stairs,
    prune_redundant_columns,
    select_candidates,
    should_stop,
    start,
)
from .fol import (
    close_fol,
    extend_fol,
    extend_stair,
    fall_in,
    preprocess,
    redundancy_guard,
    start_fol,
)
from .engine import (
    EngineConfig,
    LinearDeduction,
    Outcome,
    ProofTrace,
    RoundRecord,
    VerificationResult,
    linear_resolvent,
    linear_to_etc,
    prove,
    verify_trace,
)
from .dimacs import parse_dimacs, render_dimacs
from .problems import ProblemSource, load_problem, load_problem_file
from .tptp import parse_tptp_cnf, render_tptp
from .render import parse_trace_document, render_trace

__all__ = [
    "BuildConfig", "Clause", "ClauseSet", "Column", "Constant", "EngineConfig",
    "FIRST_ORDER", "Function", "LinearDeduction", "Literal", "Outcome",
    "PROPOSITIONAL", "ProofTrace", "RoundRecord", "Substitution", "Triangle",
    "VerificationResult", "Variable", "apply", "clause_set", "close", "close_fol",
    "complement", "compose", "extend", "extend_fol", "extend_stair",
    "extract_model", "fall_in", "is_standard_contradiction", "is_tautology",
    "is_unsatisfiable_bruteforce", "linear_resolvent", "linear_to_etc",
    "merge_duplicate_literals", "mgu", "neg", "normalize_stairs",
    "ProblemSource", "load_problem", "load_problem_file",
    "parse_dimacs", "parse_tptp_cnf", "parse_trace_document", "pos",
    "preprocess", "propositional_shadow", "prove", "prune_redundant_columns",
    "redundancy_guard", "rename_apart", "rename_clause", "render_dimacs",
    "render_tptp", "render_trace", "select_candidates",
    "shadow_contradiction_check", "should_stop", "standard_contradiction_counterexample",
    "start", "start_fol", "verify_model", "verify_trace",
]
