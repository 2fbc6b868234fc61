"""Command line interface: prove | check | oracle.

Verdicts print as SZS status lines (Unsatisfiable, Satisfiable, GaveUp) with
the trace document between SZS output markers. Exit codes: 0 a verdict was
reached, 1 gave up, 2 input error; check exits 3 on verification failure.
The ETM_SEED environment variable overrides --seed when set.
"""

from __future__ import annotations

import argparse
import os
import sys

from .engine import EngineConfig, prove, verify_trace
from .errors import ParseError, TrisepError
from .oracle import OracleError, is_unsatisfiable_bruteforce, propositional_shadow, ground_fresh
from .logic import ClauseSet, is_ground
from .problems import load_problem_file
from .render import SZS_BY_VERDICT, parse_trace_document, render_trace


def _load_problem(path: str, fmt: str):
    source = load_problem_file(path, fmt)
    return source.clauses, source.format


def _engine_config(args) -> EngineConfig:
    seed = args.seed
    env_seed = os.environ.get("ETM_SEED")
    if env_seed is not None:
        seed = int(env_seed)
    return EngineConfig(
        mode=args.mode,
        literal_threshold=args.nt,
        max_rounds=args.max_rounds,
        fallback_enabled=args.fallback == "on",
        time_budget=args.timeout,
        seed=seed,
    )


def _cmd_prove(args) -> int:
    problem, _ = _load_problem(args.problem, args.format)
    outcome, trace = prove(problem, _engine_config(args))
    verified = bool(verify_trace(problem, trace))
    status = SZS_BY_VERDICT[outcome.verdict]
    print(f"% SZS status {status} for {args.problem}")
    note = (f"mode={args.mode} nt={args.nt} max-rounds={args.max_rounds} "
            f"fallback={args.fallback} seed={args.seed} timeout={args.timeout}")
    document = render_trace(trace, problem=args.problem, config_note=note,
                            verified=verified)
    if args.trace:
        with open(args.trace, "w", encoding="utf-8") as handle:
            handle.write(document)
    if not args.quiet:
        print(f"% SZS output start for {args.problem}")
        sys.stdout.write(document)
        print(f"% SZS output end for {args.problem}")
    return 0 if outcome.verdict in ("unsatisfiable", "satisfiable") else 1


def _cmd_check(args) -> int:
    problem, _ = _load_problem(args.problem, args.format)
    with open(args.trace, "r", encoding="utf-8") as handle:
        trace = parse_trace_document(handle.read())
    result = verify_trace(problem, trace)
    if result:
        print(f"verified: {len(trace.rounds)} round(s), verdict {trace.verdict}")
        return 0
    print(f"verification failed: {result.diagnostic}")
    return 3


def _cmd_oracle(args) -> int:
    problem, _ = _load_problem(args.problem, args.format)
    if not problem.is_propositional:
        if not all(is_ground(c.literals) for c in problem.clauses):
            print("oracle needs a propositional or ground problem", file=sys.stderr)
            return 2
        problem = ClauseSet(propositional_shadow(ground_fresh(problem.clauses)))
    unsat = is_unsatisfiable_bruteforce(problem)
    status = "Unsatisfiable" if unsat else "Satisfiable"
    print(f"% SZS status {status} for {args.problem}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trisep",
        description="contradiction-separation theorem prover over clause sets")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("problem", help="path to the problem file")
        p.add_argument("--format", choices=["dimacs", "tptp-cnf", "auto"], default="auto")

    p_prove = sub.add_parser("prove", help="decide a clause set and emit a trace")
    common(p_prove)
    p_prove.add_argument("--mode", choices=["unsat", "sat", "auto"], default="auto")
    p_prove.add_argument("--nt", type=int, default=None,
                         help="leftover-literal threshold for stopping a round")
    p_prove.add_argument("--max-rounds", type=int, default=40)
    p_prove.add_argument("--fallback", choices=["on", "off"], default="on")
    p_prove.add_argument("--seed", type=int, default=0)
    p_prove.add_argument("--timeout", type=float, default=10.0,
                         help="time budget in seconds")
    p_prove.add_argument("--trace", default=None, help="write the trace document here")
    p_prove.add_argument("--quiet", action="store_true")
    p_prove.set_defaults(func=_cmd_prove)

    p_check = sub.add_parser("check", help="verify a previously written trace")
    common(p_check)
    p_check.add_argument("--trace", required=True, help="trace document to verify")
    p_check.set_defaults(func=_cmd_check)

    p_oracle = sub.add_parser("oracle", help="brute-force truth-table verdict")
    common(p_oracle)
    p_oracle.set_defaults(func=_cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except (ParseError, OracleError, TrisepError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
