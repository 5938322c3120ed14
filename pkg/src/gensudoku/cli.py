"""Command-line interface.

Subcommands: solve, verify, check, oracle, matrix.  Exit codes: 0 on
success (solutions found / all checks hold), 1 when a violation or empty
solution set is found, 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from .condition import NecessityReport, check_necessary
from .errors import GenSudokuError, SearchSpaceError
from .matrices import build_constraint_matrix, build_difference_matrix
from .permutations import (
    block_permutation,
    identity_permutation,
    partition_permutation,
    transpose_permutation,
)
from .problems import SolveOutcome, brute_force, solve, verify_solution
from .puzzle_io import load_problem, load_puzzle, parse_regions, render_tableau


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gensudoku",
        description="Generalized Sudoku engine: solve, verify and check puzzles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve a puzzle file")
    p_solve.add_argument("file")
    p_solve.add_argument("--cap", type=int, default=None, metavar="K")
    p_solve.add_argument("--no-selfcheck", action="store_true")
    p_solve.add_argument("--format", choices=["text", "json"], default="text")

    p_verify = sub.add_parser("verify", help="verify a solution file")
    p_verify.add_argument("file")
    p_verify.add_argument("solution")

    p_check = sub.add_parser("check", help="reconstruction-identity report")
    p_check.add_argument("file")
    p_check.add_argument("solution")
    p_check.add_argument("--format", choices=["text", "json"], default="text")

    p_oracle = sub.add_parser("oracle", help="brute-force enumeration")
    p_oracle.add_argument("file")

    p_matrix = sub.add_parser("matrix", help="dump a constraint matrix densely")
    p_matrix.add_argument("n", type=int)
    p_matrix.add_argument("--pi", type=int, choices=[1, 2, 3], default=None)
    p_matrix.add_argument("--regions", default=None, metavar="PATH")
    return parser


def _print_rows(rows) -> None:
    for row in rows:
        print(" ".join(str(v) for v in row))


def _outcome_json(outcome: SolveOutcome) -> dict:
    return {
        "solutions": [
            {"n": sol.n, "cells": list(sol.cells)} for sol in outcome.solutions
        ],
        "nodes_explored": outcome.nodes_explored,
        "exhausted": outcome.exhausted,
        "diagnostics": list(outcome.diagnostics),
    }


def _print_outcome(outcome: SolveOutcome, fmt: str) -> int:
    for line in outcome.diagnostics:
        print(line, file=sys.stderr)
    if fmt == "json":
        print(json.dumps(_outcome_json(outcome)))
    else:
        for k, sol in enumerate(outcome.solutions, start=1):
            print(f"solution {k}")
            print(render_tableau(sol))
            print()
        print(
            f"solutions {len(outcome.solutions)} "
            f"nodes {outcome.nodes_explored} "
            f"exhausted {'true' if outcome.exhausted else 'false'}"
        )
    return 0 if outcome.solutions else 1


def _report_line(report: NecessityReport) -> str:
    if report.holds:
        return f"constraint {report.constraint_id}: HOLDS"
    if report.zero_rows:
        return (
            f"constraint {report.constraint_id}: NOT-APPLICABLE "
            f"(zero difference at row {report.zero_rows[0]})"
        )
    cell, expected, actual = report.first_violation
    shown = "undefined" if expected is None else str(expected)
    return (
        f"constraint {report.constraint_id}: FAILS at cell {cell} "
        f"(expected {shown}, got {actual})"
    )


def _report_json(report: NecessityReport) -> dict:
    return {
        "constraint_id": report.constraint_id,
        "holds": report.holds,
        "reconstructed": list(report.reconstructed)
        if report.reconstructed is not None
        else None,
        "first_violation": list(report.first_violation)
        if report.first_violation is not None
        else None,
        "zero_rows": list(report.zero_rows),
    }


def _cmd_solve(args) -> int:
    _, problem = load_problem(args.file)
    outcome = solve(problem, cap=args.cap, selfcheck=not args.no_selfcheck)
    return _print_outcome(outcome, args.format)


def _cmd_oracle(args) -> int:
    _, problem = load_problem(args.file)
    outcome = brute_force(problem)
    return _print_outcome(outcome, "text")


def _cmd_verify(args) -> int:
    _, problem = load_problem(args.file)
    solution = load_puzzle(args.solution).assignment()
    result = verify_solution(problem, solution)
    if result.ok:
        print("OK")
        return 0
    print(f"VIOLATION ({result.clause}): {result.detail}")
    return 1


def _cmd_check(args) -> int:
    _, problem = load_problem(args.file)
    solution = load_puzzle(args.solution).assignment()
    reports = check_necessary(problem, solution)
    if args.format == "json":
        print(json.dumps([_report_json(r) for r in reports]))
    else:
        for report in reports:
            print(_report_line(report))
    return 0 if all(r.holds for r in reports) else 1


def _cmd_matrix(args) -> int:
    n = args.n
    if args.pi is None:
        print(f"A({n})")
        _print_rows(build_difference_matrix(n).to_dense())
        return 0
    if args.pi == 1:
        perm = identity_permutation(n)
    elif args.pi == 2:
        perm = transpose_permutation(n)
    elif args.regions is not None:
        part = parse_regions(Path(args.regions).read_text())
        if part.n != n:
            raise GenSudokuError(
                f"region grid is {part.n}x{part.n}, requested n is {n}"
            )
        perm = partition_permutation(part)
    else:
        if math.isqrt(n) ** 2 != n:
            raise GenSudokuError(
                f"--pi 3 needs a perfect-square n or --regions, got n={n}"
            )
        perm = block_permutation(n)
    print(f"A_pi {n}")
    _print_rows(build_constraint_matrix(n, perm).to_dense())
    return 0


def run_cli(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    handlers = {
        "solve": _cmd_solve,
        "verify": _cmd_verify,
        "check": _cmd_check,
        "oracle": _cmd_oracle,
        "matrix": _cmd_matrix,
    }
    try:
        return handlers[args.command](args)
    except (SearchSpaceError, GenSudokuError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
