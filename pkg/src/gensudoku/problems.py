"""Problem definition, verification, backtracking solver and brute-force oracle.

A problem ties together the grid size n, an ordered list of cell
permutations (each inducing one permuted block constraint matrix) and the
given cells.  The canonical constructors emit the usual triples: rows /
columns / subsquares for classic puzzles, rows / columns / regions for
gerechte variants, and rows / columns / columns for Latin squares.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Optional, Sequence

from .condition import Assignment, check_givens, check_necessary
from .errors import SearchSpaceError
from .matrices import ConstraintMatrix, build_constraint_matrix
from .permutations import (
    Partition,
    Permutation,
    block_permutation,
    identity_permutation,
    partition_permutation,
    transpose_permutation,
)

BRUTE_FORCE_LIMIT = 10**8


@dataclass(frozen=True)
class ProblemSpec:
    """Grid size, constraint permutations and givens of one puzzle instance."""

    n: int
    constraints: tuple[Permutation, ...]
    givens: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "constraints", tuple(self.constraints))
        object.__setattr__(self, "givens", tuple(tuple(g) for g in self.givens))
        n = self.n
        if n < 2:
            raise ValueError(f"n must be >= 2, got {n}")
        if not self.constraints:
            raise ValueError("at least one constraint permutation is required")
        for perm in self.constraints:
            if perm.size != n * n:
                raise ValueError(
                    f"constraint permutation size {perm.size} != n^2 = {n * n}"
                )
        seen = set()
        for cell, value in self.givens:
            if not 1 <= cell <= n * n:
                raise ValueError(f"given cell {cell} outside 1..{n * n}")
            if not 1 <= value <= n:
                raise ValueError(f"given value {value} outside 1..{n}")
            if cell in seen:
                raise ValueError(f"duplicate given for cell {cell}")
            seen.add(cell)

    def constraint_matrices(self) -> list[ConstraintMatrix]:
        return [build_constraint_matrix(self.n, perm) for perm in self.constraints]

    def constraint_groups(self) -> list[list[tuple[int, ...]]]:
        """Per constraint: the n groups of n cells its blocks tie together."""
        n = self.n
        out = []
        for perm in self.constraints:
            out.append(
                [
                    tuple(perm(b * n + j) for j in range(1, n + 1))
                    for b in range(n)
                ]
            )
        return out


@dataclass(frozen=True)
class VerificationResult:
    """First failed clause of the defining system, if any.

    ``clause`` is one of 'range', 'constraint', 'given' or None when ok.
    """

    ok: bool
    clause: Optional[str]
    detail: str

    def __bool__(self) -> bool:
        return self.ok


def verify_solution(problem: ProblemSpec, x: Assignment) -> VerificationResult:
    """Check range, componentwise-nonzero constraints, and givens, in order."""
    n = problem.n
    for i, value in enumerate(x.cells, start=1):
        if not 1 <= value <= n:
            return VerificationResult(
                False, "range", f"cell {i} holds {value}, outside 1..{n}"
            )
    for constraint_id, matrix in enumerate(problem.constraint_matrices(), start=1):
        diffs = matrix.apply(x.cells)
        zero_row = next((r for r, v in enumerate(diffs, start=1) if v == 0), None)
        # Matrix route and direct value comparison must agree (two cells in a
        # group are equal exactly when their difference row vanishes).
        groups = problem.constraint_groups()[constraint_id - 1]
        distinct = all(len({x.cells[c - 1] for c in g}) == n for g in groups)
        assert distinct == (zero_row is None)
        if zero_row is not None:
            return VerificationResult(
                False,
                "constraint",
                f"constraint {constraint_id}, row {zero_row}: zero difference",
            )
    for cell, value in problem.givens:
        if x.cells[cell - 1] != value:
            return VerificationResult(
                False,
                "given",
                f"cell {cell} holds {x.cells[cell - 1]}, given is {value}",
            )
    return VerificationResult(True, None, "all clauses hold")


@dataclass
class SolveOutcome:
    """Solutions found (up to a cap), node count, and completeness flag."""

    solutions: list[Assignment] = field(default_factory=list)
    nodes_explored: int = 0
    exhausted: bool = False
    diagnostics: list[str] = field(default_factory=list)


def _group_structure(problem: ProblemSpec):
    """Flat list of cell groups and, per cell, the groups containing it."""
    groups: list[tuple[int, ...]] = []
    for per_constraint in problem.constraint_groups():
        groups.extend(per_constraint)
    cell_groups: list[list[int]] = [[] for _ in range(problem.n * problem.n)]
    for gid, group in enumerate(groups):
        for cell in group:
            cell_groups[cell - 1].append(gid)
    return groups, cell_groups


def _given_conflict(problem: ProblemSpec) -> Optional[str]:
    groups, _ = _group_structure(problem)
    given_map = dict(problem.givens)
    for gid, group in enumerate(groups):
        seen: dict[int, int] = {}
        for cell in group:
            value = given_map.get(cell)
            if value is None:
                continue
            if value in seen:
                return (
                    f"givens conflict: cells {seen[value]} and {cell} both hold "
                    f"{value} in one constraint group"
                )
            seen[value] = cell
    return None


def solve(
    problem: ProblemSpec,
    cap: Optional[int] = None,
    selfcheck: bool = True,
) -> SolveOutcome:
    """Depth-first backtracking search, deterministic order.

    Cell selection is most-constrained-first with ties broken by lowest
    index; candidate values are tried ascending.  Every emitted solution is
    re-verified and, unless ``selfcheck`` is disabled, additionally passed
    through the reconstruction-identity and givens checks.
    """
    outcome = SolveOutcome()
    conflict = _given_conflict(problem)
    if conflict is not None:
        outcome.diagnostics.append(conflict)
        outcome.exhausted = True
        return outcome

    n = problem.n
    total = n * n
    groups, cell_groups = _group_structure(problem)
    used = [0] * len(groups)  # bitmask of values present per group
    values = [0] * total
    full = ((1 << n) - 1) << 1  # bits 1..n

    for cell, value in problem.givens:
        values[cell - 1] = value
        bit = 1 << value
        for gid in cell_groups[cell - 1]:
            used[gid] |= bit

    unassigned = [i for i in range(total) if values[i] == 0]

    def candidates(i: int) -> int:
        mask = full
        for gid in cell_groups[i]:
            mask &= ~used[gid]
        return mask

    capped = False

    def dfs() -> bool:
        """Returns False when the cap was hit and search must stop."""
        nonlocal capped
        best = None
        best_count = n + 1
        for i in unassigned:
            if values[i]:
                continue
            count = candidates(i).bit_count()
            if count < best_count:
                best, best_count = i, count
                if count == 0:
                    return True
        if best is None:
            sol = Assignment(n, tuple(values))
            result = verify_solution(problem, sol)
            if not result.ok:
                raise RuntimeError(f"search emitted an invalid solution: {result.detail}")
            if selfcheck:
                reports = check_necessary(problem, sol)
                if not all(r.holds for r in reports):
                    raise RuntimeError("reconstruction self-check failed on a solution")
                if not check_givens(problem, sol).ok:
                    raise RuntimeError("givens self-check failed on a solution")
            outcome.solutions.append(sol)
            if cap is not None and len(outcome.solutions) >= cap:
                capped = True
                return False
            return True
        mask = candidates(best)
        for value in range(1, n + 1):
            bit = 1 << value
            if not mask & bit:
                continue
            outcome.nodes_explored += 1
            values[best] = value
            for gid in cell_groups[best]:
                used[gid] |= bit
            keep_going = dfs()
            values[best] = 0
            for gid in cell_groups[best]:
                used[gid] &= ~bit
            if not keep_going:
                return False
        return True

    dfs()
    outcome.exhausted = not capped
    return outcome


def brute_force(problem: ProblemSpec) -> SolveOutcome:
    """Exhaustive fill-in enumeration filtered by verification only.

    Independent oracle: no propagation, no pruning beyond the fixed givens.
    Refuses when n ** free_cells exceeds BRUTE_FORCE_LIMIT.
    """
    n = problem.n
    total = n * n
    given_map = dict(problem.givens)
    free = [i for i in range(1, total + 1) if i not in given_map]
    if n ** len(free) > BRUTE_FORCE_LIMIT:
        raise SearchSpaceError(
            f"{n}^{len(free)} candidate fill-ins exceed the {BRUTE_FORCE_LIMIT} bound"
        )
    outcome = SolveOutcome(exhausted=True)
    base = [given_map.get(i, 0) for i in range(1, total + 1)]
    for fill in product(range(1, n + 1), repeat=len(free)):
        outcome.nodes_explored += 1
        for cell, value in zip(free, fill):
            base[cell - 1] = value
        candidate = Assignment(n, tuple(base))
        if verify_solution(problem, candidate).ok:
            outcome.solutions.append(candidate)
    return outcome


def make_latin_spec(n: int, givens: Iterable[tuple[int, int]] = ()) -> ProblemSpec:
    """Rows and columns only (the duplicated-column-constraint case)."""
    pi2 = transpose_permutation(n)
    return ProblemSpec(n, (identity_permutation(n), pi2, pi2), tuple(givens))


def make_classic_spec(n: int, givens: Iterable[tuple[int, int]] = ()) -> ProblemSpec:
    """Rows, columns and sqrt(n) x sqrt(n) subsquares; n must be a square."""
    m = math.isqrt(n)
    if m * m != n or n < 4:
        raise ValueError(f"n must be a perfect square >= 4, got {n}")
    return ProblemSpec(
        n,
        (identity_permutation(n), transpose_permutation(n), block_permutation(n)),
        tuple(givens),
    )


def make_gerechte_spec(
    part: Partition, givens: Iterable[tuple[int, int]] = ()
) -> ProblemSpec:
    """Rows, columns and the caller's region partition."""
    n = part.n
    return ProblemSpec(
        n,
        (
            identity_permutation(n),
            transpose_permutation(n),
            partition_permutation(part),
        ),
        tuple(givens),
    )
