"""The generalized sign function and the reconstruction identity.

Every in-range assignment whose constraint differences are all nonzero can
be recovered from the signs of those differences alone:

    x = (A^T sgn(A x) + (n+1) * 1) / 2

applied per constraint permutation.  This module provides the sign
function, two independent scalar routes to the column sums (a brute-force
double sum and its closed form), the reconstruction map, and report-style
checkers that treat violations as data rather than exceptions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, TYPE_CHECKING

from .errors import DimensionError, NotApplicableError, ParityError
from .matrices import ConstraintMatrix, DifferenceMatrix

if TYPE_CHECKING:
    from .problems import ProblemSpec


@dataclass(frozen=True)
class Assignment:
    """Candidate cell values, tableau row-major, length n^2."""

    n: int
    cells: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(self.cells))
        if len(self.cells) != self.n * self.n:
            raise DimensionError(
                f"expected {self.n * self.n} cells, got {len(self.cells)}"
            )

    def is_ranged(self) -> bool:
        """True when every cell value lies in 1..n."""
        return all(1 <= v <= self.n for v in self.cells)


def gsgn(y: Sequence[int]) -> tuple[int, ...]:
    """Componentwise sign; defined only when no component is zero."""
    out = []
    for idx, val in enumerate(y, start=1):
        if val == 0:
            raise NotApplicableError(idx)
        out.append(1 if val > 0 else -1)
    return tuple(out)


def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


def pairwise_sign_sum(x: Sequence[int], i: int) -> int:
    """Double-sum route to component i of A^T sgn(A x), matrix-free.

    Computed directly as -sum_{j<i} sgn(x_j - x_i) + sum_{j>i} sgn(x_i - x_j);
    serves as the independent oracle for the matrix route.
    """
    n = len(x)
    if not 1 <= i <= n:
        raise DimensionError(f"index {i} outside 1..{n}")
    for a in range(n):
        for b in range(a + 1, n):
            if x[a] == x[b]:
                raise NotApplicableError(b + 1)
    xi = x[i - 1]
    return -sum(_sign(x[j] - xi) for j in range(i - 1)) + sum(
        _sign(xi - x[j]) for j in range(i, n)
    )


def sign_sum_closed_form(value: int, n: int) -> int:
    """Closed form of the pairwise sign sum when x is a permutation of 1..n."""
    return 2 * value - (n + 1)


def reconstruct_values(matrix: DifferenceMatrix, x: Sequence[int]) -> tuple[int, ...]:
    """Recover a single constraint group from difference signs.

    Returns (A^T sgn(A x) + (n+1) * 1) / 2 in exact integers.  Equals x
    whenever all components are distinct and lie in 1..n.
    """
    signs = gsgn(matrix.apply(x))
    sums = matrix.apply_transpose(signs)
    return _halve(tuple(s + matrix.n + 1 for s in sums))


def reconstruct(matrix: ConstraintMatrix, x: Assignment) -> tuple[int, ...]:
    """Recover a full assignment from its constraint difference signs."""
    signs = gsgn(matrix.apply(x.cells))
    sums = matrix.apply_transpose(signs)
    return _halve(tuple(s + matrix.n + 1 for s in sums))


def _halve(t: tuple[int, ...]) -> tuple[int, ...]:
    for idx, val in enumerate(t, start=1):
        if val % 2 != 0:
            raise ParityError(idx, val)
    return tuple(val // 2 for val in t)


@dataclass(frozen=True)
class NecessityReport:
    """Outcome of the reconstruction identity for one constraint.

    ``first_violation`` is (cell index, expected, actual); expected is None
    in the (unreachable for integer input) odd-parity case.  ``holds`` is
    true exactly when no difference vanished and the reconstruction equals
    the assignment componentwise.
    """

    constraint_id: int
    holds: bool
    reconstructed: Optional[tuple[int, ...]]
    first_violation: Optional[tuple[int, Optional[int], int]]
    zero_rows: tuple[int, ...]


def check_necessary(problem: "ProblemSpec", x: Assignment) -> list[NecessityReport]:
    """Run the reconstruction identity against every constraint.

    Violations are reported, never raised; one report per constraint in the
    problem's order.
    """
    reports = []
    for constraint_id, matrix in enumerate(problem.constraint_matrices(), start=1):
        y = matrix.apply(x.cells)
        zero_rows = tuple(i for i, v in enumerate(y, start=1) if v == 0)
        if zero_rows:
            reports.append(
                NecessityReport(constraint_id, False, None, None, zero_rows)
            )
            continue
        try:
            rec = reconstruct(matrix, x)
        except ParityError as exc:
            violation = (exc.index, None, x.cells[exc.index - 1])
            reports.append(NecessityReport(constraint_id, False, None, violation, ()))
            continue
        violation = next(
            (
                (i, rec[i - 1], x.cells[i - 1])
                for i in range(1, len(rec) + 1)
                if rec[i - 1] != x.cells[i - 1]
            ),
            None,
        )
        reports.append(
            NecessityReport(constraint_id, violation is None, rec, violation, ())
        )
    return reports


@dataclass(frozen=True)
class GivensReport:
    """Whether the reconstructed values match the problem's givens.

    ``mismatch`` is (constraint_id, cell index, expected given, reconstructed)
    for the first failure, None when everything matches.
    """

    ok: bool
    mismatch: Optional[tuple[int, int, int, int]]


def check_givens(problem: "ProblemSpec", x: Assignment) -> GivensReport:
    """Check every given cell against its reconstruction, per constraint.

    Propagates NotApplicableError when a constraint's differences vanish.
    """
    for constraint_id, matrix in enumerate(problem.constraint_matrices(), start=1):
        rec = reconstruct(matrix, x)
        for cell, given in problem.givens:
            if rec[cell - 1] != given:
                return GivensReport(False, (constraint_id, cell, given, rec[cell - 1]))
    return GivensReport(True, None)
