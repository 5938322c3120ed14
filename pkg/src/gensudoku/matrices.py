"""Pairwise-difference matrices and their permuted block extensions.

The base matrix for alphabet size n has one row per unordered pair
(p, m) with p < m, reading x_p - x_m.  Rows are stored as the index pair
(p, m) only; every row has exactly two nonzeros, so dense export exists for
tests and dumps, never for computation.  All arithmetic is exact integer
arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import DimensionError, InvalidPermutationError
from .permutations import Permutation


def triangular_sum(n: int) -> int:
    """Number of unordered pairs from n items: n(n-1)/2 (0 for n=1)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return n * (n - 1) // 2


@dataclass(frozen=True)
class DifferenceMatrix:
    """The triangular_sum(n) x n matrix of all pairwise differences."""

    n: int
    rows: tuple[tuple[int, int], ...]

    @property
    def row_count(self) -> int:
        return len(self.rows)

    def to_dense(self) -> list[list[int]]:
        dense = []
        for p, m in self.rows:
            row = [0] * self.n
            row[p - 1] = 1
            row[m - 1] = -1
            dense.append(row)
        return dense

    def apply(self, x: Sequence[int]) -> tuple[int, ...]:
        """Matrix-vector product: one difference x_p - x_m per row."""
        if len(x) != self.n:
            raise DimensionError(f"expected length {self.n}, got {len(x)}")
        return tuple(x[p - 1] - x[m - 1] for p, m in self.rows)

    def apply_transpose(self, y: Sequence[int]) -> tuple[int, ...]:
        """Transpose product: column p gains +y_r, column m gains -y_r."""
        if len(y) != self.row_count:
            raise DimensionError(
                f"expected length {self.row_count}, got {len(y)}"
            )
        out = [0] * self.n
        for val, (p, m) in zip(y, self.rows):
            out[p - 1] += val
            out[m - 1] -= val
        return tuple(out)


def build_difference_matrix(n: int) -> DifferenceMatrix:
    """Inductive construction: rows (1,2)..(1,n), then the n-1 case shifted.

    The inductive order coincides with lexicographic order on (p, m).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rows = tuple(
        (p, m) for p in range(1, n) for m in range(p + 1, n + 1)
    )
    return DifferenceMatrix(n=n, rows=rows)


@dataclass(frozen=True)
class ConstraintMatrix:
    """n block copies of the difference matrix with columns permuted.

    Block b (1-based) row (p, m) reads +1 at column perm((b-1)n+p) and -1
    at column perm((b-1)n+m).  Never materialized densely except on demand.
    """

    n: int
    base: DifferenceMatrix
    perm: Permutation

    @property
    def row_count(self) -> int:
        return self.n * self.base.row_count

    @property
    def column_count(self) -> int:
        return self.n * self.n

    def row_columns(self) -> Iterator[tuple[int, int]]:
        """Yield (plus_column, minus_column) per row, 1-based, in row order."""
        for b in range(self.n):
            offset = b * self.n
            for p, m in self.base.rows:
                yield self.perm(offset + p), self.perm(offset + m)

    def to_dense(self) -> list[list[int]]:
        dense = []
        for plus, minus in self.row_columns():
            row = [0] * self.column_count
            row[plus - 1] = 1
            row[minus - 1] = -1
            dense.append(row)
        return dense

    def apply(self, x: Sequence[int]) -> tuple[int, ...]:
        if len(x) != self.column_count:
            raise DimensionError(
                f"expected length {self.column_count}, got {len(x)}"
            )
        return tuple(x[plus - 1] - x[minus - 1] for plus, minus in self.row_columns())

    def apply_transpose(self, lam: Sequence[int]) -> tuple[int, ...]:
        if len(lam) != self.row_count:
            raise DimensionError(
                f"expected length {self.row_count}, got {len(lam)}"
            )
        out = [0] * self.column_count
        for val, (plus, minus) in zip(lam, self.row_columns()):
            out[plus - 1] += val
            out[minus - 1] -= val
        return tuple(out)


def build_constraint_matrix(n: int, perm: Permutation) -> ConstraintMatrix:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if perm.size != n * n:
        raise InvalidPermutationError(
            f"permutation size {perm.size} does not match n^2 = {n * n}"
        )
    return ConstraintMatrix(n=n, base=build_difference_matrix(n), perm=perm)


def integer_rank(dense: Sequence[Sequence[int]]) -> int:
    """Exact rank over the rationals via fraction-free (Bareiss) elimination."""
    m = [list(row) for row in dense]
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    rank = 0
    prev_pivot = 1
    for col in range(n_cols):
        pivot_row = next(
            (i for i in range(rank, n_rows) if m[i][col] != 0), None
        )
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        pivot = m[rank][col]
        for i in range(rank + 1, n_rows):
            factor = m[i][col]
            for j in range(col, n_cols):
                m[i][j] = (pivot * m[i][j] - factor * m[rank][j]) // prev_pivot
        prev_pivot = pivot
        rank += 1
        if rank == n_rows:
            break
    return rank


def rank_of_difference_matrix(matrix: DifferenceMatrix) -> int:
    return integer_rank(matrix.to_dense())
