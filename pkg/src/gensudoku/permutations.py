"""Permutations on cell indices and region partitions of the tableau.

All indices are 1-based.  A permutation relocates tableau positions: the
value sitting at position j moves to position pi(j), i.e. applying pi to a
vector x yields the vector whose i-th component is x[pi^{-1}(i)].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionError, InvalidPartitionError, InvalidPermutationError


@dataclass(frozen=True)
class Permutation:
    """Bijection on {1, ..., size}; ``images[i-1]`` is the image of i."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        size = len(self.images)
        seen = [False] * (size + 1)
        for img in self.images:
            if not isinstance(img, int) or not 1 <= img <= size or seen[img]:
                raise InvalidPermutationError(
                    f"images {self.images!r} are not a bijection on 1..{size}"
                )
            seen[img] = True

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.size:
            raise DimensionError(f"index {i} outside 1..{self.size}")
        return self.images[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation(tuple(inv))

    def apply_to_vector(self, x: Sequence[int]) -> tuple[int, ...]:
        """Relocate components: result[pi(j)] = x[j] for every position j."""
        if len(x) != self.size:
            raise DimensionError(
                f"vector length {len(x)} does not match permutation size {self.size}"
            )
        out = [0] * self.size
        for j, img in enumerate(self.images):
            out[img - 1] = x[j]
        return tuple(out)


@dataclass(frozen=True)
class Partition:
    """n groups of n cells each, jointly covering {1, ..., n^2}.

    Group order is the caller's order (it fixes the layout of the induced
    constraint matrix); cells within each group are kept strictly ascending.
    """

    n: int
    groups: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "groups", tuple(tuple(g) for g in self.groups))
        n = self.n
        if len(self.groups) != n:
            raise InvalidPartitionError(
                f"expected {n} groups, got {len(self.groups)}"
            )
        seen = [False] * (n * n + 1)
        for group in self.groups:
            if len(group) != n:
                raise InvalidPartitionError(
                    f"group {group!r} has {len(group)} cells, expected {n}"
                )
            for prev, cell in zip((None,) + group, group):
                if not isinstance(cell, int) or not 1 <= cell <= n * n:
                    raise InvalidPartitionError(
                        f"cell {cell!r} outside 1..{n * n}", cell=cell
                    )
                if seen[cell]:
                    raise InvalidPartitionError(
                        f"cell {cell} appears in two groups", cell=cell
                    )
                if prev is not None and prev >= cell:
                    raise InvalidPartitionError(
                        f"cells within a group must ascend, got {prev} before {cell}",
                        cell=cell,
                    )
                seen[cell] = True
        missing = next((c for c in range(1, n * n + 1) if not seen[c]), None)
        if missing is not None:
            raise InvalidPartitionError(f"cell {missing} is uncovered", cell=missing)


def identity_permutation(n: int) -> Permutation:
    """The identity on the n^2 cell indices."""
    if n < 1:
        raise InvalidPermutationError(f"n must be >= 1, got {n}")
    return Permutation(tuple(range(1, n * n + 1)))


def transpose_permutation(n: int) -> Permutation:
    """Maps tableau rows onto tableau columns: (r-1)n+c -> (c-1)n+r."""
    if n < 1:
        raise InvalidPermutationError(f"n must be >= 1, got {n}")
    images = [0] * (n * n)
    for r in range(1, n + 1):
        for c in range(1, n + 1):
            images[(r - 1) * n + c - 1] = (c - 1) * n + r
    return Permutation(tuple(images))


def block_permutation(n: int) -> Permutation:
    """Maps the i-th tableau row onto the i-th sqrt(n) x sqrt(n) subsquare.

    Subsquares are numbered row-wise from the left; within a subsquare cells
    fill left-to-right, top-to-bottom.
    """
    m = math.isqrt(n)
    if m * m != n or n < 4:
        raise InvalidPermutationError(f"n must be a perfect square >= 4, got {n}")
    images = [0] * (n * n)
    for i in range(1, n + 1):  # tableau row = subsquare number
        sub_row, sub_col = divmod(i - 1, m)
        for j in range(1, n + 1):  # position within the row
            local_row, local_col = divmod(j - 1, m)
            row = sub_row * m + local_row + 1
            col = sub_col * m + local_col + 1
            images[(i - 1) * n + j - 1] = (row - 1) * n + col
    return Permutation(tuple(images))


def partition_permutation(part: Partition) -> Permutation:
    """Maps the i-th tableau row onto the cells of the i-th group, in order.

    Feeding the result to ``build_constraint_matrix`` makes constraint block i
    tie together exactly group i's cells.
    """
    images = [cell for group in part.groups for cell in group]
    return Permutation(tuple(images))
