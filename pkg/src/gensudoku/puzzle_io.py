"""Puzzle and region file parsing plus tableau rendering.

Puzzle format: line 1 is ``n <n>``, an optional ``regions <path>`` line,
then n lines of n whitespace-separated integers with 0 marking an empty
cell.  A convenience reader also accepts the common 81-character string
(digits and '.') for 9x9 grids.  Region files hold n lines of n arbitrary
labels; groups are ordered by first appearance in reading order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .condition import Assignment
from .errors import PuzzleFormatError
from .permutations import Partition
from .problems import ProblemSpec, make_classic_spec, make_gerechte_spec, make_latin_spec


@dataclass(frozen=True)
class PuzzleDocument:
    """Parsed puzzle file: grid with 0 for blanks, optional region path."""

    n: int
    grid: tuple[tuple[int, ...], ...]
    region_path: Optional[str] = None
    source_name: str = "<string>"

    def givens(self) -> tuple[tuple[int, int], ...]:
        """Non-blank cells as (row-major 1-based index, value) pairs."""
        n = self.n
        return tuple(
            ((r - 1) * n + c, self.grid[r - 1][c - 1])
            for r in range(1, n + 1)
            for c in range(1, n + 1)
            if self.grid[r - 1][c - 1] != 0
        )

    def is_solved(self) -> bool:
        return all(v != 0 for row in self.grid for v in row)

    def assignment(self) -> Assignment:
        """The grid as an assignment; only meaningful when fully filled."""
        if not self.is_solved():
            raise PuzzleFormatError("grid has blank cells, not a full assignment", 1)
        return Assignment(self.n, tuple(v for row in self.grid for v in row))


def parse_puzzle(text: str, source_name: str = "<string>") -> PuzzleDocument:
    lines = text.splitlines()
    if not lines:
        raise PuzzleFormatError("empty input", 1)
    header = lines[0].split()
    if len(header) != 2 or header[0] != "n":
        raise PuzzleFormatError(f"expected header 'n <n>', got {lines[0]!r}", 1)
    try:
        n = int(header[1])
    except ValueError:
        raise PuzzleFormatError(f"grid size {header[1]!r} is not an integer", 1, 2)
    if n < 2:
        raise PuzzleFormatError(f"grid size must be >= 2, got {n}", 1, 2)

    region_path = None
    row_start = 1
    if len(lines) > 1 and lines[1].split()[:1] == ["regions"]:
        parts = lines[1].split(maxsplit=1)
        if len(parts) != 2:
            raise PuzzleFormatError("'regions' line is missing a path", 2)
        region_path = parts[1].strip()
        row_start = 2

    rows = []
    lineno = row_start
    for r in range(n):
        lineno = row_start + r + 1
        if row_start + r >= len(lines):
            raise PuzzleFormatError(f"expected {n} grid rows, found {r}", lineno)
        tokens = lines[row_start + r].split()
        if len(tokens) != n:
            raise PuzzleFormatError(
                f"expected {n} values, got {len(tokens)}", lineno
            )
        row = []
        for c, token in enumerate(tokens, start=1):
            try:
                value = int(token)
            except ValueError:
                raise PuzzleFormatError(f"value {token!r} is not an integer", lineno, c)
            if not 0 <= value <= n:
                raise PuzzleFormatError(
                    f"value {value} outside 0..{n}", lineno, c
                )
            row.append(value)
        rows.append(tuple(row))
    trailing = next(
        (
            row_start + n + i + 1
            for i, line in enumerate(lines[row_start + n :])
            if line.strip()
        ),
        None,
    )
    if trailing is not None:
        raise PuzzleFormatError("unexpected content after the grid", trailing)
    return PuzzleDocument(n, tuple(rows), region_path, source_name)


def parse_dot_string(text: str, source_name: str = "<string>") -> PuzzleDocument:
    """81-character digit/'.' shorthand for 9x9 grids; '.' and '0' are blanks."""
    compact = text.strip()
    if len(compact) != 81:
        raise PuzzleFormatError(
            f"expected 81 characters, got {len(compact)}", 1
        )
    grid = []
    for r in range(9):
        row = []
        for c in range(9):
            ch = compact[r * 9 + c]
            if ch in ".0":
                row.append(0)
            elif ch.isdigit():
                row.append(int(ch))
            else:
                raise PuzzleFormatError(
                    f"character {ch!r} is not a digit or '.'", 1, r * 9 + c + 1
                )
        grid.append(tuple(row))
    return PuzzleDocument(9, tuple(grid), None, source_name)


def parse_regions(text: str, source_name: str = "<string>") -> Partition:
    """Label grid -> partition; groups ordered by first appearance."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise PuzzleFormatError("empty region file", 1)
    n = len(lines)
    order: list[str] = []
    cells: dict[str, list[int]] = {}
    for r, line in enumerate(lines, start=1):
        tokens = line.split()
        if len(tokens) != n:
            raise PuzzleFormatError(
                f"expected {n} labels, got {len(tokens)}", r
            )
        for c, label in enumerate(tokens, start=1):
            if label not in cells:
                order.append(label)
                cells[label] = []
            cells[label].append((r - 1) * n + c)
    groups = tuple(tuple(cells[label]) for label in order)
    return Partition(n, groups)


def render_tableau(x: Assignment) -> str:
    """Row-major n x n text layout, one space-separated line per row."""
    n = x.n
    return "\n".join(
        " ".join(str(x.cells[r * n + c]) for c in range(n)) for r in range(n)
    )


def load_puzzle(path: str | Path) -> PuzzleDocument:
    path = Path(path)
    text = path.read_text()
    stripped = [line for line in text.splitlines() if line.strip()]
    if len(stripped) == 1 and len(stripped[0].strip()) == 81:
        return parse_dot_string(text, source_name=str(path))
    return parse_puzzle(text, source_name=str(path))


def build_problem(doc: PuzzleDocument, base_dir: Optional[Path] = None) -> ProblemSpec:
    """Pick constraints for a document.

    With a region file: rows, columns and the regions.  Otherwise classic
    subsquares when n is a perfect square, else the Latin-square pair.
    """
    if doc.region_path is not None:
        region_file = Path(doc.region_path)
        if not region_file.is_absolute() and base_dir is not None:
            region_file = base_dir / region_file
        part = parse_regions(region_file.read_text(), source_name=str(region_file))
        if part.n != doc.n:
            raise PuzzleFormatError(
                f"region grid is {part.n}x{part.n}, puzzle is {doc.n}x{doc.n}", 1
            )
        return make_gerechte_spec(part, doc.givens())
    m = math.isqrt(doc.n)
    if m * m == doc.n and doc.n >= 4:
        return make_classic_spec(doc.n, doc.givens())
    return make_latin_spec(doc.n, doc.givens())


def load_problem(path: str | Path) -> tuple[PuzzleDocument, ProblemSpec]:
    path = Path(path)
    doc = load_puzzle(path)
    return doc, build_problem(doc, base_dir=path.parent)
