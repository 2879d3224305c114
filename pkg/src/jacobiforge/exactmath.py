"""Exact arithmetic used everywhere else: big integers, rationals, and
dense rational linear solving.

Python ints are already arbitrary precision and ``fractions.Fraction``
already stores lowest terms with a positive denominator, so those two
stand in for the big-integer and rational types.  Linear solving is a
naive exact Gaussian elimination; the systems here are tiny (at most a
handful of unknowns) so exactness, not speed, is the contract.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import SingularMatrix

Rational = Fraction


def rat(value, den=None) -> Fraction:
    """Build an exact rational; ``rat(2, 5)`` or ``rat("2/5")``."""
    if den is not None:
        return Fraction(value, den)
    return Fraction(value)


def format_rational(x: Fraction) -> str:
    """Render as ``p/q``, omitting ``/q`` when the denominator is 1."""
    return str(Fraction(x))


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


class RatMatrix:
    """Immutable rectangular matrix of exact rationals."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable]):
        grid = tuple(tuple(Fraction(x) for x in row) for row in entries)
        if not grid:
            raise ValueError("matrix needs at least one row")
        width = len(grid[0])
        if width == 0 or any(len(row) != width for row in grid):
            raise ValueError("matrix rows must be nonempty and equal length")
        self.entries = grid
        self.rows = len(grid)
        self.cols = width

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, RatMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def matvec(self, xs: Sequence) -> list[Fraction]:
        if len(xs) != self.cols:
            raise ValueError("vector length does not match column count")
        vec = [Fraction(x) for x in xs]
        return [sum((a * x for a, x in zip(row, vec)), Fraction(0)) for row in self.entries]

    def __repr__(self):
        body = "; ".join(" ".join(format_rational(x) for x in row) for row in self.entries)
        return f"RatMatrix[{body}]"


def rat_solve(a: RatMatrix, b: Sequence) -> list[Fraction]:
    """Solve A x = b exactly for square nonsingular A.

    Raises SingularMatrix when elimination finds no pivot in some column.
    """
    if a.rows != a.cols:
        raise ValueError("rat_solve needs a square matrix")
    if len(b) != a.rows:
        raise ValueError("right-hand side length does not match")
    n = a.rows
    m = [list(row) + [Fraction(x)] for row, x in zip(a.entries, b)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrix(f"no pivot in column {col}")
        m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]
