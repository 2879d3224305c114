"""Bihomogeneous polynomials in the variable pairs (w, z) and (x, y).

A BiHomPoly of bidegree (s, n) is a sum of monomials

    c[j][i] * w^(s-j) z^j x^(n-i) y^i,      0 <= j <= s, 0 <= i <= n,

held as a dense grid of exact rationals.  A plain bivariate polynomial
in (x, y) is the s = 0 case.  The two operations that matter are
pairwise linear substitution (each pair replaced by a 2x2 linear image
and re-expanded) and polarization w*d/dx + z*d/dy, which moves one
degree from the (x, y) pair to the (w, z) pair.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegreeMismatch, DegreeUnderflow
from .exactmath import format_rational, parse_rational


@dataclass(frozen=True)
class PairSubstitution:
    """(w,z) -> (a w + b z, c w + d z) and (x,y) -> (a' x + b' y, c' x + d' y).

    Singular substitutions are permitted.
    """

    wz: tuple[Fraction, Fraction, Fraction, Fraction]
    xy: tuple[Fraction, Fraction, Fraction, Fraction]

    @classmethod
    def of(cls, wz, xy) -> "PairSubstitution":
        return cls(tuple(Fraction(v) for v in wz), tuple(Fraction(v) for v in xy))

    @classmethod
    def identity(cls) -> "PairSubstitution":
        eye = (Fraction(1), Fraction(0), Fraction(0), Fraction(1))
        return cls(eye, eye)

    @classmethod
    def both(cls, a, b, c, d) -> "PairSubstitution":
        """Apply the same 2x2 map to both variable pairs."""
        m = tuple(Fraction(v) for v in (a, b, c, d))
        return cls(m, m)

    def then(self, second: "PairSubstitution") -> "PairSubstitution":
        """The single map equivalent to substituting self first, then second."""

        def compose(m1, m2):
            a1, b1, c1, d1 = m1
            a2, b2, c2, d2 = m2
            return (
                a1 * a2 + b1 * c2,
                a1 * b2 + b1 * d2,
                c1 * a2 + d1 * c2,
                c1 * b2 + d1 * d2,
            )

        return PairSubstitution(compose(self.wz, second.wz), compose(self.xy, second.xy))


def _pair_power(m, deg: int, j: int) -> list[Fraction]:
    """Coefficient vector of (a u + b v)^(deg-j) (c u + d v)^j over v-degree.

    Entry [t] is the coefficient of u^(deg-t) v^t.
    """
    a, b, c, d = m
    first = [
        math.comb(deg - j, t) * a ** (deg - j - t) * b ** t for t in range(deg - j + 1)
    ]
    second = [math.comb(j, t) * c ** (j - t) * d ** t for t in range(j + 1)]
    out = [Fraction(0)] * (deg + 1)
    for t1, f1 in enumerate(first):
        if f1 == 0:
            continue
        for t2, f2 in enumerate(second):
            out[t1 + t2] += f1 * f2
    return out


class BiHomPoly:
    """Dense bihomogeneous polynomial with exact rational coefficients."""

    __slots__ = ("deg_wz", "deg_xy", "coeff")

    def __init__(self, deg_wz: int, deg_xy: int, coeff):
        if deg_wz < 0 or deg_xy < 0:
            raise ValueError("bidegrees must be nonnegative")
        grid = tuple(tuple(Fraction(x) for x in row) for row in coeff)
        if len(grid) != deg_wz + 1 or any(len(row) != deg_xy + 1 for row in grid):
            raise ValueError("coefficient grid does not match bidegree")
        self.deg_wz = deg_wz
        self.deg_xy = deg_xy
        self.coeff = grid

    @classmethod
    def zero(cls, deg_wz: int, deg_xy: int) -> "BiHomPoly":
        return cls(
            deg_wz, deg_xy, [[Fraction(0)] * (deg_xy + 1) for _ in range(deg_wz + 1)]
        )

    @classmethod
    def from_terms(cls, deg_wz: int, deg_xy: int, terms: dict) -> "BiHomPoly":
        """Build from a {(j, i): coefficient} mapping."""
        grid = [[Fraction(0)] * (deg_xy + 1) for _ in range(deg_wz + 1)]
        for (j, i), c in terms.items():
            grid[j][i] += Fraction(c)
        return cls(deg_wz, deg_xy, grid)

    def __eq__(self, other):
        return (
            isinstance(other, BiHomPoly)
            and self.deg_wz == other.deg_wz
            and self.deg_xy == other.deg_xy
            and self.coeff == other.coeff
        )

    def __hash__(self):
        return hash((self.deg_wz, self.deg_xy, self.coeff))

    def __add__(self, other: "BiHomPoly") -> "BiHomPoly":
        if (self.deg_wz, self.deg_xy) != (other.deg_wz, other.deg_xy):
            raise DegreeMismatch("cannot add polynomials of different bidegrees")
        return BiHomPoly(
            self.deg_wz,
            self.deg_xy,
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.coeff, other.coeff)
            ],
        )

    def __sub__(self, other: "BiHomPoly") -> "BiHomPoly":
        return self + other.scale(-1)

    def scale(self, c) -> "BiHomPoly":
        c = Fraction(c)
        return BiHomPoly(
            self.deg_wz, self.deg_xy, [[c * x for x in row] for row in self.coeff]
        )

    def substitute(self, sub: PairSubstitution) -> "BiHomPoly":
        """Replace each variable pair by its linear image and re-expand.

        Bidegree is preserved; the expansion is a binomial convolution on
        the coefficient grid, done exactly.
        """
        s, n = self.deg_wz, self.deg_xy
        wz_rows = [_pair_power(sub.wz, s, j) for j in range(s + 1)]
        xy_rows = [_pair_power(sub.xy, n, i) for i in range(n + 1)]
        out = [[Fraction(0)] * (n + 1) for _ in range(s + 1)]
        for j in range(s + 1):
            for i in range(n + 1):
                c = self.coeff[j][i]
                if c == 0:
                    continue
                wrow = wz_rows[j]
                xrow = xy_rows[i]
                for j2, wv in enumerate(wrow):
                    if wv == 0:
                        continue
                    cw = c * wv
                    row_out = out[j2]
                    for i2, xv in enumerate(xrow):
                        if xv != 0:
                            row_out[i2] += cw * xv
        return BiHomPoly(s, n, out)

    def polarize(self) -> "BiHomPoly":
        """w * d/dx + z * d/dy: bidegree (s, n) becomes (s+1, n-1)."""
        s, n = self.deg_wz, self.deg_xy
        if n == 0:
            raise DegreeUnderflow("cannot polarize at (x, y)-degree zero")
        out = [[Fraction(0)] * n for _ in range(s + 2)]
        for j in range(s + 1):
            for i in range(n + 1):
                c = self.coeff[j][i]
                if c == 0:
                    continue
                # w * d/dx of w^(s-j) z^j x^(n-i) y^i
                if n - i > 0:
                    out[j][i] += (n - i) * c
                # z * d/dy
                if i > 0:
                    out[j + 1][i - 1] += i * c
        return BiHomPoly(s + 1, n - 1, out)

    def evaluate(self, w0, z0, x0, y0) -> Fraction:
        w0, z0, x0, y0 = (Fraction(v) for v in (w0, z0, x0, y0))
        s, n = self.deg_wz, self.deg_xy
        total = Fraction(0)
        for j in range(s + 1):
            for i in range(n + 1):
                c = self.coeff[j][i]
                if c == 0:
                    continue
                total += c * w0 ** (s - j) * z0 ** j * x0 ** (n - i) * y0 ** i
        return total

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for row in self.coeff for c in row)

    def render(self) -> str:
        """Monomial sum in lexicographic (j, i) order, e.g. ``2*z*x^2*y^3``."""
        parts = []
        for j in range(self.deg_wz + 1):
            for i in range(self.deg_xy + 1):
                c = self.coeff[j][i]
                if c == 0:
                    continue
                factors = []
                for name, exp in (
                    ("w", self.deg_wz - j),
                    ("z", j),
                    ("x", self.deg_xy - i),
                    ("y", i),
                ):
                    if exp == 1:
                        factors.append(name)
                    elif exp > 1:
                        factors.append(f"{name}^{exp}")
                mag = format_rational(abs(c))
                if factors and mag == "1":
                    body = "*".join(factors)
                elif factors:
                    body = "*".join([mag] + factors)
                else:
                    body = mag
                parts.append((c < 0, body))
        if not parts:
            return "0"
        out = ("-" if parts[0][0] else "") + parts[0][1]
        for negative, body in parts[1:]:
            out += (" - " if negative else " + ") + body
        return out

    def to_json_dict(self) -> dict:
        return {
            "deg_wz": self.deg_wz,
            "deg_xy": self.deg_xy,
            "coeff": [[format_rational(c) for c in row] for row in self.coeff],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "BiHomPoly":
        return cls(
            data["deg_wz"],
            data["deg_xy"],
            [[parse_rational(c) for c in row] for row in data["coeff"]],
        )

    def __repr__(self):
        return f"BiHomPoly({self.render()})"
