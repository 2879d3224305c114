"""Duality transforms: compute the dual code's enumerators from primal
data by pairwise linear substitution.

For the extension table of degree m the transform is a single
substitution

    (w, z) -> (w + (q^m - 1) z, w - z),   (x, y) -> likewise,

scaled by q^(-km).  For subcode tables of rank r the dual grid is a
double sum over j and l of substituted rank-l grids with coefficients

    (-1)^(r-j) q^(C(r-j,2) - j(r-j) - l(j-l) - jk) / ([r-j]_q [j-l]_q).

The individual summands are fractional; only the total is integral, so
the combination is done over exact rationals and converted back with an
integrality check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .bipoly import BiHomPoly, PairSubstitution
from .enumerators import JacobiTable, table_from_bipoly
from .errors import NonIntegerResult
from .qcomb import qbracket


@dataclass(frozen=True)
class MWContext:
    """Parameters of the primal code the transform coefficients depend on.

    k must be the primal dimension: the q^(-jk) factor is not recoverable
    from the tables alone.
    """

    q: int
    n: int
    k: int
    tsize: int


def _qpow(q: int, exp: int) -> Fraction:
    if exp >= 0:
        return Fraction(q ** exp)
    return Fraction(1, q ** (-exp))


def _dual_substitution(scale: int) -> PairSubstitution:
    """(u, v) -> (u + (scale - 1) v, u - v) on both variable pairs."""
    return PairSubstitution.both(1, scale - 1, 1, -1)


def _dual_coeff(ctx: MWContext, r: int, j: int, ell: int) -> Fraction:
    exp = comb(r - j, 2) - j * (r - j) - ell * (j - ell) - j * ctx.k
    sign = (-1) ** (r - j)
    return (
        sign
        * _qpow(ctx.q, exp)
        / (qbracket(r - j, ctx.q) * qbracket(j - ell, ctx.q))
    )


def mw_higher_weight(enums: Sequence[BiHomPoly], ctx: MWContext) -> BiHomPoly:
    """Dual weight enumerator of rank r from the primal enumerators of
    rank 0..r; enums[l] must be the rank-l weight enumerator."""
    r = len(enums) - 1
    acc = BiHomPoly.zero(0, ctx.n)
    for j in range(r + 1):
        sub = _dual_substitution(ctx.q ** j)
        for ell in range(j + 1):
            term = enums[ell].substitute(sub).scale(_dual_coeff(ctx, r, j, ell))
            acc = acc + term
    if not acc.is_integral():
        bad = next(
            (j, i, c)
            for j, row in enumerate(acc.coeff)
            for i, c in enumerate(row)
            if c.denominator != 1
        )
        raise NonIntegerResult(f"coefficient (j={bad[0]}, i={bad[1]}) = {bad[2]}")
    return acc


def mw_higher_jacobi(tables: Sequence[JacobiTable], ctx: MWContext) -> JacobiTable:
    """Dual split-weight table of rank r from the primal tables of rank 0..r."""
    r = len(tables) - 1
    tset = tables[0].tset
    acc = BiHomPoly.zero(ctx.tsize, ctx.n - ctx.tsize)
    for j in range(r + 1):
        sub = _dual_substitution(ctx.q ** j)
        for ell in range(j + 1):
            poly = tables[ell].to_bipoly().substitute(sub)
            acc = acc + poly.scale(_dual_coeff(ctx, r, j, ell))
    return table_from_bipoly("higher", r, ctx.q, ctx.n, tset, acc)


def mw_extended_jacobi(table: JacobiTable, ctx: MWContext) -> JacobiTable:
    """Dual extension table: substitute with scale q^m and divide by q^(km)."""
    m = table.param
    sub = _dual_substitution(ctx.q ** m)
    poly = table.to_bipoly().substitute(sub).scale(_qpow(ctx.q, -ctx.k * m))
    return table_from_bipoly("extended", m, ctx.q, ctx.n, table.tset, poly)
