"""Split-weight enumerators of codes, their subcode and extension
refinements, and the exact identities connecting them.

The central object is the coefficient grid A[i][j] counting objects
(codewords, r-dim subcodes, or extension words) whose support meets the
complement of a reference set T in i places and T itself in j places.
Three independent computation routes exist for each grid:

  * direct enumeration of the objects being counted;
  * a vanishing-dimension sweep: for every coordinate subset U, the
    dimension of the subcode vanishing on U determines how many objects
    avoid U, and an inclusion-exclusion expansion recovers the grid;
  * rank decomposition: the extension grid for degree m is the
    bracket-weighted sum of the subcode grids, and inverting that
    triangular relation recovers subcode grids from extension grids.

All routes must agree exactly; the test suite enforces it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb

from .bipoly import BiHomPoly, _pair_power
from .code import (
    MAX_SUBCODES_DEFAULT,
    MAX_WORDS_DEFAULT,
    LinearCode,
    RefSet,
    column_set_dim,
    extension_codewords,
    iter_codeword_supports,
    iter_subcode_supports,
    subcode_count,
)
from .errors import NonIntegerResult, TooLarge, UnsupportedBaseField
from .qcomb import gauss_binom, qbracket, qfact

_ELL_SWEEP_CAP = 20  # 2^n column subsets; desk scale


@dataclass(frozen=True)
class JacobiTable:
    """Coefficient grid of a split-weight enumerator relative to a set T.

    grid[i][j] counts objects with complement-weight i and T-weight j;
    kind is "plain" (codewords), "higher" (r-dim subcodes, param = r) or
    "extended" (degree-m extension words, param = m).
    """

    kind: str
    param: int | None
    q: int
    n: int
    tset: RefSet
    grid: tuple[tuple[int, ...], ...]

    def mass(self) -> int:
        return sum(sum(row) for row in self.grid)

    def tsize(self) -> int:
        return self.tset.size

    def to_bipoly(self) -> BiHomPoly:
        s = self.tsize()
        coeff = [
            [Fraction(self.grid[i][j]) for i in range(self.n - s + 1)]
            for j in range(s + 1)
        ]
        return BiHomPoly(s, self.n - s, coeff)

    def render(self) -> str:
        return self.to_bipoly().render()

    def to_json_dict(self) -> dict:
        out = {
            "kind": self.kind,
            "q": self.q,
            "n": self.n,
            "T": list(self.tset.sorted()),
            "grid": [list(row) for row in self.grid],
        }
        if self.kind == "higher":
            out["r"] = self.param
        elif self.kind == "extended":
            out["m"] = self.param
        return out

    @classmethod
    def from_json_dict(cls, data: dict) -> "JacobiTable":
        kind = data["kind"]
        param = data.get("r") if kind == "higher" else data.get("m")
        return cls(
            kind=kind,
            param=param,
            q=data["q"],
            n=data["n"],
            tset=RefSet.of(data["n"], data["T"]),
            grid=tuple(tuple(int(x) for x in row) for row in data["grid"]),
        )

    def first_difference(self, other: "JacobiTable"):
        """(i, j, self value, other value) of the first differing entry, or None."""
        for i, (r1, r2) in enumerate(zip(self.grid, other.grid)):
            for j, (a, b) in enumerate(zip(r1, r2)):
                if a != b:
                    return (i, j, a, b)
        return None


def _table_from_counts(kind, param, code, tset, counts) -> JacobiTable:
    rows = code.n - tset.size + 1
    cols = tset.size + 1
    grid = [[0] * cols for _ in range(rows)]
    for (i, j), c in counts.items():
        grid[i][j] += c
    return JacobiTable(
        kind=kind,
        param=param,
        q=code.spec.q,
        n=code.n,
        tset=tset,
        grid=tuple(tuple(r) for r in grid),
    )


def table_from_bipoly(
    kind, param, q, n, tset: RefSet, poly: BiHomPoly
) -> JacobiTable:
    """Read a coefficient grid back from a polynomial, insisting on integers."""
    if not poly.is_integral():
        raise NonIntegerResult("table entries must be integers")
    grid = tuple(
        tuple(int(poly.coeff[j][i]) for j in range(tset.size + 1))
        for i in range(n - tset.size + 1)
    )
    return JacobiTable(kind=kind, param=param, q=q, n=n, tset=tset, grid=grid)


# ---------------------------------------------------------------------------
# cached raw enumerations


@lru_cache(maxsize=64)
def _codeword_supports(code: LinearCode) -> tuple[frozenset[int], ...]:
    return tuple(iter_codeword_supports(code, max_words=1 << 62))


@lru_cache(maxsize=128)
def _subcode_supports(code: LinearCode, r: int) -> tuple[frozenset[int], ...]:
    return tuple(iter_subcode_supports(code, r, max_subcodes=1 << 62))


def codeword_support_multiset(
    code: LinearCode, max_words: int = MAX_WORDS_DEFAULT
) -> tuple[frozenset[int], ...]:
    if code.spec.q ** code.k > max_words:
        raise TooLarge(f"{code.spec.q}^{code.k} codewords exceed the guard")
    return _codeword_supports(code)


def subcode_support_multiset(
    code: LinearCode, r: int, max_subcodes: int = MAX_SUBCODES_DEFAULT
) -> tuple[frozenset[int], ...]:
    if not 0 <= r <= code.k:
        raise ValueError(f"need 0 <= r <= k = {code.k}")
    if subcode_count(code, r) > max_subcodes:
        raise TooLarge(f"{subcode_count(code, r)} subcodes exceed the guard")
    return _subcode_supports(code, r)


@lru_cache(maxsize=64)
def _extension_supports(code: LinearCode, m: int) -> tuple[frozenset[int], ...]:
    out = []
    for word in extension_codewords(code, m, max_words=1 << 62):
        out.append(frozenset(i + 1 for i, x in enumerate(word) if x))
    return tuple(out)


@lru_cache(maxsize=64)
def _vanishing_dims(code: LinearCode) -> tuple[int, ...]:
    """dim of the subcode vanishing on U, for every coordinate bitmask U."""
    n = code.n
    if n > _ELL_SWEEP_CAP:
        raise TooLarge(f"vanishing-dimension sweep needs n <= {_ELL_SWEEP_CAP}")
    out = []
    for mask in range(1 << n):
        cols = frozenset(i + 1 for i in range(n) if (mask >> i) & 1)
        out.append(column_set_dim(code, cols))
    return tuple(out)


# ---------------------------------------------------------------------------
# direct enumerations


def weight_enum(code: LinearCode, max_words: int = MAX_WORDS_DEFAULT) -> BiHomPoly:
    """Classical weight enumerator: coefficient of x^(n-i) y^i counts weight-i words."""
    counts = [0] * (code.n + 1)
    for supp in codeword_support_multiset(code, max_words):
        counts[len(supp)] += 1
    return BiHomPoly(0, code.n, [counts])


def higher_weight_enum(
    code: LinearCode, r: int, max_subcodes: int = MAX_SUBCODES_DEFAULT
) -> BiHomPoly:
    """Coefficient of x^(n-i) y^i counts r-dim subcodes of support weight i."""
    counts = [0] * (code.n + 1)
    for supp in subcode_support_multiset(code, r, max_subcodes):
        counts[len(supp)] += 1
    return BiHomPoly(0, code.n, [counts])


def _split_counts(supports, tset: RefSet) -> dict:
    counts: dict[tuple[int, int], int] = {}
    members = tset.members
    for supp in supports:
        j = len(supp & members)
        key = (len(supp) - j, j)
        counts[key] = counts.get(key, 0) + 1
    return counts


def jacobi(
    code: LinearCode, tset: RefSet, max_words: int = MAX_WORDS_DEFAULT
) -> JacobiTable:
    """Codeword split-weight table relative to T; T empty gives the weight enumerator."""
    _check_tset(code, tset)
    counts = _split_counts(codeword_support_multiset(code, max_words), tset)
    return _table_from_counts("plain", None, code, tset, counts)


def higher_jacobi(
    code: LinearCode, tset: RefSet, r: int, max_subcodes: int = MAX_SUBCODES_DEFAULT
) -> JacobiTable:
    """Subcode split-weight table: grid[i][j] counts r-dim subcodes with
    complement-weight i and T-weight j."""
    _check_tset(code, tset)
    counts = _split_counts(subcode_support_multiset(code, r, max_subcodes), tset)
    return _table_from_counts("higher", r, code, tset, counts)


def _check_tset(code: LinearCode, tset: RefSet):
    if tset.n != code.n:
        raise ValueError("reference set length does not match the code")


# ---------------------------------------------------------------------------
# vanishing-dimension route


def q_st(code: LinearCode, tset: RefSet, r: int, s: int, t: int) -> int:
    """Sum over |X| = s in the complement and |Y| = t in T of the number of
    r-dim subcodes vanishing on X union Y."""
    _check_tset(code, tset)
    q = code.spec.q
    total = 0
    for x_cols in combinations(sorted(tset.complement), s):
        for y_cols in combinations(sorted(tset.members), t):
            ell = column_set_dim(code, frozenset(x_cols) | frozenset(y_cols))
            total += gauss_binom(ell, r, q)
    return total


def q_st_ext(code: LinearCode, tset: RefSet, m: int, s: int, t: int) -> int:
    """Extension analogue: each (X, Y) contributes (q^m)^dim of the vanishing subcode."""
    _check_tset(code, tset)
    qm = code.spec.q ** m
    total = 0
    for x_cols in combinations(sorted(tset.complement), s):
        for y_cols in combinations(sorted(tset.members), t):
            ell = column_set_dim(code, frozenset(x_cols) | frozenset(y_cols))
            total += qm ** ell
    return total


def _q_grid(code: LinearCode, tset: RefSet, weight_of_dim) -> list[list[int]]:
    """Q[s][t] for all (s, t) in one sweep over coordinate subsets."""
    n = code.n
    dims = _vanishing_dims(code)
    tmask = 0
    for c in tset.members:
        tmask |= 1 << (c - 1)
    tsize = tset.size
    by_dim = [weight_of_dim(d) for d in range(code.k + 1)]
    grid = [[0] * (tsize + 1) for _ in range(n - tsize + 1)]
    for mask in range(1 << n):
        t = (mask & tmask).bit_count()
        s = mask.bit_count() - t
        grid[s][t] += by_dim[dims[mask]]
    return grid


def _assemble_from_q(code, tset: RefSet, qgrid) -> BiHomPoly:
    """Expand sum_{s,t} Q[s][t] (w-z)^t z^(|T|-t) (x-y)^s y^(n-|T|-s)."""
    tsize = tset.size
    nc = code.n - tsize
    diff = (1, -1, 0, 1)  # (u - v)^(deg-j) v^j
    wz_vecs = [_pair_power(diff, tsize, tsize - t) for t in range(tsize + 1)]
    xy_vecs = [_pair_power(diff, nc, nc - s) for s in range(nc + 1)]
    out = [[Fraction(0)] * (nc + 1) for _ in range(tsize + 1)]
    for s in range(nc + 1):
        for t in range(tsize + 1):
            qv = qgrid[s][t]
            if qv == 0:
                continue
            wv = wz_vecs[t]
            xv = xy_vecs[s]
            for j, a in enumerate(wv):
                if a == 0:
                    continue
                qa = qv * a
                row = out[j]
                for i, b in enumerate(xv):
                    if b != 0:
                        row[i] += qa * b
    return BiHomPoly(tsize, nc, out)


def higher_jacobi_via_q(code: LinearCode, tset: RefSet, r: int) -> JacobiTable:
    """Subcode split-weight table recovered from vanishing dimensions alone."""
    _check_tset(code, tset)
    q = code.spec.q
    qgrid = _q_grid(code, tset, lambda d: gauss_binom(d, r, q))
    poly = _assemble_from_q(code, tset, qgrid)
    return table_from_bipoly("higher", r, q, code.n, tset, poly)


def extended_jacobi_via_q(code: LinearCode, tset: RefSet, m: int) -> JacobiTable:
    """Extension split-weight table recovered from vanishing dimensions alone.

    m = 0 is the degenerate single-word table, used by the inversion route.
    """
    _check_tset(code, tset)
    qm = code.spec.q ** m
    qgrid = _q_grid(code, tset, lambda d: qm ** d)
    poly = _assemble_from_q(code, tset, qgrid)
    return table_from_bipoly("extended", m, code.spec.q, code.n, tset, poly)


# ---------------------------------------------------------------------------
# extension tables and the rank-decomposition correspondence


def extended_jacobi_direct(
    code: LinearCode, tset: RefSet, m: int, max_words: int = MAX_WORDS_DEFAULT
) -> JacobiTable:
    """Extension table by brute enumeration of the q^(mk) extension words."""
    _check_tset(code, tset)
    if code.spec.e != 1:
        raise UnsupportedBaseField("direct extension needs a prime base field")
    if m < 1:
        raise ValueError("extension degree m must be at least 1")
    if code.spec.q ** (m * code.k) > max_words:
        raise TooLarge(f"{code.spec.q}^{m * code.k} extension words exceed the guard")
    counts = _split_counts(_extension_supports(code, m), tset)
    return _table_from_counts("extended", m, code, tset, counts)


def extended_jacobi(
    code: LinearCode,
    tset: RefSet,
    m: int,
    max_subcodes: int = MAX_SUBCODES_DEFAULT,
) -> JacobiTable:
    """Extension table via rank decomposition: the degree-m grid equals
    sum_r [m,r]_q times the r-subcode grid."""
    _check_tset(code, tset)
    if m < 1:
        raise ValueError("extension degree m must be at least 1")
    q = code.spec.q
    rows = code.n - tset.size + 1
    cols = tset.size + 1
    acc = [[0] * cols for _ in range(rows)]
    for r in range(code.k + 1):
        factor = qfact(m, r, q)
        if factor == 0:
            continue
        sub = higher_jacobi(code, tset, r, max_subcodes)
        for i in range(rows):
            for j in range(cols):
                acc[i][j] += factor * sub.grid[i][j]
    return JacobiTable(
        kind="extended",
        param=m,
        q=q,
        n=code.n,
        tset=tset,
        grid=tuple(tuple(row) for row in acc),
    )


def _trivial_table(code: LinearCode, tset: RefSet, kind: str, param) -> JacobiTable:
    counts = {(0, 0): 1}
    return _table_from_counts(kind, param, code, tset, counts)


def higher_from_extended(code: LinearCode, tset: RefSet, r: int) -> JacobiTable:
    """Invert the rank decomposition: recover the r-subcode grid as an
    alternating q-binomial combination of extension grids of degree 0..r.

    The degree-0 grid is the single-word table.  Every entry of the result
    must come out an exact integer; a fractional entry is a bug.
    """
    _check_tset(code, tset)
    if not 0 <= r <= code.k:
        raise ValueError(f"need 0 <= r <= k = {code.k}")
    q = code.spec.q
    rows = code.n - tset.size + 1
    cols = tset.size + 1
    acc = [[Fraction(0)] * cols for _ in range(rows)]
    for j in range(r + 1):
        coeff = Fraction(
            gauss_binom(r, j, q) * (-1) ** (r - j) * q ** comb(r - j, 2)
        )
        if j == 0:
            ext = _trivial_table(code, tset, "extended", 0)
        else:
            ext = extended_jacobi_via_q(code, tset, j)
        for i in range(rows):
            for jj in range(cols):
                acc[i][jj] += coeff * ext.grid[i][jj]
    denom = qbracket(r, q)
    grid = []
    for i in range(rows):
        row = []
        for jj in range(cols):
            val = acc[i][jj] / denom
            if val.denominator != 1:
                raise NonIntegerResult(
                    f"entry ({i},{jj}) = {val} is not an integer"
                )
            row.append(int(val))
        grid.append(tuple(row))
    return JacobiTable(
        kind="higher",
        param=r,
        q=q,
        n=code.n,
        tset=tset,
        grid=tuple(grid),
    )


def marginal_weight_poly(table: JacobiTable) -> BiHomPoly:
    """Collapse the split grid to total weight: coefficient of y^l is the
    sum of entries with i + j = l."""
    counts = [0] * (table.n + 1)
    for i, row in enumerate(table.grid):
        for j, c in enumerate(row):
            counts[i + j] += c
    return BiHomPoly(0, table.n, [counts])
