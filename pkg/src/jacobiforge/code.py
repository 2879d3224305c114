"""Linear codes over GF(q): construction, duals, and the enumerations
every invariant is built from.

A LinearCode stores its generator matrix in reduced row echelon form,
which makes it a canonical representative: two constructions of the
same subspace compare equal.  Coordinates are 1-based everywhere a set
of positions crosses an API boundary (supports, reference sets, design
blocks), matching the usual [n] = {1, ..., n} convention.

Subspaces of the message space GF(q)^k are enumerated by RREF pivot
pattern (choose pivot columns, fill the free entries), so each r-dim
subcode is produced exactly once and the count matches the Gaussian
binomial by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

from .errors import (
    FieldMismatch,
    ParseError,
    TooLarge,
    UnsupportedBaseField,
)
from .gf import FieldSpec, field_new
from .qcomb import gauss_binom

MAX_WORDS_DEFAULT = 1 << 24
MAX_SUBCODES_DEFAULT = 10 ** 7


@dataclass(frozen=True)
class RefSet:
    """A reference set of coordinate places T inside [n]."""

    n: int
    members: frozenset[int]

    def __post_init__(self):
        if not all(1 <= i <= self.n for i in self.members):
            raise ValueError(f"reference set must lie inside 1..{self.n}")

    @classmethod
    def of(cls, n: int, coords: Iterable[int] = ()) -> "RefSet":
        return cls(n, frozenset(coords))

    @property
    def complement(self) -> frozenset[int]:
        return frozenset(range(1, self.n + 1)) - self.members

    @property
    def size(self) -> int:
        return len(self.members)

    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def __repr__(self):
        inner = ",".join(str(i) for i in sorted(self.members))
        return f"RefSet({{{inner}}}/{self.n})"


def _rref(spec: FieldSpec, rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over GF(q); returns (nonzero rows, pivot cols)."""
    rows = [list(r) for r in rows]
    m = len(rows)
    n = len(rows[0]) if rows else 0
    piv = 0
    pivots = []
    for col in range(n):
        if piv >= m:
            break
        sel = next((r for r in range(piv, m) if rows[r][col] != 0), None)
        if sel is None:
            continue
        rows[piv], rows[sel] = rows[sel], rows[piv]
        inv = spec.inv(rows[piv][col])
        if inv != 1:
            rows[piv] = [spec.mul(inv, x) for x in rows[piv]]
        for r in range(m):
            if r != piv and rows[r][col] != 0:
                c = rows[r][col]
                prow = rows[piv]
                rows[r] = [spec.sub(x, spec.mul(c, y)) for x, y in zip(rows[r], prow)]
        pivots.append(col)
        piv += 1
    return rows[:piv], pivots


def _rank(spec: FieldSpec, rows: list[list[int]]) -> int:
    if not rows or not rows[0]:
        return 0
    return len(_rref(spec, rows)[0])


class LinearCode:
    """An [n, k] code over GF(q), canonically represented by its RREF generator."""

    __slots__ = ("spec", "n", "k", "gen", "_masks")

    def __init__(self, spec: FieldSpec, n: int, rows: Iterable[Sequence[int]]):
        rows = [list(r) for r in rows]
        for r in rows:
            if len(r) != n:
                raise ValueError("generator rows must all have length n")
            for x in r:
                if not 0 <= x < spec.q:
                    raise FieldMismatch(f"entry {x} is not an element of GF({spec.q})")
        reduced, _ = _rref(spec, rows) if rows else ([], [])
        self.spec = spec
        self.n = n
        self.k = len(reduced)
        self.gen = tuple(tuple(r) for r in reduced)
        # packed row bitmasks accelerate support work over GF(2)
        if spec.q == 2:
            self._masks = tuple(
                sum(1 << j for j, x in enumerate(row) if x) for row in self.gen
            )
        else:
            self._masks = None

    def __eq__(self, other):
        return (
            isinstance(other, LinearCode)
            and self.spec == other.spec
            and self.n == other.n
            and self.gen == other.gen
        )

    def __hash__(self):
        return hash((self.spec, self.n, self.gen))

    def __repr__(self):
        return f"LinearCode[{self.n},{self.k}]_q={self.spec.q}"

    def dual(self) -> "LinearCode":
        """The [n, n-k] code orthogonal to every generator row."""
        spec, n, k = self.spec, self.n, self.k
        _, pivots = _rref(spec, [list(r) for r in self.gen])
        pivot_set = set(pivots)
        free = [c for c in range(n) if c not in pivot_set]
        rows = []
        for f in free:
            v = [0] * n
            v[f] = 1
            for s, p in enumerate(pivots):
                v[p] = spec.neg(self.gen[s][f])
            rows.append(v)
        return LinearCode(spec, n, rows)

    def permute_coordinates(self, perm: Sequence[int]) -> "LinearCode":
        """Relabel coordinates; perm[i-1] is the new home of coordinate i (1-based)."""
        if sorted(perm) != list(range(1, self.n + 1)):
            raise ValueError("perm must be a permutation of 1..n")
        rows = []
        for row in self.gen:
            new = [0] * self.n
            for i, x in enumerate(row):
                new[perm[i] - 1] = x
            rows.append(new)
        return LinearCode(self.spec, self.n, rows)


def parse_code(text: str) -> LinearCode:
    """Parse the matrix file format.

    First line: ``q=<int> n=<int>`` with optional ``p=<int> e=<int>``.
    Remaining lines: rows of n digits (q <= 10, no separators) or
    space-separated encodings (q > 10).
    """
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty matrix file")
    header: dict[str, int] = {}
    for token in lines[0].split():
        if "=" not in token:
            raise ParseError(f"bad header token {token!r}")
        key, _, value = token.partition("=")
        try:
            header[key] = int(value)
        except ValueError as exc:
            raise ParseError(f"bad header value in {token!r}") from exc
    if "q" not in header or "n" not in header:
        raise ParseError("header must declare q= and n=")
    q, n = header["q"], header["n"]
    if q < 2 or n < 1:
        raise ParseError("need q >= 2 and n >= 1")
    p = None
    for cand in range(2, q + 1):
        if q % cand == 0:
            p = cand
            break
    e = 0
    qq = q
    while qq % p == 0 and qq > 1:
        qq //= p
        e += 1
    if p ** e != q:
        raise ParseError(f"q={q} is not a prime power")
    if "p" in header and header["p"] != p:
        raise ParseError(f"declared p={header['p']} inconsistent with q={q}")
    if "e" in header and header["e"] != e:
        raise ParseError(f"declared e={header['e']} inconsistent with q={q}")
    spec = field_new(p, e)
    rows = []
    for ln in lines[1:]:
        if q <= 10:
            digits = ln.replace(" ", "")
            if len(digits) != n:
                raise ParseError(f"row {ln!r} does not have {n} digits")
            try:
                row = [int(ch) for ch in digits]
            except ValueError as exc:
                raise ParseError(f"non-digit in row {ln!r}") from exc
        else:
            fields = ln.split()
            if len(fields) != n:
                raise ParseError(f"row {ln!r} does not have {n} entries")
            try:
                row = [int(f) for f in fields]
            except ValueError as exc:
                raise ParseError(f"non-integer in row {ln!r}") from exc
        for x in row:
            if not 0 <= x < q:
                raise FieldMismatch(f"entry {x} out of range for GF({q})")
        rows.append(row)
    return LinearCode(spec, n, rows)


def render_code(code: LinearCode) -> str:
    """Inverse of parse_code for the canonical generator."""
    head = f"q={code.spec.q} n={code.n}"
    if code.spec.e > 1:
        head += f" p={code.spec.p} e={code.spec.e}"
    lines = [head]
    for row in code.gen:
        if code.spec.q <= 10:
            lines.append("".join(str(x) for x in row))
        else:
            lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


def support(vec: Sequence[int]) -> frozenset[int]:
    """1-based coordinates where the vector is nonzero."""
    return frozenset(i + 1 for i, x in enumerate(vec) if x)


def rows_support(rows: Iterable[Sequence[int]]) -> frozenset[int]:
    """Union of row supports; basis independent for a fixed row space."""
    out: set[int] = set()
    for row in rows:
        for i, x in enumerate(row):
            if x:
                out.add(i + 1)
    return frozenset(out)


def wt_on(obj, tset: RefSet) -> tuple[int, int]:
    """(weight on T, weight on the complement) of a vector, Subcode, or support set."""
    if isinstance(obj, Subcode):
        supp = rows_support(obj.basis)
    elif isinstance(obj, frozenset) or isinstance(obj, set):
        supp = frozenset(obj)
    else:
        supp = support(obj)
    on_t = len(supp & tset.members)
    return on_t, len(supp) - on_t


def codewords(code: LinearCode, max_words: int = MAX_WORDS_DEFAULT) -> Iterator[tuple[int, ...]]:
    """All q^k codewords, in message lexicographic order (m * G)."""
    spec, k, n = code.spec, code.k, code.n
    if spec.q ** k > max_words:
        raise TooLarge(f"{spec.q}^{k} codewords exceed the guard {max_words}")
    if k == 0:
        yield (0,) * n
        return
    scaled = [
        [tuple(spec.mul(a, x) for x in row) for a in range(spec.q)] for row in code.gen
    ]
    for msg in product(range(spec.q), repeat=k):
        word = [0] * n
        for a, row_mult in zip(msg, scaled):
            if a:
                mult = row_mult[a]
                word = [spec.add(x, y) for x, y in zip(word, mult)]
        yield tuple(word)


def _iter_rref_messages(q: int, k: int, r: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Every r x k matrix in RREF over GF(q), one per r-dim subspace of GF(q)^k."""
    if r == 0:
        yield ()
        return
    for pivots in combinations(range(k), r):
        pivot_set = set(pivots)
        free = [
            (s, c)
            for s in range(r)
            for c in range(pivots[s] + 1, k)
            if c not in pivot_set
        ]
        base = [[0] * k for _ in range(r)]
        for s, p in enumerate(pivots):
            base[s][p] = 1
        if not free:
            yield tuple(tuple(row) for row in base)
            continue
        for values in product(range(q), repeat=len(free)):
            mat = [row[:] for row in base]
            for (s, c), v in zip(free, values):
                mat[s][c] = v
            yield tuple(tuple(row) for row in mat)


@dataclass(frozen=True)
class Subcode:
    """An r-dimensional subcode presented by an RREF basis inside its parent."""

    parent: LinearCode
    r: int
    basis: tuple[tuple[int, ...], ...]


def subcode_count(code: LinearCode, r: int) -> int:
    return gauss_binom(code.k, r, code.spec.q)


def subcodes(
    code: LinearCode, r: int, max_subcodes: int = MAX_SUBCODES_DEFAULT
) -> Iterator[Subcode]:
    """All r-dim subcodes, each exactly once, as RREF images of message subspaces."""
    if not 0 <= r <= code.k:
        raise ValueError(f"need 0 <= r <= k = {code.k}")
    if subcode_count(code, r) > max_subcodes:
        raise TooLarge(
            f"{subcode_count(code, r)} subcodes exceed the guard {max_subcodes}"
        )
    spec = code.spec
    for msg in _iter_rref_messages(spec.q, code.k, r):
        rows = _message_image(code, msg)
        reduced, _ = _rref(spec, rows)
        yield Subcode(code, r, tuple(tuple(row) for row in reduced))


def _message_image(code: LinearCode, msg_rows) -> list[list[int]]:
    """Map message-space rows through the generator matrix."""
    spec, n = code.spec, code.n
    out = []
    for mrow in msg_rows:
        word = [0] * n
        for a, grow in zip(mrow, code.gen):
            if a:
                if a == 1:
                    word = [spec.add(x, y) for x, y in zip(word, grow)]
                else:
                    word = [
                        spec.add(x, spec.mul(a, y)) for x, y in zip(word, grow)
                    ]
        out.append(word)
    return out


def iter_subcode_supports(
    code: LinearCode, r: int, max_subcodes: int = MAX_SUBCODES_DEFAULT
) -> Iterator[frozenset[int]]:
    """Support of every r-dim subcode, with multiplicity, as 1-based sets."""
    if not 0 <= r <= code.k:
        raise ValueError(f"need 0 <= r <= k = {code.k}")
    if subcode_count(code, r) > max_subcodes:
        raise TooLarge(
            f"{subcode_count(code, r)} subcodes exceed the guard {max_subcodes}"
        )
    spec = code.spec
    if spec.q == 2 and code._masks is not None:
        masks = code._masks
        for msg in _iter_rref_messages(2, code.k, r):
            union = 0
            for mrow in msg:
                acc = 0
                for a, rmask in zip(mrow, masks):
                    if a:
                        acc ^= rmask
                union |= acc
            yield frozenset(
                i + 1 for i in range(code.n) if (union >> i) & 1
            )
        return
    for msg in _iter_rref_messages(spec.q, code.k, r):
        yield rows_support(_message_image(code, msg))


def iter_codeword_supports(
    code: LinearCode, max_words: int = MAX_WORDS_DEFAULT
) -> Iterator[frozenset[int]]:
    """Support of every codeword, with multiplicity (the zero word included)."""
    spec, k = code.spec, code.k
    if spec.q ** k > max_words:
        raise TooLarge(f"{spec.q}^{k} codewords exceed the guard {max_words}")
    if spec.q == 2 and code._masks is not None:
        span = [0]
        for rmask in code._masks:
            span += [x ^ rmask for x in span]
        for mask in span:
            yield frozenset(i + 1 for i in range(code.n) if (mask >> i) & 1)
        return
    for word in codewords(code, max_words):
        yield support(word)


def shortened_dim(code: LinearCode, tset: RefSet, x_set, y_set) -> int:
    """dim of the subcode vanishing on X union Y, for X in T-bar and Y in T."""
    x_set = frozenset(x_set)
    y_set = frozenset(y_set)
    if not x_set <= tset.complement:
        raise ValueError("X must lie in the complement of T")
    if not y_set <= tset.members:
        raise ValueError("Y must lie inside T")
    cols = sorted(x_set | y_set)
    sub = [[row[c - 1] for c in cols] for row in code.gen]
    return code.k - _rank(code.spec, sub)


def column_set_dim(code: LinearCode, cols: frozenset[int]) -> int:
    """dim of the subcode vanishing on the given 1-based coordinate set."""
    ordered = sorted(cols)
    sub = [[row[c - 1] for c in ordered] for row in code.gen]
    return code.k - _rank(code.spec, sub)


def extension_codewords(
    code: LinearCode, m: int, max_words: int = MAX_WORDS_DEFAULT
) -> Iterator[tuple[int, ...]]:
    """All q^(mk) words of the degree-m extension, as vectors over GF(q^m).

    The base field embeds as the constant polynomials, so only prime base
    fields are supported; extension invariants over GF(p^e) with e > 1 are
    reached through the rank-decomposition identity instead.
    """
    if code.spec.e != 1:
        raise UnsupportedBaseField("direct extension needs a prime base field")
    if m < 1:
        raise ValueError("extension degree m must be at least 1")
    spec, k, n = code.spec, code.k, code.n
    if spec.q ** (m * k) > max_words:
        raise TooLarge(
            f"{spec.q}^{m * k} extension words exceed the guard {max_words}"
        )
    ext = field_new(spec.p, m)
    if k == 0:
        yield (0,) * n
        return
    scaled = [
        [tuple(ext.mul(a, x) for x in row) for a in range(ext.q)] for row in code.gen
    ]
    for msg in product(range(ext.q), repeat=k):
        word = [0] * n
        for a, row_mult in zip(msg, scaled):
            if a:
                mult = row_mult[a]
                word = [ext.add(x, y) for x, y in zip(word, mult)]
        yield tuple(word)
