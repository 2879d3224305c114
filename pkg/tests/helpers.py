"""Shared builders for the test suite: golden codes and seeded random codes."""

import random

from jacobiforge import LinearCode, field_new, parse_code

EX44_TEXT = "q=2 n=6\n110000\n001100\n000011\n"
HAMMING74_TEXT = "q=2 n=7\n1000110\n0100101\n0010011\n0001111\n"

# [6,3] binary, self-dual, generator rows 110000 / 001100 / 000011
def ex44() -> LinearCode:
    return parse_code(EX44_TEXT)


def hamming74() -> LinearCode:
    return parse_code(HAMMING74_TEXT)


def random_code(rng: random.Random, q: int, n: int, rows: int) -> LinearCode:
    spec = field_new(q)
    mat = [[rng.randrange(q) for _ in range(n)] for _ in range(rows)]
    return LinearCode(spec, n, mat)


def sweep_codes(seed: int = 20250801, count: int = 56) -> list[LinearCode]:
    """Deterministic pool of random codes with q in {2,3}, n <= 8, k <= 4."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        q = rng.choice((2, 3))
        n = rng.randrange(3, 9)
        rows = rng.randrange(1, min(4, n) + 1)
        code = random_code(rng, q, n, rows)
        if code.k == 0:
            continue
        out.append(code)
    return out


def sample_tsets(rng: random.Random, n: int, max_size: int, per_size: int = 2):
    """A few reference coordinate tuples per size 0..max_size, deterministic."""
    out = []
    for t in range(0, min(max_size, n) + 1):
        seen = set()
        seen.add(tuple(range(1, t + 1)))
        attempts = 0
        while len(seen) < per_size and attempts < 20:
            seen.add(tuple(sorted(rng.sample(range(1, n + 1), t))))
            attempts += 1
        out.extend(sorted(seen))
    return out
