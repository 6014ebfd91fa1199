"""Seeded random instances for tests and experiment scripts."""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from .ops import chain_from_points
from .representations import ExponentMatrix, MRep, SegmentList, Vector, ZRep, lower_tri


def random_rational(rng: random.Random, lo: int = -5, hi: int = 5, dens=(1, 1, 2, 3)) -> Fraction:
    den = rng.choice(dens)
    return Fraction(rng.randint(lo * den, hi * den), den)


def random_point(rng: random.Random, d: int, **kw) -> Vector:
    return tuple(random_rational(rng, **kw) for _ in range(d))


def random_points(rng: random.Random, n: int, d: int, **kw) -> list[Vector]:
    """``n`` distinct random rational points in R^d."""
    out: list[Vector] = []
    seen = set()
    while len(out) < n:
        p = random_point(rng, d, **kw)
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out


def random_chain(rng: random.Random, d: int, n: int) -> MRep:
    return chain_from_points(random_points(rng, n, d))


def rank(vectors) -> int:
    rows = [list(v) for v in vectors]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        for i in range(r + 1, len(rows)):
            f = rows[i][c] / rows[r][c]
            rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


def in_general_position(gens) -> bool:
    """Every subset of at most d generators is linearly independent."""
    d = len(gens[0])
    k = min(d, len(gens))
    return all(rank(s) == len(s) for s in combinations(gens, k))


def random_generic_segments(rng: random.Random, d: int, h: int, spread: int = 4) -> SegmentList:
    while True:
        gens = [tuple(Fraction(rng.randint(-spread, spread)) for _ in range(d)) for _ in range(h)]
        if in_general_position(gens):
            break
    segs = []
    for g in gens:
        a = tuple(Fraction(rng.randint(-3, 3)) for _ in range(d))
        segs.append((a, tuple(x + y for x, y in zip(a, g))))
    return SegmentList(tuple(segs))


def random_chain_zrep(rng: random.Random, d: int, n: int) -> ZRep:
    """``<c, [v_1, ..., v_{n-1}], L_{n-1}>`` as a Z-representation."""
    c = random_point(rng, d)
    gens = tuple(random_point(rng, d) for _ in range(n - 1))
    exps = ExponentMatrix.single(lower_tri(n - 1)) if n > 1 else ExponentMatrix()
    return ZRep(c, gens, exps)
