"""Brute-force exact convex geometry used as ground truth.

Membership is decided by an exact phase-one simplex over the convex
combination system; every other query is built on top of it. Everything
here is exponential or at least super-linear and meant for small inputs.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import CapExceeded, DimensionMismatch
from .representations import CRep, MRep, Vector, VRep, ZRep, sub, vec

MAX_POINTS = 64
MAX_DIM = 6


def _check_caps(n: int, d: int, max_points: int, max_dim: int) -> None:
    if n > max_points:
        raise CapExceeded(f"{n} points exceed the oracle cap of {max_points}")
    if d > max_dim:
        raise CapExceeded(f"dimension {d} exceeds the oracle cap of {max_dim}")


def phase_one_feasible(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> bool:
    """Decide whether ``a x = b, x >= 0`` has a solution, exactly.

    Runs the phase-one simplex on ``min sum(art)`` subject to
    ``a x + art = b`` with Bland's rule for both entering and leaving
    variables, so degenerate pivots cannot cycle.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    # tableau rows: [a | I | b] with b made non-negative
    rows = []
    for i in range(m):
        sign = -1 if b[i] < 0 else 1
        row = [sign * Fraction(x) for x in a[i]]
        row += [Fraction(int(i == k)) for k in range(m)]
        row.append(sign * Fraction(b[i]))
        rows.append(row)
    basis = [n + i for i in range(m)]
    ncols = n + m
    # reduced costs of the phase-one objective; last entry is -objective
    cost = [Fraction(0)] * (ncols + 1)
    for row in rows:
        for j in range(n):
            cost[j] -= row[j]
        cost[-1] -= row[-1]

    while True:
        entering = next((j for j in range(ncols) if cost[j] < 0), None)
        if entering is None:
            break
        leaving = None
        best = None
        for i, row in enumerate(rows):
            if row[entering] > 0:
                ratio = row[-1] / row[entering]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leaving]):
                    best, leaving = ratio, i
        if leaving is None:  # cannot happen: the phase-one objective is bounded below
            break
        piv = rows[leaving]
        pv = piv[entering]
        piv[:] = [x / pv for x in piv]
        for i, row in enumerate(rows):
            if i != leaving and row[entering] != 0:
                f = row[entering]
                row[:] = [x - f * y for x, y in zip(row, piv)]
        if cost[entering] != 0:
            f = cost[entering]
            cost[:] = [x - f * y for x, y in zip(cost, piv)]
        basis[leaving] = entering
    return cost[-1] == 0


def contains_point(points: Sequence[Vector], x: Vector) -> bool:
    """Is ``x`` a convex combination of ``points``?"""
    pts = [vec(p) for p in points]
    x = vec(x)
    if not pts:
        return False
    d = len(x)
    if any(len(p) != d for p in pts):
        raise DimensionMismatch("point dimensions differ")
    if x in pts:
        return True
    for k in range(d):
        lo = min(p[k] for p in pts)
        hi = max(p[k] for p in pts)
        if not lo <= x[k] <= hi:
            return False
    if len(pts) == 1:
        return False
    a = [[p[k] for p in pts] for k in range(d)]
    a.append([Fraction(1)] * len(pts))
    return phase_one_feasible(a, list(x) + [Fraction(1)])


def _solve_unique(a: list[list[Fraction]], b: list[Fraction]) -> list[Fraction] | None:
    """Unique solution of ``a y = b`` or None when singular/inconsistent."""
    m, n = len(a), len(a[0])
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    piv_cols = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        pv = aug[r][c]
        aug[r] = [v / pv for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
    if r < n:
        return None
    if any(aug[i][-1] != 0 for i in range(r, m)):
        return None
    return [aug[i][-1] for i in range(n)]


def contains_point_caratheodory(points: Sequence[Vector], x: Vector) -> bool:
    """Cross-check for :func:`contains_point` by enumerating affinely
    independent subsets of at most d+1 points."""
    pts = sorted(set(vec(p) for p in points))
    x = vec(x)
    d = len(x)
    if len(pts) > 10:
        raise CapExceeded("Caratheodory enumeration is limited to 10 points")
    for k in range(1, d + 2):
        for subset in combinations(pts, k):
            a = [[p[i] for p in subset] for i in range(d)]
            a.append([Fraction(1)] * k)
            lam = _solve_unique(a, list(x) + [Fraction(1)])
            if lam is not None and all(v >= 0 for v in lam):
                return True
    return False


@dataclass(frozen=True)
class HullResult:
    vertices: tuple[Vector, ...]
    is_vertex: tuple[bool, ...]


def hull_vertices(
    points: VRep | Sequence[Vector], max_points: int = MAX_POINTS, max_dim: int = MAX_DIM
) -> HullResult:
    """Vertices of the convex hull, deduplicated and sorted lexicographically."""
    raw = list(points.points if isinstance(points, VRep) else (vec(p) for p in points))
    uniq = sorted(set(raw))
    if uniq:
        _check_caps(len(uniq), len(uniq[0]), max_points, max_dim)
    keep = []
    for i, v in enumerate(uniq):
        others = uniq[:i] + uniq[i + 1 :]
        if not others or not contains_point(others, v):
            keep.append(v)
    kept = set(keep)
    return HullResult(tuple(keep), tuple(p in kept for p in raw))


def is_point_symmetric(points: VRep | Sequence[Vector]) -> Vector | None:
    """Centroid of the hull vertices if the vertex set is symmetric about it."""
    verts = hull_vertices(points).vertices
    return _symmetric_center(verts)


def _symmetric_center(verts: Sequence[Vector]) -> Vector | None:
    if not verts:
        return None
    n = len(verts)
    d = len(verts[0])
    c = tuple(sum((v[k] for v in verts), Fraction(0)) / n for k in range(d))
    vs = set(verts)
    if all(tuple(2 * ck - vk for ck, vk in zip(c, v)) in vs for v in verts):
        return c
    return None


def minkowski_oracle(v1: VRep | Sequence[Vector], v2: VRep | Sequence[Vector]) -> VRep:
    a = hull_vertices(v1).vertices
    b = hull_vertices(v2).vertices
    if len(a[0]) != len(b[0]):
        raise DimensionMismatch("operands have different dimensions")
    sums = {tuple(x + y for x, y in zip(p, q)) for p in a for q in b}
    return VRep(hull_vertices(sums).vertices)


def convex_hull_oracle(v1: VRep | Sequence[Vector], v2: VRep | Sequence[Vector]) -> VRep:
    a = list(v1.points if isinstance(v1, VRep) else v1)
    b = list(v2.points if isinstance(v2, VRep) else v2)
    if len(a[0]) != len(b[0]):
        raise DimensionMismatch("operands have different dimensions")
    return VRep(hull_vertices(a + b).vertices)


def candidate_points(rep, cap_p: int = 20) -> tuple[Vector, ...]:
    """Finite point set whose hull equals the represented polytope."""
    from . import ops

    if isinstance(rep, VRep):
        return rep.points
    if isinstance(rep, MRep):
        return ops.candidate_vertices_m(rep, cap_p).points
    if isinstance(rep, CRep):
        return ops.chain_vertices(ops.crep_to_mrep(rep)).points
    if isinstance(rep, ZRep):
        return ops.candidate_vertices_z(rep, cap_p).points
    raise TypeError(f"not a polytope representation: {type(rep).__name__}")


def sets_equal(a, b, cap_p: int = 20, max_points: int = MAX_POINTS) -> bool:
    """Exact set equality of any two representations via their hull vertices."""
    pa = candidate_points(a, cap_p)
    pb = candidate_points(b, cap_p)
    if len(pa[0]) != len(pb[0]):
        raise DimensionMismatch("operands have different dimensions")
    ha = hull_vertices(pa, max_points=max_points).vertices
    hb = hull_vertices(pb, max_points=max_points).vertices
    return ha == hb


def edge_vectors(verts: Sequence[Vector]) -> list[tuple[Vector, Vector]]:
    """All pairs ``(u, w)`` of vertices (with u < w) such that [u, w] is an edge.

    Projects along ``w - u``: the segment is an edge iff the common image of
    its endpoints is a vertex of the projected set that no other vertex
    maps onto.
    """
    verts = sorted(set(verts))
    edges = []
    for i, u in enumerate(verts):
        for w in verts[i + 1 :]:
            delta = sub(w, u)
            j = next(k for k, t in enumerate(delta) if t != 0)

            def project(x, delta=delta, j=j):
                f = x[j] / delta[j]
                return tuple(x[k] - f * delta[k] for k in range(len(x)) if k != j)

            pu = project(u)
            others = [project(z) for z in verts if z != u and z != w]
            if pu in others:
                continue
            if not others or not contains_point(others, pu):
                edges.append((u, w))
    return edges
