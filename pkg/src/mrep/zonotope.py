"""Zonotopes as Minkowski sums of segments, and basis reduction for point sets
whose hull contains a zonotope.

Zonotope recognition is exhaustive and only meant for a dozen or so
vertices; the caps make that explicit.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import comb
from typing import Sequence

from .errors import CapExceeded, EmptyInput, InvalidArgument
from .oracle import _symmetric_center, contains_point, edge_vectors, hull_vertices
from .ops import chain_from_points, convex_hull_m
from .representations import (
    ExponentMatrix,
    MRep,
    SegmentList,
    Vector,
    VRep,
    add,
    identity,
    neg,
    scale,
    sub,
    vec,
    vsum,
)

DEFAULT_MAX_VERTICES = 12


def zonotope_from_segments(segments: SegmentList | Sequence) -> MRep:
    """``<sum_i l_i1, [l_i2 - l_i1]_i, I_h>``."""
    if not isinstance(segments, SegmentList):
        segments = SegmentList(tuple(segments))
    if not len(segments):
        raise EmptyInput("need at least one segment")
    d = segments.dim
    start = vsum((a for a, _ in segments), d)
    basis = tuple(sub(b, a) for a, b in segments)
    return MRep(start, basis, ExponentMatrix.single(identity(len(basis))))


def zonotope_vertex_count(m: int, h: int) -> int:
    """Vertex count of an m-dimensional zonotope with h generators.

    Exact only when the generators are in general position; degenerate
    configurations have fewer vertices.
    """
    if m < 1 or h < 1:
        raise InvalidArgument("dimension and generator count must be positive")
    return 2 * sum(comb(h - 1, i) for i in range(min(m, h)))


@dataclass(frozen=True)
class ZonotopeDecomposition:
    segments: SegmentList
    start_sum: Vector
    subset_indices: tuple[int, ...]


def corner_points(center: Vector, generators: Sequence[Vector]) -> set[Vector]:
    """All ``center + sum_i +-g_i / 2``."""
    halves = [scale(Fraction(1, 2), g) for g in generators]
    out = set()
    for signs in product((-1, 1), repeat=len(halves)):
        p = center
        for s, g in zip(signs, halves):
            p = add(p, g) if s > 0 else sub(p, g)
        out.add(p)
    return out


def _generators_of(verts: Sequence[Vector]) -> tuple[Vector, list[Vector]] | None:
    """Generators of the zonotope whose vertex set is exactly ``verts``.

    ``verts`` must already be hull vertices. Candidate generators are the
    distinct edge vectors; subsets are tried in increasing size.
    """
    verts = sorted(set(verts))
    if len(verts) < 2:
        return None
    center = _symmetric_center(verts)
    if center is None:
        return None
    candidates = sorted({sub(w, u) for u, w in edge_vectors(verts)})
    target = set(verts)
    for k in range(1, min(len(candidates), len(verts) // 2) + 1):
        for gens in combinations(candidates, k):
            corners = corner_points(center, gens)
            if not target <= corners:
                continue
            if all(contains_point(verts, q) for q in corners - target):
                return center, list(gens)
    return None


def _orient(center: Vector, gens: list[Vector], v_min: Vector) -> list[Vector]:
    """Flip generators so that v_min = center - sum(g) / 2."""
    halves = [scale(Fraction(1, 2), g) for g in gens]
    for signs in product((-1, 1), repeat=len(gens)):
        p = center
        for s, g in zip(signs, halves):
            p = add(p, g) if s > 0 else sub(p, g)
        if p == v_min:
            return [neg(g) if s > 0 else g for s, g in zip(signs, gens)]
    raise AssertionError("lexicographic minimum is not a corner")


def _decomposition(verts: Sequence[Vector], source: Sequence[Vector]) -> ZonotopeDecomposition | None:
    found = _generators_of(verts)
    if found is None:
        return None
    center, gens = found
    v_min = min(verts)
    gens = _orient(center, gens, v_min)
    zero = tuple(Fraction(0) for _ in v_min)
    # first segment carries the offset, the rest start at the origin
    segs = [(v_min, add(v_min, gens[0]))] + [(zero, g) for g in gens[1:]]
    vs = set(verts)
    indices = []
    seen = set()
    for i, p in enumerate(source):
        if p in vs and p not in seen:
            seen.add(p)
            indices.append(i)
    return ZonotopeDecomposition(SegmentList(tuple(segs)), v_min, tuple(indices))


def _points(v) -> tuple[Vector, ...]:
    pts = v.points if isinstance(v, VRep) else tuple(vec(p) for p in v)
    if not pts:
        raise EmptyInput("empty point set")
    return pts


def _check_vertex_cap(pts, cap: int) -> None:
    n = len(set(pts))
    if n > cap:
        raise CapExceeded(f"{n} points exceed the zonotope search cap of {cap}")


def detect_zonotope(
    v: VRep | Sequence[Vector], cap: int = DEFAULT_MAX_VERTICES
) -> ZonotopeDecomposition | None:
    """Segments spanning conv(v) if its hull vertices form a zonotope, else None."""
    pts = _points(v)
    _check_vertex_cap(pts, cap)
    verts = hull_vertices(pts).vertices
    return _decomposition(verts, pts)


def find_maximal_zonotope_subset(
    v: VRep | Sequence[Vector], cap: int = DEFAULT_MAX_VERTICES
) -> tuple[tuple[Vector, ...], ZonotopeDecomposition] | None:
    """Largest subset (more than 2 points) of the hull vertices forming a
    zonotope; ties go to the lexicographically first subset."""
    pts = _points(v)
    _check_vertex_cap(pts, cap)
    verts = hull_vertices(pts).vertices
    for size in range(len(verts), 2, -1):
        for subset in combinations(verts, size):
            if _symmetric_center(subset) is None:
                continue
            dec = _decomposition(subset, pts)
            if dec is not None:
                return subset, dec
    return None


@dataclass(frozen=True)
class Reduction:
    rep: MRep
    branch: str  # "zonotope" or "chain"
    subset: tuple[Vector, ...] = ()


def reduce_vertices(v: VRep | Sequence[Vector], cap: int = DEFAULT_MAX_VERTICES) -> Reduction:
    """Build an M-representation with at most n - 1 basis vectors.

    If some subset of the hull vertices spans a zonotope, that zonotope is
    written with one basis vector per segment and the remaining vertices are
    folded in one at a time by convex hulls, each adding a single vector.
    Otherwise the plain chain form over the hull vertices is returned.
    """
    pts = _points(v)
    _check_vertex_cap(pts, cap)
    verts = hull_vertices(pts).vertices
    found = find_maximal_zonotope_subset(verts, cap)
    if found is None:
        return Reduction(chain_from_points(verts), "chain")
    subset, dec = found
    rep = zonotope_from_segments(dec.segments)
    inside = set(subset)
    for q in verts:  # already lexicographically sorted
        if q not in inside:
            rep = convex_hull_m(rep, MRep(q))
    return Reduction(rep, "zonotope", subset)


def reduce(v: VRep | Sequence[Vector], cap: int = DEFAULT_MAX_VERTICES) -> MRep:
    return reduce_vertices(v, cap).rep
