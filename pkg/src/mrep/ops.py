"""Constructions and closed-form operations on M-, C- and Z-representations."""
from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Sequence

from .errors import AlphaOutOfRange, CapExceeded, DimensionMismatch, EmptyInput, NotChainForm
from .representations import (
    CRep,
    ExponentMatrix,
    Matrix,
    MRep,
    Vector,
    VRep,
    ZRep,
    add,
    as_matrix,
    block_diag,
    lower_tri,
    matvec,
    neg,
    ones,
    scale,
    sub,
    vec,
    vsum,
    zeros,
)

DEFAULT_CAP_P = 20
HALF = Fraction(1, 2)


# --------------------------------------------------------------------------
# evaluation


def _evaluate(origin: Vector, columns, exponents: ExponentMatrix, alpha, lo: int) -> Vector:
    alpha = vec(alpha)
    if len(alpha) != exponents.rows:
        raise DimensionMismatch(f"expected {exponents.rows} factors, got {len(alpha)}")
    for a in alpha:
        if not lo <= a <= 1:
            raise AlphaOutOfRange(f"factor {a} outside [{lo}, 1]")
    point = list(origin)
    for col, support in zip(columns, exponents.supports):
        coef = Fraction(1)
        for k in support:
            coef *= alpha[k]
            if not coef:
                break
        if coef:
            for i, c in enumerate(col):
                point[i] += coef * c
    return tuple(point)


def evaluate_m(rep: MRep, alpha: Sequence) -> Vector:
    """Point of ``rep`` for factors ``alpha`` in [0, 1]^p (exponent 0 drops a factor)."""
    return _evaluate(rep.start, rep.basis, rep.exponents, alpha, 0)


def evaluate_z(rep: ZRep, alpha: Sequence) -> Vector:
    """Point of ``rep`` for factors ``alpha`` in [-1, 1]^p."""
    return _evaluate(rep.center, rep.generators, rep.exponents, alpha, -1)


# --------------------------------------------------------------------------
# chain form


def chain_exponents(h: int) -> ExponentMatrix:
    return ExponentMatrix.single(lower_tri(h)) if h else ExponentMatrix()


def chain_from_points(points: VRep | Sequence[Vector]) -> MRep:
    """``<v_n, [v_1 - v_2, ..., v_{n-1} - v_n], L_{n-1}>`` in O(nd).

    Any point list is accepted; the represented set is the convex hull of the
    points regardless of whether they are vertices or in which order they come.
    """
    pts = points.points if isinstance(points, VRep) else tuple(vec(p) for p in points)
    if not pts:
        raise EmptyInput("cannot build a chain from zero points")
    basis = tuple(sub(pts[i], pts[i + 1]) for i in range(len(pts) - 1))
    return MRep(pts[-1], basis, chain_exponents(len(basis)))


def _require_chain(rep: MRep) -> None:
    if not rep.is_chain_form():
        raise NotChainForm("operation needs an M-representation in chain form")


def chain_vertices(rep: MRep) -> VRep:
    """Recover ``[v_1, ..., v_n]`` from a chain form by suffix sums."""
    _require_chain(rep)
    out = [rep.start]
    for b in reversed(rep.basis):
        out.append(add(out[-1], b))
    return VRep(tuple(reversed(out)))


def canonical_alpha(alpha: Sequence, rep: MRep) -> Vector:
    """Zero every factor below the last zero factor.

    In a chain form the factors before the last zero cannot influence the
    point, so this picks a canonical representative without moving it.
    """
    _require_chain(rep)
    alpha = vec(alpha)
    if len(alpha) != rep.p:
        raise DimensionMismatch(f"expected {rep.p} factors, got {len(alpha)}")
    zero_at = [i for i, a in enumerate(alpha) if a == 0]
    if not zero_at:
        return alpha
    k = zero_at[-1]
    return (Fraction(0),) * k + alpha[k:]


def _dedupe(points) -> tuple[Vector, ...]:
    seen = set()
    out = []
    for p in points:
        if p not in seen:
            seen.add(p)
            out.append(p)
    return tuple(out)


def _check_cap(p: int, cap: int) -> None:
    if p > cap:
        raise CapExceeded(f"2^{p} factor patterns exceed the cap of 2^{cap}")


def candidate_vertices_m(rep: MRep, cap: int = DEFAULT_CAP_P) -> VRep:
    """A superset of the vertices: all {0,1}^p evaluations, or the n chain
    points when ``rep`` is a chain form."""
    if rep.is_chain_form():
        return VRep(_dedupe(chain_vertices(rep).points))
    _check_cap(rep.p, cap)
    return VRep(_dedupe(evaluate_m(rep, a) for a in product((0, 1), repeat=rep.p)))


def candidate_vertices_z(rep: ZRep, cap: int = DEFAULT_CAP_P) -> VRep:
    _check_cap(rep.p, cap)
    return VRep(_dedupe(evaluate_z(rep, a) for a in product((-1, 1), repeat=rep.p)))


# --------------------------------------------------------------------------
# M-representation operations


def _map_columns(m: Matrix, columns, dim: int) -> tuple[Vector, ...]:
    return tuple(matvec(m, c, dim) for c in columns)


def _check_map(m: Matrix, dim: int) -> Matrix:
    m = as_matrix(m)
    if not m or len(m[0]) != dim:
        raise DimensionMismatch(f"matrix columns do not match dimension {dim}")
    return m


def linear_map_m(m: Matrix, rep: MRep) -> MRep:
    m = _check_map(m, rep.dim)
    return MRep(matvec(m, rep.start), _map_columns(m, rep.basis, rep.dim), rep.exponents)


def _check_same_dim(a, b) -> None:
    if a.dim != b.dim:
        raise DimensionMismatch(f"operands live in R^{a.dim} and R^{b.dim}")


def minkowski_m(p1: MRep, p2: MRep) -> MRep:
    _check_same_dim(p1, p2)
    return MRep(add(p1.start, p2.start), p1.basis + p2.basis, block_diag(p1.exponents, p2.exponents))


def convex_hull_m(p1: MRep, p2: MRep) -> MRep:
    """``<s2, [B2, -B2, B1, s1 - s2], E>`` with the operand of fewer basis
    vectors in the second role, giving h1 + 2 h2 + 1 basis vectors.

    The exponent grid is::

        [[E2, E2, O,  O],
         [O,  O,  E1, O],
         [O,  J,  J,  1]]
    """
    _check_same_dim(p1, p2)
    if p2.h > p1.h:
        p1, p2 = p2, p1
    e1, e2 = p1.exponents, p2.exponents
    w1, w2 = e1.col_widths, e2.col_widths
    grid = []
    for row in e2.grid:
        ht = row[0].rows
        grid.append(row + row + tuple(zeros(ht, w) for w in w1) + (zeros(ht, 1),))
    for row in e1.grid:
        ht = row[0].rows
        grid.append(tuple(zeros(ht, w) for w in w2 + w2) + row + (zeros(ht, 1),))
    grid.append(
        tuple(zeros(1, w) for w in w2)
        + tuple(ones(1, w) for w in w2 + w1)
        + (ones(1, 1),)
    )
    basis = p2.basis + tuple(neg(b) for b in p2.basis) + p1.basis + (sub(p1.start, p2.start),)
    if len(grid) == 1 and len(grid[0]) == 1:
        # hull of two points: the segment is already a chain
        return MRep(p2.start, basis, chain_exponents(1))
    return MRep(p2.start, basis, ExponentMatrix(grid))


def to_chain_form(rep: MRep, filter_hull: bool = False, cap: int = DEFAULT_CAP_P) -> MRep:
    """Chain form over the candidate vertices, optionally keeping only hull
    vertices (exponential in the dimension)."""
    points = candidate_vertices_m(rep, cap).points
    if filter_hull:
        from .oracle import hull_vertices

        points = hull_vertices(points).vertices
    return chain_from_points(points)


# --------------------------------------------------------------------------
# C-representation


def chain_to_crep(rep: MRep) -> CRep:
    _require_chain(rep)
    return CRep(rep.start, rep.basis, add(rep.start, vsum(rep.basis, rep.dim)))


def crep_to_mrep(rep: CRep) -> MRep:
    return MRep(rep.start, rep.basis, chain_exponents(rep.h))


def convex_hull_c(p1: CRep, p2: CRep) -> CRep:
    """Link the two chains in O(d): ``<s1, [B2, s2 - e1, B1], e2>``.

    Chain points are suffix sums from the start, so the walk consumes the
    basis right to left: s1 through P1's points to e1, across the link to
    s2, then through P2's points to e2. B1 must therefore sit to the right.
    """
    _check_same_dim(p1, p2)
    return CRep(p1.start, p2.basis + (sub(p2.start, p1.end),) + p1.basis, p2.end)


def linear_map_c(m: Matrix, rep: CRep) -> CRep:
    m = _check_map(m, rep.dim)
    return CRep(matvec(m, rep.start), _map_columns(m, rep.basis, rep.dim), matvec(m, rep.end))


# --------------------------------------------------------------------------
# Z-representation


def linear_map_z(m: Matrix, rep: ZRep) -> ZRep:
    m = _check_map(m, rep.dim)
    return ZRep(matvec(m, rep.center), _map_columns(m, rep.generators, rep.dim), rep.exponents)


def minkowski_z(p1: ZRep, p2: ZRep) -> ZRep:
    _check_same_dim(p1, p2)
    return ZRep(
        add(p1.center, p2.center),
        p1.generators + p2.generators,
        block_diag(p1.exponents, p2.exponents),
    )


def convex_hull_z(p1: ZRep, p2: ZRep) -> ZRep:
    """Convex hull with one extra factor and 2 h1 + 2 h2 + 1 generators.

    Exponent grid::

        [[O, E1, E1, O,  O ],
         [O, O,  O,  E2, E2],
         [1, O,  J,  O,  J ]]
    """
    _check_same_dim(p1, p2)
    e1, e2 = p1.exponents, p2.exponents
    w1, w2 = e1.col_widths, e2.col_widths
    grid = []
    for row in e1.grid:
        ht = row[0].rows
        grid.append((zeros(ht, 1),) + row + row + tuple(zeros(ht, w) for w in w2 + w2))
    for row in e2.grid:
        ht = row[0].rows
        grid.append((zeros(ht, 1),) + tuple(zeros(ht, w) for w in w1 + w1) + row + row)
    grid.append(
        (ones(1, 1),)
        + tuple(zeros(1, w) for w in w1)
        + tuple(ones(1, w) for w in w1)
        + tuple(zeros(1, w) for w in w2)
        + tuple(ones(1, w) for w in w2)
    )
    g1 = tuple(scale(HALF, g) for g in p1.generators)
    g2 = tuple(scale(HALF, g) for g in p2.generators)
    generators = (scale(HALF, sub(p1.center, p2.center)),) + g1 + g1 + g2 + tuple(neg(g) for g in g2)
    return ZRep(scale(HALF, add(p1.center, p2.center)), generators, ExponentMatrix(grid))


# --------------------------------------------------------------------------
# sizes


def representation_size(rep) -> int:
    """Number of stored scalars, counting the exponent matrix by its block storage."""
    if isinstance(rep, VRep):
        return len(rep.points) * rep.dim
    if isinstance(rep, CRep):
        return (rep.h + 2) * rep.dim
    if isinstance(rep, (MRep, ZRep)):
        return (rep.h + 1) * rep.dim + rep.exponents.storage_size()
    raise TypeError(f"not a polytope representation: {type(rep).__name__}")
