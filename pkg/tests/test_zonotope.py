import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from conftest import HOUSE, PARALLELOGRAM, SQUARE2, TRIANGLE
from mrep import ops
from mrep.errors import CapExceeded, EmptyInput, InvalidArgument
from mrep.instances import random_generic_segments, rank
from mrep.oracle import hull_vertices, sets_equal
from mrep.representations import ExponentMatrix, MRep, SegmentList, VRep, identity, lower_tri
from mrep.zonotope import (
    corner_points,
    detect_zonotope,
    find_maximal_zonotope_subset,
    reduce,
    reduce_vertices,
    zonotope_from_segments,
    zonotope_vertex_count,
)


def pts(*xs):
    return tuple(tuple(F(c) for c in p) for p in xs)


def hull_of(rep):
    return hull_vertices(ops.candidate_vertices_m(rep)).vertices


def regenerated_hull(dec):
    return hull_of(zonotope_from_segments(dec.segments))


# -- construction -----------------------------------------------------------


def test_square_from_segments():
    z = zonotope_from_segments([((0, 0), (0, 2)), ((0, 0), (2, 0))])
    assert z == MRep((0, 0), [(0, 2), (2, 0)], ExponentMatrix.single(identity(2)))
    assert hull_of(z) == pts((0, 0), (0, 2), (2, 0), (2, 2))


def test_one_segment():
    z = zonotope_from_segments([((1, 1), (3, 2))])
    assert z.h == 1 and z.start == (1, 1) and z.basis == pts((2, 1))


def test_unit_cube():
    z = zonotope_from_segments([((0, 0, 0), (1, 0, 0)), ((0, 0, 0), (0, 1, 0)), ((0, 0, 0), (0, 0, 1))])
    assert len(ops.candidate_vertices_m(z)) == 8


def test_from_segments_equals_iterated_minkowski():
    segs = [((0, 1), (2, 1)), ((1, 0), (1, 3)), ((0, 0), (1, 1))]
    z = zonotope_from_segments(segs)
    acc = MRep(segs[0][0], [ops.sub(*reversed(segs[0]))], ExponentMatrix.single(lower_tri(1)))
    for a, b in segs[1:]:
        acc = ops.minkowski_m(acc, MRep(a, [ops.sub(b, a)], ExponentMatrix.single(lower_tri(1))))
    assert acc.start == z.start and acc.basis == z.basis
    assert acc.exponents.materialize() == z.exponents.materialize()


def test_from_segments_errors():
    with pytest.raises(EmptyInput):
        zonotope_from_segments([])


# -- vertex count -----------------------------------------------------------


def test_vertex_count_values():
    assert zonotope_vertex_count(3, 3) == 8
    assert zonotope_vertex_count(1, 1) == 2
    for h in range(1, 9):
        assert zonotope_vertex_count(2, h) == 2 * h
    with pytest.raises(InvalidArgument):
        zonotope_vertex_count(0, 2)
    with pytest.raises(InvalidArgument):
        zonotope_vertex_count(2, 0)


@settings(max_examples=25)
@given(st.integers(0, 10**6), st.integers(2, 3), st.integers(1, 4))
def test_vertex_count_matches_enumeration(seed, d, h):
    segs = random_generic_segments(random.Random(seed), d, h)
    z = zonotope_from_segments(segs)
    n = len(hull_of(z))
    assert n == zonotope_vertex_count(rank(z.basis), h)
    assert h <= n / 2


def test_vertex_count_degenerate_is_smaller():
    # parallel generators: relation overcounts
    z = zonotope_from_segments([((0, 0), (1, 0)), ((0, 0), (2, 0)), ((0, 0), (0, 1))])
    assert len(hull_of(z)) == 4 < zonotope_vertex_count(2, 3)


# -- detection --------------------------------------------------------------


def test_detect_square():
    dec = detect_zonotope(SQUARE2)
    assert dec is not None
    assert {b for b in zonotope_from_segments(dec.segments).basis} == set(pts((0, 2), (2, 0)))
    assert dec.start_sum == (0, 0)
    assert dec.subset_indices == (0, 1, 2, 3)


def test_detect_triangle_absent():
    assert detect_zonotope(TRIANGLE) is None


def test_detect_hexagon():
    segs = [((0, 0), (3, 1)), ((0, 0), (1, 2)), ((0, 0), (-1, 2))]
    verts = hull_of(zonotope_from_segments(segs))
    assert len(verts) == 6
    dec = detect_zonotope(verts)
    assert len(dec.segments) == 3
    dirs = {frozenset({ops.sub(b, a), ops.neg(ops.sub(b, a))}) for a, b in dec.segments}
    assert dirs == {frozenset({g, ops.neg(g)}) for g in pts((3, 1), (1, 2), (-1, 2))}
    assert regenerated_hull(dec) == verts


def test_detect_symmetric_non_zonotope():
    octahedron = [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
    assert detect_zonotope(octahedron) is None


def test_detect_cap():
    with pytest.raises(CapExceeded):
        detect_zonotope([(i, i * i) for i in range(13)])


@settings(max_examples=20)
@given(st.integers(0, 10**6), st.integers(2, 3), st.integers(1, 4))
def test_detect_round_trip(seed, d, h):
    segs = random_generic_segments(random.Random(seed), d, h)
    verts = hull_of(zonotope_from_segments(segs))
    dec = detect_zonotope(verts, cap=16)
    assert dec is not None
    assert regenerated_hull(dec) == verts
    assert len(dec.segments) == h


def test_corner_points_square():
    assert corner_points((F(1), F(1)), pts((2, 0), (0, 2))) == set(pts((0, 0), (0, 2), (2, 0), (2, 2)))


# -- maximal subset ---------------------------------------------------------


def test_maximal_subset_of_house():
    subset, dec = find_maximal_zonotope_subset(HOUSE)
    assert set(subset) == set(pts(*SQUARE2))
    assert dec.subset_indices == (0, 1, 2, 3)


def test_maximal_subset_triangle():
    assert find_maximal_zonotope_subset(TRIANGLE) is None


def test_maximal_subset_prefers_larger_square():
    # a 3x3 square next to a unit square; only the larger one survives as hull vertices
    big = [(0, 0), (3, 0), (3, 3), (0, 3)]
    small = [(4, 1), (5, 1), (5, 2), (4, 2)]
    subset, _ = find_maximal_zonotope_subset(big + small)
    assert len(subset) == 4
    assert sets_equal(zonotope_from_segments(_.segments), VRep(subset))


# -- reduction --------------------------------------------------------------


def test_reduce_house():
    result = reduce_vertices(HOUSE)
    rep = result.rep
    assert result.branch == "zonotope"
    assert rep.h == 3 and rep.start == (1, 3)
    assert set(rep.basis) == set(pts((-1, -3), (0, 2), (2, 0)))
    assert sets_equal(rep, VRep(HOUSE))
    # alpha_1 alpha_3 (0,2) + alpha_2 alpha_3 (2,0) + alpha_3 (-1,-3) as written in the worked example
    col = {b: s for b, s in zip(rep.basis, rep.exponents.supports)}
    link = col[pts((-1, -3))[0]]
    assert len(link) == 1
    assert all(link[0] in col[g] and len(col[g]) == 2 for g in pts((0, 2), (2, 0)))


def test_reduce_parallelogram():
    rep = reduce(PARALLELOGRAM)
    assert rep == MRep((-2, -1), [(2, 0), (2, 2)], ExponentMatrix.single(identity(2)))


def test_reduce_triangle_falls_back():
    result = reduce_vertices(TRIANGLE)
    assert result.branch == "chain" and result.rep.h == 2 and result.rep.is_chain_form()


def test_reduce_drops_interior_points():
    rep = reduce(SQUARE2 + [(1, 1)])
    assert rep.h == 2


@settings(max_examples=25)
@given(st.integers(0, 10**6), st.integers(1, 8))
def test_reduce_contract(seed, n):
    rng = random.Random(seed)
    from mrep.instances import random_points

    points = random_points(rng, n, 2, lo=-3, hi=3)
    rep = reduce(points)
    verts = hull_vertices(points).vertices
    assert rep.h <= max(len(verts) - 1, 0)
    assert hull_of(rep) == verts
