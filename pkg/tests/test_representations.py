from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from mrep.errors import DimensionMismatch, EmptyInput, InvalidArgument
from mrep.representations import (
    CRep,
    ExponentMatrix,
    MRep,
    SegmentList,
    VRep,
    ZRep,
    block_diag,
    dense,
    identity,
    lower_tri,
    ones,
    zeros,
)


def test_lower_tri_materializes():
    assert lower_tri(2).materialize() == ((1, 0), (1, 1))


def test_zero_block_materializes():
    assert zeros(1, 3).materialize() == ((0, 0, 0),)


def test_block_diag_of_chains():
    e = block_diag(ExponentMatrix.single(lower_tri(1)), ExponentMatrix.single(lower_tri(1)))
    assert e.materialize() == ((1, 0), (0, 1))
    assert e.storage_size() == 8


@pytest.mark.parametrize(
    "block, size",
    [(lower_tri(99), 2), (dense([[0, 1, 0, 1, 1]] * 3), 15), (ones(4, 7), 2), (identity(5), 2)],
)
def test_storage_size(block, size):
    assert ExponentMatrix.single(block).storage_size() == size


def test_grid_shape_checks():
    with pytest.raises(InvalidArgument):
        ExponentMatrix(((lower_tri(2), zeros(3, 1)),))
    with pytest.raises(InvalidArgument):
        ExponentMatrix(((lower_tri(2),), (zeros(1, 3),)))
    with pytest.raises(InvalidArgument):
        dense([[0, 2]])


@st.composite
def grids(draw):
    heights = draw(st.lists(st.integers(0, 3), min_size=1, max_size=3))
    widths = draw(st.lists(st.integers(0, 3), min_size=1, max_size=3))
    grid = []
    for r in heights:
        row = []
        for c in widths:
            kinds = ["O", "J", "dense"] + (["L", "I"] if r == c else [])
            kind = draw(st.sampled_from(kinds))
            if kind == "dense":
                bits = draw(st.lists(st.lists(st.integers(0, 1), min_size=c, max_size=c), min_size=r, max_size=r))
                row.append(dense(bits, c))
            elif kind == "O":
                row.append(zeros(r, c))
            elif kind == "J":
                row.append(ones(r, c))
            elif kind == "L":
                row.append(lower_tri(r))
            else:
                row.append(identity(r))
        grid.append(tuple(row))
    return ExponentMatrix(tuple(grid))


@given(grids())
def test_storage_bound_and_shape(e):
    m = e.materialize()
    assert len(m) == e.rows
    assert all(len(r) == e.cols for r in m)
    assert all(b in (0, 1) for r in m for b in r)
    assert e.storage_size() <= e.rows * e.cols + 2 * len(e.blocks)


@given(grids())
def test_structured_blocks_expand_to_patterns(e):
    m = e.materialize()
    r0 = 0
    for row in e.grid:
        c0 = 0
        for b in row:
            for i in range(b.rows):
                for j in range(b.cols):
                    expected = {"O": 0, "J": 1, "L": int(i >= j), "I": int(i == j)}.get(b.kind)
                    if expected is None:
                        expected = b.bits[i][j]
                    assert m[r0 + i][c0 + j] == expected
            c0 += b.cols
        r0 += row[0].rows


rationals = st.fractions(max_denominator=50).map(lambda x: x.limit_denominator(50))


@given(rationals, rationals)
def test_rational_canonical_form(a, b):
    for value in (a + b, a - b, a * b) + ((a / b,) if b else ()):
        assert value.denominator > 0
        from math import gcd

        assert gcd(abs(value.numerator), value.denominator) == 1


def test_mrep_dimension_checks():
    with pytest.raises(DimensionMismatch):
        MRep((0, 0), [(1, 0, 0)], ExponentMatrix.single(lower_tri(1)))
    with pytest.raises(DimensionMismatch):
        MRep((0, 0), [(1, 0)], ExponentMatrix.single(lower_tri(2)))


def test_chain_form_flags(triangle):
    assert triangle.is_chain_form()
    assert MRep((1, 2)).is_chain_form()
    assert not MRep((0, 0), [(1, 0), (0, 1)], ExponentMatrix.single(identity(2))).is_chain_form()


def test_crep_end_invariant():
    CRep((1, 2), [(-2, 0), (1, -2)], (0, 0))
    with pytest.raises(InvalidArgument):
        CRep((1, 2), [(-2, 0), (1, -2)], (1, 1))


def test_zrep_zonotope_flag(parallelogram):
    assert parallelogram.is_zonotope()
    assert not ZRep((0,), [(1,), (1,)], ExponentMatrix.single(lower_tri(2))).is_zonotope()


def test_vrep_validation():
    with pytest.raises(EmptyInput):
        VRep(())
    with pytest.raises(DimensionMismatch):
        VRep(((0, 0), (1,)))
    assert VRep(((F(1, 2), 1), (F(1, 2), 1))).dim == 2


def test_segment_validation():
    with pytest.raises(InvalidArgument):
        SegmentList((((0, 0), (0, 0)),))
    with pytest.raises(DimensionMismatch):
        SegmentList((((0, 0), (1, 0)), ((0,), (1,))))
