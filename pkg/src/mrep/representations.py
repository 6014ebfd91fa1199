"""Exact scalar substrate, block-structured exponent matrices and the
generator-based polytope representations.

All scalars are :class:`fractions.Fraction`. Points are tuples of fractions,
and basis / generator matrices are stored column-wise as tuples of points,
since every operation here works on whole columns.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import DimensionMismatch, EmptyInput, InvalidArgument

Rational = Fraction
Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]  # row-major, used for linear maps


def as_rational(x) -> Fraction:
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, float):
        # only exactly representable values are meaningful; keep them exact
        return Fraction(x)
    return Fraction(x)


def vec(xs: Iterable) -> Vector:
    return tuple(as_rational(x) for x in xs)


def as_matrix(rows: Iterable[Iterable]) -> Matrix:
    """Build a row-major rational matrix, checking that it is rectangular."""
    m = tuple(vec(r) for r in rows)
    if m and any(len(r) != len(m[0]) for r in m):
        raise DimensionMismatch("ragged matrix rows")
    return m


def add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, u: Vector) -> Vector:
    return tuple(c * a for a in u)


def neg(u: Vector) -> Vector:
    return tuple(-a for a in u)


def vsum(vectors: Iterable[Vector], dim: int) -> Vector:
    total = [Fraction(0)] * dim
    for v in vectors:
        for i, a in enumerate(v):
            total[i] += a
    return tuple(total)


def matvec(m: Matrix, v: Vector, cols: int | None = None) -> Vector:
    """Product of a row-major matrix with a column vector."""
    ncols = len(m[0]) if m else cols
    if ncols is not None and ncols != len(v):
        raise DimensionMismatch(f"matrix has {ncols} columns, vector has dimension {len(v)}")
    return tuple(sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in m)


# --------------------------------------------------------------------------
# exponent matrices

BLOCK_KINDS = ("O", "J", "L", "I", "dense")


@dataclass(frozen=True)
class Block:
    """One block of an exponent matrix.

    ``kind`` is one of ``O`` (zeros), ``J`` (all ones), ``L`` (lower
    triangular ones), ``I`` (identity) or ``dense`` (explicit bits).
    """

    kind: str
    rows: int
    cols: int
    bits: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        if self.kind not in BLOCK_KINDS:
            raise InvalidArgument(f"unknown block kind {self.kind!r}")
        if self.rows < 0 or self.cols < 0:
            raise InvalidArgument("negative block size")
        if self.kind in ("L", "I") and self.rows != self.cols:
            raise InvalidArgument(f"{self.kind} block must be square")
        if self.kind == "dense":
            if self.bits is None or len(self.bits) != self.rows or any(
                len(r) != self.cols for r in self.bits
            ):
                raise InvalidArgument("dense block bits do not match its shape")
            if any(b not in (0, 1) for r in self.bits for b in r):
                raise InvalidArgument("exponent bits must be 0 or 1")
        elif self.bits is not None:
            raise InvalidArgument("only dense blocks carry bits")

    @property
    def structured(self) -> bool:
        return self.kind != "dense"

    def entry(self, i: int, j: int) -> int:
        if self.kind == "O":
            return 0
        if self.kind == "J":
            return 1
        if self.kind == "L":
            return int(i >= j)
        if self.kind == "I":
            return int(i == j)
        return self.bits[i][j]

    def materialize(self) -> tuple[tuple[int, ...], ...]:
        if self.kind == "dense":
            return self.bits
        return tuple(tuple(self.entry(i, j) for j in range(self.cols)) for i in range(self.rows))

    def storage_size(self) -> int:
        # structured blocks store a tag and a size index
        return 2 if self.structured else self.rows * self.cols


def zeros(rows: int, cols: int) -> Block:
    return Block("O", rows, cols)


def ones(rows: int, cols: int) -> Block:
    return Block("J", rows, cols)


def lower_tri(n: int) -> Block:
    return Block("L", n, n)


def identity(n: int) -> Block:
    return Block("I", n, n)


def dense(bits: Sequence[Sequence[int]], cols: int | None = None) -> Block:
    rows = tuple(tuple(int(b) for b in r) for r in bits)
    ncols = len(rows[0]) if rows else (cols or 0)
    return Block("dense", len(rows), ncols, rows)


@dataclass(frozen=True)
class ExponentMatrix:
    """A {0,1} matrix stored as a grid of blocks.

    Block heights agree along each grid row and block widths along each grid
    column. The empty grid is the 0x0 matrix used for single points.
    """

    grid: tuple[tuple[Block, ...], ...] = ()

    def __post_init__(self):
        grid = tuple(tuple(row) for row in self.grid)
        object.__setattr__(self, "grid", grid)
        if not grid:
            return
        width = len(grid[0])
        if width == 0 or any(len(row) != width for row in grid):
            raise InvalidArgument("block grid must be a non-empty rectangle")
        for row in grid:
            if any(b.rows != row[0].rows for b in row):
                raise InvalidArgument("block heights differ within a grid row")
        for j in range(width):
            if any(row[j].cols != grid[0][j].cols for row in grid):
                raise InvalidArgument("block widths differ within a grid column")

    @classmethod
    def single(cls, block: Block) -> "ExponentMatrix":
        return cls(((block,),))

    @classmethod
    def from_dense(cls, bits: Sequence[Sequence[int]], cols: int = 0) -> "ExponentMatrix":
        """Wrap an explicit bit matrix. ``cols`` is only needed when there are no rows."""
        bits = [list(r) for r in bits]
        if not bits and cols == 0:
            return cls()
        return cls.single(dense(bits, cols))

    @classmethod
    def empty(cls, cols: int = 0) -> "ExponentMatrix":
        """Exponent matrix with no factors (p = 0) for ``cols`` basis vectors."""
        return cls() if cols == 0 else cls.single(zeros(0, cols))

    @property
    def row_heights(self) -> tuple[int, ...]:
        return tuple(row[0].rows for row in self.grid)

    @property
    def col_widths(self) -> tuple[int, ...]:
        return tuple(b.cols for b in self.grid[0]) if self.grid else ()

    @property
    def rows(self) -> int:
        return sum(self.row_heights)

    @property
    def cols(self) -> int:
        return sum(self.col_widths)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def blocks(self) -> list[Block]:
        return [b for row in self.grid for b in row]

    @cached_property
    def _dense(self) -> tuple[tuple[int, ...], ...]:
        out = [[0] * self.cols for _ in range(self.rows)]
        r0 = 0
        for row in self.grid:
            c0 = 0
            for b in row:
                for i, brow in enumerate(b.materialize()):
                    out[r0 + i][c0 : c0 + b.cols] = brow
                c0 += b.cols
            r0 += row[0].rows
        return tuple(tuple(r) for r in out)

    def materialize(self) -> tuple[tuple[int, ...], ...]:
        return self._dense

    @cached_property
    def supports(self) -> tuple[tuple[int, ...], ...]:
        """For each column, the factor indices carrying exponent 1."""
        dense_rows = self._dense
        return tuple(
            tuple(k for k in range(self.rows) if dense_rows[k][i]) for i in range(self.cols)
        )

    def storage_size(self) -> int:
        return sum(b.storage_size() for b in self.blocks)

    def is_chain(self) -> bool:
        """True for the empty matrix or a single lower-triangular block."""
        if not self.grid:
            return True
        return len(self.grid) == 1 and len(self.grid[0]) == 1 and self.grid[0][0].kind == "L"

    def is_identity(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(
            v == int(i == j) for i, row in enumerate(self._dense) for j, v in enumerate(row)
        )


def block_diag(a: ExponentMatrix, b: ExponentMatrix) -> ExponentMatrix:
    """[[a, O], [O, b]] on the block level, keeping both grids intact."""
    if not a.grid:
        return b
    if not b.grid:
        return a
    top = tuple(row + tuple(zeros(row[0].rows, w) for w in b.col_widths) for row in a.grid)
    bottom = tuple(tuple(zeros(row[0].rows, w) for w in a.col_widths) + row for row in b.grid)
    return ExponentMatrix(top + bottom)


# --------------------------------------------------------------------------
# representations


def _check_columns(columns: Sequence[Vector], dim: int, what: str) -> None:
    for col in columns:
        if len(col) != dim:
            raise DimensionMismatch(f"{what} column has dimension {len(col)}, expected {dim}")


@dataclass(frozen=True)
class VRep:
    """A plain point list. Points need not be hull vertices; duplicates are allowed."""

    points: tuple[Vector, ...]

    def __post_init__(self):
        pts = tuple(vec(p) for p in self.points)
        if not pts:
            raise EmptyInput("a V-representation needs at least one point")
        if any(len(p) != len(pts[0]) for p in pts):
            raise DimensionMismatch("points of differing dimension")
        object.__setattr__(self, "points", pts)

    @property
    def dim(self) -> int:
        return len(self.points[0])

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


@dataclass(frozen=True)
class MRep:
    """``s + sum_i (prod_k alpha_k^E[k,i]) B[:, i]`` for alpha in [0, 1]^p."""

    start: Vector
    basis: tuple[Vector, ...] = ()
    exponents: ExponentMatrix = field(default_factory=ExponentMatrix)

    def __post_init__(self):
        object.__setattr__(self, "start", vec(self.start))
        object.__setattr__(self, "basis", tuple(vec(b) for b in self.basis))
        _check_columns(self.basis, len(self.start), "basis")
        if self.exponents.cols != len(self.basis):
            raise DimensionMismatch(
                f"exponent matrix has {self.exponents.cols} columns for {len(self.basis)} basis vectors"
            )

    @property
    def dim(self) -> int:
        return len(self.start)

    @property
    def h(self) -> int:
        return len(self.basis)

    @property
    def p(self) -> int:
        return self.exponents.rows

    def is_chain_form(self) -> bool:
        return self.exponents.is_chain() and self.exponents.rows == self.h


@dataclass(frozen=True)
class CRep:
    """Chain form stored as start, basis and end point; exponents are implicitly L_h."""

    start: Vector
    basis: tuple[Vector, ...]
    end: Vector

    def __post_init__(self):
        object.__setattr__(self, "start", vec(self.start))
        object.__setattr__(self, "basis", tuple(vec(b) for b in self.basis))
        object.__setattr__(self, "end", vec(self.end))
        _check_columns(self.basis, len(self.start), "basis")
        if len(self.end) != len(self.start):
            raise DimensionMismatch("end point dimension differs from start point")
        if self.end != add(self.start, vsum(self.basis, self.dim)):
            raise InvalidArgument("end point must equal start plus the sum of the basis")

    @property
    def dim(self) -> int:
        return len(self.start)

    @property
    def h(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class ZRep:
    """``c + sum_i (prod_k alpha_k^E[k,i]) G[:, i]`` for alpha in [-1, 1]^p."""

    center: Vector
    generators: tuple[Vector, ...] = ()
    exponents: ExponentMatrix = field(default_factory=ExponentMatrix)

    def __post_init__(self):
        object.__setattr__(self, "center", vec(self.center))
        object.__setattr__(self, "generators", tuple(vec(g) for g in self.generators))
        _check_columns(self.generators, len(self.center), "generator")
        if self.exponents.cols != len(self.generators):
            raise DimensionMismatch(
                f"exponent matrix has {self.exponents.cols} columns for {len(self.generators)} generators"
            )

    @property
    def dim(self) -> int:
        return len(self.center)

    @property
    def h(self) -> int:
        return len(self.generators)

    @property
    def p(self) -> int:
        return self.exponents.rows

    def is_zonotope(self) -> bool:
        return self.exponents.is_identity()


@dataclass(frozen=True)
class SegmentList:
    """Line segments ``[start, end]`` whose Minkowski sum spans a zonotope."""

    segments: tuple[tuple[Vector, Vector], ...]

    def __post_init__(self):
        segs = tuple((vec(a), vec(b)) for a, b in self.segments)
        if segs:
            d = len(segs[0][0])
            for a, b in segs:
                if len(a) != d or len(b) != d:
                    raise DimensionMismatch("segments of differing dimension")
                if a == b:
                    raise InvalidArgument("degenerate segment with zero length")
        object.__setattr__(self, "segments", segs)

    @property
    def dim(self) -> int:
        return len(self.segments[0][0]) if self.segments else 0

    def __len__(self) -> int:
        return len(self.segments)

    def __iter__(self):
        return iter(self.segments)
