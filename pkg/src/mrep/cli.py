"""Command line interface.

Exit codes: 0 success / sets equal, 1 sets differ, 2 parse or input error,
3 dimension or kind error, 4 enumeration cap exceeded.
"""
from __future__ import annotations

import argparse
import sys
from collections import Counter

from . import ops, oracle, serialize
from .errors import (
    AlphaOutOfRange,
    CapExceeded,
    DimensionMismatch,
    EmptyInput,
    InvalidArgument,
    KindMismatch,
    NotChainForm,
    ParseError,
)
from .plot import polygon_svg
from .representations import CRep, MRep, VRep, ZRep, matvec
from .zonotope import DEFAULT_MAX_VERTICES, reduce_vertices

EXIT_OK, EXIT_DIFFERENT, EXIT_PARSE, EXIT_DIM, EXIT_CAP = 0, 1, 2, 3, 4

KIND_NAMES = {VRep: "vrep", MRep: "mrep", CRep: "crep", ZRep: "zrep"}


def _kind(rep) -> str:
    return KIND_NAMES[type(rep)]


def _write(rep, out) -> None:
    text = serialize.dumps(rep)
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _report(rep) -> None:
    h = getattr(rep, "h", 0)
    print(f"h={h} size={ops.representation_size(rep)}", file=sys.stderr)


def _as_mrep(rep) -> MRep:
    if isinstance(rep, MRep):
        return rep
    if isinstance(rep, CRep):
        return ops.crep_to_mrep(rep)
    if isinstance(rep, VRep):
        return ops.chain_from_points(rep)
    raise KindMismatch(f"{_kind(rep)} cannot be used as an M-representation")


def _as_crep(rep) -> CRep:
    if isinstance(rep, CRep):
        return rep
    if isinstance(rep, MRep) and rep.is_chain_form():
        return ops.chain_to_crep(rep)
    if isinstance(rep, VRep):
        return ops.chain_to_crep(ops.chain_from_points(rep))
    raise KindMismatch(f"{_kind(rep)} cannot be used as a C-representation")


def cmd_chain(args) -> int:
    rep = serialize.load(args.input)
    if not isinstance(rep, VRep):
        raise KindMismatch(f"chain expects a vrep document, got {_kind(rep)}")
    out = ops.chain_from_points(rep)
    _write(out, args.output)
    _report(out)
    return EXIT_OK


def cmd_map(args) -> int:
    m = serialize.load_matrix(args.matrix)
    rep = serialize.load(args.input)
    if isinstance(rep, MRep):
        out = ops.linear_map_m(m, rep)
    elif isinstance(rep, CRep):
        out = ops.linear_map_c(m, rep)
    elif isinstance(rep, ZRep):
        out = ops.linear_map_z(m, rep)
    else:
        if len(m[0]) != rep.dim:
            raise DimensionMismatch("matrix columns do not match the point dimension")
        out = VRep(tuple(matvec(m, p) for p in rep.points))
    _write(out, args.output)
    return EXIT_OK


def cmd_minkowski(args) -> int:
    a, b = serialize.load(args.a), serialize.load(args.b)
    if isinstance(a, ZRep) or isinstance(b, ZRep):
        if not (isinstance(a, ZRep) and isinstance(b, ZRep)):
            raise KindMismatch("Minkowski sum of a zrep needs another zrep")
        out = ops.minkowski_z(a, b)
    else:
        out = ops.minkowski_m(_as_mrep(a), _as_mrep(b))
    _write(out, args.output)
    _report(out)
    return EXIT_OK


def cmd_convhull(args) -> int:
    a, b = serialize.load(args.a), serialize.load(args.b)
    rep = args.rep
    if rep is None:
        rep = {"zrep": "z", "crep": "c"}.get(_kind(a), "m")
    if rep == "z":
        if not (isinstance(a, ZRep) and isinstance(b, ZRep)):
            raise KindMismatch("--rep z needs two zrep documents")
        out = ops.convex_hull_z(a, b)
    elif rep == "c":
        out = ops.convex_hull_c(_as_crep(a), _as_crep(b))
    else:
        out = ops.convex_hull_m(_as_mrep(a), _as_mrep(b))
    _write(out, args.output)
    _report(out)
    return EXIT_OK


def cmd_vertices(args) -> int:
    rep = serialize.load(args.input)
    pts = oracle.candidate_points(rep, args.cap_p)
    if args.filter_hull:
        pts = oracle.hull_vertices(pts, max_points=args.cap_points).vertices
    _write(VRep(tuple(sorted(set(pts)))), args.output)
    return EXIT_OK


def cmd_reduce(args) -> int:
    rep = serialize.load(args.input)
    if not isinstance(rep, VRep):
        raise KindMismatch(f"reduce expects a vrep document, got {_kind(rep)}")
    result = reduce_vertices(rep, args.max_vertices)
    _write(result.rep, args.output)
    print(f"h={result.rep.h} branch={result.branch}", file=sys.stderr)
    return EXIT_OK


def cmd_equal(args) -> int:
    a, b = serialize.load(args.a), serialize.load(args.b)
    same = oracle.sets_equal(a, b, cap_p=args.cap_p, max_points=args.cap_points)
    print("equal" if same else "not equal")
    return EXIT_OK if same else EXIT_DIFFERENT


def cmd_size(args) -> int:
    rep = serialize.load(args.input)
    print(f"size: {ops.representation_size(rep)}")
    print(f"dim: {rep.dim}")
    if isinstance(rep, VRep):
        print(f"points: {len(rep)}")
        return EXIT_OK
    print(f"h: {rep.h}")
    if isinstance(rep, CRep):
        print(f"p: {rep.h}")
        print("blocks: L (implicit)")
        return EXIT_OK
    print(f"p: {rep.p}")
    inventory = Counter(b.kind for b in rep.exponents.blocks)
    listed = ", ".join(f"{k}x{inventory[k]}" for k in sorted(inventory))
    print(f"blocks: {listed or 'none'}")
    print(f"exponent storage: {rep.exponents.storage_size()}")
    return EXIT_OK


def cmd_plot(args) -> int:
    rep = serialize.load(args.input)
    if rep.dim != 2:
        raise DimensionMismatch(f"plot needs a 2-D polytope, got dimension {rep.dim}")
    pts = oracle.candidate_points(rep, args.cap_p)
    verts = oracle.hull_vertices(pts, max_points=args.cap_points).vertices
    svg = polygon_svg(verts)
    if args.output in (None, "-"):
        sys.stdout.write(svg)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(svg)
    return EXIT_OK


def cmd_eval(args) -> int:
    rep = serialize.load(args.input)
    alpha = tuple(serialize.parse_rational(s) for s in args.alpha.split(",")) if args.alpha else ()
    if isinstance(rep, ZRep):
        point = ops.evaluate_z(rep, alpha)
    else:
        point = ops.evaluate_m(_as_mrep(rep), alpha)
    print("(" + ", ".join(str(x) for x in point) + ")")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mrep", description="M- and C-representations of polytopes")
    parser.add_argument("--cap-p", type=int, default=ops.DEFAULT_CAP_P,
                        help="largest factor count p enumerated over {0,1}^p (default %(default)s)")
    parser.add_argument("--cap-points", type=int, default=oracle.MAX_POINTS,
                        help="largest point set the hull oracle accepts (default %(default)s)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("chain", cmd_chain, "chain-form M-representation of a point list")
    p.add_argument("input")
    p.add_argument("-o", "--output")

    p = add("map", cmd_map, "apply a linear map")
    p.add_argument("--matrix", required=True)
    p.add_argument("input")
    p.add_argument("-o", "--output")

    p = add("minkowski", cmd_minkowski, "Minkowski sum of two representations")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("-o", "--output")

    p = add("convhull", cmd_convhull, "convex hull of two representations")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--rep", choices=("m", "c", "z"))
    p.add_argument("-o", "--output")

    p = add("vertices", cmd_vertices, "candidate vertices of a representation")
    p.add_argument("input")
    p.add_argument("--filter-hull", action="store_true")
    p.add_argument("-o", "--output")

    p = add("reduce", cmd_reduce, "M-representation with fewer basis vectors via zonotopes")
    p.add_argument("input")
    p.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)
    p.add_argument("-o", "--output")

    p = add("equal", cmd_equal, "exact set equality of two representations")
    p.add_argument("a")
    p.add_argument("b")

    p = add("size", cmd_size, "representation size report")
    p.add_argument("input")

    p = add("plot", cmd_plot, "SVG plot of a 2-D polytope")
    p.add_argument("input")
    p.add_argument("-o", "--output")

    p = add("eval", cmd_eval, "evaluate a representation at a factor vector")
    p.add_argument("input")
    p.add_argument("--alpha", default="", help="comma-separated rationals, e.g. 1/2,1")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, EmptyInput, AlphaOutOfRange, InvalidArgument, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DimensionMismatch, KindMismatch, NotChainForm) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIM
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
