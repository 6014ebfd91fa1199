"""Recompute the small worked examples and print them."""
from fractions import Fraction as F

from mrep import ops
from mrep.oracle import hull_vertices, sets_equal
from mrep.representations import ExponentMatrix, MRep, VRep, ZRep, identity
from mrep.zonotope import reduce_vertices


def show(label, value):
    print(f"{label:<38} {value}")


def pt(p):
    return "(" + ", ".join(str(x) for x in p) + ")"


def fmt(points):
    return "[" + ", ".join(pt(p) for p in points) + "]"


def hull_of(rep):
    if isinstance(rep, ZRep):
        return hull_vertices(ops.candidate_vertices_z(rep)).vertices
    return hull_vertices(ops.candidate_vertices_m(rep)).vertices


def main():
    triangle = VRep([(1, 2), (0, 4), (-1, 2)])
    chain = ops.chain_from_points(triangle)
    show("triangle chain start", pt(chain.start))
    show("triangle chain basis", fmt(chain.basis))
    show("eval at (1/2, 1)", pt(ops.evaluate_m(chain, (F(1, 2), 1))))

    apex = ops.chain_from_points([(3, 3)])
    hull = ops.convex_hull_m(chain, apex)
    show("conv(triangle, point) h", hull.h)
    show("conv(triangle, point) vertices", fmt(hull_of(hull)))
    c = ops.convex_hull_c(ops.chain_to_crep(chain), ops.chain_to_crep(apex))
    show("same hull as C-rep h", c.h)

    house = [(0, 0), (0, 2), (2, 2), (2, 0), (1, 3)]
    red = reduce_vertices(house)
    show("house reduced h / branch", f"{red.rep.h} / {red.branch}")
    show("house reduced equals input", sets_equal(red.rep, VRep(house)))

    para = [(-2, -1), (0, -1), (0, 1), (2, 1)]
    red = reduce_vertices(para)
    show("parallelogram reduced", f"start={pt(red.rep.start)} basis={fmt(red.rep.basis)}")

    two = ZRep((0, 0), [(1, 0), (-1, -1)], ExponentMatrix.single(identity(2)))
    show("two-generator Z-rep hull", fmt(hull_of(two)))
    for link in (F(1, 2), F(1)):
        half = F(1, 2)
        five = ZRep((0, 0), [(-half, -half), (-half, -half), (link, 0), (-half, -half), (half, half)],
                    ExponentMatrix.from_dense([[1, 0, 0, 1, 0], [0, 1, 0, 0, 1], [0, 0, 1, 1, 1]]))
        show(f"five-generator hull, link={link}", f"{fmt(hull_of(five))} equal={sets_equal(two, five)}")


if __name__ == "__main__":
    main()
