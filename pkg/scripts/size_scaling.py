"""How generator counts and stored sizes grow under repeated operations.

Starts from random chain forms and folds further random polytopes in with
the Minkowski sum or the convex hull, printing one row per step.
"""
import argparse
import random
from dataclasses import dataclass

from mrep import ops
from mrep.instances import random_chain
from mrep.representations import ZRep


@dataclass(frozen=True)
class Config:
    dim: int = 3
    points: int = 6
    steps: int = 6
    seed: int = 0


def run(cfg: Config):
    rng = random.Random(cfg.seed)
    first = random_chain(rng, cfg.dim, cfg.points)
    mink = conv_m = first
    conv_c = ops.chain_to_crep(first)
    conv_z = _as_z(first)
    vertices = cfg.points
    rows = []
    for step in range(1, cfg.steps + 1):
        nxt = random_chain(rng, cfg.dim, cfg.points)
        mink = ops.minkowski_m(mink, nxt)
        conv_m = ops.convex_hull_m(conv_m, nxt)
        conv_c = ops.convex_hull_c(conv_c, ops.chain_to_crep(nxt))
        conv_z = ops.convex_hull_z(conv_z, _as_z(nxt))
        vertices += cfg.points
        rows.append((step, vertices * cfg.dim,
                     mink.h, ops.representation_size(mink),
                     conv_m.h, ops.representation_size(conv_m),
                     conv_c.h, ops.representation_size(conv_c),
                     conv_z.h, ops.representation_size(conv_z)))
    return rows


def _as_z(rep):
    return ZRep(rep.start, rep.basis, rep.exponents)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    for name, default in vars(Config()).items():
        parser.add_argument(f"--{name}", type=int, default=default)
    cfg = Config(**vars(parser.parse_args()))
    header = ("step", "vrep", "mink h", "size", "conv_m h", "size", "conv_c h", "size", "conv_z h", "size")
    print(" ".join(f"{h:>8}" for h in header))
    for row in run(cfg):
        print(" ".join(f"{x:>8}" for x in row))


if __name__ == "__main__":
    main()
