"""Extreme rays and Hilbert basis of the rank cone of O_A for several d."""

import argparse

from rankfun.cone import build_cone, extreme_rays, hilbert_basis
from rankfun.gallery import build_OA_cluster


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--d", type=int, nargs="+", default=[1, 2, 3, 5])
    args = ap.parse_args(argv)
    for d in args.d:
        s = build_OA_cluster(d).skeleton
        cone = build_cone(s)
        rays = extreme_rays(cone)
        print(f"d={d}  indecomposables={len(s.indecs)}  rays={[list(map(str, r)) for r in rays]}")
        for lattice in ("objects", "morphisms") if d % 2 else ("objects",):
            hb = hilbert_basis(build_cone(s, lattice=lattice), certify=False)
            print(f"      hilbert basis ({lattice}): {[list(map(str, h)) for h in hb.elements]}")


if __name__ == "__main__":
    main()
