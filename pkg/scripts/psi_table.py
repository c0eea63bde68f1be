"""Print Psi(rho) on the arrows of one gallery angle and its rotations.

    python3 scripts/psi_table.py And2-d3 --rank rho_A
"""

import argparse

from rankfun.gallery import get_entry
from rankfun.rank_morphisms import RankOnMorphismsView, psi_table


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("entry", nargs="?", default="And2-d3", help="gallery entry name, e.g. And2-d5")
    ap.add_argument("--rank", default=None, help="reference rank function (default: first one)")
    ap.add_argument("--angle", type=int, default=0)
    args = ap.parse_args(argv)

    e = get_entry(args.entry)
    s = e.skeleton
    name = args.rank or next(iter(e.reference_ranks))
    r = e.reference_ranks[name]
    a = s.angles[args.angle]
    print(f"{e.name}  rank={name}  d={s.d}")
    print("arrow  source -> target  value")
    objs = list(a.objects) + [s.suspend(a.objects[0])]
    for i, v in enumerate(psi_table(r, s, a)):
        print(f"x_{i:<4} {','.join(objs[i]):>10} -> {','.join(objs[i + 1]):<10} {v}")
    view = RankOnMorphismsView(r, s.d)
    print("identities:", {x[0]: str(view.identity(x)) for x in a.objects})


if __name__ == "__main__":
    main()
