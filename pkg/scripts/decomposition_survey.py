"""Survey: decompose every integral Sigma-invariant additive function up to a bound.

For kC_n/rad^2 and each odd d, list the Sigma orbits and count how many
invariant functions with values <= bound decompose uniquely.
"""

import argparse
import itertools

from rankfun.additive import AdditiveFn, decompose_invariant, irreducible_decompositions
from rankfun.nakayama import NakayamaAlgebra, twist_data


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--d", type=int, nargs="+", default=[1, 3])
    ap.add_argument("--bound", type=int, default=5)
    args = ap.parse_args(argv)
    for n in range(1, args.max_n + 1):
        for d in args.d:
            tw = twist_data(NakayamaAlgebra.cyclic(n, 2), d)
            orbits = tw.orbits()
            total = unique = 0
            for vals in itertools.product(range(args.bound + 1), repeat=len(orbits)):
                if not any(vals):
                    continue
                a = AdditiveFn({v: c for o, c in zip(orbits, vals) for v in o})
                terms = decompose_invariant(a, tw)
                decs = irreducible_decompositions(a, tw)
                total += 1
                unique += len(decs) == 1 and sum(c for _, c in terms) == len(decs[0])
            print(f"n={n} d={d} orbits={orbits} functions={total} unique={unique}")


if __name__ == "__main__":
    main()
