"""rankfun command line.  Every verb prints one JSON report.

Exit codes: 0 pass, 1 a check ran and failed, 2 the input could not be checked
(malformed data, unknown labels, even d where the correspondence needs odd d).
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from rankfun import additive, cone, gallery, io
from rankfun.core import make_object, rotations, validate_skeleton
from rankfun.nakayama.algebra import UnsupportedPeriodicity, twist_data
from rankfun.nakayama.angles import generate_angle, padded_variants, schanuel_check
from rankfun.nakayama.morphisms import image_of
from rankfun.rank_morphisms import (
    NegativeRankError,
    ParityError,
    RankOnMorphismsView,
    phi_eval,
    psi_eval,
    rm_axiom_suite,
    roundtrip_check,
)
from rankfun.rank_objects import UnknownIndecError, check_rank_on_objects


class CheckFailed(Exception):
    def __init__(self, report):
        self.report = report


def read_json(arg: str, what: str):
    if arg == "-":
        return io.loads(sys.stdin.read(), f"{what} (stdin)")
    stripped = arg.lstrip()
    if stripped.startswith("{") or stripped.startswith("["):
        return io.loads(arg, f"{what} (inline)")
    path = Path(arg)
    if not path.exists():
        raise io.InputError(f"{what}: no such file {arg!r}")
    return io.loads(path.read_text(), f"{what} ({arg})")


def load_skeleton_and_rank(args, need_rank: bool = True):
    doc = read_json(args.skeleton, "skeleton")
    s = io.skeleton_from_json(doc)
    report = validate_skeleton(s)
    if not report.ok:
        raise io.InputError("skeleton: " + "; ".join(report.errors))
    if not need_rank:
        return s, None
    rank_arg = getattr(args, "rank", None)
    if rank_arg is None:
        r = io.reference_rank_from_entry(doc)
    else:
        r = io.rank_from_json(read_json(rank_arg, "rank"))
    missing = sorted(set(s.indecs) - set(r.values))
    extra = sorted(set(r.values) - set(s.indecs))
    if missing or extra:
        raise io.InputError(f"rank: labels do not match the skeleton (missing {missing}, unknown {extra})")
    return s, r


def load_twist(args, alg):
    d = args.d
    if d is None:
        raise io.InputError("--d is required for this verb")
    try:
        return twist_data(alg, d)
    except (UnsupportedPeriodicity, ValueError) as e:
        raise io.InputError(str(e)) from None


def load_algebra(args):
    doc = read_json(args.algebra, "algebra")
    alg = io.algebra_from_json(doc)
    if args.d is None and isinstance(doc, dict) and isinstance(doc.get("d"), int):
        args.d = doc["d"]
    return alg


def _angle_json(a):
    return [list(x) for x in a.objects]


# verbs


def cmd_validate(args):
    doc = read_json(args.skeleton, "skeleton")
    s = io.skeleton_from_json(doc)
    report = validate_skeleton(s)
    out = {"ok": report.ok, "errors": report.errors, "indecs": len(s.indecs), "angles": len(s.angles)}
    if not report.ok:
        raise CheckFailed(out)
    return out


def cmd_check_ro(args):
    s, r = load_skeleton_and_rank(args)
    rep = check_rank_on_objects(r, s, args.depth)
    out = rep.summary()
    out["RO2_violations"] = [{"angle": _angle_json(v.angle), "defect": v.defect} for v in rep.ro2_violations]
    out["RO3_violations"] = rep.ro3_violations
    if not rep.passed:
        raise CheckFailed(out)
    return out


def cmd_check_rm(args):
    s, r = load_skeleton_and_rank(args)
    rt = roundtrip_check(r, s, args.depth)
    if not rt.ro_report.passed:
        out = {"passed": False, "RO": rt.ro_report.summary(), "violated_indecs": rt.violated_indecs()}
        raise CheckFailed(out)
    suite = rm_axiom_suite(r, s, args.depth, args.max_pairs)
    out = suite.summary()
    out["phi_psi_identity"] = not rt.phi_psi_mismatches
    out["psi_phi_identity"] = not rt.psi_phi_mismatches
    out["passed"] = suite.passed and rt.passed
    if not out["passed"]:
        raise CheckFailed(out)
    return out


def cmd_psi(args):
    s, r = load_skeleton_and_rank(args)
    if s.d % 2 == 0:
        raise ParityError(s.d)
    if not 0 <= args.angle < len(s.angles):
        raise io.InputError(f"--angle {args.angle}: skeleton has {len(s.angles)} generating angles")
    a = rotations(s.angles[args.angle], s, args.rotate + 1)[-1]
    value = psi_eval(r, a)
    return {"angle": _angle_json(a), "value": value}


def cmd_phi(args):
    s, r = load_skeleton_and_rank(args)
    labels = [x for x in args.object.split(",") if x]
    unknown = [x for x in labels if x not in s.indecs]
    if unknown:
        raise io.InputError(f"--object: unknown labels {unknown}")
    x = make_object(labels)
    # Phi needs no parity: the identity value comes from the trivial angle alone
    value = phi_eval(RankOnMorphismsView(r, s.d), x)
    return {"object": list(x), "value": value}


def cmd_varphi(args):
    alg = load_algebra(args)
    a = io.additive_from_json(read_json(args.additive, "additive"), alg)
    f = io.morphism_from_json(read_json(args.morphism, "morphism"), alg)
    img = image_of(f)
    return {"image": io.module_to_json(img), "value": additive.varphi_eval(a, f)}


def _rank_proc(doc, alg, tw):
    kind = doc.get("kind") if isinstance(doc, dict) else None
    if kind == "additive":
        return additive.varphi(io.additive_from_json(doc, alg, "rank-proc"))
    if kind == "objects":
        raw = io.rank_from_json(doc, "rank-proc")
        vals = {}
        for v in alg.vertices:
            label = f"P{v}"
            if label not in raw.values:
                raise io.InputError(f"rank-proc.values: missing {label}")
            vals[v] = raw[label]
        return additive.ObjectPsiRank(vals, tw)
    raise io.InputError("rank-proc: 'kind' must be 'additive' or 'objects'")


def cmd_psi_mod(args):
    alg = load_algebra(args)
    tw = load_twist(args, alg)
    if tw.d % 2 == 0:
        raise ParityError(tw.d)
    rm = _rank_proc(read_json(args.rank_proc, "rank-proc"), alg, tw)
    m = io.module_from_json(read_json(args.module, "module"), alg)
    f = additive.presenting_morphism_for(m, alg)
    return {"module": io.module_to_json(m), "presenting_morphism": io.morphism_to_json(f), "value": additive.psi_mod_eval(rm, m, tw)}


def cmd_decompose(args):
    alg = load_algebra(args)
    tw = load_twist(args, alg)
    a = io.additive_from_json(read_json(args.additive, "additive"), alg)
    try:
        terms = additive.decompose_invariant(a, tw)
    except ValueError as e:
        raise io.InputError(str(e)) from None
    return {"decomposition": [{"orbit": list(o.vertices), "multiplicity": c} for o, c in terms]}


def _coords(x) -> list:
    return [Fraction(v) for v in x]


def _certificate(cert: dict) -> dict:
    out = dict(cert)
    out["element"] = _coords(cert["element"])
    if "split" in out:
        out["split"] = [_coords(part) for part in cert["split"]]
    return out


def cmd_cone(args):
    need_rank = args.action == "decompose"
    if need_rank:
        s, r = load_skeleton_and_rank(args)
    else:
        s, _ = load_skeleton_and_rank(args, need_rank=False)
    c = cone.build_cone(s, args.depth, args.lattice)
    out = {"labels": list(c.labels), "lattice": args.lattice}
    if args.action == "rays":
        out["rays"] = [_coords(x) for x in cone.extreme_rays(c)]
    elif args.action == "hilbert":
        hb = cone.hilbert_basis(c)
        out["hilbert_basis"] = [_coords(x) for x in hb.elements]
        out["certificates"] = [_certificate(cert) for cert in hb.certificates]
    else:
        decs = cone.decompose_integral(c, r)
        out["decompositions"] = [[_coords(x) for x in dec] for dec in decs]
        out["unique"] = len(decs) == 1
    return out


def cmd_schanuel(args):
    alg = load_algebra(args)
    tw = load_twist(args, alg)
    ma = io.module_from_json(read_json(args.module_a, "moduleA"), alg, "moduleA")
    mb = io.module_from_json(read_json(args.module_b, "moduleB"), alg, "moduleB")
    try:
        x = generate_angle(ma, tw)
        y = generate_angle(mb, tw)
    except ValueError as e:
        raise io.InputError(str(e)) from None
    pairs = [(x, y)] + ([(x, v) for v in padded_variants(y)] if args.padded else [])
    results = [schanuel_check(p, q) for p, q in pairs]
    first = results[0]
    out = {
        "homotopy_equivalent": first.homotopy_equivalent,
        "balanced": first.balanced,
        "lhs": [f"P{v}" for v in first.lhs],
        "rhs": [f"P{v}" for v in first.rhs],
        "pairs_checked": len(results),
    }
    if not first.homotopy_equivalent:
        out["result"] = "not homotopy equivalent"
    if any(res.homotopy_equivalent and not res.balanced for res in results):
        out["passed"] = False
        raise CheckFailed(out)
    out["passed"] = True
    return out


def cmd_examples(args):
    if args.action == "list":
        return {"examples": gallery.DEFAULT_NAMES}
    if not args.name:
        raise io.InputError("examples emit needs a name")
    try:
        entry = gallery.get_entry(args.name)
    except KeyError as e:
        raise io.InputError(str(e.args[0])) from None
    except (UnsupportedPeriodicity, ValueError) as e:
        raise io.InputError(str(e)) from None
    return io.entry_to_json(entry)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rankfun", description="Rank functions on finite (d+2)-angulated skeletons.")
    sub = p.add_subparsers(dest="verb", required=True)

    def with_depth(q):
        q.add_argument("--depth", type=int, default=None, help="closure depth in suspension layers (default: suspension order)")

    q = sub.add_parser("validate", help="check skeleton invariants")
    q.add_argument("skeleton")
    q.set_defaults(func=cmd_validate)

    for verb, func, helptext in (
        ("check-ro", cmd_check_ro, "check RO0-RO3"),
        ("check-rm", cmd_check_rm, "check RM0-RM3 for Psi(rank) (odd d)"),
    ):
        q = sub.add_parser(verb, help=helptext)
        q.add_argument("skeleton")
        q.add_argument("rank", nargs="?")
        with_depth(q)
        if verb == "check-rm":
            q.add_argument("--max-pairs", type=int, default=None)
        q.set_defaults(func=func)

    q = sub.add_parser("psi", help="Psi(rank) on the first arrow of a generating angle (odd d)")
    q.add_argument("skeleton")
    q.add_argument("rank", nargs="?")
    q.add_argument("--angle", type=int, required=True)
    q.add_argument("--rotate", type=int, default=0, help="rotate the angle k times first")
    q.set_defaults(func=cmd_psi)

    q = sub.add_parser("phi", help="Phi(Psi(rank)) on an identity, i.e. the object value (any d)")
    q.add_argument("skeleton")
    q.add_argument("rank", nargs="?")
    q.add_argument("--object", required=True, help="comma-separated indecomposable labels")
    q.set_defaults(func=cmd_phi)

    q = sub.add_parser("varphi", help="alpha(Im f) for a morphism between projectives")
    q.add_argument("algebra")
    q.add_argument("additive")
    q.add_argument("morphism")
    q.add_argument("--d", type=int, default=None)
    q.set_defaults(func=cmd_varphi)

    q = sub.add_parser("psi-mod", help="psi(rank)(M) via a presenting morphism (odd d)")
    q.add_argument("algebra")
    q.add_argument("rank_proc", metavar="rank-proc")
    q.add_argument("module")
    q.add_argument("--d", type=int, default=None)
    q.set_defaults(func=cmd_psi_mod)

    q = sub.add_parser("decompose", help="orbit decomposition of an invariant additive function")
    q.add_argument("algebra")
    q.add_argument("additive")
    q.add_argument("--d", type=int, default=None)
    q.set_defaults(func=cmd_decompose)

    q = sub.add_parser("cone", help="extreme rays, Hilbert basis, or decompositions")
    q.add_argument("action", choices=["rays", "hilbert", "decompose"])
    q.add_argument("skeleton")
    q.add_argument("rank", nargs="?")
    q.add_argument("--lattice", choices=["objects", "morphisms"], default="objects")
    with_depth(q)
    q.set_defaults(func=cmd_cone)

    q = sub.add_parser("schanuel", help="even/odd comparison of the angles generated by two modules")
    q.add_argument("algebra")
    q.add_argument("module_a", metavar="moduleA")
    q.add_argument("module_b", metavar="moduleB")
    q.add_argument("--d", type=int, default=None)
    q.add_argument("--padded", action="store_true", help="also compare against every padded variant of B's angle")
    q.set_defaults(func=cmd_schanuel)

    q = sub.add_parser("examples", help="list or emit gallery entries")
    q.add_argument("action", choices=["list", "emit"])
    q.add_argument("name", nargs="?")
    q.set_defaults(func=cmd_examples)
    return p


def run(argv=None) -> tuple[int, str]:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return (0 if e.code == 0 else 2), ""
    try:
        out = args.func(args)
        return 0, io.dumps(out)
    except CheckFailed as e:
        return 1, io.dumps(e.report)
    except ParityError as e:
        return 2, io.dumps({"error": "parity", "message": str(e)})
    except (io.InputError, UnknownIndecError, NegativeRankError, cone.ConeTooLarge) as e:
        return 2, io.dumps({"error": "input", "message": str(e)})
    except ValueError as e:
        return 2, io.dumps({"error": "input", "message": str(e)})


def main(argv=None) -> int:
    code, text = run(argv)
    if text:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
