"""JSON (de)serialization.  Rationals travel as "p/q" strings; plain integers are accepted on input."""

from __future__ import annotations

import json
from fractions import Fraction

from rankfun.additive import AdditiveFn
from rankfun.core import AngleTemplate, CategorySkeleton
from rankfun.nakayama.algebra import NakayamaAlgebra, NakayamaModule
from rankfun.nakayama.morphisms import ProjMorphism
from rankfun.rank_objects import RankOnObjects


class InputError(ValueError):
    """Malformed or inconsistent input; the message names the location."""


def frac_str(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_frac(x, where: str = "") -> Fraction:
    if isinstance(x, bool):
        raise InputError(f"{where}: expected a rational, got {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            pass
    raise InputError(f"{where}: expected a rational as an integer or 'p/q' string, got {x!r}")


def to_jsonable(obj):
    """Recursively turn Fractions into strings and tuples into lists."""
    if isinstance(obj, Fraction):
        return frac_str(obj)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    return obj


def dumps(obj) -> str:
    return json.dumps(to_jsonable(obj), indent=2, sort_keys=False)


def loads(text: str, source: str = "<input>"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"{source}: malformed JSON at line {e.lineno}, column {e.colno}: {e.msg}") from None


def _need(data, key, where):
    if not isinstance(data, dict):
        raise InputError(f"{where}: expected a JSON object, got {type(data).__name__}")
    if key not in data:
        raise InputError(f"{where}: missing key {key!r}")
    return data[key]


# skeletons and rank functions


def skeleton_to_json(s: CategorySkeleton) -> dict:
    return {
        "name": s.name,
        "d": s.d,
        "indecs": list(s.indecs),
        "suspension": dict(s.suspension),
        "angles": [[list(x) for x in a.objects] for a in s.angles],
    }


def skeleton_from_json(data, where: str = "skeleton") -> CategorySkeleton:
    if isinstance(data, dict) and "skeleton" in data:
        data = data["skeleton"]
        where = f"{where}.skeleton"
    d = _need(data, "d", where)
    if not isinstance(d, int) or isinstance(d, bool):
        raise InputError(f"{where}.d: expected an integer, got {d!r}")
    indecs = _need(data, "indecs", where)
    susp = _need(data, "suspension", where)
    if not isinstance(indecs, list) or not all(isinstance(x, str) for x in indecs):
        raise InputError(f"{where}.indecs: expected a list of strings")
    if not isinstance(susp, dict):
        raise InputError(f"{where}.suspension: expected an object")
    angles = []
    for n, a in enumerate(data.get("angles", [])):
        if not isinstance(a, list) or not all(isinstance(x, list) for x in a):
            raise InputError(f"{where}.angles[{n}]: expected a list of objects (lists of labels)")
        angles.append(AngleTemplate(d, tuple(tuple(x) for x in a)))
    return CategorySkeleton(d, tuple(indecs), susp, tuple(angles), data.get("name", ""))


def rank_to_json(r: RankOnObjects) -> dict:
    return {"values": {k: frac_str(v) for k, v in r.values.items()}}


def rank_from_json(data, where: str = "rank") -> RankOnObjects:
    if isinstance(data, dict) and "values" in data:
        data = data["values"]
        where = f"{where}.values"
    if not isinstance(data, dict):
        raise InputError(f"{where}: expected an object mapping labels to values")
    vals = {k: parse_frac(v, f"{where}[{k!r}]") for k, v in data.items()}
    try:
        return RankOnObjects(vals)
    except ValueError as e:
        raise InputError(f"{where}: {e}") from None


def reference_rank_from_entry(data, where: str = "skeleton") -> RankOnObjects:
    """First reference rank of a gallery entry document."""
    refs = data.get("reference_ranks") if isinstance(data, dict) else None
    if not refs:
        raise InputError(f"{where}: no rank given and the document has no reference_ranks")
    name = next(iter(refs))
    return rank_from_json(refs[name], f"{where}.reference_ranks[{name!r}]")


def entry_to_json(entry) -> dict:
    out = {
        "name": entry.name,
        "notes": entry.notes,
        "skeleton": skeleton_to_json(entry.skeleton),
        "reference_ranks": {k: rank_to_json(r)["values"] for k, r in entry.reference_ranks.items()},
    }
    if entry.twist is not None:
        out["algebra"] = entry.twist.algebra.to_json()
        out["d"] = entry.twist.d
    return out


# Nakayama data


def algebra_from_json(data, where: str = "algebra") -> NakayamaAlgebra:
    if isinstance(data, dict) and "algebra" in data:
        data = data["algebra"]
    try:
        n = _need(data, "n", where)
        ell = _need(data, "ell", where)
        return NakayamaAlgebra(int(n), int(ell), data.get("shape", "cyclic"))
    except (TypeError, ValueError) as e:
        raise InputError(f"{where}: {e}") from None


def module_from_json(data, alg: NakayamaAlgebra, where: str = "module") -> NakayamaModule:
    if not isinstance(data, list):
        raise InputError(f"{where}: expected a list of [top, length] pairs")
    out = []
    for n, pair in enumerate(data):
        if not (isinstance(pair, list) and len(pair) == 2 and all(isinstance(x, int) for x in pair)):
            raise InputError(f"{where}[{n}]: expected [top, length], got {pair!r}")
        if not alg.is_interval(*pair):
            raise InputError(f"{where}[{n}]: M({pair[0]},{pair[1]}) is not an interval module over {alg}")
        out.append(tuple(pair))
    return NakayamaModule(tuple(out))


def module_to_json(m: NakayamaModule) -> list:
    return [list(s) for s in m]


def additive_from_json(data, alg: NakayamaAlgebra | None = None, where: str = "additive") -> AdditiveFn:
    raw = _need(data, "simple_values", where)
    if not isinstance(raw, dict):
        raise InputError(f"{where}.simple_values: expected an object")
    try:
        vals = {int(k): parse_frac(v, f"{where}.simple_values[{k!r}]") for k, v in raw.items()}
        a = AdditiveFn(vals)
        if alg is not None:
            a.check_domain(alg)
    except ValueError as e:
        raise InputError(f"{where}: {e}") from None
    return a


def additive_to_json(a: AdditiveFn) -> dict:
    return {"simple_values": {str(k): frac_str(v) for k, v in sorted(a.simple_values.items())}}


def _proj_vertex(label, where) -> int:
    if isinstance(label, int):
        return label
    if isinstance(label, str) and label.startswith("P") and label[1:].isdigit():
        return int(label[1:])
    raise InputError(f"{where}: expected a projective label like 'P2', got {label!r}")


def morphism_from_json(data, alg: NakayamaAlgebra, where: str = "morphism") -> ProjMorphism:
    rows = [_proj_vertex(x, f"{where}.rows[{n}]") for n, x in enumerate(_need(data, "rows", where))]
    cols = [_proj_vertex(x, f"{where}.cols[{n}]") for n, x in enumerate(_need(data, "cols", where))]
    raw = data.get("entries", [])
    entries = {}
    if raw and len(raw) != len(rows):
        raise InputError(f"{where}.entries: {len(raw)} rows, expected {len(rows)}")
    for r, row in enumerate(raw):
        if len(row) != len(cols):
            raise InputError(f"{where}.entries[{r}]: {len(row)} columns, expected {len(cols)}")
        for c, cell in enumerate(row):
            combo = {}
            for term in cell:
                k = _need(term, "path_len", f"{where}.entries[{r}][{c}]")
                coeff = parse_frac(term.get("coeff", 1), f"{where}.entries[{r}][{c}].coeff")
                combo[int(k)] = combo.get(int(k), Fraction(0)) + coeff
            if combo:
                entries[(r, c)] = combo
    try:
        return ProjMorphism(alg, tuple(cols), tuple(rows), entries)
    except ValueError as e:
        raise InputError(f"{where}: {e}") from None


def morphism_to_json(f: ProjMorphism) -> dict:
    return to_jsonable(f.to_json())
