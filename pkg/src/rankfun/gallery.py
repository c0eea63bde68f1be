"""Built-in skeletons with reference rank functions.

And2      bounded derived category of A^d_2, cut to a window of Sigma^d-shifts
d3-custom the d = 3 window with a hand-made rank function
OA        the (d+2)-angulated cluster category of A^d_2 (2d+2 indecomposables)
nakayama  proj kC_n/rad^ell with angles from projective resolutions
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from rankfun.core import AngleTemplate, CategorySkeleton, validate_skeleton
from rankfun.nakayama.algebra import NakayamaAlgebra, NakayamaModule, TwistData, twist_data
from rankfun.nakayama.angles import generate_angle, proj_label
from rankfun.rank_objects import RankOnObjects


@dataclass
class GalleryEntry:
    name: str
    skeleton: CategorySkeleton
    reference_ranks: dict = field(default_factory=dict)  # name -> RankOnObjects
    notes: str = ""
    twist: TwistData | None = None  # engine context for the Nakayama entries


def and2_base_labels(d: int) -> list[str]:
    """1, 21, 32, ..., (d+1)d, d+1: the modules along the AR line of A^d_2."""
    return ["1"] + [f"{i + 1}{i}" for i in range(1, d + 1)] + [str(d + 1)]


def and2_dims(d: int) -> dict[str, int]:
    labels = and2_base_labels(d)
    return {x: (1 if x in (labels[0], labels[-1]) else 2) for x in labels}


def shifted(label: str, d: int, j: int) -> str:
    return label if j == 0 else f"S^{d * j}({label})"


def window_slots(window: int) -> list[int]:
    return list(range(-((window - 1) // 2), window // 2 + 1))


def build_And2_cluster(d: int, window: int = 3) -> GalleryEntry:
    """Sigma^{dj}-shifts of the A^d_2 modules for j in a window; Sigma_d moves one slot (cyclically).

    The generating angle is 1 -> 21 -> ... -> (d+1)d -> d+1 -> Sigma^d 1; its
    rotations run along the line, wrapping from the last slot to the first.
    """
    if d < 1:
        raise ValueError("d must be a positive integer")
    if window < 2:
        raise ValueError(f"window {window} too small: rotations of the base angle leave a single slot")
    base = and2_base_labels(d)
    slots = window_slots(window)
    indecs = [shifted(x, d, j) for j in slots for x in base]
    suspension = {}
    for n, j in enumerate(slots):
        nxt = slots[(n + 1) % len(slots)]
        for x in base:
            suspension[shifted(x, d, j)] = shifted(x, d, nxt)
    gen = AngleTemplate(d, tuple((x,) for x in base))
    skel = CategorySkeleton(d, tuple(indecs), suspension, (gen,), f"And2-d{d}-w{window}")
    dims = and2_dims(d)
    rho_a = RankOnObjects({shifted(x, d, j): dims[x] for j in slots for x in base})
    return GalleryEntry(
        skel.name,
        skel,
        {"rho_A": rho_a},
        "module dimension on each shifted copy; the suspension wraps at the window edge",
    )


D3_CUSTOM_VALUES = {"1": 2, "21": 0, "32": 1, "43": 3, "4": 4}


def build_d3_custom() -> GalleryEntry:
    entry = build_And2_cluster(3, 3)
    skel = CategorySkeleton(3, entry.skeleton.indecs, entry.skeleton.suspension, entry.skeleton.angles, "d3-custom")
    values = {shifted(x, 3, j): v for j in window_slots(3) for x, v in D3_CUSTOM_VALUES.items()}
    return GalleryEntry("d3-custom", skel, {"custom": RankOnObjects(values)}, "1->2, 21->0, 32->1, 43->3, 4->4")


def oa_labels(d: int) -> list[str]:
    """Cyclic AR order: 1, 21, ..., (d+1)d, d+1, S^d(1), S^d(21), ..., S^d(d(d-1))."""
    base = and2_base_labels(d)
    return base + [f"S^{d}({x})" for x in base[:d]]


def build_OA_cluster(d: int) -> GalleryEntry:
    """2d+2 indecomposables on a cycle; Sigma_d advances d+2 steps; angles are all windows."""
    if d < 1:
        raise ValueError("d must be a positive integer")
    labels = oa_labels(d)
    n = len(labels)
    suspension = {labels[k]: labels[(k + d + 2) % n] for k in range(n)}
    angles = tuple(AngleTemplate(d, tuple((labels[(k + i) % n],) for i in range(d + 2))) for k in range(n))
    skel = CategorySkeleton(d, tuple(labels), suspension, angles, f"OA-d{d}")
    ones = RankOnObjects({x: 1 for x in labels})
    return GalleryEntry(skel.name, skel, {"ones": ones}, "every rank function is constant")


def build_nakayama_proj(n: int, ell: int, d: int) -> GalleryEntry:
    """proj kC_n/rad^ell: indecs P1..Pn, Sigma_d from the syzygy twist, angles from resolutions."""
    alg = NakayamaAlgebra.cyclic(n, ell)
    tw = twist_data(alg, d)
    indecs = tuple(proj_label(v) for v in alg.vertices)
    suspension = {proj_label(v): proj_label(tw.sigma(v)) for v in alg.vertices}
    angles = []
    for i, t in alg.non_projective_indecomposables():
        tmpl = generate_angle(NakayamaModule(((i, t),)), tw).template()
        if tmpl not in angles:
            angles.append(tmpl)
    name = f"nakayama-n{n}-l{ell}-d{d}"
    skel = CategorySkeleton(d, indecs, suspension, tuple(angles), name)
    length = RankOnObjects({proj_label(v): ell for v in alg.vertices})
    return GalleryEntry(name, skel, {"composition_length": length}, "rho(P_i) = ell", twist=tw)


DEFAULT_NAMES = [
    "And2-d3",
    "And2-d5",
    "d3-custom",
    "OA-d1",
    "OA-d2",
    "OA-d3",
    "OA-d5",
    "nakayama-n3-l2-d3",
    "nakayama-n4-l2-d1",
]


def get_entry(name: str) -> GalleryEntry:
    if name == "d3-custom":
        return build_d3_custom()
    if m := re.fullmatch(r"And2-d(\d+)(?:-w(\d+))?", name):
        return build_And2_cluster(int(m[1]), int(m[2]) if m[2] else 3)
    if m := re.fullmatch(r"OA-d(\d+)", name):
        return build_OA_cluster(int(m[1]))
    if m := re.fullmatch(r"nakayama-n(\d+)-l(\d+)-d(\d+)", name):
        return build_nakayama_proj(int(m[1]), int(m[2]), int(m[3]))
    raise KeyError(f"unknown gallery entry {name!r}; try one of {DEFAULT_NAMES}")


def all_entries() -> list[GalleryEntry]:
    return [get_entry(name) for name in DEFAULT_NAMES]


def check_entry(entry: GalleryEntry) -> list[str]:
    """Problems with an entry: skeleton errors, or reference ranks failing RO0-RO3."""
    from rankfun.rank_objects import check_rank_on_objects

    problems = list(validate_skeleton(entry.skeleton).errors)
    for rname, r in entry.reference_ranks.items():
        rep = check_rank_on_objects(r, entry.skeleton)
        if not rep.passed:
            problems.append(f"{rname}: {rep.summary()}")
    return problems
