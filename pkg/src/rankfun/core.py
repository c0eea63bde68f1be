"""Finite skeletons of (pre-)(d+2)-angulated categories and formal angle operations.

Objects are finite multisets of indecomposable labels (the category is
assumed Krull-Schmidt), stored as sorted tuples so that isomorphism of
objects is tuple equality.  Angles only record their objects
X_0, ..., X_{d+1}; the closing term Sigma_d X_0 is implied.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Mapping, Sequence

ObjectClass = tuple  # sorted tuple of indecomposable labels; () is the zero object


def make_object(labels: Iterable[str] = ()) -> ObjectClass:
    return tuple(sorted(labels))


def object_sum(*objects: ObjectClass) -> ObjectClass:
    return tuple(sorted(label for x in objects for label in x))


@dataclass(frozen=True)
class AngleTemplate:
    d: int
    objects: tuple

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(make_object(x) for x in self.objects))

    def __len__(self) -> int:
        return len(self.objects)

    def labels(self) -> set[str]:
        return {label for x in self.objects for label in x}


# the marked arrow of an angle is always its first map X_0 -> X_1
MarkedAngle = AngleTemplate


@dataclass(frozen=True)
class CategorySkeleton:
    d: int
    indecs: tuple
    suspension: Mapping[str, str]
    angles: tuple = ()
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "indecs", tuple(self.indecs))
        object.__setattr__(self, "suspension", dict(self.suspension))
        object.__setattr__(self, "angles", tuple(self.angles))

    def suspend(self, x: ObjectClass, times: int = 1) -> ObjectClass:
        perm = self.suspension if times >= 0 else {v: k for k, v in self.suspension.items()}
        out = x
        for _ in range(abs(times)):
            out = make_object(perm[label] for label in out)
        return out

    def suspension_order(self) -> int:
        """Order of the suspension permutation (lcm of its cycle lengths)."""
        seen: set[str] = set()
        lengths = []
        for start in self.indecs:
            if start in seen:
                continue
            n, cur = 0, start
            while True:
                seen.add(cur)
                cur = self.suspension[cur]
                n += 1
                if cur == start:
                    break
            lengths.append(n)
        return reduce(math.lcm, lengths, 1)

    def suspension_orbits(self) -> list[tuple[str, ...]]:
        seen: set[str] = set()
        orbits = []
        for start in self.indecs:
            if start in seen:
                continue
            orbit, cur = [], start
            while cur not in seen:
                seen.add(cur)
                orbit.append(cur)
                cur = self.suspension[cur]
            orbits.append(tuple(orbit))
        return orbits


@dataclass
class ValidationReport:
    errors: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors

    def __bool__(self) -> bool:
        return self.ok


def validate_skeleton(s: CategorySkeleton) -> ValidationReport:
    """Check the skeleton invariants; every violation is reported with its location."""
    report = ValidationReport()
    if not isinstance(s.d, int) or s.d < 1:
        report.errors.append(f"d: must be a positive integer, got {s.d!r}")
    counts = Counter(s.indecs)
    for label, c in counts.items():
        if c > 1:
            report.errors.append(f"indecs: duplicate IndecId {label!r}")
    known = set(s.indecs)
    for src, dst in s.suspension.items():
        if src not in known:
            report.errors.append(f"suspension: unknown IndecId {src!r}")
        if dst not in known:
            report.errors.append(f"suspension[{src!r}]: unknown IndecId {dst!r}")
    missing = [x for x in s.indecs if x not in s.suspension]
    if missing:
        report.errors.append(f"suspension: not total, missing {missing}")
    images = Counter(s.suspension.values())
    clashes = sorted(k for k, c in images.items() if c > 1)
    if clashes:
        report.errors.append(f"suspension: not a bijection, repeated images {clashes}")
    for idx, a in enumerate(s.angles):
        if a.d != s.d:
            report.errors.append(f"angles[{idx}]: d={a.d} does not match skeleton d={s.d}")
        if len(a.objects) != s.d + 2:
            report.errors.append(
                f"angles[{idx}]: angle length {len(a.objects)}, expected d+2={s.d + 2}"
            )
        for pos, x in enumerate(a.objects):
            for label in x:
                if label not in known:
                    report.errors.append(f"angles[{idx}][{pos}]: unknown IndecId {label!r}")
    return report


def rotate_angle(a: AngleTemplate, s: CategorySkeleton) -> AngleTemplate:
    """(X_0, ..., X_{d+1}) -> (X_1, ..., X_{d+1}, Sigma_d X_0); signs are irrelevant here."""
    return AngleTemplate(a.d, a.objects[1:] + (s.suspend(a.objects[0]),))


def suspend_angle(a: AngleTemplate, s: CategorySkeleton, times: int = 1) -> AngleTemplate:
    return AngleTemplate(a.d, tuple(s.suspend(x, times) for x in a.objects))


def direct_sum_angles(a: AngleTemplate, b: AngleTemplate) -> AngleTemplate:
    if a.d != b.d or len(a.objects) != len(b.objects):
        raise ValueError(f"cannot sum angles with d={a.d} and d={b.d}")
    return AngleTemplate(a.d, tuple(object_sum(x, y) for x, y in zip(a.objects, b.objects)))


def trivial_angle(x: ObjectClass, d: int) -> AngleTemplate:
    """The angle X --1--> X -> 0 -> ... -> 0 -> Sigma_d X."""
    x = make_object(x)
    return AngleTemplate(d, (x, x) + ((),) * d)


def zero_angle(d: int) -> AngleTemplate:
    return AngleTemplate(d, ((),) * (d + 2))


def default_depth(s: CategorySkeleton) -> int:
    return s.suspension_order()


def angle_closure(s: CategorySkeleton, depth: int | None = None) -> list[AngleTemplate]:
    """Generators closed under rotation, up to ``depth`` suspension layers.

    Depth k allows k*(d+2) - 1 rotations of each generator; depth 0 returns
    the generators only.  Once ``depth`` reaches the suspension order the
    result is a fixpoint of ``rotate_angle``.
    """
    if depth is None:
        depth = default_depth(s)
    seen: dict[AngleTemplate, None] = {}
    for gen in s.angles:
        seen.setdefault(gen, None)
        cur = gen
        for _ in range(depth * (s.d + 2) - 1):
            cur = rotate_angle(cur, s)
            if cur in seen:
                break
            seen[cur] = None
    return list(seen)


def rotations(a: AngleTemplate, s: CategorySkeleton, count: int) -> list[AngleTemplate]:
    """[a, rotate(a), ..., rotate^{count-1}(a)]."""
    out = [a]
    for _ in range(count - 1):
        out.append(rotate_angle(out[-1], s))
    return out


def alternating_parts(objects: Sequence[ObjectClass]) -> tuple[ObjectClass, ObjectClass]:
    """(sum of even-position objects, sum of odd-position objects)."""
    return object_sum(*objects[0::2]), object_sum(*objects[1::2])
