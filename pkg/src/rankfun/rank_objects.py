"""Rank functions on objects: exact values on indecomposables, extended additively."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from rankfun.core import (
    AngleTemplate,
    CategorySkeleton,
    ObjectClass,
    angle_closure,
)


class UnknownIndecError(KeyError):
    pass


@dataclass(frozen=True)
class RankOnObjects:
    values: Mapping[str, Fraction]

    def __post_init__(self):
        vals = {k: Fraction(v) for k, v in dict(self.values).items()}
        negative = sorted(k for k, v in vals.items() if v < 0)
        if negative:
            raise ValueError(f"rank values must be nonnegative; negative at {negative}")
        object.__setattr__(self, "values", vals)

    def __getitem__(self, label: str) -> Fraction:
        return self.values[label]

    def __add__(self, other: "RankOnObjects") -> "RankOnObjects":
        keys = set(self.values) | set(other.values)
        return RankOnObjects({k: self.values.get(k, 0) + other.values.get(k, 0) for k in keys})

    def scale(self, c) -> "RankOnObjects":
        return RankOnObjects({k: v * Fraction(c) for k, v in self.values.items()})

    def with_value(self, label: str, value) -> "RankOnObjects":
        vals = dict(self.values)
        vals[label] = Fraction(value)
        return RankOnObjects(vals)


@dataclass(frozen=True)
class AngleDefect:
    angle: AngleTemplate
    defect: Fraction


def eval_object(r: RankOnObjects, x: ObjectClass) -> Fraction:
    total = Fraction(0)
    for label in x:
        try:
            total += r.values[label]
        except KeyError:
            raise UnknownIndecError(label) from None
    return total


def alternating_sum(r: RankOnObjects, objects) -> Fraction:
    return sum(
        ((-1) ** i * eval_object(r, x) for i, x in enumerate(objects)),
        Fraction(0),
    )


def angle_defect(r: RankOnObjects, a: AngleTemplate) -> AngleDefect:
    return AngleDefect(a, alternating_sum(r, a.objects))


@dataclass
class RankObjectsReport:
    """Outcome of checking RO0-RO3.

    RO0 and RO1 hold by construction (values live on indecomposables and are
    extended additively), so only RO2 and RO3 can produce violations.
    """

    angles_checked: int = 0
    ro2_violations: list = field(default_factory=list)
    ro3_violations: list = field(default_factory=list)
    domain_errors: list = field(default_factory=list)
    ro0: str = "structural"
    ro1: str = "structural"

    @property
    def passed(self) -> bool:
        return not (self.ro2_violations or self.ro3_violations or self.domain_errors)

    def summary(self) -> dict:
        return {
            "passed": self.passed,
            "RO0": self.ro0,
            "RO1": self.ro1,
            "RO2": "pass" if not self.ro2_violations else "fail",
            "RO3": "pass" if not self.ro3_violations else "fail",
            "angles_checked": self.angles_checked,
        }


def check_rank_on_objects(
    r: RankOnObjects, s: CategorySkeleton, depth: int | None = None
) -> RankObjectsReport:
    report = RankObjectsReport()
    known = set(s.indecs)
    missing = sorted(known - set(r.values))
    extra = sorted(set(r.values) - known)
    if missing:
        report.domain_errors.append(f"no value for indecs {missing}")
    if extra:
        report.domain_errors.append(f"values for unknown indecs {extra}")
    if missing:
        return report
    for label in s.indecs:
        image = s.suspension[label]
        if r.values[label] != r.values[image]:
            report.ro3_violations.append(label)
    for a in angle_closure(s, depth):
        report.angles_checked += 1
        defect = angle_defect(r, a)
        if defect.defect < 0:
            report.ro2_violations.append(defect)
    return report


def is_integral(r: RankOnObjects) -> bool:
    return all(v.denominator == 1 for v in r.values.values())
