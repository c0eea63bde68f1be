"""Rank functions on morphisms, carried through their object-level counterpart.

For odd d a rank function on morphisms is determined by its values on
identities, and the value on the first arrow x_0 of an angle
X_0 -> X_1 -> ... -> X_{d+1} -> Sigma_d X_0 is

    (rho(X_0) + sum_{i=1}^{d+1} (-1)^{i-1} rho(X_i)) / 2.

The skeleton stores no arrows, so a morphism is addressed by an angle whose
first map it is.  Only objects enter the formula.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from math import lcm

from rankfun.core import (
    AngleTemplate,
    CategorySkeleton,
    MarkedAngle,
    ObjectClass,
    angle_closure,
    direct_sum_angles,
    rotations,
    suspend_angle,
    trivial_angle,
)
from rankfun.rank_objects import RankOnObjects, UnknownIndecError, check_rank_on_objects, eval_object


class ParityError(ValueError):
    """Raised when a Psi/psi operation is asked for even d."""

    def __init__(self, d: int):
        super().__init__(
            f"d={d} is even: the correspondence between rank functions on objects "
            "and on morphisms is only available for odd d"
        )
        self.d = d


class NegativeRankError(ValueError):
    """Psi produced a negative value, so the input violates RO2 on a rotation of the angle."""


def require_odd(d: int) -> None:
    if d % 2 == 0:
        raise ParityError(d)


def _psi_formula(r: RankOnObjects, objects) -> Fraction:
    first = eval_object(r, objects[0])
    rest = sum(
        ((-1) ** (i - 1) * eval_object(r, objects[i]) for i in range(1, len(objects))),
        Fraction(0),
    )
    return (first + rest) / 2


def psi_eval(r: RankOnObjects, m: AngleTemplate) -> Fraction:
    """Value of Psi(r) on the marked (first) arrow of ``m``."""
    require_odd(m.d)
    value = _psi_formula(r, m.objects)
    if value < 0:
        raise NegativeRankError(
            f"Psi value {value} < 0 on {m.objects}: the input violates RO2 on the rotated angle"
        )
    return value


@dataclass(frozen=True)
class RankOnMorphismsView:
    """The morphism rank function Psi(base), evaluated on marked angles."""

    base: RankOnObjects
    d: int

    def __call__(self, m: AngleTemplate) -> Fraction:
        return psi_eval(self.base, m)

    def identity(self, x: ObjectClass) -> Fraction:
        # the trivial angle gives (rho(X) + rho(X)) / 2 for every d
        return _psi_formula(self.base, trivial_angle(x, self.d).objects)


def phi_eval(rm: RankOnMorphismsView, x: ObjectClass) -> Fraction:
    """Phi(rho_m)(X) = rho_m(1_X); needs no parity assumption."""
    return rm.identity(x)


def phi(rm: RankOnMorphismsView, s: CategorySkeleton) -> RankOnObjects:
    return RankOnObjects({label: phi_eval(rm, (label,)) for label in s.indecs})


@dataclass
class RoundtripReport:
    ro_report: object = None
    phi_psi_mismatches: list = field(default_factory=list)
    psi_phi_mismatches: list = field(default_factory=list)
    negative_values: list = field(default_factory=list)
    angles_checked: int = 0

    @property
    def passed(self) -> bool:
        return (
            self.ro_report.passed
            and not self.phi_psi_mismatches
            and not self.psi_phi_mismatches
            and not self.negative_values
        )

    def violated_indecs(self) -> list[str]:
        out = list(self.ro_report.ro3_violations)
        out += [label for label, _, _ in self.phi_psi_mismatches]
        return sorted(set(out))


def roundtrip_check(r: RankOnObjects, s: CategorySkeleton, depth: int | None = None) -> RoundtripReport:
    """Check Phi(Psi(r)) = r and Psi(Phi(Psi(r))) = Psi(r) on the rotation closure.

    The second identity is recomputed through RM2 telescoping: the value on
    x_0 is rebuilt from identity values alone, using RM2 on each consecutive
    pair and RM3 to identify the closing arrow with x_{d+1}.
    """
    require_odd(s.d)
    report = RoundtripReport(ro_report=check_rank_on_objects(r, s, depth))
    if report.ro_report.domain_errors:
        return report
    rm = RankOnMorphismsView(r, s.d)
    recovered = phi(rm, s)
    for label in s.indecs:
        if recovered[label] != r[label]:
            report.phi_psi_mismatches.append((label, r[label], recovered[label]))
    for a in angle_closure(s, depth):
        report.angles_checked += 1
        direct = _psi_formula(r, a.objects)
        if direct < 0:
            report.negative_values.append((a, direct))
        telescoped = _telescoped_value(recovered, a, s)
        if telescoped != direct:
            report.psi_phi_mismatches.append((a, direct, telescoped))
    return report


def _telescoped_value(ids: RankOnObjects, a: AngleTemplate, s: CategorySkeleton) -> Fraction:
    # rho(x_0) = rho(1_{X_1}) - rho(x_1) = rho(1_{X_1}) - rho(1_{X_2}) + rho(x_2) = ...
    # ending with (-1)^{d+1} rho(x_{d+1}) = rho(x_{d+1}), and 2 rho(x_{d+1}) is the
    # alternating identity sum over the angle (d odd).
    d = a.d
    objs = a.objects
    ident = [eval_object(ids, x) for x in objs]
    last = sum(((-1) ** i * v for i, v in enumerate(ident)), Fraction(0)) / 2
    acc = Fraction(0)
    for i in range(1, d + 2):
        acc += (-1) ** (i - 1) * ident[i]
    return acc + (-1) ** (d + 1) * last


@dataclass
class RMReport:
    rm0: str = "structural"
    rm1_failures: list = field(default_factory=list)
    rm2_failures: list = field(default_factory=list)
    rm3_failures: list = field(default_factory=list)
    lemma_failures: list = field(default_factory=list)
    negative_values: list = field(default_factory=list)
    angles_checked: int = 0
    pairs_checked: int = 0

    @property
    def passed(self) -> bool:
        return not (
            self.rm1_failures
            or self.rm2_failures
            or self.rm3_failures
            or self.lemma_failures
            or self.negative_values
        )

    def summary(self) -> dict:
        return {
            "passed": self.passed,
            "RM0": self.rm0,
            "RM1": "pass" if not self.rm1_failures else "fail",
            "RM2": "pass" if not self.rm2_failures else "fail",
            "RM3": "pass" if not self.rm3_failures else "fail",
            "lemma_part_1": "pass" if not self.lemma_failures else "fail",
            "nonnegative": not self.negative_values,
            "angles_checked": self.angles_checked,
            "pairs_checked": self.pairs_checked,
        }


def rm_axiom_suite(
    r: RankOnObjects,
    s: CategorySkeleton,
    depth: int | None = None,
    max_pairs: int | None = None,
) -> RMReport:
    """Check RM1-RM3 and the sum identity rho(x_0) + rho(Sigma x_0) for Psi(r)."""
    require_odd(s.d)
    d = s.d
    closure = angle_closure(s, depth)
    report = RMReport()
    # exact integer arithmetic in units of 1 / (2 * scale)
    scale = lcm(*(v.denominator for v in r.values.values())) if r.values else 1
    ints = {k: int(v * scale) for k, v in r.values.items()}
    unit = Fraction(1, 2 * scale)
    obj_cache: dict = {}

    def obj(x: ObjectClass) -> int:
        if x not in obj_cache:
            try:
                obj_cache[x] = sum(ints[label] for label in x)
            except KeyError as err:
                raise UnknownIndecError(err.args[0]) from None
        return obj_cache[x]

    def value(a: AngleTemplate) -> int:
        objects = a.objects
        v = obj(objects[0]) + sum(obj(x) if i % 2 else -obj(x) for i, x in enumerate(objects[1:], start=1))
        if v < 0:
            report.negative_values.append((a, v * unit))
        return v

    def identity(x: ObjectClass) -> int:
        return 2 * obj(x)

    values: dict = {}
    for a in closure:
        report.angles_checked += 1
        # the angle, its d+2 rotations, and the fully suspended angle
        rots = rotations(a, s, d + 3)
        arrows = [value(b) for b in rots]  # rho(x_0), ..., rho(x_{d+1}), rho(Sigma x_0)
        values[a] = arrows[0]
        objs = list(a.objects) + [s.suspend(a.objects[0])]
        for i in range(d + 2):
            lhs = arrows[i] - identity(objs[i + 1]) + arrows[i + 1]
            if lhs != 0:
                report.rm2_failures.append((a, i, lhs * unit))
        suspended = value(suspend_angle(a, s))
        if suspended != arrows[0]:
            report.rm3_failures.append((a, arrows[0] * unit, suspended * unit))
        alt = sum((-1) ** i * identity(objs[i + 1]) for i in range(d + 2))
        if arrows[0] + arrows[d + 2] != alt:
            report.lemma_failures.append((a, (arrows[0] + arrows[d + 2]) * unit, alt * unit))

    for n, (a, b) in enumerate(combinations_with_replacement(closure, 2)):
        if max_pairs is not None and n >= max_pairs:
            break
        report.pairs_checked += 1
        if value(direct_sum_angles(a, b)) != values[a] + values[b]:
            report.rm1_failures.append((a, b))
    return report


def psi_table(r: RankOnObjects, s: CategorySkeleton, base: AngleTemplate) -> list[Fraction]:
    """Psi(r) on the d+2 consecutive arrows x_0, ..., x_{d+1} of ``base``."""
    require_odd(s.d)
    return [psi_eval(r, b) for b in rotations(base, s, s.d + 2)]


__all__ = [
    "MarkedAngle",
    "NegativeRankError",
    "ParityError",
    "RankOnMorphismsView",
    "phi",
    "phi_eval",
    "psi_eval",
    "psi_table",
    "require_odd",
    "rm_axiom_suite",
    "roundtrip_check",
]
