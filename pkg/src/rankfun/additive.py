"""Sigma_d-invariant additive functions on mod A and the phi/psi correspondence.

In a length category an additive function is fixed by its values on the
simples (Jordan-Holder), so AdditiveFn stores exactly those.  phi sends an
additive alpha to the morphism rank function f -> alpha(Im f); psi reads a
morphism rank function back on presenting morphisms of modules.

Morphism rank functions are plain callables ProjMorphism -> Fraction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping

from rankfun.core import AngleTemplate
from rankfun.nakayama.algebra import (
    NakayamaAlgebra,
    NakayamaModule,
    TwistData,
    composition_factors,
)
from rankfun.nakayama.angles import generate_angle, proj_label, trivial_proj_angle
from rankfun.nakayama.morphisms import ProjMorphism, image_of, presenting_morphism
from rankfun.rank_morphisms import _psi_formula, require_odd
from rankfun.rank_objects import RankOnObjects

MorphismRank = Callable[[ProjMorphism], Fraction]


@dataclass(frozen=True)
class AdditiveFn:
    simple_values: Mapping[int, Fraction]

    def __post_init__(self):
        vals = {int(k): Fraction(v) for k, v in dict(self.simple_values).items()}
        bad = sorted(k for k, v in vals.items() if v < 0)
        if bad:
            raise ValueError(f"additive functions are nonnegative; negative at vertices {bad}")
        object.__setattr__(self, "simple_values", vals)

    @classmethod
    def from_vector(cls, values) -> "AdditiveFn":
        return cls({i + 1: v for i, v in enumerate(values)})

    @classmethod
    def ones(cls, alg: NakayamaAlgebra) -> "AdditiveFn":
        """Composition length."""
        return cls({v: 1 for v in alg.vertices})

    def vector(self, alg: NakayamaAlgebra) -> tuple:
        return tuple(self.simple_values.get(v, Fraction(0)) for v in alg.vertices)

    def __add__(self, other: "AdditiveFn") -> "AdditiveFn":
        keys = set(self.simple_values) | set(other.simple_values)
        return AdditiveFn({k: self.simple_values.get(k, 0) + other.simple_values.get(k, 0) for k in keys})

    def scale(self, c) -> "AdditiveFn":
        return AdditiveFn({k: v * Fraction(c) for k, v in self.simple_values.items()})

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.simple_values.values())

    def check_domain(self, alg: NakayamaAlgebra) -> None:
        if set(self.simple_values) != set(alg.vertices):
            raise ValueError(
                f"simple values given on {sorted(self.simple_values)}, algebra has vertices {list(alg.vertices)}"
            )


def eval_additive(a: AdditiveFn, m: NakayamaModule, alg: NakayamaAlgebra) -> Fraction:
    factors = composition_factors(m, alg)
    vals = a.simple_values
    return Fraction(sum(c * vals.get(v, 0) for v, c in zip(alg.vertices, factors) if c))


def check_sigma_invariant(a: AdditiveFn, tw: TwistData) -> bool:
    return all(a.simple_values.get(tw.sigma(v), 0) == a.simple_values.get(v, 0) for v in tw.algebra.vertices)


@dataclass(frozen=True)
class SigmaOrbit:
    vertices: tuple

    def indicator(self, alg: NakayamaAlgebra) -> AdditiveFn:
        return AdditiveFn({v: int(v in self.vertices) for v in alg.vertices})


def sigma_orbits(tw: TwistData) -> list[SigmaOrbit]:
    return [SigmaOrbit(o) for o in tw.orbits()]


# phi: additive functions -> morphism rank functions


def varphi_eval(a: AdditiveFn, f: ProjMorphism) -> Fraction:
    return eval_additive(a, image_of(f), f.algebra)


def varphi(a: AdditiveFn) -> MorphismRank:
    return lambda f: varphi_eval(a, f)


# psi: morphism rank functions -> additive functions


def presenting_morphism_for(m: NakayamaModule, alg: NakayamaAlgebra) -> ProjMorphism:
    """Direct sum of the canonical presenting morphisms of the summands of m."""
    out = ProjMorphism.zero(alg, (), ())
    for i, t in m:
        out = out.direct_sum(presenting_morphism(alg, i, t))
    return out


def psi_mod_eval(rm: MorphismRank, m: NakayamaModule, tw: TwistData) -> Fraction:
    require_odd(tw.d)
    return Fraction(rm(presenting_morphism_for(m, tw.algebra)))


def psi_mod(rm: MorphismRank, tw: TwistData) -> AdditiveFn:
    require_odd(tw.d)
    return AdditiveFn({v: psi_mod_eval(rm, NakayamaModule(((v, 1),)), tw) for v in tw.algebra.vertices})


def alternative_presentations(alg: NakayamaAlgebra, i: int, t: int) -> list[ProjMorphism]:
    """Several morphisms between projectives whose image is M(i, t)."""
    base = presenting_morphism(alg, i, t)
    out = [base, base.scale(2), base.scale(Fraction(-1, 3))]
    for q in alg.vertices:
        out.append(base.direct_sum(ProjMorphism.zero(alg, (q,), ())))
        out.append(base.direct_sum(ProjMorphism.zero(alg, (), (q,))))
    return out


# Psi on proj A: complete a morphism to an angle and apply the object formula


@dataclass(frozen=True)
class ObjectPsiRank:
    """Psi(rho_o) on proj A, for rho_o given on the indecomposable projectives.

    A morphism with image N + Q (Q projective, N without projective summands)
    is the first arrow of rotate^{d+1}(generate_angle(N)) + (Q --1--> Q), so its
    value only needs rho_o on the objects of that angle.  ``pad`` adds a
    contractible piece (vertex, position) that must not change the value.
    """

    values: Mapping[int, Fraction]
    twist: TwistData
    pad: tuple | None = None

    def __post_init__(self):
        require_odd(self.twist.d)
        object.__setattr__(self, "values", {int(k): Fraction(v) for k, v in dict(self.values).items()})

    def object_rank(self) -> RankOnObjects:
        return RankOnObjects({proj_label(v): x for v, x in self.values.items()})

    def completing_angle(self, f: ProjMorphism) -> AngleTemplate:
        alg = self.twist.algebra
        img = image_of(f)
        nonproj = NakayamaModule(tuple(s for s in img if not alg.is_projective(*s)))
        proj = [i for i, t in img if alg.is_projective(i, t)]
        angle = generate_angle(nonproj, self.twist)
        for _ in range(self.twist.d + 1):
            angle = angle.rotate()
        for q in proj:
            angle = angle.direct_sum(trivial_proj_angle(self.twist, q, 0))
        if self.pad is not None:
            q, k = self.pad
            angle = angle.pad(q, k)
        return angle.template()

    def __call__(self, f: ProjMorphism) -> Fraction:
        return _psi_formula(self.object_rank(), self.completing_angle(f).objects)


def object_values_from_additive(a: AdditiveFn, alg: NakayamaAlgebra) -> dict[int, Fraction]:
    """rho_o(P(i)) = rho_m(1_{P(i)}) = alpha(P(i))."""
    return {
        v: eval_additive(a, NakayamaModule(((v, alg.proj_length(v)),)), alg) for v in alg.vertices
    }


def sum_ranks(*ranks: MorphismRank) -> MorphismRank:
    return lambda f: sum((Fraction(r(f)) for r in ranks), Fraction(0))


# decomposition into orbit indicators


def decompose_invariant(a: AdditiveFn, tw: TwistData) -> list[tuple[SigmaOrbit, int]]:
    alg = tw.algebra
    a.check_domain(alg)
    if not a.is_integral():
        raise ValueError("decomposition needs an integral additive function")
    if not check_sigma_invariant(a, tw):
        raise ValueError("decomposition needs a Sigma_d-invariant additive function")
    out = []
    for orbit in sigma_orbits(tw):
        c = a.simple_values[orbit.vertices[0]]
        if c:
            out.append((orbit, int(c)))
    return out


def reconstruct(terms, alg: NakayamaAlgebra) -> AdditiveFn:
    total = AdditiveFn({v: 0 for v in alg.vertices})
    for orbit, c in terms:
        total = total + orbit.indicator(alg).scale(c)
    return total


def _invariant_vectors_below(vec: tuple, tw: TwistData) -> list[tuple]:
    # every integral Sigma_d-invariant vector 0 <= b <= vec, found by brute force
    alg = tw.algebra
    out = []
    for b in itertools.product(*(range(int(x) + 1) for x in vec)):
        if all(b[tw.sigma(v) - 1] == b[v - 1] for v in alg.vertices):
            out.append(b)
    return out


def is_irreducible(a: AdditiveFn, tw: TwistData) -> bool:
    """No split a = b + c into nonzero integral invariant additive functions."""
    vec = tuple(int(x) for x in a.vector(tw.algebra))
    if not any(vec) or not a.is_integral() or not check_sigma_invariant(a, tw):
        return False
    zero = tuple(0 for _ in vec)
    return all(b in (zero, vec) for b in _invariant_vectors_below(vec, tw))


def irreducible_decompositions(a: AdditiveFn, tw: TwistData) -> list[tuple[tuple, ...]]:
    """Every way to write a as a multiset of irreducible invariant integral functions.

    Exhaustive: the candidate summands are all invariant integral vectors
    below a, each tested for irreducibility by splitting.
    """
    alg = tw.algebra
    vec = tuple(int(x) for x in a.vector(alg))
    irreducibles = sorted(
        b for b in _invariant_vectors_below(vec, tw) if any(b) and is_irreducible(AdditiveFn.from_vector(b), tw)
    )

    @lru_cache(maxsize=None)
    def search(rest: tuple, start: int) -> tuple:
        if not any(rest):
            return ((),)
        found = []
        for n in range(start, len(irreducibles)):
            b = irreducibles[n]
            if all(x <= y for x, y in zip(b, rest)):
                remainder = tuple(y - x for x, y in zip(b, rest))
                for tail in search(remainder, n):
                    found.append((b,) + tail)
        return tuple(found)

    return list(search(vec, 0))


# the correspondence suite


def sample_morphisms(alg: NakayamaAlgebra) -> list[ProjMorphism]:
    """Presenting morphisms, their variants, single paths, and pairwise sums of presentations."""
    out = []
    pres = []
    for i, t in alg.indecomposables():
        variants = alternative_presentations(alg, i, t)
        pres.append(variants[0])
        out.extend(variants)
    for j in alg.vertices:
        for k in range(alg.proj_length(j)):
            out.append(ProjMorphism.single_path(alg, j, k))
    for f, g in itertools.combinations(pres, 2):
        out.append(f.direct_sum(g))
    return out


@dataclass
class CorrespondenceReport:
    psi_phi_failures: list = field(default_factory=list)
    phi_psi_failures: list = field(default_factory=list)
    object_route_failures: list = field(default_factory=list)
    integrality_failures: list = field(default_factory=list)
    irreducibility_failures: list = field(default_factory=list)
    morphisms_checked: int = 0

    @property
    def passed(self) -> bool:
        return not (
            self.psi_phi_failures
            or self.phi_psi_failures
            or self.object_route_failures
            or self.integrality_failures
            or self.irreducibility_failures
        )


def correspondence_suite(
    a: AdditiveFn, tw: TwistData, morphisms: list[ProjMorphism] | None = None
) -> CorrespondenceReport:
    """phi and psi are mutually inverse on ``a``, and agree with the Psi route through angles."""
    require_odd(tw.d)
    alg = tw.algebra
    a.check_domain(alg)
    if morphisms is None:
        morphisms = sample_morphisms(alg)
    report = CorrespondenceReport()
    rm = varphi(a)

    # psi(phi(a)) = a, on simples and on every indecomposable module
    back = psi_mod(rm, tw)
    if back != a:
        report.psi_phi_failures.append(("simples", a, back))
    for i, t in alg.indecomposables():
        m = NakayamaModule(((i, t),))
        if psi_mod_eval(rm, m, tw) != eval_additive(a, m, alg):
            report.psi_phi_failures.append((m, psi_mod_eval(rm, m, tw), eval_additive(a, m, alg)))

    # phi(psi(rm)) = rm, for rm = phi(a) and for the object route Psi(rho_o)
    if check_sigma_invariant(a, tw):
        obj_rm = ObjectPsiRank(object_values_from_additive(a, alg), tw)
        obj_back = varphi(psi_mod(obj_rm, tw))
    else:
        obj_rm = None
    for f in morphisms:
        report.morphisms_checked += 1
        direct = rm(f)
        if varphi(back)(f) != direct:
            report.phi_psi_failures.append((f, direct, varphi(back)(f)))
        if obj_rm is not None:
            via_angle = obj_rm(f)
            if via_angle != direct or obj_back(f) != via_angle:
                report.object_route_failures.append((f, direct, via_angle))
        if a.is_integral() and direct.denominator != 1:
            report.integrality_failures.append((f, direct))

    if a.is_integral() and check_sigma_invariant(a, tw):
        terms = decompose_invariant(a, tw)
        if is_irreducible(a, tw) != (len(terms) == 1 and terms[0][1] == 1):
            report.irreducibility_failures.append((a, terms))
    return report


def additivity_failures(
    a1: AdditiveFn, a2: AdditiveFn, tw: TwistData, morphisms: list[ProjMorphism]
) -> list:
    """phi(a1 + a2) = phi(a1) + phi(a2) on the samples, and psi(r1 + r2) = psi(r1) + psi(r2)."""
    require_odd(tw.d)
    bad = []
    total = varphi(a1 + a2)
    split = sum_ranks(varphi(a1), varphi(a2))
    for f in morphisms:
        if total(f) != split(f):
            bad.append(("phi", f))
    if psi_mod(split, tw) != psi_mod(varphi(a1), tw) + psi_mod(varphi(a2), tw):
        bad.append(("psi", a1, a2))
    return bad
