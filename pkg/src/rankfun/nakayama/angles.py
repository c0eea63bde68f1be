"""Angles in proj A from projective resolutions, and the Schanuel comparison.

For a module m without projective summands the minimal resolution

    P_{d+1} -> P_d -> ... -> P_0 -> m -> 0

has kernel Omega^{d+2} m = Sigma_d^{-1} m at the left end.  Read as
X_i = P_{d+1-i} and closed up by P_0 -> m -> Sigma_d P_{d+1}, it is a
(d+2)-angle whose last arrow has image m.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from rankfun.core import AngleTemplate
from rankfun.nakayama.algebra import (
    NakayamaAlgebra,
    NakayamaModule,
    TwistData,
    has_projective_summand,
    syzygy,
    twist_data,
)
from rankfun.nakayama.morphisms import ProjMorphism, image_of


def proj_label(v: int) -> str:
    return f"P{v}"


@dataclass(frozen=True)
class ProjAngle:
    """X_0 -> X_1 -> ... -> X_{d+1} -> Sigma_d X_0 with explicit maps.

    ``maps[i]`` goes X_i -> X_{i+1}; the last one lands in Sigma_d X_0.
    """

    twist: TwistData
    objects: tuple  # tuples of vertices
    maps: tuple

    @property
    def d(self) -> int:
        return self.twist.d

    @property
    def algebra(self) -> NakayamaAlgebra:
        return self.twist.algebra

    def last_arrow(self) -> ProjMorphism:
        return self.maps[-1]

    def last_image(self) -> NakayamaModule:
        return image_of(self.last_arrow())

    def template(self) -> AngleTemplate:
        return AngleTemplate(self.d, tuple(tuple(proj_label(v) for v in x) for x in self.objects))

    def rotate(self) -> "ProjAngle":
        sign = -1 if self.d % 2 else 1
        first = self.maps[0].suspend(self.twist).scale(sign)
        shifted = tuple(self.twist.sigma(v) for v in self.objects[0])
        return ProjAngle(self.twist, self.objects[1:] + (shifted,), self.maps[1:] + (first,))

    def direct_sum(self, other: "ProjAngle") -> "ProjAngle":
        return ProjAngle(
            self.twist,
            tuple(x + y for x, y in zip(self.objects, other.objects)),
            tuple(f.direct_sum(g) for f, g in zip(self.maps, other.maps)),
        )

    def pad(self, q: int, k: int) -> "ProjAngle":
        """Add the contractible piece P(q) --1--> P(q) at positions k, k+1 (0 <= k <= d)."""
        if not 0 <= k <= self.d:
            raise ValueError(f"padding position must lie in 0..{self.d}")
        return self.direct_sum(trivial_proj_angle(self.twist, q, k))

    def c1_report(self) -> "ExactnessReport":
        return check_exactness(self)


def trivial_proj_angle(tw: TwistData, q: int, k: int = 0) -> ProjAngle:
    """The angle with P(q) at positions k and k+1, identity between, zero elsewhere."""
    alg = tw.algebra
    d = tw.d
    objects = [()] * (d + 2)
    objects[k] = (q,)
    objects[k + 1] = (q,)
    maps = []
    for i in range(d + 2):
        src = objects[i]
        tgt = objects[i + 1] if i + 1 < d + 2 else tuple(tw.sigma(v) for v in objects[0])
        if i == k:
            maps.append(ProjMorphism.identity(alg, src))
        else:
            maps.append(ProjMorphism.zero(alg, src, tgt))
    return ProjAngle(tw, tuple(objects), tuple(maps))


def zero_proj_angle(tw: TwistData) -> ProjAngle:
    alg = tw.algebra
    return ProjAngle(tw, ((),) * (tw.d + 2), tuple(ProjMorphism.zero(alg, (), ()) for _ in range(tw.d + 2)))


def _indecomposable_angle(tw: TwistData, i: int, t: int) -> ProjAngle:
    alg = tw.algebra
    d = tw.d
    tops, lengths = [], []
    cur = NakayamaModule(((i, t),))
    for _ in range(d + 2):
        (top, ln), = cur.summands
        tops.append(top)
        lengths.append(ln)
        cur = syzygy(cur, alg)
    # P_k = P(tops[k]); P_{k+1} -> P_k is the path of length lengths[k]
    objects = tuple((tops[d + 1 - j],) for j in range(d + 2))
    maps = []
    for j in range(d + 1):
        k = d - j
        maps.append(ProjMorphism.single_path(alg, tops[k], lengths[k]))
    # closing arrow P_0 = P(i) -> Sigma_d P_{d+1}: inject m into its envelope
    close_len = alg.ell - t
    close_target = alg.step(i, -close_len)
    if tw.sigma(tops[d + 1]) != close_target:
        raise ArithmeticError(
            f"twist mismatch: Sigma P({tops[d + 1]}) = P({tw.sigma(tops[d + 1])}), "
            f"envelope of M({i},{t}) is P({close_target})"
        )
    maps.append(ProjMorphism.single_path(alg, close_target, close_len))
    return ProjAngle(tw, objects, tuple(maps))


def generate_angle(m: NakayamaModule, tw: TwistData) -> ProjAngle:
    """Angle from the minimal projective resolution of m; its last arrow has image m."""
    alg = tw.algebra
    m.check(alg)
    if has_projective_summand(m, alg):
        raise ValueError(f"{m.summands} has a projective summand")
    out = zero_proj_angle(tw)
    for i, t in m:
        out = out.direct_sum(_indecomposable_angle(tw, i, t))
    return out


def generate_angle_for(m: NakayamaModule, alg: NakayamaAlgebra, d: int) -> ProjAngle:
    return generate_angle(m, twist_data(alg, d))


@dataclass
class ExactnessReport:
    composites_zero: list
    exact_at: list

    @property
    def ok(self) -> bool:
        return all(self.composites_zero) and all(self.exact_at)


def check_exactness(a: ProjAngle) -> ExactnessReport:
    """C1 by ranks: the periodic complex ... -> Sigma^{-1} X_{d+1} -> X_0 -> ... -> X_{d+1} -> Sigma X_0 is exact."""
    incoming = a.maps[-1].suspend(a.twist, -1)  # Sigma^{-1} X_{d+1} -> X_0
    chain = [incoming] + list(a.maps)
    composites, exact = [], []
    for prev, nxt in zip(chain, chain[1:]):
        composites.append(nxt.compose(prev).is_zero())
        dim_middle = len(nxt.basis("source"))
        exact.append(dim_middle - nxt.rank() == prev.rank())
    return ExactnessReport(composites, exact)


def padded_variants(a: ProjAngle) -> list[ProjAngle]:
    """a with one contractible piece P(q) added at every admissible position."""
    return [a.pad(q, k) for q in a.algebra.vertices for k in range(a.d + 1)]


@dataclass(frozen=True)
class SchanuelResult:
    homotopy_equivalent: bool
    balanced: bool | None
    lhs: tuple = ()
    rhs: tuple = ()


def schanuel_check(x: ProjAngle, y: ProjAngle) -> SchanuelResult:
    """Compare the even/odd sums  X_even + Y_odd  and  X_odd + Y_even  when the angles are equivalent."""
    if x.last_image() != y.last_image():
        return SchanuelResult(False, None)
    lhs = Counter()
    rhs = Counter()
    for i, (xi, yi) in enumerate(zip(x.objects, y.objects)):
        if i % 2 == 0:
            lhs.update(xi)
            rhs.update(yi)
        else:
            lhs.update(yi)
            rhs.update(xi)
    left = tuple(sorted(lhs.elements()))
    right = tuple(sorted(rhs.elements()))
    return SchanuelResult(True, left == right, left, right)
