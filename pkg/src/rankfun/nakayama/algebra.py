"""Nakayama algebras kQ/rad^ell on a cyclic or linear quiver, and their interval modules.

Vertices are 1..n and every arrow goes from vertex v to vertex v-1 (mod n
in the cyclic case), so the linear quiver is 1 <- 2 <- ... <- n.  The
interval module M(i, t) has top S_i and composition factors
S_i, S_{i-1}, ..., S_{i-t+1} from the top down; over the linear algebra
with n = 3, ell = 2 this makes P(2) the module with factors 2 over 1.
"""

from __future__ import annotations

from dataclasses import dataclass

Interval = tuple  # (top vertex, length)


class UnsupportedPeriodicity(ValueError):
    pass


@dataclass(frozen=True)
class NakayamaAlgebra:
    n: int
    ell: int
    shape: str = "cyclic"

    def __post_init__(self):
        if self.shape not in ("cyclic", "linear"):
            raise ValueError(f"shape must be 'cyclic' or 'linear', got {self.shape!r}")
        if self.n < 1:
            raise ValueError("need at least one vertex")
        if self.ell < 2:
            raise ValueError("Loewy length ell must be at least 2")

    @classmethod
    def cyclic(cls, n: int, ell: int) -> "NakayamaAlgebra":
        return cls(n, ell, "cyclic")

    @classmethod
    def linear(cls, n: int, ell: int) -> "NakayamaAlgebra":
        return cls(n, ell, "linear")

    @classmethod
    def higher_auslander_a2(cls, d: int) -> "NakayamaAlgebra":
        """A^d_2: the linear quiver on d+1 vertices modulo paths of length two."""
        return cls(d + 1, 2, "linear")

    @property
    def is_selfinjective(self) -> bool:
        return self.shape == "cyclic"

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def step(self, v: int, k: int) -> int | None:
        """Vertex reached from ``v`` along ``k`` arrows (negative k walks backwards)."""
        if self.shape == "cyclic":
            return (v - k - 1) % self.n + 1
        w = v - k
        return w if 1 <= w <= self.n else None

    def proj_length(self, v: int) -> int:
        if self.shape == "cyclic":
            return self.ell
        return min(self.ell, v)

    def is_interval(self, i: int, t: int) -> bool:
        return i in self.vertices and 1 <= t <= self.proj_length(i)

    def is_projective(self, i: int, t: int) -> bool:
        return t == self.proj_length(i)

    def indecomposables(self) -> list[Interval]:
        return [(i, t) for i in self.vertices for t in range(1, self.proj_length(i) + 1)]

    def non_projective_indecomposables(self) -> list[Interval]:
        return [(i, t) for (i, t) in self.indecomposables() if not self.is_projective(i, t)]

    def to_json(self) -> dict:
        return {"n": self.n, "ell": self.ell, "shape": self.shape}


@dataclass(frozen=True)
class NakayamaModule:
    summands: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple(sorted(tuple(s) for s in self.summands)))

    @classmethod
    def of(cls, *intervals) -> "NakayamaModule":
        return cls(tuple(intervals))

    def __add__(self, other: "NakayamaModule") -> "NakayamaModule":
        return NakayamaModule(self.summands + other.summands)

    def __bool__(self) -> bool:
        return bool(self.summands)

    def __iter__(self):
        return iter(self.summands)

    def check(self, alg: NakayamaAlgebra) -> None:
        for i, t in self.summands:
            if not alg.is_interval(i, t):
                raise ValueError(f"M({i},{t}) is not an interval module over {alg}")


def simple(i: int) -> NakayamaModule:
    return NakayamaModule(((i, 1),))


def projective(alg: NakayamaAlgebra, i: int) -> NakayamaModule:
    return NakayamaModule(((i, alg.proj_length(i)),))


def composition_factors(m: NakayamaModule, alg: NakayamaAlgebra) -> tuple[int, ...]:
    counts = [0] * alg.n
    for i, t in m:
        for k in range(t):
            counts[alg.step(i, k) - 1] += 1
    return tuple(counts)


def length(m: NakayamaModule) -> int:
    return sum(t for _, t in m)


def projective_cover(m: NakayamaModule, alg: NakayamaAlgebra) -> tuple[int, ...]:
    """Tops of the indecomposable projectives in the projective cover."""
    return tuple(i for i, _ in m)


def syzygy(m: NakayamaModule, alg: NakayamaAlgebra) -> NakayamaModule:
    """Kernel of the projective cover: Omega M(i, t) = rad^t P(i) = M(i - t, len P(i) - t)."""
    out = []
    for i, t in m:
        full = alg.proj_length(i)
        if t < full:
            out.append((alg.step(i, t), full - t))
    return NakayamaModule(tuple(out))


def iterated_syzygy(m: NakayamaModule, alg: NakayamaAlgebra, times: int) -> NakayamaModule:
    for _ in range(times):
        m = syzygy(m, alg)
    return m


def has_projective_summand(m: NakayamaModule, alg: NakayamaAlgebra) -> bool:
    return any(alg.is_projective(i, t) for i, t in m)


@dataclass(frozen=True)
class TwistData:
    """Permutation of vertices read off from Omega^{d+2} on simples.

    ``simple_perm[i]`` is the vertex of Omega^{d+2}(S_i); the (d+2)-fold
    syzygy realizes the inverse suspension, so Sigma_d sends S_i and P(i) to
    the vertex ``sigma(i)`` with sigma the inverse permutation.  For
    kC_n/rad^ell the permutation is a rotation i -> i - shift.
    """

    algebra: NakayamaAlgebra
    d: int
    simple_perm: tuple  # simple_perm[i-1]
    shift: int

    def omega(self, i: int) -> int:
        return self.simple_perm[i - 1]

    def sigma(self, i: int) -> int:
        return self.algebra.step(i, -self.shift)

    def sigma_inv(self, i: int) -> int:
        return self.algebra.step(i, self.shift)

    def suspend(self, m: NakayamaModule, times: int = 1) -> NakayamaModule:
        out = m
        for _ in range(abs(times)):
            f = self.sigma if times > 0 else self.sigma_inv
            out = NakayamaModule(tuple((f(i), t) for i, t in out))
        return out

    def orbits(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        orbits = []
        for v in self.algebra.vertices:
            if v in seen:
                continue
            orbit, cur = [], v
            while cur not in seen:
                seen.add(cur)
                orbit.append(cur)
                cur = self.sigma(cur)
            orbits.append(tuple(sorted(orbit)))
        return orbits


def twist_data(alg: NakayamaAlgebra, d: int) -> TwistData:
    if not alg.is_selfinjective:
        raise UnsupportedPeriodicity("the suspension twist needs a self-injective (cyclic) algebra")
    if d < 1:
        raise ValueError("d must be a positive integer")
    perm = []
    for i in alg.vertices:
        out = iterated_syzygy(simple(i), alg, d + 2)
        if len(out.summands) != 1 or out.summands[0][1] != 1:
            raise UnsupportedPeriodicity(
                f"Omega^{d + 2}(S_{i}) = {out.summands} is not simple over {alg}"
            )
        perm.append(out.summands[0][0])
    # perm is i -> i - shift (mod n); recover the shift from vertex 1
    shift = (1 - perm[0]) % alg.n
    for i in alg.vertices:
        if alg.step(i, shift) != perm[i - 1]:
            raise UnsupportedPeriodicity(f"syzygy permutation {perm} is not a rotation")
    return TwistData(alg, d, tuple(perm), shift)
