"""Morphisms between projectives over a Nakayama algebra, and their images.

P(j) has the path basis b_0, ..., b_{L_j - 1} with b_m sitting at vertex
step(j, m).  A map P(i) -> P(j) is fixed by where the top b'_0 goes, which
must be a path b_k of P(j) ending at i; it then sends b'_m to b_{m+k}
(zero once m + k >= L_j).  Matrix entries are linear combinations of such
paths, recorded as {path length: coefficient}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from fractions import Fraction

from rankfun import linalg
from rankfun.nakayama.algebra import NakayamaAlgebra, NakayamaModule, TwistData


def hom_basis(i: int, j: int, alg: NakayamaAlgebra) -> list[int]:
    """Path lengths k spanning Hom(P(i), P(j)): paths of length k < len P(j) from j to i."""
    return [k for k in range(alg.proj_length(j)) if alg.step(j, k) == i]


def path_image(alg: NakayamaAlgebra, j: int, k: int) -> NakayamaModule:
    """Image of the single-path map P(step(j, k)) -> P(j) of length k."""
    t = alg.proj_length(j) - k
    if t <= 0:
        return NakayamaModule()
    return NakayamaModule((((alg.step(j, k)), t),))


def _clean(entries) -> dict:
    out = {}
    for (r, c), combo in entries.items():
        combo = {int(k): Fraction(v) for k, v in combo.items() if Fraction(v) != 0}
        if combo:
            out[(r, c)] = combo
    return out


@dataclass(frozen=True)
class ProjMorphism:
    """A map between direct sums of indecomposable projectives.

    ``source`` and ``target`` list the vertices of the projective summands;
    ``entries[(r, c)]`` is the component P(source[c]) -> P(target[r]).
    """

    algebra: NakayamaAlgebra
    source: tuple
    target: tuple
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "source", tuple(self.source))
        object.__setattr__(self, "target", tuple(self.target))
        object.__setattr__(self, "entries", _clean(self.entries))
        self.validate()

    def validate(self) -> None:
        for (r, c), combo in self.entries.items():
            if not (0 <= r < len(self.target) and 0 <= c < len(self.source)):
                raise ValueError(f"entry ({r}, {c}) outside a {len(self.target)}x{len(self.source)} matrix")
            allowed = hom_basis(self.source[c], self.target[r], self.algebra)
            for k in combo:
                if k not in allowed:
                    raise ValueError(
                        f"entry ({r}, {c}): no path of length {k} from P({self.target[r]}) "
                        f"to P({self.source[c]}); allowed lengths {allowed}"
                    )

    # constructors

    @classmethod
    def identity(cls, alg: NakayamaAlgebra, obj) -> "ProjMorphism":
        obj = tuple(obj)
        return cls(alg, obj, obj, {(r, r): {0: 1} for r in range(len(obj))})

    @classmethod
    def zero(cls, alg: NakayamaAlgebra, source, target) -> "ProjMorphism":
        return cls(alg, tuple(source), tuple(target), {})

    @classmethod
    def single_path(cls, alg: NakayamaAlgebra, j: int, k: int, coeff=1) -> "ProjMorphism":
        """P(step(j, k)) -> P(j) along the path of length k."""
        i = alg.step(j, k)
        if i is None:
            raise ValueError(f"no path of length {k} out of vertex {j}")
        return cls(alg, (i,), (j,), {(0, 0): {k: coeff}})

    # structure

    def direct_sum(self, other: "ProjMorphism") -> "ProjMorphism":
        rs, cs = len(self.target), len(self.source)
        entries = dict(self.entries)
        for (r, c), combo in other.entries.items():
            entries[(r + rs, c + cs)] = combo
        return ProjMorphism(self.algebra, self.source + other.source, self.target + other.target, entries)

    def compose(self, first: "ProjMorphism") -> "ProjMorphism":
        """self o first."""
        if first.target != self.source:
            raise ValueError(f"cannot compose: {first.target} != {self.source}")
        alg = self.algebra
        entries: dict = {}
        for (r, m), g in self.entries.items():
            bound = alg.proj_length(self.target[r])
            for (m2, c), f in first.entries.items():
                if m2 != m:
                    continue
                combo = entries.setdefault((r, c), {})
                for k1, a in f.items():
                    for k2, b in g.items():
                        if k1 + k2 < bound:
                            combo[k1 + k2] = combo.get(k1 + k2, Fraction(0)) + a * b
        return ProjMorphism(alg, first.source, self.target, entries)

    def scale(self, c) -> "ProjMorphism":
        c = Fraction(c)
        return ProjMorphism(
            self.algebra,
            self.source,
            self.target,
            {rc: {k: v * c for k, v in combo.items()} for rc, combo in self.entries.items()},
        )

    def suspend(self, tw: TwistData, times: int = 1) -> "ProjMorphism":
        """Apply Sigma_d: relabel vertices by the twist, keep path lengths."""
        f = tw.sigma if times >= 0 else tw.sigma_inv
        src, tgt = self.source, self.target
        for _ in range(abs(times)):
            src = tuple(f(v) for v in src)
            tgt = tuple(f(v) for v in tgt)
        return ProjMorphism(self.algebra, src, tgt, self.entries)

    # linear algebra

    def basis(self, side: str) -> list[tuple[int, int, int]]:
        """(slot, m, vertex) for every basis vector of the source or target."""
        alg = self.algebra
        obj = self.source if side == "source" else self.target
        return [(s, m, alg.step(v, m)) for s, v in enumerate(obj) for m in range(alg.proj_length(v))]

    def matrix(self) -> list[list[Fraction]]:
        rows = self.basis("target")
        cols = self.basis("source")
        row_index = {(s, m): n for n, (s, m, _) in enumerate(rows)}
        mat = [[Fraction(0)] * len(cols) for _ in rows]
        for n, (c, m, _) in enumerate(cols):
            for (r, c2), combo in self.entries.items():
                if c2 != c:
                    continue
                for k, coeff in combo.items():
                    key = (r, m + k)
                    if key in row_index:
                        mat[row_index[key]][n] += coeff
        return mat

    def rank(self) -> int:
        return linalg.rank(linalg.transpose(self.matrix())) if self.basis("source") and self.basis("target") else 0

    def is_zero(self) -> bool:
        return linalg.is_zero(self.matrix())

    @cached_property
    def _key(self) -> tuple:
        entries = tuple(sorted((rc, tuple(sorted(combo.items()))) for rc, combo in self.entries.items()))
        return (self.algebra, self.source, self.target, entries)

    def key(self) -> tuple:
        """Hashable identity of the morphism."""
        return self._key

    def to_json(self) -> dict:
        n_rows, n_cols = len(self.target), len(self.source)
        entries = []
        for r in range(n_rows):
            row = []
            for c in range(n_cols):
                combo = self.entries.get((r, c), {})
                row.append([{"path_len": k, "coeff": v} for k, v in sorted(combo.items())])
            entries.append(row)
        return {"rows": [f"P{v}" for v in self.target], "cols": [f"P{v}" for v in self.source], "entries": entries}


def _shift(vec: list[Fraction], index: dict, basis: list) -> list[Fraction]:
    # apply the radical (one arrow) to a vector in the path basis
    out = [Fraction(0)] * len(vec)
    for n, x in enumerate(vec):
        if x:
            s, m, _ = basis[n]
            target = index.get((s, m + 1))
            if target is not None:
                out[target] += x
    return out


def radical_profile(f: ProjMorphism) -> list[dict[int, int]]:
    """dims[k][v] = dim e_v (rad^k Im f)."""
    alg = f.algebra
    basis = f.basis("target")
    index = {(s, m): n for n, (s, m, _) in enumerate(basis)}
    mat = f.matrix()
    cols = linalg.transpose(mat) if basis else []
    # each column is homogeneous: the image of a basis vector at one vertex
    vertex_of_col = [v for (_, _, v) in f.basis("source")]
    gens = list(zip(vertex_of_col, cols))
    profile = []
    while True:
        dims = {}
        for v in alg.vertices:
            vecs = [vec for w, vec in gens if w == v]
            dims[v] = linalg.rank(vecs) if vecs else 0
        if not any(dims.values()):
            break
        profile.append(dims)
        gens = [(alg.step(w, 1), _shift(vec, index, basis)) for w, vec in gens]
        gens = [(w, vec) for w, vec in gens if w is not None and any(vec)]
    return profile


_IMAGE_CACHE: dict = {}


def image_of(f: ProjMorphism) -> NakayamaModule:
    """Iso class of Im f (memoized on the morphism data)."""
    key = f.key()
    if key not in _IMAGE_CACHE:
        _IMAGE_CACHE[key] = _image_from_profile(f)
    return _IMAGE_CACHE[key]


def _image_from_profile(f: ProjMorphism) -> NakayamaModule:
    """Iso class of Im f, read off the radical layers.

    a_k(v) = dim e_v(rad^k U) - dim e_v(rad^{k+1} U) counts interval summands
    of length > k whose k-th factor is S_v; the number of summands M(i, t)
    is then a_{t-1}(step(i, t-1)) - a_t(step(i, t)).
    """
    alg = f.algebra
    profile = radical_profile(f)
    depth = len(profile)

    def layer(k: int, v) -> int:
        if v is None or k >= depth:
            return 0
        nxt = profile[k + 1][v] if k + 1 < depth else 0
        return profile[k][v] - nxt

    summands = []
    for i in alg.vertices:
        for t in range(1, depth + 1):
            count = layer(t - 1, alg.step(i, t - 1)) - layer(t, alg.step(i, t))
            if count < 0:
                raise ArithmeticError(f"inconsistent radical profile at M({i},{t})")
            summands.extend([(i, t)] * count)
    return NakayamaModule(tuple(summands))


def presenting_morphism(alg: NakayamaAlgebra, i: int, t: int) -> ProjMorphism:
    """P(i) -> P(i + ell - t) along a path of length ell - t; its image is M(i, t).

    The projective cover P(i) -> M(i, t) followed by the injective envelope
    M(i, t) -> P(i + ell - t), which is projective since the algebra is
    self-injective.
    """
    if not alg.is_selfinjective:
        raise ValueError("presenting morphisms through injective envelopes need a cyclic algebra")
    if not alg.is_interval(i, t):
        raise ValueError(f"M({i},{t}) is not an interval module over {alg}")
    k = alg.ell - t
    j = alg.step(i, -k)
    return ProjMorphism.single_path(alg, j, k)
