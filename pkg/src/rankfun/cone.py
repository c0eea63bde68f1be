"""The polyhedral cone of rank functions on a finite skeleton.

The cone lives in R^{indecs}: nonnegativity, one inequality per angle in the
rotation closure (RO2), and the equalities rho(X) = rho(Sigma X) (RO3).  The
equalities just identify coordinates, so everything is computed on the
quotient by suspension orbits and expanded back at the end.

Extreme rays come from the double description method started at the
nonnegative orthant.  Hilbert bases are found by enumerating the lattice
points of the box spanned by the rays, which is exponential in the orbit
count; RANKFUN_CONE_MAX_DIM caps the dimension.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from rankfun.core import CategorySkeleton, angle_closure
from rankfun.rank_morphisms import require_odd
from rankfun.rank_objects import RankOnObjects

DEFAULT_MAX_DIM = 24
MAX_BOX_POINTS = 2_000_000


class ConeTooLarge(ValueError):
    pass


def max_dim() -> int:
    raw = os.environ.get("RANKFUN_CONE_MAX_DIM")
    if raw is None:
        return DEFAULT_MAX_DIM
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"RANKFUN_CONE_MAX_DIM must be an integer, got {raw!r}") from None


def primitive(vec) -> tuple[int, ...]:
    """Smallest positive integer multiple direction of a rational vector."""
    fr = [Fraction(x) for x in vec]
    den = math.lcm(*(x.denominator for x in fr)) if fr else 1
    ints = [int(x * den) for x in fr]
    g = math.gcd(*ints) if any(ints) else 1
    return tuple(x // g for x in ints)


@dataclass(frozen=True)
class RankCone:
    """{x >= 0 : rows . x >= 0, x_a = x_b for each equality pair} over ``labels``."""

    labels: tuple
    rows: tuple  # inequality rows, integer coefficient tuples over labels
    equalities: tuple  # pairs (label, label)
    parity_rows: tuple = ()  # rows that must be even on lattice points ("morphisms" lattice)
    d: int = 0

    @property
    def classes(self) -> list[tuple]:
        """Labels grouped by the equalities (union-find)."""
        parent = {x: x for x in self.labels}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.equalities:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb, key=self.labels.index)] = min(ra, rb, key=self.labels.index)
        groups: dict = {}
        for x in self.labels:
            groups.setdefault(find(x), []).append(x)
        return [tuple(g) for g in groups.values()]

    def class_index(self) -> dict:
        return {x: n for n, cls in enumerate(self.classes) for x in cls}

    def reduce_row(self, row) -> tuple[int, ...]:
        idx = self.class_index()
        out = [0] * len(self.classes)
        for x, c in zip(self.labels, row):
            out[idx[x]] += c
        return tuple(out)

    def reduced_rows(self) -> list[tuple[int, ...]]:
        rows = {self.reduce_row(r) for r in self.rows}
        return sorted(r for r in rows if any(r))

    def reduced_parity_rows(self) -> list[tuple[int, ...]]:
        rows = {tuple(x % 2 for x in self.reduce_row(r)) for r in self.parity_rows}
        return sorted(r for r in rows if any(r))

    def expand(self, c) -> tuple:
        idx = self.class_index()
        return tuple(c[idx[x]] for x in self.labels)

    def contract(self, x) -> tuple:
        """Orbit coordinates of a point; raises if it is not constant on the classes."""
        values = dict(zip(self.labels, x))
        out = []
        for cls in self.classes:
            vals = {values[lab] for lab in cls}
            if len(vals) != 1:
                raise ValueError(f"point is not constant on the suspension class {list(cls)}")
            out.append(vals.pop())
        return tuple(out)

    def contains(self, x) -> bool:
        values = dict(zip(self.labels, x))
        if any(Fraction(v) < 0 for v in x):
            return False
        if any(values[p] != values[q] for p, q in self.equalities):
            return False
        return all(sum(Fraction(c) * Fraction(v) for c, v in zip(r, x)) >= 0 for r in self.rows)


def build_cone(s: CategorySkeleton, depth: int | None = None, lattice: str = "objects") -> RankCone:
    """Cone of rank functions on objects of ``s``; RO2 over the rotation closure."""
    labels = tuple(s.indecs)
    pos = {x: n for n, x in enumerate(labels)}
    rows = []
    for a in angle_closure(s, depth):
        row = [0] * len(labels)
        for i, obj in enumerate(a.objects):
            for lab in obj:
                row[pos[lab]] += (-1) ** i
        rows.append(tuple(row))
    equalities = tuple((x, s.suspension[x]) for x in labels if s.suspension[x] != x)
    parity = ()
    if lattice == "morphisms":
        require_odd(s.d)
        # Psi value = (rho(X_0) + sum_{i>=1} (-1)^{i-1} rho(X_i)) / 2 must be an integer
        prow = []
        for a in angle_closure(s, depth):
            row = [0] * len(labels)
            for i, obj in enumerate(a.objects):
                for lab in obj:
                    row[pos[lab]] += 1 if i == 0 else (-1) ** (i - 1)
            prow.append(tuple(row))
        parity = tuple(prow)
    elif lattice != "objects":
        raise ValueError(f"lattice must be 'objects' or 'morphisms', got {lattice!r}")
    return RankCone(labels, tuple(rows), equalities, parity, s.d)


def cone_from_data(labels, rows, equalities=(), parity_rows=()) -> RankCone:
    """A cone from raw data; equalities must be pairs of labels (x_a = x_b)."""
    labels = tuple(labels)
    eqs = []
    for e in equalities:
        if len(e) != 2 or e[0] not in labels or e[1] not in labels:
            raise ValueError(f"only equalities x_a = x_b between known labels are supported, got {e!r}")
        eqs.append((e[0], e[1]))
    return RankCone(labels, tuple(tuple(int(c) for c in r) for r in rows), tuple(eqs), tuple(parity_rows))


# extreme rays


def _dd_rays(dim: int, rows: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    # rays of {c >= 0, rows . c >= 0} with incidence bitmasks over all constraints seen so far
    rays = []
    for i in range(dim):
        e = tuple(int(j == i) for j in range(dim))
        rays.append((e, ((1 << dim) - 1) & ~(1 << i)))
    for n, row in enumerate(rows):
        bit = 1 << (dim + n)
        vals = [sum(a * b for a, b in zip(row, r)) for r, _ in rays]
        pos = [k for k, v in enumerate(vals) if v > 0]
        neg = [k for k, v in enumerate(vals) if v < 0]
        zero = [k for k, v in enumerate(vals) if v == 0]
        new = [(rays[k][0], rays[k][1]) for k in pos]
        new += [(rays[k][0], rays[k][1] | bit) for k in zero]
        for p in pos:
            for q in neg:
                common = rays[p][1] & rays[q][1]
                if any(
                    k not in (p, q) and (rays[k][1] & common) == common for k in range(len(rays))
                ):
                    continue
                vp, vq = vals[p], vals[q]
                comb = tuple(vp * b - vq * a for a, b in zip(rays[p][0], rays[q][0]))
                new.append((primitive(comb), common | bit))
        rays = new
    return sorted({r for r, _ in rays})


def extreme_rays(cone: RankCone) -> list[tuple[int, ...]]:
    """Primitive integer extreme rays, in label coordinates, sorted."""
    dim = len(cone.classes)
    if dim > max_dim():
        raise ConeTooLarge(f"cone has {dim} orbit coordinates, bound is {max_dim()} (RANKFUN_CONE_MAX_DIM)")
    reduced = _dd_rays(dim, cone.reduced_rows())
    return sorted(cone.expand(r) for r in reduced)


def reduced_extreme_rays(cone: RankCone) -> list[tuple[int, ...]]:
    dim = len(cone.classes)
    if dim > max_dim():
        raise ConeTooLarge(f"cone has {dim} orbit coordinates, bound is {max_dim()} (RANKFUN_CONE_MAX_DIM)")
    return _dd_rays(dim, cone.reduced_rows())


# Hilbert basis


def _in_lattice(c, parity_rows) -> bool:
    return all(sum(a * b for a, b in zip(row, c)) % 2 == 0 for row in parity_rows)


def _in_cone(c, rows) -> bool:
    return all(x >= 0 for x in c) and all(sum(a * b for a, b in zip(row, c)) >= 0 for row in rows)


@dataclass
class HilbertBasis:
    elements: list  # label coordinates
    rays: list  # lattice-primitive rays, label coordinates
    lattice: str
    certificates: list = field(default_factory=list)


def hilbert_basis(cone: RankCone, certify: bool = True) -> HilbertBasis:
    """Minimal generators of cone ∩ lattice, by box enumeration and reducibility filtering."""
    rows = cone.reduced_rows()
    parity = cone.reduced_parity_rows()
    rays = reduced_extreme_rays(cone)
    scaled = []
    for r in rays:
        m = 1
        while not _in_lattice(tuple(m * x for x in r), parity):
            m += 1
        scaled.append(tuple(m * x for x in r))
    dim = len(cone.classes)
    bound = [sum(r[c] for r in scaled) for c in range(dim)]
    size = math.prod(b + 1 for b in bound)
    if size > MAX_BOX_POINTS:
        raise ConeTooLarge(f"Hilbert basis search box has {size} points (cap {MAX_BOX_POINTS})")
    points = [
        c
        for c in itertools.product(*(range(b + 1) for b in bound))
        if any(c) and _in_cone(c, rows) and _in_lattice(c, parity)
    ]
    points.sort(key=lambda c: (sum(c), c))
    basis: list[tuple[int, ...]] = []
    for x in points:
        reducible = False
        for h in basis:
            rest = tuple(a - b for a, b in zip(x, h))
            if any(rest) and _in_cone(rest, rows) and _in_lattice(rest, parity):
                reducible = True
                break
        if not reducible:
            basis.append(x)
    lattice = "morphisms" if cone.parity_rows else "objects"
    out = HilbertBasis(sorted(cone.expand(h) for h in basis), sorted(cone.expand(r) for r in scaled), lattice)
    if certify:
        out.certificates = [irreducibility_certificate(cone, h) for h in out.elements]
    return out


def irreducibility_certificate(cone: RankCone, x) -> dict:
    """Exhaustive search for a split x = y + (x - y) with both parts nonzero lattice points of the cone."""
    rows = cone.reduced_rows()
    parity = cone.reduced_parity_rows()
    c = cone.contract(x)
    tried = 0
    for y in itertools.product(*(range(v + 1) for v in c)):
        if not any(y) or y == c:
            continue
        tried += 1
        z = tuple(a - b for a, b in zip(c, y))
        if _in_cone(y, rows) and _in_lattice(y, parity) and _in_cone(z, rows) and _in_lattice(z, parity):
            return {"element": list(x), "irreducible": False, "split": [list(cone.expand(y)), list(cone.expand(z))]}
    return {"element": list(x), "irreducible": True, "splits_tried": tried}


def decompose_integral(cone: RankCone, r: RankOnObjects, basis: HilbertBasis | None = None) -> list[list[tuple]]:
    """All ways to write r as a multiset of Hilbert basis elements (each sorted)."""
    if basis is None:
        basis = hilbert_basis(cone, certify=False)
    x = tuple(r[lab] for lab in cone.labels)
    if any(v.denominator != 1 for v in x):
        raise ValueError("only integral rank functions decompose over the Hilbert basis")
    c = tuple(int(v) for v in cone.contract(x))
    if not (_in_cone(c, cone.reduced_rows()) and _in_lattice(c, cone.reduced_parity_rows())):
        raise ValueError("the rank function is not a lattice point of the cone")
    elems = [cone.contract(h) for h in basis.elements]

    @lru_cache(maxsize=None)
    def search(rest: tuple, start: int) -> tuple:
        if not any(rest):
            return ((),)
        found = []
        for n in range(start, len(elems)):
            e = elems[n]
            if all(a <= b for a, b in zip(e, rest)):
                for tail in search(tuple(b - a for a, b in zip(e, rest)), n):
                    found.append((n,) + tail)
        return tuple(found)

    return [[basis.elements[n] for n in combo] for combo in search(c, 0)]
