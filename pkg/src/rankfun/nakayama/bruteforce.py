"""Slow reference computations over explicit quiver representations.

Nothing here uses the interval arithmetic of the engine: projectives are
built by enumerating paths, submodules and kernels come from exact linear
algebra, and iso classes are identified with the classical rank formula

    #{summands with top i and length >= t} = rk(p_i^{t-1}) - rk(p_{i'}^{t})

where p_v^k is the composite of the k arrows leaving v and i' is the vertex
with an arrow into i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from rankfun import linalg
from rankfun.nakayama.algebra import NakayamaAlgebra, NakayamaModule
from rankfun.nakayama.morphisms import ProjMorphism


def arrow_target(alg: NakayamaAlgebra, v: int) -> int | None:
    if alg.shape == "cyclic":
        return (v - 2) % alg.n + 1
    return v - 1 if v > 1 else None


def arrow_source_into(alg: NakayamaAlgebra, v: int) -> int | None:
    if alg.shape == "cyclic":
        return v % alg.n + 1
    return v + 1 if v < alg.n else None


def enumerate_paths(alg: NakayamaAlgebra, v: int) -> list[tuple[int, ...]]:
    """Nonzero paths out of v as vertex sequences, shortest first (paths of length ell vanish)."""
    out = [(v,)]
    frontier = [(v,)]
    while frontier:
        nxt = []
        for p in frontier:
            w = arrow_target(alg, p[-1])
            if w is not None and len(p) < alg.ell:
                nxt.append(p + (w,))
        out.extend(nxt)
        frontier = nxt
    return out


@dataclass
class Rep:
    """A representation: a basis of vertex-tagged vectors and one matrix per arrow.

    ``arrows[v]`` maps V_v -> V_{target(v)} as a matrix (rows: target basis).
    """

    algebra: NakayamaAlgebra
    dims: dict
    arrows: dict

    def total_dim(self) -> int:
        return sum(self.dims.values())


def _identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]


def path_rep(alg: NakayamaAlgebra, v: int) -> tuple[Rep, list[tuple[int, ...]]]:
    """P(v) from its path basis."""
    paths = enumerate_paths(alg, v)
    return _rep_from_paths(alg, paths), paths


def _rep_from_paths(alg: NakayamaAlgebra, paths: list[tuple[int, ...]]) -> Rep:
    by_vertex: dict[int, list] = {w: [] for w in alg.vertices}
    for p in paths:
        by_vertex[p[-1]].append(p)
    dims = {w: len(by_vertex[w]) for w in alg.vertices}
    arrows = {}
    for w in alg.vertices:
        u = arrow_target(alg, w)
        if u is None:
            continue
        mat = [[Fraction(0)] * dims[w] for _ in range(dims[u])]
        for c, p in enumerate(by_vertex[w]):
            q = p + (u,)
            if q in by_vertex[u]:
                mat[by_vertex[u].index(q)][c] = Fraction(1)
        arrows[w] = mat
    return Rep(alg, dims, arrows)


def _path_matrix(rep: Rep, v: int, k: int):
    """Composite of the k arrows leaving v, with its target vertex."""
    alg = rep.algebra
    mat = _identity(rep.dims[v])
    cur = v
    for _ in range(k):
        nxt = arrow_target(alg, cur)
        if nxt is None:
            return None, None
        mat = linalg.matmul(rep.arrows[cur], mat) if rep.dims[nxt] and rep.dims[v] else [[Fraction(0)] * rep.dims[v] for _ in range(rep.dims[nxt])]
        cur = nxt
    return mat, cur


def _path_rank(rep: Rep, v: int | None, k: int) -> int:
    if v is None or rep.dims.get(v, 0) == 0:
        return 0
    mat, _ = _path_matrix(rep, v, k)
    if mat is None or not mat:
        return 0
    return linalg.rank(mat)


def identify(rep: Rep) -> NakayamaModule:
    """Interval decomposition by the rank formula."""
    alg = rep.algebra
    total = rep.total_dim()
    summands = []
    for i in alg.vertices:
        pred = arrow_source_into(alg, i)

        def at_least(t: int) -> int:
            return _path_rank(rep, i, t - 1) - _path_rank(rep, pred, t)

        for t in range(1, total + 1):
            c = at_least(t) - at_least(t + 1)
            summands.extend([(i, t)] * c)
    return NakayamaModule(tuple(summands))


def interval_rep(alg: NakayamaAlgebra, i: int, t: int) -> Rep:
    """M(i, t) = P(i) / (paths of length >= t)."""
    paths = [p for p in enumerate_paths(alg, i) if len(p) <= t]
    if len(paths) < t:
        raise ValueError(f"M({i},{t}) does not exist over {alg}")
    return _rep_from_paths(alg, paths)


def composition_factors(alg: NakayamaAlgebra, m: NakayamaModule) -> tuple[int, ...]:
    counts = [0] * alg.n
    for i, t in m:
        rep = interval_rep(alg, i, t)
        for v in alg.vertices:
            counts[v - 1] += rep.dims[v]
    return tuple(counts)


def _subrep(ambient: Rep, basis_by_vertex: dict) -> Rep:
    # restrict the arrows of ``ambient`` to an invariant subspace given by column bases
    alg = ambient.algebra
    dims = {v: len(basis_by_vertex[v]) for v in alg.vertices}
    arrows = {}
    for v in alg.vertices:
        u = arrow_target(alg, v)
        if u is None:
            continue
        mat = [[Fraction(0)] * dims[v] for _ in range(dims[u])]
        for c, vec in enumerate(basis_by_vertex[v]):
            img = [sum((row[k] * vec[k] for k in range(len(vec))), Fraction(0)) for row in ambient.arrows[v]]
            coords = _solve(basis_by_vertex[u], img)
            for r, x in enumerate(coords):
                mat[r][c] = x
        arrows[v] = mat
    return Rep(alg, dims, arrows)


def _solve(basis: list, target: list) -> list[Fraction]:
    """Coordinates of ``target`` in the span of ``basis`` (raises if outside)."""
    if not basis:
        if any(target):
            raise ArithmeticError("subspace is not invariant")
        return []
    n = len(basis)
    # columns = basis vectors, augmented with the target
    rows = [[basis[c][r] for c in range(n)] + [target[r]] for r in range(len(target))]
    reduced, pivots = linalg.rref(rows)
    if n in pivots:
        raise ArithmeticError("subspace is not invariant")
    coords = [Fraction(0)] * n
    for row, p in zip(reduced, pivots):
        coords[p] = row[n]
    return coords


def syzygy(alg: NakayamaAlgebra, m: NakayamaModule) -> NakayamaModule:
    """Kernel of the projective cover, computed as a null space summand by summand."""
    out = NakayamaModule()
    for i, t in m:
        cover, paths = path_rep(alg, i)
        quotient = [p for p in paths if len(p) <= t]
        basis_by_vertex = {}
        for v in alg.vertices:
            dom = [p for p in paths if p[-1] == v]
            cod = [p for p in quotient if p[-1] == v]
            mat = [[Fraction(int(p == q)) for p in dom] for q in cod]
            basis_by_vertex[v] = linalg.nullspace(mat, len(dom)) if cod else [
                [Fraction(int(r == c)) for r in range(len(dom))] for c in range(len(dom))
            ]
        out = out + identify(_subrep(cover, basis_by_vertex))
    return out


def _projective_sum(alg: NakayamaAlgebra, obj: tuple) -> tuple[Rep, list]:
    # direct sum of path representations, with (slot, path) labels per vertex
    labels: dict[int, list] = {v: [] for v in alg.vertices}
    for s, v in enumerate(obj):
        for p in enumerate_paths(alg, v):
            labels[p[-1]].append((s, p))
    dims = {v: len(labels[v]) for v in alg.vertices}
    arrows = {}
    for v in alg.vertices:
        u = arrow_target(alg, v)
        if u is None:
            continue
        mat = [[Fraction(0)] * dims[v] for _ in range(dims[u])]
        for c, (s, p) in enumerate(labels[v]):
            q = (s, p + (u,))
            if q in labels[u]:
                mat[labels[u].index(q)][c] = Fraction(1)
        arrows[v] = mat
    return Rep(alg, dims, arrows), labels


def image(f: ProjMorphism) -> NakayamaModule:
    """Image of f as a subrepresentation of the target, identified by ranks."""
    alg = f.algebra
    target, tlabels = _projective_sum(alg, f.target)
    _, slabels = _projective_sum(alg, f.source)
    basis_by_vertex = {}
    for v in alg.vertices:
        cols = []
        for s, p in slabels[v]:
            # image of path p of P(source[s]) is the sum over entry paths q of (q then p)
            vec = [Fraction(0)] * target.dims[v]
            for (r, c), combo in f.entries.items():
                if c != s:
                    continue
                for k, coeff in combo.items():
                    # the entry path of length k runs from target[r] to source[s]
                    full = next(
                        (q for q in enumerate_paths(alg, f.target[r]) if len(q) == k + len(p)),
                        None,
                    )
                    if full is not None and (r, full) in tlabels[v]:
                        vec[tlabels[v].index((r, full))] += coeff
            cols.append(vec)
        if cols and target.dims[v]:
            basis_by_vertex[v] = linalg.column_space(linalg.transpose(cols), target.dims[v])
        else:
            basis_by_vertex[v] = []
    return identify(_subrep(target, basis_by_vertex))


def hom_dim(alg: NakayamaAlgebra, src: Rep, tgt: Rep) -> int:
    """dim Hom(src, tgt): solve the commutation equations for vertex-wise matrices."""
    blocks = []
    offset = 0
    for v in alg.vertices:
        blocks.append((v, offset))
        offset += tgt.dims[v] * src.dims[v]
    start = dict(blocks)
    equations = []
    for v in alg.vertices:
        u = arrow_target(alg, v)
        if u is None:
            continue
        # tgt.arrow[v] @ F_v - F_u @ src.arrow[v] = 0, entry (r, c) with r in tgt_u, c in src_v
        for r in range(tgt.dims[u]):
            for c in range(src.dims[v]):
                row = [Fraction(0)] * offset
                for k in range(tgt.dims[v]):
                    coeff = tgt.arrows[v][r][k]
                    if coeff:
                        row[start[v] + k * src.dims[v] + c] += coeff
                for k in range(src.dims[u]):
                    coeff = src.arrows[v][k][c]
                    if coeff:
                        row[start[u] + r * src.dims[u] + k] -= coeff
                equations.append(row)
    if offset == 0:
        return 0
    return offset - (linalg.rank(equations) if equations else 0)


def hom_dim_projectives(alg: NakayamaAlgebra, i: int, j: int) -> int:
    return hom_dim(alg, path_rep(alg, i)[0], path_rep(alg, j)[0])
