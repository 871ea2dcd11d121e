"""Finite-dimensional coalgebras by structure constants.

``delta[c]`` is a tuple of ``(a, b, coeff)`` with
``Delta(b_c) = sum coeff * b_a (x) b_b``, sorted by ``(a, b)`` and free of
zero coefficients, so structural equality is plain tuple equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence

from .algebra import Algebra, Violation, jacobson_radical, make_algebra
from .field import FieldSpec, QQ
from .linalg import Subspace, kernel_basis
from .quiver import Quiver, enumerate_paths, loop_quiver


@dataclass(frozen=True)
class Coalgebra:
    field: FieldSpec
    labels: tuple[str, ...]
    delta: tuple[tuple[tuple[int, int, object], ...], ...]
    eps: tuple
    _cache: dict = dc_field(default_factory=dict, repr=False, compare=False, hash=False)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def __repr__(self):
        return f"Coalgebra(dim={self.dim}, field={self.field})"

    def comultiply(self, v: Sequence) -> dict:
        """Delta(v) as a sparse dict {(a, b): coeff}."""
        p = self.field.characteristic
        out: dict = {}
        for c, x in enumerate(v):
            if x:
                for a, b, coeff in self.delta[c]:
                    out[(a, b)] = out.get((a, b), 0) + x * coeff
        if p:
            out = {k: s % p for k, s in out.items()}
        return {k: s for k, s in out.items() if s}

    def counit(self, v: Sequence):
        p = self.field.characteristic
        s = sum(x * e for x, e in zip(v, self.eps) if x and e)
        return s % p if p else s


def make_coalgebra(field: FieldSpec, labels, triples, eps) -> Coalgebra:
    """Build from (c, a, b, coeff) entries; duplicates are summed."""
    p = field.characteristic
    n = len(labels)
    acc: list[dict] = [{} for _ in range(n)]
    for c, a, b, coeff in triples:
        coeff = field(coeff)
        if coeff:
            v = acc[c].get((a, b), 0) + coeff
            acc[c][(a, b)] = v % p if p else v
    delta = tuple(tuple((a, b, v) for (a, b), v in sorted(d.items()) if v) for d in acc)
    return Coalgebra(field, tuple(labels), delta, tuple(field(x) for x in eps))


def validate_coalgebra(c: Coalgebra) -> Optional[Violation]:
    p = c.field.characteristic
    n = c.dim
    for x in range(n):
        left: dict = {}
        right: dict = {}
        for a, b, v in c.delta[x]:
            e = c.eps[a]
            if e:
                left[b] = left.get(b, 0) + e * v
            e = c.eps[b]
            if e:
                right[a] = right.get(a, 0) + e * v
        for side, acc in (("left counit", left), ("right counit", right)):
            want = {x: 1}
            got = {k: (s % p if p else s) for k, s in acc.items()}
            got = {k: s for k, s in got.items() if s}
            if got != want:
                return Violation(side, c.labels[x])
    for x in range(n):
        lhs: dict = {}
        rhs: dict = {}
        for a, b, v in c.delta[x]:
            for a1, a2, w in c.delta[a]:
                lhs[(a1, a2, b)] = lhs.get((a1, a2, b), 0) + v * w
            for b1, b2, w in c.delta[b]:
                rhs[(a, b1, b2)] = rhs.get((a, b1, b2), 0) + v * w
        norm = lambda d: {k: s for k, s in ((k, s % p if p else s) for k, s in d.items()) if s}
        if norm(lhs) != norm(rhs):
            return Violation("coassociativity", c.labels[x])
    return None


# ---------------------------------------------------------------------------
# constructors


def path_coalgebra(q: Quiver, max_len: Optional[int] = None, field: FieldSpec = QQ) -> Coalgebra:
    """Basis = paths; Delta(w) = sum over factorizations w = uv of u (x) v."""
    paths = enumerate_paths(q, max_len)
    index = {p: i for i, p in enumerate(paths)}
    triples = []
    for i, w in enumerate(paths):
        # split after k arrows; k = 0 and k = len give the trivial end factors
        vertices = [w.start] + [q.target(a) for a in w.arrows]
        for k in range(len(w) + 1):
            mid = vertices[k]
            u = type(w)(w.start, mid, w.arrows[:k])
            v = type(w)(mid, w.end, w.arrows[k:])
            triples.append((i, index[u], index[v], 1))
    eps = [1 if len(w) == 0 else 0 for w in paths]
    return make_coalgebra(field, [w.label(q) for w in paths], triples, eps)


def matrix_coalgebra(field: FieldSpec, n: int) -> Coalgebra:
    """Delta(E_ij) = sum_l E_il (x) E_lj, eps(E_ij) = delta_ij; row-major basis."""
    idx = lambda i, j: i * n + j
    triples = [(idx(i, j), idx(i, l), idx(l, j), 1)
               for i in range(n) for j in range(n) for l in range(n)]
    eps = [1 if i == j else 0 for i in range(n) for j in range(n)]
    labels = [f"E{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    return make_coalgebra(field, labels, triples, eps)


def truncated_divided_power(field: FieldSpec, n: int) -> Coalgebra:
    """Basis 1, x, ..., x^(n-1) with Delta(x^m) = sum x^i (x) x^(m-i)."""
    return path_coalgebra(loop_quiver(), max_len=n - 1, field=field)


def group_like_coalgebra(field: FieldSpec, m: int = 1) -> Coalgebra:
    triples = [(i, i, i, 1) for i in range(m)]
    return make_coalgebra(field, [f"g{i + 1}" for i in range(m)], triples, [1] * m)


def direct_sum_coalgebra(cs: Sequence[Coalgebra]) -> Coalgebra:
    if len(cs) == 1:
        return cs[0]
    f = cs[0].field
    triples, labels, eps = [], [], []
    off = 0
    for k, c in enumerate(cs):
        f.check_same(c.field)
        for x, terms in enumerate(c.delta):
            for a, b, v in terms:
                triples.append((x + off, a + off, b + off, v))
        labels += [f"{k}:{l}" for l in c.labels]
        eps += list(c.eps)
        off += c.dim
    return make_coalgebra(f, labels, triples, eps)


# ---------------------------------------------------------------------------
# dual algebra and coradical


def dual_algebra(c: Coalgebra) -> Algebra:
    """Convolution algebra on the dual basis: m[a,b->c] = d[c][a,b], unit = eps."""
    if "dual" not in c._cache:
        triples = [(a, b, x, v) for x, terms in enumerate(c.delta) for a, b, v in terms]
        c._cache["dual"] = make_algebra(c.field, c.labels, triples, c.eps)
    return c._cache["dual"]


def coradical(c: Coalgebra) -> Subspace:
    """Annihilator in C of the radical of C*."""
    rad = jacobson_radical(dual_algebra(c))
    if rad.dim == 0:
        return Subspace.full(c.field, c.dim)
    return kernel_basis(rad.basis)


def is_subcoalgebra(c: Coalgebra, v: Subspace) -> bool:
    """Delta(V) inside V (x) V, tested through the Kronecker basis of V (x) V."""
    n = c.dim
    basis = v.vectors()
    if not basis:
        return True
    p = c.field.characteristic
    prods = [[x * y % p if p else x * y for x in s for y in t] for s in basis for t in basis]
    tensor = Subspace.span(c.field, n * n, prods)
    for s in basis:
        flat = [0] * (n * n)
        for (a, b), coeff in c.comultiply(s).items():
            flat[a * n + b] = coeff
        if not tensor.contains(flat):
            return False
    return True


def is_cocommutative(c: Coalgebra) -> bool:
    for terms in c.delta:
        d = {(a, b): v for a, b, v in terms}
        if any(d.get((b, a)) != v for (a, b), v in d.items()):
            return False
    return True


def is_cosemisimple(c: Coalgebra) -> bool:
    return jacobson_radical(dual_algebra(c)).dim == 0


def coalgebra_equal_entrywise(c1: Coalgebra, c2: Coalgebra) -> bool:
    """Same field, dimension, Delta tensor and counit (labels ignored)."""
    return (c1.field == c2.field and c1.delta == c2.delta and c1.eps == c2.eps)


def isomorphic_by_permutation(c1: Coalgebra, c2: Coalgebra, perm: Sequence[int]) -> bool:
    """True when basis element i of c1 maps to perm[i] of c2 as a coalgebra map."""
    if c1.dim != c2.dim:
        return False
    for i in range(c1.dim):
        mapped = tuple(sorted((perm[a], perm[b], v) for a, b, v in c1.delta[i]))
        if mapped != c2.delta[perm[i]] or c1.eps[i] != c2.eps[perm[i]]:
            return False
    return True

