"""Maximal rings of quotients and the covering coalgebra of a coalgebra."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .algebra import (Algebra, make_algebra, opposite_algebra, algebra_from_matrices,
                      dual_coalgebra_of_algebra, wedderburn_blocks)
from .coalgebra import Coalgebra, dual_algebra
from .errors import (BicommutantMismatch, CoalgebraMorphismFailure, ConsistencyError,
                     NotNonSingular)
from .linalg import Mat, Subspace, kernel_basis, mat_comb
from .modules import (LEFT, RIGHT, FDModule, ModuleMap, Submodule, coalgebra_module,
                      endomorphism_algebra, hom_matrices, injective_hull, is_codense_cover,
                      is_small, maximal_codense_cover, regular_module, singular_submodule,
                      socle)
from .quiver import Quiver, sinks_and_path_counts


@dataclass
class QmaxResult:
    q: Algebra
    embedding: Mat  # columns: coordinates in q of the algebra basis
    hull: FDModule
    q_subspace: Submodule
    multiplicative: bool
    side: str = RIGHT

    @property
    def is_identity(self) -> bool:
        return self.q.dim == self.embedding.ncols


def rebase_algebra(a: Algebra, basis: Mat, labels) -> Algebra:
    """Structure constants of ``a`` on the basis given by the columns of ``basis``."""
    inv = basis.inverse()
    cols = basis.columns()
    triples = []
    for i, x in enumerate(cols):
        for j, y in enumerate(cols):
            for c, v in enumerate(inv.apply(a.mul(x, y))):
                if v:
                    triples.append((i, j, c, v))
    return make_algebra(a.field, labels, triples, inv.apply(list(a.unit)))


def _embedding_first(a: Algebra, q: Algebra, emb: Mat):
    """Re-express q so that its first basis vectors are the images of a's basis."""
    images = emb.columns()
    span = Subspace.span(q.field, q.dim, images)
    if span.dim != a.dim:
        raise ConsistencyError("algebra does not embed in its ring of quotients")
    extra = span.complement_vectors()
    basis = Mat.from_columns(q.field, images + extra, q.dim)
    labels = list(a.labels) + [f"q{k + 1}" for k in range(len(extra))]
    new = rebase_algebra(q, basis, labels)
    ident = Mat.zeros(q.field, q.dim, a.dim)
    for i in range(a.dim):
        ident.rows[i][i] = 1
    return new, ident


def _check_multiplicative(a: Algebra, q: Algebra, emb: Mat) -> bool:
    if emb.apply(list(a.unit)) != list(q.unit):
        return False
    for i in range(a.dim):
        for j in range(a.dim):
            lhs = emb.apply(a.mul(a.basis_vector(i), a.basis_vector(j)))
            rhs = q.mul(emb.column(i), emb.column(j))
            if lhs != rhs:
                return False
    return True


def qmax(a: Algebra, side: str = RIGHT) -> QmaxResult:
    """Maximal ring of quotients as the bicommutant of the injective hull."""
    key = ("qmax", side)
    if key in a._cache:
        return a._cache[key]
    if side == LEFT:
        r = qmax(opposite_algebra(a), RIGHT)
        q = opposite_algebra(r.q)
        res = QmaxResult(q, r.embedding, r.hull, r.q_subspace,
                         _check_multiplicative(a, q, r.embedding), LEFT)
        a._cache[key] = res
        return res
    f = a.field
    reg = regular_module(a, RIGHT)
    e, iota = injective_hull(reg)
    n = e.dim
    h_alg, h_mats = endomorphism_algebra(e)
    one = iota.matrix.apply(list(a.unit))
    # h o iota = 0 iff h(iota(1)) = 0, since iota(a) = rho(a) iota(1)
    phi = Mat.from_columns(f, [h.apply(one) for h in h_mats], n)
    h0 = [mat_comb(f, t, h_mats, n, n) for t in kernel_basis(phi).vectors()]
    rows = [r for h in h0 for r in h.rows]
    q_space = kernel_basis(Mat._wrap(f, rows, n)) if rows else Subspace.full(f, n)
    # Every A-map A -> E extends to the injective E, so E = H iota(1) and an
    # H-endomorphism is fixed by its value at iota(1): beta_x(h iota(1)) = h x.
    _, piv, rank = phi.rref()
    if rank != n:
        raise BicommutantMismatch("injective hull is not cyclic over its endomorphism ring")
    phi_inv = Mat.from_columns(f, [phi.column(k) for k in piv], n).inverse()
    b_mats = []
    for x in q_space.vectors():
        images = [h.apply(x) for h in h_mats]
        beta = Mat.from_columns(f, [images[k] for k in piv], n) @ phi_inv
        if any(beta.apply(phi.column(k)) != images[k] for k in range(len(h_mats))):
            raise BicommutantMismatch("evaluation map is not H-linear on the quotient subspace")
        b_mats.append(beta)
    if not b_mats:
        raise BicommutantMismatch("empty bicommutant")
    evals = Subspace.span(f, n, [b.apply(one) for b in b_mats])
    if evals != q_space or len(b_mats) != evals.dim:
        raise BicommutantMismatch("evaluation at 1 is not a bijection onto the quotient subspace")
    b_alg = algebra_from_matrices(f, b_mats, Mat.identity(f, n))
    space = b_alg._cache["matrix_space"]
    q = opposite_algebra(b_alg)  # right action reverses composition
    cols = []
    for x in e.action:
        flat = x.flat()
        if not space.contains(flat):
            raise BicommutantMismatch("algebra action is not in the bicommutant")
        cols.append(space.coords(flat))
    emb = Mat.from_columns(f, cols, q.dim)
    q, emb = _embedding_first(a, q, emb)
    if q.dim == a.dim:
        q = a
    res = QmaxResult(q, emb, e, Submodule(e, q_space), _check_multiplicative(a, q, emb))
    if not res.multiplicative:
        raise ConsistencyError("embedding into the ring of quotients is not multiplicative")
    a._cache[key] = res
    return res


@dataclass
class FastpathResult:
    algebra: Algebra
    block_dims: list
    predicted_sizes: Optional[list] = None  # n_i per sink, when a quiver is given

    @property
    def predicted_block_dims(self) -> Optional[list]:
        if self.predicted_sizes is None:
            return None
        return sorted((n * n for n in self.predicted_sizes), reverse=True)


def qmax_socle_fastpath(a: Algebra, quiver: Optional[Quiver] = None) -> FastpathResult:
    """End of the right socle, valid for right non-singular algebras."""
    reg = regular_module(a, RIGHT)
    if singular_submodule(reg).dim:
        raise NotNonSingular("the algebra is not right non-singular")
    soc = socle(reg).as_module()
    end, _ = endomorphism_algebra(soc)
    blocks = wedderburn_blocks(end).block_dims
    predicted = None
    if quiver is not None:
        predicted = list(sinks_and_path_counts(quiver).values())
    return FastpathResult(end, blocks, predicted)


# ---------------------------------------------------------------------------
# covering coalgebra


@dataclass
class CoverResult:
    d: Coalgebra
    pi: Mat
    kernel: Submodule
    flags: dict
    qmax: QmaxResult = dc_field(repr=False)
    d_module: FDModule = dc_field(repr=False)


def is_coalgebra_morphism(d: Coalgebra, c: Coalgebra, pi: Mat) -> bool:
    p = c.field.characteristic
    for x in range(d.dim):
        col = pi.column(x)
        if c.counit(col) != d.eps[x]:
            return False
        lhs = c.comultiply(col)
        rhs: dict = {}
        for u, v, coeff in d.delta[x]:
            cu, cv = pi.column(u), pi.column(v)
            for i, s in enumerate(cu):
                if s:
                    for j, t in enumerate(cv):
                        if t:
                            rhs[(i, j)] = rhs.get((i, j), 0) + coeff * s * t
        rhs = {k: (s % p if p else s) for k, s in rhs.items()}
        if lhs != {k: s for k, s in rhs.items() if s}:
            return False
    return True


def is_coideal(d: Coalgebra, k: Subspace) -> bool:
    """Delta(K) inside K (x) D + D (x) K."""
    n = d.dim
    p = d.field.characteristic
    units = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    vecs = []
    for s in k.vectors():
        for u in units:
            vecs.append([x * y for x in s for y in u])
            vecs.append([x * y for x in u for y in s])
    target = Subspace.span(d.field, n * n, [[x % p for x in v] if p else v for v in vecs])
    for s in k.vectors():
        flat = [0] * (n * n)
        for (a, b), coeff in d.comultiply(s).items():
            flat[a * n + b] = coeff
        if not target.contains(flat):
            return False
    return True


def covering_coalgebra(c: Coalgebra) -> CoverResult:
    a = dual_algebra(c)
    res = qmax(a, RIGHT)
    q = res.q
    d = dual_coalgebra_of_algebra(q)
    pi = res.embedding.T
    if not is_coalgebra_morphism(d, c, pi):
        raise CoalgebraMorphismFailure("transposed embedding is not a coalgebra map")
    f = c.field
    # D as a left C*-module through the embedding into Q = D*
    d_q = coalgebra_module(d, LEFT)
    acts = [d_q.act(res.embedding.column(b)) for b in range(a.dim)]
    d_mod = FDModule(a, LEFT, d.dim, tuple(acts), "D")
    c_mod = coalgebra_module(c, LEFT)
    pmap = ModuleMap(d_mod, c_mod, pi)
    if not pmap.is_homomorphism():
        raise CoalgebraMorphismFailure("projection is not C*-linear")
    surjective = pmap.is_surjective()
    kernel = pmap.kernel()
    flags = {
        "surjective": surjective,
        "kernel_small": is_small(kernel),
        "codense": surjective and is_codense_cover(pmap),
        "kernel_coideal": is_coideal(d, kernel.space),
        "maximal_checked": False,
    }
    if surjective:
        flags["maximal_checked"] = _compare_with_maximal_cover(c_mod, pmap)
    return CoverResult(d, pi, kernel, flags, res, d_mod)


def _compare_with_maximal_cover(c_mod: FDModule, pmap: ModuleMap) -> bool:
    """An isomorphism psi from the maximal codense cover onto D with pi psi = pi~."""
    cover, cmap = maximal_codense_cover(c_mod)
    if cover.dim != pmap.source.dim:
        return False
    basis = hom_matrices(cover, pmap.source)
    if not basis:
        return cover.dim == 0
    f = c_mod.field
    # solve sum t_k (pi h_k) = pi~
    system = Mat.from_columns(f, [(pmap.matrix @ h).flat() for h in basis],
                              c_mod.dim * cover.dim)
    t = system.solve(cmap.matrix.flat())
    if t is None:
        return False
    psi = mat_comb(f, t, basis, pmap.source.dim, cover.dim)
    return psi.rank() == cover.dim
