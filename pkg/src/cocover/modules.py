"""Finite-dimensional one-sided modules over an :class:`Algebra`.

Every module acts on column vectors: ``action[b]`` is the matrix of the basis
element ``b``.  Left modules satisfy rho(ab) = rho(a) rho(b), right modules
rho(ab) = rho(b) rho(a).  A homomorphism is a matrix F with
F rho_X(b) = rho_Y(b) F for all b, whichever the side.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence

from .algebra import (Algebra, Violation, algebra_from_matrices, jacobson_radical,
                      primitive_idempotents, quotient_algebra, wedderburn_blocks)
from .coalgebra import Coalgebra, dual_algebra
from .errors import (AlgebraMismatch, ConsistencyError, NotSurjective, SideMismatch,
                     UnsupportedCharacteristic)
from .linalg import Echelon, Mat, Subspace, kernel_basis, mat_comb

LEFT, RIGHT = "left", "right"


def other_side(side: str) -> str:
    return RIGHT if side == LEFT else LEFT


@dataclass(eq=False)
class FDModule:
    algebra: Algebra
    side: str
    dim: int
    action: tuple
    name: str = ""
    _cache: dict = dc_field(default_factory=dict, repr=False)

    def __repr__(self):
        return f"FDModule({self.side}, dim={self.dim}{', ' + self.name if self.name else ''})"

    @property
    def field(self):
        return self.algebra.field

    def act(self, a: Sequence) -> Mat:
        """Matrix of the algebra element with coordinates ``a``."""
        return mat_comb(self.field, a, self.action, self.dim, self.dim)

    def zero_submodule(self) -> "Submodule":
        return Submodule(self, Subspace.zero(self.field, self.dim))

    def full_submodule(self) -> "Submodule":
        return Submodule(self, Subspace.full(self.field, self.dim))

    def identity(self) -> "ModuleMap":
        return ModuleMap(self, self, Mat.identity(self.field, self.dim))

    def submodule(self, vectors: Sequence[Sequence]) -> "Submodule":
        return Submodule(self, generated_subspace(self, vectors))


def make_module(algebra: Algebra, side: str, action: Sequence[Mat], name: str = "") -> FDModule:
    dim = action[0].nrows if action else 0
    return FDModule(algebra, side, dim, tuple(action), name)


def validate_module(m: FDModule) -> Optional[Violation]:
    a = m.algebra
    if m.act(a.unit) != Mat.identity(m.field, m.dim):
        return Violation("unit", "1")
    for i in range(a.dim):
        for j in range(a.dim):
            lhs = m.act(a.mul(a.basis_vector(i), a.basis_vector(j)))
            x, y = m.action[i], m.action[j]
            rhs = x @ y if m.side == LEFT else y @ x
            if lhs != rhs:
                return Violation("action", f"({a.labels[i]},{a.labels[j]})")
    return None


def generated_subspace(m: FDModule, vectors: Sequence[Sequence]) -> Subspace:
    """Smallest submodule containing the vectors."""
    return close_under(m.field, m.dim, m.action, vectors).subspace()


def close_under(field, n: int, action: Sequence[Mat], vectors: Sequence[Sequence],
                ech: Optional[Echelon] = None) -> Echelon:
    """Grow ``ech`` (or a fresh basis) to the span closed under the matrices."""
    ech = ech if ech is not None else Echelon(field, n)
    queue = [list(v) for v in vectors if ech.add(v)]
    while queue:
        v = queue.pop()
        for x in action:
            w = x.apply(v)
            if ech.add(w):
                queue.append(w)
    return ech


def greedy_generators(field, n: int, action: Sequence[Mat], candidates: Sequence[Sequence],
                      limit: Optional[int] = None) -> list[list]:
    """Candidates that each enlarge the submodule generated by the earlier ones."""
    ech = Echelon(field, n)
    gens = []
    for v in candidates:
        if not ech.contains(v):
            gens.append(list(v))
            close_under(field, n, action, [v], ech)
            if limit is not None and ech.dim == limit:
                break
    return gens


# ---------------------------------------------------------------------------
# maps and submodules


@dataclass(eq=False)
class ModuleMap:
    source: FDModule
    target: FDModule
    matrix: Mat

    def __repr__(self):
        return f"ModuleMap({self.source.dim} -> {self.target.dim})"

    def is_homomorphism(self) -> bool:
        f = self.matrix
        return all(f @ x == y @ f for x, y in zip(self.source.action, self.target.action))

    def kernel(self) -> "Submodule":
        return Submodule(self.source, kernel_basis(self.matrix))

    def image(self) -> "Submodule":
        return Submodule(self.target, self.matrix.image())

    def is_surjective(self) -> bool:
        return self.matrix.rank() == self.target.dim

    def is_injective(self) -> bool:
        return self.matrix.rank() == self.source.dim

    def then(self, g: "ModuleMap") -> "ModuleMap":
        """This map followed by g."""
        return ModuleMap(self.source, g.target, g.matrix @ self.matrix)

    def transpose(self) -> "ModuleMap":
        return ModuleMap(k_dual(self.target), k_dual(self.source), self.matrix.T)


@dataclass(eq=False)
class Submodule:
    parent: FDModule
    space: Subspace

    def __repr__(self):
        return f"Submodule(dim {self.dim} of {self.parent!r})"

    @property
    def dim(self) -> int:
        return self.space.dim

    def is_stable(self) -> bool:
        return all(self.space.contains(x.apply(v)) for x in self.parent.action
                   for v in self.space.vectors())

    def inclusion_matrix(self) -> Mat:
        return Mat.from_columns(self.parent.field, self.space.vectors(), self.parent.dim)

    def as_module(self) -> FDModule:
        """The submodule on its RREF basis (coordinates = pivot entries)."""
        if "module" not in self.parent._cache.setdefault(("sub", self.space.key()), {}):
            basis = self.space.vectors()
            acts = []
            for x in self.parent.action:
                cols = [self.space.coords(x.apply(v)) for v in basis]
                acts.append(Mat.from_columns(self.parent.field, cols, len(basis)))
            mod = FDModule(self.parent.algebra, self.parent.side, len(basis), tuple(acts))
            self.parent._cache[("sub", self.space.key())]["module"] = mod
        return self.parent._cache[("sub", self.space.key())]["module"]

    def inclusion(self) -> ModuleMap:
        return ModuleMap(self.as_module(), self.parent, self.inclusion_matrix())

    def quotient(self) -> tuple[FDModule, ModuleMap]:
        """Parent/self on the non-pivot coordinates, with the projection."""
        f = self.parent.field
        piv = set(self.space.pivots)
        comp = [j for j in range(self.parent.dim) if j not in piv]

        def proj(v):
            r = self.space.reduce(v)
            return [r[j] for j in comp]

        acts = []
        for x in self.parent.action:
            cols = [proj(x.column(j)) for j in comp]
            acts.append(Mat.from_columns(f, cols, len(comp)))
        q = FDModule(self.parent.algebra, self.parent.side, len(comp), tuple(acts))
        p = Mat.from_columns(f, [proj([1 if i == j else 0 for i in range(self.parent.dim)])
                                 for j in range(self.parent.dim)], len(comp))
        return q, ModuleMap(self.parent, q, p)

    def __le__(self, other: "Submodule") -> bool:
        return other.space.contains_space(self.space)

    def __add__(self, other: "Submodule") -> "Submodule":
        return Submodule(self.parent, self.space + other.space)

    def __and__(self, other: "Submodule") -> "Submodule":
        return Submodule(self.parent, self.space & other.space)


# ---------------------------------------------------------------------------
# constructors


def regular_module(a: Algebra, side: str = LEFT) -> FDModule:
    key = ("regular", side)
    if key not in a._cache:
        acts = a.left_mats if side == LEFT else a.right_mats
        reg = FDModule(a, side, a.dim, tuple(acts), f"A ({side} regular)")
        reg._cache["projective_summands"] = [(list(a.unit),
                                              [a.basis_vector(b) for b in range(a.dim)])]
        a._cache[key] = reg
    return a._cache[key]


def coalgebra_module(c: Coalgebra, side: str = LEFT) -> FDModule:
    """C as a module over C*.

    Left: f.c = sum c1 f(c2).  Right: c.f = sum f(c1) c2.
    """
    key = ("module", side)
    if key in c._cache:
        return c._cache[key]
    a = dual_algebra(c)
    n = c.dim
    rows = [[[0] * n for _ in range(n)] for _ in range(n)]
    for x, terms in enumerate(c.delta):
        for u, v, coeff in terms:
            if side == LEFT:
                rows[v][u][x] = coeff
            else:
                rows[u][v][x] = coeff
    m = FDModule(a, side, n, tuple(Mat._wrap(c.field, r, n) for r in rows), f"C ({side})")
    c._cache[key] = m
    return m


def direct_sum(ms: Sequence[FDModule]) -> FDModule:
    a = ms[0].algebra
    for m in ms[1:]:
        _check_compatible(ms[0], m)
    acts = [Mat.block_diag([m.action[b] for m in ms]) for b in range(a.dim)]
    return FDModule(a, ms[0].side, sum(m.dim for m in ms), tuple(acts))


def k_dual(m: FDModule) -> FDModule:
    """Linear dual with the transposed action on the other side."""
    if "dual" not in m._cache:
        d = FDModule(m.algebra, other_side(m.side), m.dim, tuple(x.T for x in m.action),
                     (m.name + "*") if m.name else "")
        d._cache["dual"] = m
        m._cache["dual"] = d
    return m._cache["dual"]


def restrict_to_quotient_algebra(m: FDModule, ideal: Subspace):
    """M viewed over A/I for an ideal I annihilating M, plus the algebra A/I."""
    quo, _, _ = quotient_algebra(m.algebra, ideal)
    piv = set(ideal.pivots)
    acts = [m.action[j] for j in range(m.algebra.dim) if j not in piv]
    return FDModule(quo, m.side, m.dim, tuple(acts)), quo


def annihilator(m: FDModule) -> Subspace:
    """{a : rho(a) = 0}, a two-sided ideal."""
    cols = [x.flat() for x in m.action]
    return kernel_basis(Mat.from_columns(m.field, cols, m.dim * m.dim))


def _check_compatible(x: FDModule, y: FDModule):
    if x.side != y.side:
        raise SideMismatch(f"{x.side} vs {y.side} module")
    if x.algebra is not y.algebra and x.algebra != y.algebra:
        raise AlgebraMismatch("modules over different algebras")


# ---------------------------------------------------------------------------
# radical and socle


def radical(m: FDModule) -> Submodule:
    if "radical" not in m._cache:
        rad = jacobson_radical(m.algebra)
        vecs = []
        for j in rad.vectors():
            vecs.extend(m.act(j).columns())
        m._cache["radical"] = Submodule(m, Subspace.span(m.field, m.dim, vecs))
    return m._cache["radical"]


def socle(m: FDModule) -> Submodule:
    if "socle" not in m._cache:
        rad = jacobson_radical(m.algebra)
        rows = []
        for j in rad.vectors():
            rows.extend(m.act(j).rows)
        space = kernel_basis(Mat._wrap(m.field, rows, m.dim))
        m._cache["socle"] = Submodule(m, space)
    return m._cache["socle"]


def radical_socle(m: FDModule) -> dict:
    return {"radical": radical(m), "socle": socle(m)}


def is_small(n: Submodule) -> bool:
    return radical(n.parent).space.contains_space(n.space)


def is_essential(n: Submodule) -> bool:
    return n.space.contains_space(socle(n.parent).space)


def singular_submodule(m: FDModule) -> Submodule:
    """Elements killed by the socle of A on the module's side."""
    soc = socle(regular_module(m.algebra, m.side)).space
    rows = []
    for s in soc.vectors():
        rows.extend(m.act(s).rows)
    return Submodule(m, kernel_basis(Mat._wrap(m.field, rows, m.dim)))


# ---------------------------------------------------------------------------
# Hom spaces


def minimal_generators(m: FDModule) -> list[list]:
    """Generators of M chosen among unit vectors spanning a complement of Rad M."""
    if "generators" in m._cache:
        return m._cache["generators"]
    try:
        candidates = radical(m).space.complement_vectors()
    except UnsupportedCharacteristic:
        candidates = Subspace.zero(m.field, m.dim).complement_vectors()
    gens = greedy_generators(m.field, m.dim, m.action, candidates, m.dim)
    m._cache["generators"] = gens
    return gens


def _free_action(m: FDModule, r: int) -> list[Mat]:
    a = m.algebra
    key = ("free", m.side, r)
    if key not in a._cache:
        reg = regular_module(a, m.side)
        a._cache[key] = [Mat.block_diag([x] * r) for x in reg.action]
    return a._cache[key]


def _presentation(m: FDModule):
    """Generators, a column basis of Phi with its inverse, and relation generators.

    Phi : A^r -> M sends (a_j) to sum rho(a_j) x_j; the relations generate its
    kernel as a submodule of the free module.
    """
    if "presentation" in m._cache:
        return m._cache["presentation"]
    a = m.algebra
    gens = minimal_generators(m)
    r = len(gens)
    cols = []
    for x in gens:
        for b in range(a.dim):
            cols.append(m.action[b].apply(x))
    phi = Mat.from_columns(m.field, cols, m.dim)
    _, piv, _ = phi.rref()
    phi_s_inv = Mat.from_columns(m.field, [cols[j] for j in piv], m.dim).inverse() if piv else None
    rel = kernel_basis(phi)
    relations = rel.vectors()
    if relations:
        free = _free_action(m, r)
        try:
            rad = jacobson_radical(a)
            jr = Echelon(m.field, r * a.dim)
            for j in rad.vectors():
                act = mat_comb(m.field, j, free, r * a.dim, r * a.dim)
                for v in relations:
                    jr.add(act.apply(v))
            relations = [v for v in relations if jr.add(v)]
        except UnsupportedCharacteristic:
            pass
        relations = greedy_generators(m.field, r * a.dim, free, relations, rel.dim)
    pres = (gens, piv, phi_s_inv, relations)
    m._cache["presentation"] = pres
    return pres


def _hom_direct(x: FDModule, y: FDModule) -> list[Mat]:
    a = x.algebra
    f = x.field
    gens, piv, phi_s_inv, relations = _presentation(x)
    r = len(gens)
    n = y.dim
    if x.dim == 0 or n == 0:
        return []
    # unknowns: y_1..y_r stacked, each of length n
    rows = []
    for rel in relations:
        blocks = []
        for j in range(r):
            blocks.append(mat_comb(f, rel[j * a.dim:(j + 1) * a.dim], y.action, n, n))
        rows.extend(Mat.hstack(blocks).rows)
    sol = kernel_basis(Mat._wrap(f, rows, r * n)) if rows else Subspace.full(f, r * n)
    out = []
    for s in sol.vectors():
        ys = [s[j * n:(j + 1) * n] for j in range(r)]
        psi_cols = []
        for k in piv:
            j, b = divmod(k, a.dim)
            psi_cols.append(y.action[b].apply(ys[j]))
        psi = Mat.from_columns(f, psi_cols, n)
        out.append(psi @ phi_s_inv)
    return out


def _hom_from_projective(x: FDModule, y: FDModule) -> list[Mat]:
    """Hom(+ A e_s, Y) = + e_s Y: the image of e_s fixes the map on that summand."""
    out = []
    off = 0
    summands = x._cache["projective_summands"]
    for e, elements in summands:
        for v in y.act(e).image().vectors():
            cols = [[0] * y.dim for _ in range(x.dim)]
            for k, u in enumerate(elements):
                cols[off + k] = y.act(u).apply(v)
            out.append(Mat.from_columns(x.field, cols, y.dim))
        off += len(elements)
    return out


def hom_matrices(x: FDModule, y: FDModule) -> list[Mat]:
    """RREF basis (of flattened matrices) of Hom(X, Y)."""
    _check_compatible(x, y)
    if x.dim == 0 or y.dim == 0:
        return []
    key = ("hom", id(y))
    if key in x._cache and x._cache[key][0] is y:
        return x._cache[key][1]
    xd, yd = k_dual(x), k_dual(y)
    if "projective_summands" in x._cache:
        mats = _hom_from_projective(x, y)
    elif "projective_summands" in yd._cache:
        mats = [g.T for g in _hom_from_projective(yd, xd)]
    elif len(minimal_generators(yd)) * x.dim < len(minimal_generators(x)) * y.dim:
        mats = [g.T for g in _hom_direct(yd, xd)]
    else:
        mats = _hom_direct(x, y)
    space = Subspace.span(x.field, x.dim * y.dim, [g.flat() for g in mats])
    result = [Mat.from_flat(x.field, v, y.dim, x.dim) for v in space.vectors()]
    x._cache[key] = (y, result)
    return result


def hom_space(x: FDModule, y: FDModule) -> list[ModuleMap]:
    return [ModuleMap(x, y, g) for g in hom_matrices(x, y)]


def hom_naive(x: FDModule, y: FDModule) -> list[Mat]:
    """Hom(X, Y) from the full commutation system; a slow cross-check."""
    _check_compatible(x, y)
    f = x.field
    m, n = x.dim, y.dim
    rows = []
    # unknown F[i][k] at index i*m + k; equation (F X_b - Y_b F)[i][l] = 0
    for xb, yb in zip(x.action, y.action):
        for i in range(n):
            for l in range(m):
                row = [0] * (n * m)
                for k in range(m):
                    if xb.rows[k][l]:
                        row[i * m + k] += xb.rows[k][l]
                for j in range(n):
                    if yb.rows[i][j]:
                        row[j * m + l] -= yb.rows[i][j]
                rows.append(row)
    sol = kernel_basis(Mat(f, rows, n * m)) if rows else Subspace.full(f, n * m)
    return [Mat.from_flat(f, v, n, m) for v in sol.vectors()]


def endomorphism_algebra(m: FDModule) -> tuple[Algebra, list[Mat]]:
    """End(M) with product f*g = f o g (apply g first), and its basis matrices."""
    if "end" not in m._cache:
        mats = hom_matrices(m, m)
        alg = algebra_from_matrices(m.field, mats, Mat.identity(m.field, m.dim))
        m._cache["end"] = (alg, alg._cache["matrices"])
    return m._cache["end"]


# ---------------------------------------------------------------------------
# traces, rejects, nabla


def trace(x: FDModule, target: FDModule) -> Submodule:
    """Tr(X, target): sum of images of all maps X -> target."""
    vecs = []
    for g in hom_matrices(x, target):
        vecs.extend(g.columns())
    return Submodule(target, Subspace.span(target.field, target.dim, vecs))


def reject(source: FDModule, x: FDModule) -> Submodule:
    """Re(source, X): intersection of kernels of all maps source -> X."""
    rows = []
    for g in hom_matrices(source, x):
        rows.extend(g.rows)
    return Submodule(source, kernel_basis(Mat._wrap(source.field, rows, source.dim)))


def trace_and_reject(x: FDModule, target: FDModule) -> dict:
    return {"trace": trace(x, target), "reject": reject(target, x)}


def nabla(x: FDModule, y: FDModule) -> list[ModuleMap]:
    """Homomorphisms X -> Y with small image, i.e. image inside Rad Y."""
    rad = radical(y)
    if rad.dim == 0:
        return []
    inc = rad.inclusion_matrix()
    mats = [inc @ g for g in hom_matrices(x, rad.as_module())]
    space = Subspace.span(x.field, x.dim * y.dim, [g.flat() for g in mats])
    return [ModuleMap(x, y, Mat.from_flat(x.field, v, y.dim, x.dim)) for v in space.vectors()]


def nabla_space(x: FDModule, y: FDModule) -> Subspace:
    return Subspace.span(x.field, x.dim * y.dim, [g.matrix.flat() for g in nabla(x, y)])


def hom_singular_submodule(x: FDModule, y: FDModule) -> Subspace:
    """Singular part of Hom(X, Y) as a module over End(Y) acting by post-composition.

    Returned as a subspace of flattened (dim Y x dim X) matrices, so it can be
    compared directly with :func:`nabla_space`.
    """
    f = x.field
    basis = hom_matrices(x, y)
    size = x.dim * y.dim
    if not basis:
        return Subspace.zero(f, size)
    hs = Subspace.span(f, size, [g.flat() for g in basis])
    coords = Mat.from_columns(f, [hs.coords(g.flat()) for g in basis], hs.dim)
    to_hs = coords.inverse()  # hom_matrices is already a basis
    t_alg, t_mats = endomorphism_algebra(y)
    acts = []
    for t in t_mats:
        cols = [to_hs.apply(hs.coords((t @ g).flat())) for g in basis]
        acts.append(Mat.from_columns(f, cols, len(basis)))
    mod = FDModule(t_alg, LEFT, len(basis), tuple(acts), "Hom")
    z = singular_submodule(mod)
    vecs = [mat_comb(f, v, basis, y.dim, x.dim).flat() for v in z.space.vectors()]
    return Subspace.span(f, size, vecs)


# ---------------------------------------------------------------------------
# projective covers and injective hulls


@dataclass(frozen=True)
class BlockInfo:
    """Representative primitive idempotent for each Wedderburn block."""

    idempotents: list
    representatives: list  # one idempotent vector per block


def block_info(a: Algebra) -> BlockInfo:
    if "blocks" not in a._cache:
        idem = primitive_idempotents(a)
        w = wedderburn_blocks(a)
        a._cache["blocks"] = BlockInfo(idem, [idem[mem[0]] for mem in w.block_members])
    return a._cache["blocks"]


def top_multiplicities(m: FDModule) -> list[int]:
    """Multiplicity of each simple module (block order) in M/Rad M."""
    info = block_info(m.algebra)
    rad = radical(m)
    out = []
    for e in info.representatives:
        pe = m.act(e)
        out.append(pe.rank() - rad.space.image_under(pe).dim)
    return out


def indecomposable_projective(a: Algebra, e: Sequence, side: str) -> Submodule:
    """Ae (left) or eA (right) inside the regular module."""
    reg = regular_module(a, side)
    if side == LEFT:
        vecs = [a.mul(a.basis_vector(b), e) for b in range(a.dim)]
    else:
        vecs = [a.mul(e, a.basis_vector(b)) for b in range(a.dim)]
    return Submodule(reg, Subspace.span(a.field, a.dim, vecs))


def projective_cover(m: FDModule) -> tuple[FDModule, ModuleMap]:
    if "projective_cover" in m._cache:
        return m._cache["projective_cover"]
    a = m.algebra
    f = m.field
    info = block_info(a)
    rad = radical(m).space
    summands, columns, records = [], [], []
    for e in info.representatives:
        pe = m.act(e)
        top = rad.image_under(pe)
        chosen = []
        for v in pe.columns():
            if not top.contains(v):
                chosen.append(v)
                top = top + Subspace.span(f, m.dim, [v])
        if not chosen:
            continue
        proj = indecomposable_projective(a, e, m.side)
        pmod = proj.as_module()
        for v in chosen:
            summands.append(pmod)
            records.append((list(e), proj.space.vectors()))
            columns.extend(m.act(u).apply(v) for u in proj.space.vectors())
    if not summands:
        p = FDModule(a, m.side, 0, tuple(Mat.zeros(f, 0, 0) for _ in range(a.dim)))
        result = (p, ModuleMap(p, m, Mat.zeros(f, m.dim, 0)))
    else:
        p = direct_sum(summands) if len(summands) > 1 else summands[0]
        p._cache["projective_summands"] = records
        pi = ModuleMap(p, m, Mat.from_columns(f, columns, m.dim))
        if not pi.is_surjective():
            raise ConsistencyError("projective cover map is not onto")
        result = (p, pi)
    m._cache["projective_cover"] = result
    return result


def injective_hull(m: FDModule) -> tuple[FDModule, ModuleMap]:
    if "injective_hull" not in m._cache:
        p, pi = projective_cover(k_dual(m))
        e = k_dual(p)
        m._cache["injective_hull"] = (e, ModuleMap(m, e, pi.matrix.T))
    return m._cache["injective_hull"]


# ---------------------------------------------------------------------------
# copolyform, hollow, codense


def faithful_reduction(m: FDModule) -> FDModule:
    """M over A/Ann(M); its module category is the one M subgenerates."""
    ann = annihilator(m)
    if ann.dim == 0:
        return m
    return restrict_to_quotient_algebra(m, ann)[0]


def is_copolyform(m: FDModule) -> bool:
    """Endomorphism ring of the projective cover (over A/Ann M) is semisimple."""
    if m.dim == 0:
        return True
    p, _ = projective_cover(faithful_reduction(m))
    end, _ = endomorphism_algebra(p)
    return jacobson_radical(end).dim == 0


def is_hollow(m: FDModule) -> bool:
    return m.dim > 0 and sum(top_multiplicities(m)) == 1


def is_epiform(m: FDModule) -> bool:
    return is_hollow(m) and is_copolyform(m)


def is_codense_cover(pi: ModuleMap) -> bool:
    """Hom(P(source), Ker pi) = 0, using Hom(Ae, K) = eK per block in the top."""
    if not pi.is_surjective():
        raise NotSurjective("codense test needs an epimorphism")
    ker = pi.kernel().space
    if ker.dim == 0:
        return True
    info = block_info(pi.source.algebra)
    for e, mult in zip(info.representatives, top_multiplicities(pi.source)):
        if mult and ker.image_under(pi.source.act(e)).dim:
            return False
    return True


def maximal_codense_cover(m: FDModule) -> tuple[FDModule, ModuleMap]:
    """P/Tr(P, Ker pi) for the projective cover pi: P -> M."""
    p, pi = projective_cover(m)
    ker = pi.kernel().space
    info = block_info(m.algebra)
    gens = []
    for e, mult in zip(info.representatives, top_multiplicities(p)):
        if mult:
            gens.extend(ker.image_under(p.act(e)).vectors())
    t = Submodule(p, generated_subspace(p, gens))
    q, proj = t.quotient()
    piv = set(t.space.pivots)
    comp = [j for j in range(p.dim) if j not in piv]
    induced = Mat.from_columns(m.field, [pi.matrix.column(j) for j in comp], m.dim)
    cover = ModuleMap(q, m, induced)
    if not is_codense_cover(cover):
        raise ConsistencyError("maximal codense cover failed the codense check")
    return q, cover
