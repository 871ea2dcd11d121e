"""Finite-dimensional associative unital algebras given by structure constants.

``mult[(a, b)]`` is a dict ``{c: coeff}`` with ``b_a * b_b = sum coeff * b_c``;
absent keys are zero products.  Elements are coordinate lists.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence

import sympy

from .errors import ConsistencyError, CyclicQuiver, NonSplit
from .field import FieldSpec, QQ
from .linalg import Mat, Subspace, kernel_basis, lin_comb, vec_add, vec_scale, vec_sub
from .quiver import Quiver, enumerate_paths

BRUTE_FORCE_LIMIT = 2 ** 16


@dataclass(frozen=True)
class Violation:
    """First failing axiom found by a validator."""

    axiom: str
    element: str
    detail: str = ""

    def __str__(self):
        return f"{self.axiom} fails at {self.element}" + (f" ({self.detail})" if self.detail else "")


@dataclass(frozen=True, eq=False)
class Algebra:
    field: FieldSpec
    labels: tuple[str, ...]
    mult: dict
    unit: tuple
    _cache: dict = dc_field(default_factory=dict, repr=False, compare=False)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def __repr__(self):
        return f"Algebra(dim={self.dim}, field={self.field})"

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return (self.field == other.field and self.labels == other.labels
                and self.unit == other.unit and _canon(self.mult) == _canon(other.mult))

    __hash__ = object.__hash__

    def basis_vector(self, i) -> list:
        v = [0] * self.dim
        v[i] = 1
        return v

    def mul(self, x: Sequence, y: Sequence) -> list:
        p = self.field.characteristic
        out = [0] * self.dim
        xs = [(a, c) for a, c in enumerate(x) if c]
        ys = [(b, c) for b, c in enumerate(y) if c]
        mult = self.mult
        for a, xa in xs:
            for b, yb in ys:
                prod = mult.get((a, b))
                if prod:
                    s = xa * yb
                    for c, coeff in prod.items():
                        out[c] += s * coeff
        return [v % p for v in out] if p else out

    def left_matrix(self, x: Sequence) -> Mat:
        """Matrix of y -> x*y."""
        cols = [self.mul(x, self.basis_vector(b)) for b in range(self.dim)]
        return Mat.from_columns(self.field, cols, self.dim)

    def right_matrix(self, x: Sequence) -> Mat:
        """Matrix of y -> y*x."""
        cols = [self.mul(self.basis_vector(a), x) for a in range(self.dim)]
        return Mat.from_columns(self.field, cols, self.dim)

    @property
    def left_mats(self) -> list[Mat]:
        if "L" not in self._cache:
            self._cache["L"] = [self.left_matrix(self.basis_vector(b)) for b in range(self.dim)]
        return self._cache["L"]

    @property
    def right_mats(self) -> list[Mat]:
        if "R" not in self._cache:
            self._cache["R"] = [self.right_matrix(self.basis_vector(b)) for b in range(self.dim)]
        return self._cache["R"]

    def power(self, x, k):
        r = list(self.unit)
        for _ in range(k):
            r = self.mul(r, x)
        return r

    def span_products(self, xs: Sequence[Sequence], ys: Sequence[Sequence]) -> Subspace:
        return Subspace.span(self.field, self.dim, [self.mul(x, y) for x in xs for y in ys])


def _canon(mult):
    return sorted((k, sorted((c, v) for c, v in d.items() if v)) for k, d in mult.items()
                  if any(d.values()))


def make_algebra(field: FieldSpec, labels, triples, unit) -> Algebra:
    """Build from (a, b, c, coeff) triples; coefficients are coerced and summed."""
    p = field.characteristic
    mult: dict = {}
    for a, b, c, coeff in triples:
        coeff = field(coeff)
        if not coeff:
            continue
        d = mult.setdefault((a, b), {})
        v = d.get(c, 0) + coeff
        if p:
            v %= p
        if v:
            d[c] = v
        else:
            d.pop(c, None)
    mult = {k: d for k, d in mult.items() if d}
    return Algebra(field, tuple(labels), mult, tuple(field(x) for x in unit))


def algebra_from_matrices(field: FieldSpec, mats: Sequence[Mat], unit: Optional[Mat] = None,
                          labels=None, verify: bool = False) -> Algebra:
    """Structure constants of an algebra of matrices under composition.

    ``mats`` must span a space closed under ``A @ B``.  The basis is replaced
    by the RREF basis of the flattened matrices; coordinates of a product are
    its entries at the pivot positions, so only those entries are computed.
    ``verify`` recomputes full products and checks closure.
    """
    n, m = mats[0].shape
    p = field.characteristic
    space = Subspace.span(field, n * m, [x.flat() for x in mats])
    basis = [Mat.from_flat(field, r, n, m) for r in space.basis.rows]
    positions = [divmod(c, m) for c in space.pivots]
    row_nz = [[[(k, v) for k, v in enumerate(x.rows[r]) if v] for r, _ in positions]
              for x in basis]
    col_maps = [{} for _ in basis]
    for j, y in enumerate(basis):
        for i, k, v in y.nonzeros():
            col_maps[j].setdefault(k, {})[i] = v
    triples = []
    for i in range(len(basis)):
        rows_i = row_nz[i]
        for j in range(len(basis)):
            cmap = col_maps[j]
            for c, ((_, col), entries) in enumerate(zip(positions, rows_i)):
                colj = cmap.get(col)
                if not colj or not entries:
                    continue
                s = 0
                for k, v in entries:
                    w = colj.get(k)
                    if w:
                        s += v * w
                if p:
                    s %= p
                if s:
                    triples.append((i, j, c, s))
    if verify:
        for i, x in enumerate(basis):
            for j, y in enumerate(basis):
                prod = (x @ y).flat()
                if any(vec_sub(space.from_coords(space.coords(prod)), prod, p)):
                    raise ConsistencyError("matrix basis is not closed under composition")
    if unit is None:
        unit = Mat.identity(field, n)
    u = space.coords(unit.flat())
    labels = labels or tuple(f"h{i}" for i in range(len(basis)))
    alg = make_algebra(field, labels, triples, u)
    alg._cache["matrices"] = basis
    alg._cache["matrix_space"] = space
    return alg


def validate_algebra(a: Algebra) -> Optional[Violation]:
    n = a.dim
    p = a.field.characteristic
    e = [a.basis_vector(i) for i in range(n)]
    for i in range(n):
        if a.mul(a.unit, e[i]) != e[i] and any(vec_sub(a.mul(a.unit, e[i]), e[i], p)):
            return Violation("left unit", a.labels[i])
        if any(vec_sub(a.mul(e[i], a.unit), e[i], p)):
            return Violation("right unit", a.labels[i])
    for i, j in itertools.product(range(n), repeat=2):
        ij = a.mul(e[i], e[j])
        for k in range(n):
            lhs = a.mul(ij, e[k])
            rhs = a.mul(e[i], a.mul(e[j], e[k]))
            if any(vec_sub(lhs, rhs, p)):
                return Violation("associativity", f"({a.labels[i]},{a.labels[j]},{a.labels[k]})")
    return None


def opposite_algebra(a: Algebra) -> Algebra:
    mult = {(b, x): dict(d) for (x, b), d in a.mult.items()}
    return Algebra(a.field, a.labels, mult, a.unit)


def direct_product_algebra(algs: Sequence[Algebra]) -> Algebra:
    f = algs[0].field
    triples, labels, unit = [], [], []
    off = 0
    for k, alg in enumerate(algs):
        f.check_same(alg.field)
        for (x, y), d in alg.mult.items():
            for c, v in d.items():
                triples.append((x + off, y + off, c + off, v))
        labels += [f"{k}:{l}" for l in alg.labels] if len(algs) > 1 else list(alg.labels)
        unit += list(alg.unit)
        off += alg.dim
    return make_algebra(f, labels, triples, unit)


def matrix_algebra(field: FieldSpec, n: int) -> Algebra:
    idx = lambda i, j: i * n + j
    triples = [(idx(i, j), idx(j, l), idx(i, l), 1)
               for i in range(n) for j in range(n) for l in range(n)]
    unit = [1 if i == j else 0 for i in range(n) for j in range(n)]
    labels = [f"E{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    return make_algebra(field, labels, triples, unit)


def truncated_polynomial_algebra(field: FieldSpec, n: int) -> Algebra:
    """k[Z]/(Z^n) on the basis 1, Z, ..., Z^(n-1)."""
    triples = [(i, j, i + j, 1) for i in range(n) for j in range(n) if i + j < n]
    labels = ["1"] + [f"Z^{i}" if i > 1 else "Z" for i in range(1, n)]
    return make_algebra(field, labels, triples, [1] + [0] * (n - 1))


def path_algebra(q: Quiver, field: FieldSpec = QQ) -> Algebra:
    """Basis = paths; product = concatenation (left factor first) or zero."""
    if q.has_cycle():
        raise CyclicQuiver("path algebra of a cyclic quiver is infinite-dimensional")
    paths = enumerate_paths(q)
    index = {p: i for i, p in enumerate(paths)}
    triples = []
    for i, u in enumerate(paths):
        for j, v in enumerate(paths):
            w = u.concat(v)
            if w is not None:
                triples.append((i, j, index[w], 1))
    unit = [1 if len(p) == 0 else 0 for p in paths]
    return make_algebra(field, [p.label(q) for p in paths], triples, unit)


def triangular_example_algebra(field: FieldSpec = QQ) -> Algebra:
    """Lower triangular ring [[k, 0], [R, R]] with R = k[x]/(x^2).

    Basis: e1 = (1,1)-idempotent, e2 and r spanning R on the diagonal,
    m and rm spanning the (2,1) corner.
    """
    E1, E2, R, M, RM = range(5)
    rules = {
        (E1, E1): E1, (E2, E2): E2, (E2, R): R, (R, E2): R,
        (M, E1): M, (RM, E1): RM, (E2, M): M, (E2, RM): RM,
        (R, M): RM,
    }
    triples = [(a, b, c, 1) for (a, b), c in rules.items()]
    return make_algebra(field, ["e1", "e2", "r", "m", "rm"], triples, [1, 1, 0, 0, 0])


# ---------------------------------------------------------------------------
# ideals and quotients


def ideal_power_is_zero(a: Algebra, ideal: Subspace) -> bool:
    """True iff the subspace (assumed closed under products) is nilpotent."""
    gens = ideal.vectors()
    cur = ideal
    for _ in range(a.dim + 1):
        if cur.dim == 0:
            return True
        nxt = a.span_products(cur.vectors(), gens)
        if nxt.dim == cur.dim:
            return False
        cur = nxt
    return cur.dim == 0


def two_sided_ideal(a: Algebra, gens: Sequence[Sequence]) -> Subspace:
    n = a.dim
    e = [a.basis_vector(i) for i in range(n)]
    vecs = [a.mul(x, a.mul(g, y)) for g in gens for x in e for y in e]
    return Subspace.span(a.field, n, vecs + [list(g) for g in gens])


def is_two_sided_ideal(a: Algebra, sub: Subspace) -> bool:
    e = [a.basis_vector(i) for i in range(a.dim)]
    for v in sub.vectors():
        for b in e:
            if not sub.contains(a.mul(b, v)) or not sub.contains(a.mul(v, b)):
                return False
    return True


def quotient_algebra(a: Algebra, ideal: Subspace):
    """A/I on the complement of the ideal's pivot columns.

    Returns (algebra, projection matrix A -> A/I, section matrix A/I -> A).
    """
    comp = [j for j in range(a.dim) if j not in set(ideal.pivots)]
    k = len(comp)
    p = a.field.characteristic

    def proj(v):
        r = ideal.reduce(v)
        return [r[j] for j in comp]

    triples = []
    for i, ci in enumerate(comp):
        for j, cj in enumerate(comp):
            prod = proj(a.mul(a.basis_vector(ci), a.basis_vector(cj)))
            for c, v in enumerate(prod):
                if v:
                    triples.append((i, j, c, v))
    quo = make_algebra(a.field, [a.labels[j] for j in comp], triples, proj(list(a.unit)))
    P = Mat.from_columns(a.field, [proj(a.basis_vector(j)) for j in range(a.dim)], k)
    S = Mat.zeros(a.field, a.dim, k)
    for i, ci in enumerate(comp):
        S.rows[ci][i] = 1
    return quo, P, S


# ---------------------------------------------------------------------------
# radical and center


def _trace_form_radical(a: Algebra) -> Subspace:
    p = a.field.characteristic
    tr = [0] * a.dim
    for (c, d), prod in a.mult.items():
        v = prod.get(d)
        if v:
            tr[c] += v
    gram = [[0] * a.dim for _ in range(a.dim)]
    for (x, y), prod in a.mult.items():
        s = sum(v * tr[c] for c, v in prod.items())
        gram[x][y] = s % p if p else s
    return kernel_basis(Mat._wrap(a.field, gram, a.dim))


def _power_trace(rows: list[list], e: int, mod: int) -> int:
    """trace(M^e) mod ``mod`` for an integer matrix M, by repeated squaring."""
    n = len(rows)
    result = None
    base = [r[:] for r in rows]
    while e:
        if e & 1:
            result = base if result is None else _mat_mod(result, base, mod)
        e >>= 1
        if e:
            base = _mat_mod(base, base, mod)
    return sum(result[i][i] for i in range(n)) % mod


def _mat_mod(x, y, mod):
    cols = list(zip(*y))
    return [[sum(a * b for a, b in zip(row, col)) % mod for col in cols] for row in x]


def _lifted_trace_radical(a: Algebra, space: Subspace) -> Subspace:
    """Refine the trace-form radical in characteristic p.

    Lift left multiplication matrices to integers and set
    g_i(z) = (tr(L_z^(p^i)) mod p^(i+1)) / p^i.  Then g_i is linear on
    I_(i-1) and I_i = {x in I_(i-1) : g_i(xy) = 0 for all y}; the sequence
    stops at J once p^i exceeds dim A (Ronyai; Cohen, Ivanyos and Wales).
    """
    p = a.field.characteristic
    i = 1
    while p ** i <= a.dim and space.dim:
        mod, scale = p ** (i + 1), p ** i
        basis = space.vectors()
        rows = []
        for k in range(a.dim):
            y = a.basis_vector(k)
            rows.append([_power_trace(a.left_matrix(a.mul(b, y)).rows, p ** i, mod) // scale
                         for b in basis])
        coeffs = kernel_basis(Mat(a.field, rows, len(basis)))
        space = Subspace.span(a.field, a.dim,
                              [lin_comb(c, basis, a.dim, p) for c in coeffs.vectors()])
        i += 1
    return space


def jacobson_radical(a: Algebra) -> Subspace:
    """Largest nilpotent ideal.

    The trace-form radical equals J in characteristic 0 or p > dim; in
    smaller characteristic it is refined by lifted traces of p-th powers.
    """
    if "radical" in a._cache:
        return a._cache["radical"]
    rad = _trace_form_radical(a)
    if a.field.characteristic and not ideal_power_is_zero(a, rad):
        rad = _lifted_trace_radical(a, rad)
    a._cache["radical"] = rad
    return rad


def center(a: Algebra) -> Subspace:
    rows = []
    for b in range(a.dim):
        rows.extend((a.right_mats[b] - a.left_mats[b]).rows)
    return kernel_basis(Mat._wrap(a.field, rows, a.dim))


# ---------------------------------------------------------------------------
# polynomials


def minimal_polynomial(a: Algebra, x: Sequence, unit: Optional[Sequence] = None) -> list:
    """Monic minimal polynomial of x (low degree first) relative to ``unit``.

    ``unit`` defaults to 1; pass an idempotent e to work in the corner eAe.
    """
    unit = list(a.unit) if unit is None else list(unit)
    powers = [unit]
    p = a.field.characteristic
    while True:
        nxt = a.mul(x, powers[-1])
        m = Mat.from_columns(a.field, powers, a.dim)
        sol = m.solve(nxt)
        if sol is not None:
            return [(-c) % p if p else -c for c in sol] + [1]
        powers.append(nxt)


def factor_polynomial(field: FieldSpec, coeffs: Sequence) -> list[tuple[list, int]]:
    """Monic irreducible factors over the field, each with its multiplicity."""
    t = sympy.Symbol("t")
    high = [sympy.Rational(str(c)) for c in reversed(coeffs)]
    if field.characteristic:
        poly = sympy.Poly(high, t, modulus=field.characteristic)
    else:
        poly = sympy.Poly(high, t, domain=sympy.QQ)
    out = []
    for f, mult in poly.factor_list()[1]:
        cs = [field(sympy.Rational(c).p) if field.characteristic == 0 and sympy.Rational(c).q == 1
              else field(_to_fraction(c)) for c in reversed(f.all_coeffs())]
        lead = cs[-1]
        cs = [field.div(c, lead) for c in cs]
        out.append((cs, mult))
    return out


def _to_fraction(c):
    from fractions import Fraction
    r = sympy.Rational(c)
    return Fraction(int(r.p), int(r.q))


def evaluate_polynomial(a: Algebra, coeffs: Sequence, x: Sequence, unit: Sequence) -> list:
    p = a.field.characteristic
    acc = [0] * a.dim
    for c in reversed(coeffs):
        acc = a.mul(acc, x)
        acc = vec_add(acc, vec_scale(c, unit, p), p)
    return acc


# ---------------------------------------------------------------------------
# idempotents


def _corner(a: Algebra, e) -> Subspace:
    vecs = [a.mul(e, a.mul(a.basis_vector(b), e)) for b in range(a.dim)]
    return Subspace.span(a.field, a.dim, vecs)


def _is_singular_in(a: Algebra, y, space: Subspace) -> bool:
    return a.span_products([y], space.vectors()).dim < space.dim


def _find_zero_divisor(a: Algebra, e, corner: Subspace):
    """A nonzero non-invertible element of the corner algebra eAe, or None."""
    p = a.field.characteristic
    basis = corner.vectors()
    line = Subspace.span(a.field, a.dim, [e])
    candidates = list(basis)
    candidates += [a.mul(x, y) for x in basis for y in basis]
    candidates += [vec_add(x, y, p) for x, y in itertools.combinations(basis, 2)]
    for y in candidates:
        if any(y) and not line.contains(y) and _is_singular_in(a, y, corner):
            return y
    for y in candidates:
        if not any(y) or line.contains(y):
            continue
        factors = factor_polynomial(a.field, minimal_polynomial(a, y, e))
        if len(factors) > 1 or factors[0][1] > 1:
            return evaluate_polynomial(a, factors[0][0], y, e)
    if p and p ** corner.dim <= BRUTE_FORCE_LIMIT:
        for coeffs in itertools.product(range(p), repeat=len(basis)):
            y = lin_comb(coeffs, basis, a.dim, p)
            if any(y) and _is_singular_in(a, y, corner):
                return y
    return None


def _idempotent_in_right_ideal(a: Algebra, ideal: Subspace):
    """A nonzero idempotent inside a nonzero right ideal of a semisimple corner."""
    while True:
        vecs = ideal.vectors()
        pair = None
        for u in vecs:
            for v in vecs:
                if any(a.mul(u, v)):
                    pair = u
                    break
            if pair is not None:
                break
        if pair is None:
            raise ConsistencyError("nilpotent right ideal in a semisimple algebra")
        u = pair
        image = a.span_products([u], vecs)
        if image.dim < ideal.dim:
            ideal = image
            continue
        m = Mat.from_columns(a.field, [a.mul(u, v) for v in vecs], a.dim)
        sol = m.solve(u)
        return lin_comb(sol, vecs, a.dim, a.field.characteristic)


def _split_semisimple(s: Algebra) -> list[list]:
    """Complete orthogonal primitive idempotents of a split semisimple algebra."""
    p = s.field.characteristic
    todo = [list(s.unit)]
    done = []
    while todo:
        e = todo.pop()
        corner = _corner(s, e)
        if corner.dim == 1:
            done.append(e)
            continue
        z = _find_zero_divisor(s, e, corner)
        if z is None:
            raise NonSplit("a corner algebra has no zero divisors: division algebra "
                           "block of dimension > 1 (not split over the ground field)")
        right_ideal = s.span_products([z], corner.vectors())
        f = _idempotent_in_right_ideal(s, right_ideal)
        todo.append(vec_sub(e, f, p))
        todo.append(f)
    done.sort(key=lambda v: [i for i, x in enumerate(v) if x][:1])
    return done


def _lift_idempotent(a: Algebra, x, limit: int):
    p = a.field.characteristic
    for _ in range(limit):
        x2 = a.mul(x, x)
        if not any(vec_sub(x2, x, p)):
            return x
        x3 = a.mul(x2, x)
        x = vec_sub(vec_scale(3, x2, p), vec_scale(2, x3, p), p)
    raise ConsistencyError("idempotent lifting did not converge")


def primitive_idempotents(a: Algebra) -> list[list]:
    """A complete set of orthogonal primitive idempotents (split case)."""
    if "idempotents" in a._cache:
        return a._cache["idempotents"]
    rad = jacobson_radical(a)
    s, _, section = quotient_algebra(a, rad)
    s_idem = _split_semisimple(s)
    p = a.field.characteristic
    lifted = []
    rest = list(a.unit)
    limit = a.dim.bit_length() + 3
    for eb in s_idem[:-1]:
        pre = section.apply(eb)
        x = a.mul(rest, a.mul(pre, rest))
        e = _lift_idempotent(a, x, limit)
        lifted.append(e)
        rest = vec_sub(rest, e, p)
    lifted.append(rest)
    a._cache["idempotents"] = lifted
    a._cache["semisimple_quotient"] = (s, s_idem)
    return lifted


@dataclass(frozen=True)
class WedderburnData:
    is_semisimple: bool
    block_count: int
    block_dims: list
    block_members: list  # indices into primitive_idempotents(a) per block

    @property
    def block_sizes(self) -> list:
        """Matrix sizes n with block dim n^2."""
        return [len(m) for m in self.block_members]


def wedderburn_blocks(a: Algebra) -> WedderburnData:
    if "wedderburn" in a._cache:
        return a._cache["wedderburn"]
    rad = jacobson_radical(a)
    primitive_idempotents(a)
    s, s_idem = a._cache["semisimple_quotient"]
    n = len(s_idem)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in itertools.combinations(range(n), 2):
        linked = any(any(s.mul(s_idem[i], s.mul(s.basis_vector(b), s_idem[j])))
                     for b in range(s.dim))
        if linked:
            parent[find(i)] = find(j)
    groups: dict = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    members = list(groups.values())
    p = s.field.characteristic
    dims = []
    for mem in members:
        c = [0] * s.dim
        for i in mem:
            c = vec_add(c, s_idem[i], p)
        dims.append(s.span_products([c], [s.basis_vector(b) for b in range(s.dim)]).dim)
        if dims[-1] != len(mem) ** 2:
            raise NonSplit("Wedderburn block is not a full matrix algebra over the ground field")
    order = sorted(range(len(members)), key=lambda k: (-dims[k], members[k][0]))
    data = WedderburnData(rad.dim == 0, len(members), [dims[k] for k in order],
                          [members[k] for k in order])
    a._cache["wedderburn"] = data
    return data


def is_simple(a: Algebra) -> bool:
    w = wedderburn_blocks(a)
    return w.is_semisimple and w.block_count == 1


def is_commutative(a: Algebra) -> bool:
    return all(a.mult.get((y, x), {}) == d for (x, y), d in a.mult.items()) and \
        all((y, x) in a.mult for (x, y) in a.mult)


def dual_coalgebra_of_algebra(a: Algebra):
    """Coalgebra on the dual basis: Delta(c) = sum m[a,b->c] a (x) b, eps = unit."""
    from .coalgebra import make_coalgebra

    triples = [(c, x, y, v) for (x, y), d in a.mult.items() for c, v in d.items()]
    return make_coalgebra(a.field, a.labels, triples, a.unit)
