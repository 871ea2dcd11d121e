"""Dense exact linear algebra over a :class:`FieldSpec`.

Matrices are lists of rows.  Every routine skips zero entries, which keeps
the structure-constant matrices met in practice (mostly 0/1, very sparse)
cheap even though storage is dense.  Subspaces are always held in reduced
row-echelon form so that equal spaces have equal representatives.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import AmbientMismatch
from .field import FieldSpec


# ---------------------------------------------------------------------------
# row kernels


def _rref_rows(rows: list[list], ncols: int, p: int):
    """Gauss-Jordan elimination in place.  Returns (nonzero rows, pivots)."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        lead = prow[c]
        if lead != 1:
            if p:
                inv = pow(lead, -1, p)
                prow = [x * inv % p if x else 0 for x in prow]
            else:
                inv = Fraction(1, lead) if isinstance(lead, int) else 1 / lead
                prow = [x * inv if x else 0 for x in prow]
                prow = [int(x) if x and x.denominator == 1 else x for x in prow]
            rows[r] = prow
        nz = [j for j in range(c, ncols) if prow[j]]
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if not f:
                continue
            if p:
                for j in nz:
                    row[j] = (row[j] - f * prow[j]) % p
            else:
                for j in nz:
                    row[j] -= f * prow[j]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def _matmul(a: Sequence[Sequence], b: Sequence[Sequence], ncols: int, p: int) -> list[list]:
    bnz = [[(j, x) for j, x in enumerate(row) if x] for row in b]
    out = []
    for arow in a:
        acc = [0] * ncols
        for k, x in enumerate(arow):
            if x:
                for j, y in bnz[k]:
                    acc[j] += x * y
        if p:
            acc = [v % p for v in acc]
        out.append(acc)
    return out


# ---------------------------------------------------------------------------
# matrices


class Mat:
    """An exact dense matrix; treat instances as immutable."""

    __slots__ = ("field", "nrows", "ncols", "rows", "_nz")

    def __init__(self, field: FieldSpec, rows: Iterable[Iterable], ncols: int | None = None):
        self.field = field
        self.rows = [[field(x) for x in r] for r in rows]
        self.nrows = len(self.rows)
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        self.ncols = ncols
        self._nz = None
        if any(len(r) != ncols for r in self.rows):
            raise ValueError("ragged matrix")

    @classmethod
    def _wrap(cls, field, rows, ncols):
        m = object.__new__(cls)
        m.field = field
        m.rows = rows
        m.nrows = len(rows)
        m.ncols = ncols
        m._nz = None
        return m

    @classmethod
    def zeros(cls, field, nrows, ncols):
        return cls._wrap(field, [[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field, n):
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = 1
        return cls._wrap(field, rows, n)

    @classmethod
    def from_columns(cls, field, cols: Sequence[Sequence], nrows: int | None = None):
        cols = list(cols)
        if nrows is None:
            nrows = len(cols[0]) if cols else 0
        rows = [[c[i] for c in cols] for i in range(nrows)]
        return cls._wrap(field, rows, len(cols))

    @classmethod
    def from_flat(cls, field, flat: Sequence, nrows: int, ncols: int):
        return cls._wrap(field, [list(flat[i * ncols:(i + 1) * ncols]) for i in range(nrows)], ncols)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @property
    def entries(self) -> tuple:
        return tuple(x for r in self.rows for x in r)

    def flat(self) -> list:
        return [x for r in self.rows for x in r]

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return (self.field == other.field and self.shape == other.shape
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.field, self.nrows, self.ncols, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Mat({self.nrows}x{self.ncols} over {self.field}: [{body}])"

    def nonzeros(self) -> list:
        """Cached (i, j, value) triples; valid because instances are not mutated."""
        if self._nz is None:
            self._nz = [(i, j, x) for i, r in enumerate(self.rows) for j, x in enumerate(r) if x]
        return self._nz

    def is_zero(self) -> bool:
        return not any(x for r in self.rows for x in r)

    def column(self, j) -> list:
        return [r[j] for r in self.rows]

    def columns(self) -> list[list]:
        return [list(c) for c in zip(*self.rows)] if self.nrows else [[] for _ in range(self.ncols)]

    @property
    def T(self) -> "Mat":
        return Mat._wrap(self.field, self.columns(), self.nrows)

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return Mat._wrap(self.field, _matmul(self.rows, other.rows, other.ncols,
                                             self.field.characteristic), other.ncols)

    def apply(self, v: Sequence) -> list:
        p = self.field.characteristic
        out = [0] * self.nrows
        for i, j, x in self.nonzeros():
            y = v[j]
            if y:
                out[i] += x * y
        return [s % p for s in out] if p else out

    def _combine(self, other, sign):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        p = self.field.characteristic
        rows = []
        for r, s in zip(self.rows, other.rows):
            row = [x + sign * y for x, y in zip(r, s)]
            rows.append([x % p for x in row] if p else row)
        return Mat._wrap(self.field, rows, self.ncols)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def scale(self, c) -> "Mat":
        p = self.field.characteristic
        rows = [[x * c % p if p else x * c for x in r] for r in self.rows]
        return Mat._wrap(self.field, rows, self.ncols)

    def __neg__(self):
        return self.scale(-1)

    @staticmethod
    def hstack(mats: Sequence["Mat"]) -> "Mat":
        field = mats[0].field
        nrows = mats[0].nrows
        rows = [[x for m in mats for x in m.rows[i]] for i in range(nrows)]
        return Mat._wrap(field, rows, sum(m.ncols for m in mats))

    @staticmethod
    def vstack(mats: Sequence["Mat"]) -> "Mat":
        field = mats[0].field
        rows = [list(r) for m in mats for r in m.rows]
        return Mat._wrap(field, rows, mats[0].ncols)

    @staticmethod
    def block_diag(mats: Sequence["Mat"]) -> "Mat":
        field = mats[0].field
        ncols = sum(m.ncols for m in mats)
        rows = []
        off = 0
        for m in mats:
            for r in m.rows:
                row = [0] * ncols
                row[off:off + m.ncols] = r
                rows.append(row)
            off += m.ncols
        return Mat._wrap(field, rows, ncols)

    def kron(self, other: "Mat") -> "Mat":
        p = self.field.characteristic
        rows = []
        for r in self.rows:
            for s in other.rows:
                row = [x * y for x in r for y in s]
                rows.append([v % p for v in row] if p else row)
        return Mat._wrap(self.field, rows, self.ncols * other.ncols)

    # elimination

    def rref(self):
        """Return (rref matrix, pivot columns, rank)."""
        rows, piv = _rref_rows([list(r) for r in self.rows], self.ncols,
                               self.field.characteristic)
        full = rows + [[0] * self.ncols for _ in range(self.nrows - len(rows))]
        return Mat._wrap(self.field, full, self.ncols), piv, len(piv)

    def rank(self) -> int:
        return self.rref()[2]

    def kernel(self) -> "Subspace":
        return kernel_basis(self)

    def image(self) -> "Subspace":
        """Column space."""
        return Subspace.span(self.field, self.nrows, self.columns())

    def row_space(self) -> "Subspace":
        return Subspace.span(self.field, self.ncols, self.rows)

    def solve(self, b: Sequence):
        """One solution x of self @ x = b, or None."""
        p = self.field.characteristic
        aug = [list(r) + [y] for r, y in zip(self.rows, b)]
        rows, piv = _rref_rows(aug, self.ncols + 1, p)
        if piv and piv[-1] == self.ncols:
            return None
        x = [0] * self.ncols
        for r, c in zip(rows, piv):
            x[c] = r[-1]
        return x

    def inverse(self) -> "Mat":
        n = self.nrows
        if n != self.ncols:
            raise ValueError("not square")
        p = self.field.characteristic
        aug = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(self.rows)]
        rows, piv = _rref_rows(aug, 2 * n, p)
        if len(piv) < n or piv[n - 1] != n - 1:
            raise ZeroDivisionError("singular matrix")
        return Mat._wrap(self.field, [r[n:] for r in rows], n)


def rref(m: Mat):
    return m.rref()


def kernel_basis(m: Mat) -> "Subspace":
    """The null space {v : m v = 0}."""
    rows, piv = _rref_rows([list(r) for r in m.rows], m.ncols, m.field.characteristic)
    p = m.field.characteristic
    pivset = set(piv)
    vecs = []
    for f in range(m.ncols):
        if f in pivset:
            continue
        v = [0] * m.ncols
        v[f] = 1
        for r, c in zip(rows, piv):
            if r[f]:
                v[c] = (-r[f]) % p if p else -r[f]
        vecs.append(v)
    return Subspace.span(m.field, m.ncols, vecs)


# ---------------------------------------------------------------------------
# subspaces


class Subspace:
    """A subspace of k^n stored by its unique RREF basis."""

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field: FieldSpec, ambient_dim: int, rref_rows: list[list], pivots: list[int]):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = Mat._wrap(field, rref_rows, ambient_dim)
        self.pivots = pivots

    @classmethod
    def span(cls, field: FieldSpec, n: int, vectors: Iterable[Sequence]) -> "Subspace":
        rows = [list(v) for v in vectors]
        rows, piv = _rref_rows(rows, n, field.characteristic)
        return cls(field, n, rows, piv)

    @classmethod
    def zero(cls, field, n):
        return cls(field, n, [], [])

    @classmethod
    def full(cls, field, n):
        return cls(field, n, Mat.identity(field, n).rows, list(range(n)))

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def vectors(self) -> list[list]:
        return [list(r) for r in self.basis.rows]

    def __repr__(self):
        return f"Subspace(dim {self.dim} in {self.field}^{self.ambient_dim})"

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.field == other.field and self.ambient_dim == other.ambient_dim
                and self.basis.rows == other.basis.rows)

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.basis.entries))

    def key(self) -> tuple:
        return tuple(tuple(r) for r in self.basis.rows)

    def _check(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise AmbientMismatch(f"ambient dims {self.ambient_dim} vs {other.ambient_dim}")
        self.field.check_same(other.field)

    def reduce(self, v: Sequence) -> list:
        """Remainder of v after eliminating the pivot coordinates."""
        p = self.field.characteristic
        v = list(v)
        for row, c in zip(self.basis.rows, self.pivots):
            f = v[c]
            if f:
                if p:
                    v = [(x - f * y) % p for x, y in zip(v, row)]
                else:
                    v = [x - f * y if y else x for x, y in zip(v, row)]
        return v

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def contains_space(self, other: "Subspace") -> bool:
        self._check(other)
        return all(self.contains(r) for r in other.basis.rows)

    __ge__ = contains_space

    def __le__(self, other):
        return other.contains_space(self)

    def coords(self, v: Sequence) -> list:
        """Coordinates of v (assumed to lie in the space) in the RREF basis."""
        return [v[c] for c in self.pivots]

    def from_coords(self, c: Sequence) -> list:
        p = self.field.characteristic
        out = [0] * self.ambient_dim
        for x, row in zip(c, self.basis.rows):
            if x:
                for j, y in enumerate(row):
                    if y:
                        out[j] += x * y
        return [v % p for v in out] if p else out

    def complement_vectors(self) -> list[list]:
        """Unit vectors at the non-pivot columns; they span a complement."""
        piv = set(self.pivots)
        out = []
        for j in range(self.ambient_dim):
            if j not in piv:
                v = [0] * self.ambient_dim
                v[j] = 1
                out.append(v)
        return out

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.field, self.ambient_dim,
                             self.vectors() + other.vectors())

    def __and__(self, other: "Subspace") -> "Subspace":
        return self.intersection(other)

    def intersection(self, other: "Subspace") -> "Subspace":
        """Zassenhaus: row reduce [[a, a], [b, 0]]."""
        self._check(other)
        n = self.ambient_dim
        rows = [list(r) + list(r) for r in self.basis.rows]
        rows += [list(r) + [0] * n for r in other.basis.rows]
        rows, piv = _rref_rows(rows, 2 * n, self.field.characteristic)
        inter = [r[n:] for r, c in zip(rows, piv) if c >= n]
        return Subspace.span(self.field, n, inter)

    def image_under(self, m: Mat) -> "Subspace":
        return Subspace.span(self.field, m.nrows, [m.apply(v) for v in self.basis.rows])

    def preimage_under(self, m: Mat) -> "Subspace":
        """{v : m v in self}."""
        perp = kernel_basis(Mat._wrap(self.field, self.basis.rows, self.ambient_dim))
        cond = Mat._wrap(self.field, perp.basis.rows, self.ambient_dim) @ m
        return kernel_basis(cond)


class Echelon:
    """An RREF basis grown one vector at a time."""

    def __init__(self, field: FieldSpec, n: int, vectors: Iterable[Sequence] = ()):
        self.field = field
        self.n = n
        self.rows: list[list] = []
        self.pivots: list[int] = []
        for v in vectors:
            self.add(v)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, v: Sequence) -> list:
        p = self.field.characteristic
        v = list(v)
        for row, c in zip(self.rows, self.pivots):
            f = v[c]
            if f:
                for j, y in enumerate(row):
                    if y:
                        v[j] = (v[j] - f * y) % p if p else v[j] - f * y
        return v

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def add(self, v: Sequence) -> bool:
        """Insert v; False when it was already in the span."""
        r = self.reduce(v)
        c = next((j for j, x in enumerate(r) if x), -1)
        if c < 0:
            return False
        inv = self.field.inv(r[c])
        p = self.field.characteristic
        r = [x * inv % p if p else x * inv for x in r]
        if not p:
            r = [int(x) if isinstance(x, Fraction) and x.denominator == 1 else x for x in r]
        for row in self.rows:
            f = row[c]
            if f:
                for j, y in enumerate(r):
                    if y:
                        row[j] = (row[j] - f * y) % p if p else row[j] - f * y
        self.rows.append(r)
        self.pivots.append(c)
        return True

    def subspace(self) -> "Subspace":
        order = sorted(range(len(self.pivots)), key=self.pivots.__getitem__)
        return Subspace(self.field, self.n, [list(self.rows[i]) for i in order],
                        [self.pivots[i] for i in order])


def subspace_ops(a: Subspace, b: Subspace) -> dict:
    """Sum, intersection and the containment a <= b."""
    a._check(b)
    return {"sum": a + b, "intersection": a & b, "contains": b.contains_space(a)}


def vec_add(u, v, p):
    return [(x + y) % p for x, y in zip(u, v)] if p else [x + y for x, y in zip(u, v)]


def vec_scale(c, v, p):
    return [x * c % p for x in v] if p else [x * c for x in v]


def vec_sub(u, v, p):
    return [(x - y) % p for x, y in zip(u, v)] if p else [x - y for x, y in zip(u, v)]


def lin_comb(coeffs: Sequence, vectors: Sequence[Sequence], n: int, p: int) -> list:
    out = [0] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for j, y in enumerate(v):
                if y:
                    out[j] += c * y
    return [x % p for x in out] if p else out


def mat_comb(field: FieldSpec, coeffs: Sequence, mats: Sequence[Mat], nrows: int, ncols: int) -> Mat:
    p = field.characteristic
    out = [[0] * ncols for _ in range(nrows)]
    for c, m in zip(coeffs, mats):
        if c:
            for i, j, y in m.nonzeros():
                out[i][j] += c * y
    if p:
        out = [[x % p for x in r] for r in out]
    return Mat._wrap(field, out, ncols)
