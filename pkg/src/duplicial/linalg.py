"""Exact fields and matrices.

Entries are stored row-wise as {column: value} dicts with zeros dropped.
Every matrix carries its field; combining matrices over different fields
raises FieldMismatch.  Tensor indices are left-factor major throughout:
basis vector (i, j) of U (x) V sits at position i * dim V + j.
"""
from __future__ import annotations

from fractions import Fraction


class FieldMismatch(ValueError):
    pass


class NotInvertible(ValueError):
    pass


class Field:
    p = 0

    def reduce(self, x):
        return x

    def inv(self, a):
        raise NotImplementedError

    def parse(self, s):
        raise NotImplementedError

    def fmt(self, x):
        raise NotImplementedError


class Rationals(Field):
    p = 0

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def reduce(self, x):
        if isinstance(x, Fraction) and x.denominator == 1:
            return x.numerator
        return x

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.reduce(Fraction(1) / a)

    def parse(self, s):
        if isinstance(s, bool):
            raise TypeError("booleans are not scalars")
        if isinstance(s, (int, Fraction)):
            return self.reduce(Fraction(s))
        if isinstance(s, str):
            return self.reduce(Fraction(s.strip()))
        raise TypeError(f"cannot read {s!r} as a rational")

    def fmt(self, x):
        x = Fraction(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    def to_json(self):
        return "Q"


class PrimeField(Field):
    def __init__(self, p):
        p = int(p)
        if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def reduce(self, x):
        return x % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def parse(self, s):
        if isinstance(s, bool):
            raise TypeError("booleans are not scalars")
        if isinstance(s, int):
            return s % self.p
        q = Fraction(s.strip()) if isinstance(s, str) else Fraction(s)
        return (q.numerator * self.inv(q.denominator)) % self.p

    def fmt(self, x):
        return str(x % self.p)

    def to_json(self):
        return {"Fp": self.p}


QQ = Rationals()


def GF(p):
    return PrimeField(p)


def field_from_json(obj):
    if obj == "Q":
        return QQ
    if isinstance(obj, dict) and set(obj) == {"Fp"}:
        return GF(obj["Fp"])
    raise ValueError(f"unknown field {obj!r}")


def _same_field(a, b):
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")


def _axpy(r, a, v, p):
    """r += a * v in place, dropping zeros."""
    get = r.get
    if p:
        for k, x in v.items():
            y = (get(k, 0) + a * x) % p
            if y:
                r[k] = y
            else:
                r.pop(k, None)
    else:
        for k, x in v.items():
            y = get(k, 0) + a * x
            if y:
                r[k] = y
            else:
                r.pop(k, None)


class Matrix:
    """Immutable sparse matrix over an exact field."""

    __slots__ = ("field", "nrows", "ncols", "rows", "_hash", "_cols")

    def __init__(self, field, nrows, ncols, rows=None):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        if rows is None:
            rows = tuple({} for _ in range(nrows))
        elif len(rows) != nrows:
            raise ValueError("row count mismatch")
        self.rows = tuple(rows)
        self._hash = None
        self._cols = None

    # construction
    @classmethod
    def zeros(cls, field, nrows, ncols):
        return cls(field, nrows, ncols)

    @classmethod
    def identity(cls, field, n):
        return cls(field, n, n, tuple({i: 1} for i in range(n)))

    @classmethod
    def from_dense(cls, field, grid, ncols=None):
        grid = [list(r) for r in grid]
        if ncols is None:
            ncols = len(grid[0]) if grid else 0
        rows = []
        for r in grid:
            if len(r) != ncols:
                raise ValueError("ragged matrix")
            rows.append({j: v for j, v in ((j, field.parse(x)) for j, x in enumerate(r)) if v})
        return cls(field, len(grid), ncols, rows)

    @classmethod
    def from_columns(cls, field, nrows, columns):
        """columns: list of {row: value} dicts."""
        rows = [dict() for _ in range(nrows)]
        for j, col in enumerate(columns):
            for i, v in col.items():
                v = field.reduce(v)
                if v:
                    rows[i][j] = v
        return cls(field, nrows, len(columns), rows)

    @classmethod
    def from_function(cls, field, nrows, ncols, image):
        """image(j) -> {row: value} gives column j."""
        return cls.from_columns(field, nrows, [image(j) for j in range(ncols)])

    # access
    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i].get(j, 0)

    def to_dense(self):
        return [[r.get(j, 0) for j in range(self.ncols)] for r in self.rows]

    def entries(self):
        """Row-major list of all nrows * ncols entries."""
        return [x for r in self.to_dense() for x in r]

    def columns(self):
        cols = [dict() for _ in range(self.ncols)]
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                cols[j][i] = v
        return cols

    def nnz(self):
        return sum(len(r) for r in self.rows)

    def is_zero(self):
        return not any(self.rows)

    def is_identity(self):
        if self.nrows != self.ncols:
            return False
        return all(len(r) == 1 and r.get(i) == 1 for i, r in enumerate(self.rows))

    def apply(self, vec):
        """Image of a sparse column vector {index: value}."""
        if self._cols is None:
            self._cols = self.columns()
        cols = self._cols
        out = {}
        _p = self.field.p
        for j, v in vec.items():
            _axpy(out, v, cols[j], _p)
        return out

    # arithmetic
    def __matmul__(self, other):
        _same_field(self, other)
        if self.ncols != other.nrows:
            raise ValueError(f"cannot compose {self.shape} with {other.shape}")
        p = self.field.p
        orows = other.rows
        out = []
        for ra in self.rows:
            acc = {}
            get = acc.get
            for k, a in ra.items():
                for j, b in orows[k].items():
                    acc[j] = get(j, 0) + a * b
            if p:
                acc = {j: v % p for j, v in acc.items() if v % p}
            else:
                acc = {j: v for j, v in acc.items() if v}
            out.append(acc)
        return Matrix(self.field, self.nrows, other.ncols, out)

    def _combine(self, other, sign):
        _same_field(self, other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        p = self.field.p
        out = []
        for ra, rb in zip(self.rows, other.rows):
            r = dict(ra)
            _axpy(r, sign, rb, p)
            out.append(r)
        return Matrix(self.field, self.nrows, self.ncols, out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        f = self.field
        c = f.reduce(c)
        if not c:
            return Matrix(f, self.nrows, self.ncols)
        return Matrix(f, self.nrows, self.ncols,
                      [{j: f.reduce(c * v) for j, v in r.items()} for r in self.rows])

    def __pow__(self, k):
        if self.nrows != self.ncols:
            raise ValueError("power of a non-square matrix")
        out = Matrix.identity(self.field, self.nrows)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def transpose(self):
        return Matrix(self.field, self.ncols, self.nrows, self.columns())

    T = property(transpose)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field == other.field and self.shape == other.shape
                and self.rows == other.rows)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.shape, tuple(tuple(sorted(r.items())) for r in self.rows)))
        return self._hash

    def __repr__(self):
        if self.nrows * self.ncols <= 64:
            body = [[self.field.fmt(x) for x in r] for r in self.to_dense()]
            return f"Matrix({self.field}, {body})"
        return f"Matrix({self.field}, {self.nrows}x{self.ncols}, nnz={self.nnz()})"

    def with_entry(self, i, j, value):
        """Copy with one entry replaced (used for mutation tests)."""
        rows = [dict(r) for r in self.rows]
        v = self.field.reduce(value)
        if v:
            rows[i][j] = v
        else:
            rows[i].pop(j, None)
        return Matrix(self.field, self.nrows, self.ncols, rows)

    def to_json(self):
        f = self.field
        return [[f.fmt(x) for x in r] for r in self.to_dense()]


def kron(a, b):
    _same_field(a, b)
    p = a.field.p
    rows = []
    nb = b.ncols
    for ra in a.rows:
        for rb in b.rows:
            r = {}
            for j1, x in ra.items():
                base = j1 * nb
                for j2, y in rb.items():
                    v = x * y
                    if p:
                        v %= p
                    if v:
                        r[base + j2] = v
            rows.append(r)
    return Matrix(a.field, a.nrows * b.nrows, a.ncols * b.ncols, rows)


def kron_all(mats):
    out = mats[0]
    for m in mats[1:]:
        out = kron(out, m)
    return out


def dsum(a, b):
    _same_field(a, b)
    rows = [dict(r) for r in a.rows]
    off = a.ncols
    rows += [{j + off: v for j, v in r.items()} for r in b.rows]
    return Matrix(a.field, a.nrows + b.nrows, a.ncols + b.ncols, rows)


def tensor_and_dsum(a, b, mode):
    if mode == "kronecker":
        return kron(a, b)
    if mode == "direct_sum":
        return dsum(a, b)
    raise ValueError(f"unknown mode {mode!r}")


def block(field, row_dims, col_dims, blocks):
    """Assemble a block matrix; blocks maps (i, j) -> Matrix."""
    roff = [0]
    for d in row_dims:
        roff.append(roff[-1] + d)
    coff = [0]
    for d in col_dims:
        coff.append(coff[-1] + d)
    rows = [dict() for _ in range(roff[-1])]
    for (bi, bj), m in blocks.items():
        if m.field != field:
            raise FieldMismatch(f"{m.field} vs {field}")
        if m.shape != (row_dims[bi], col_dims[bj]):
            raise ValueError(f"block {(bi, bj)} has shape {m.shape}")
        for i, r in enumerate(m.rows):
            tgt = rows[roff[bi] + i]
            for j, v in r.items():
                tgt[coff[bj] + j] = v
    return Matrix(field, roff[-1], coff[-1], rows)


def hstack(mats):
    f = mats[0].field
    return block(f, [mats[0].nrows], [m.ncols for m in mats], {(0, k): m for k, m in enumerate(mats)})


def vstack(mats):
    f = mats[0].field
    return block(f, [m.nrows for m in mats], [mats[0].ncols], {(k, 0): m for k, m in enumerate(mats)})


class Echelon:
    """Reduced row echelon basis of a span of sparse vectors."""

    def __init__(self, field, width, vectors=()):
        self.field = field
        self.width = width
        self.piv = {}
        for v in vectors:
            self.add(v)

    def reduce(self, v):
        """Reduce a copy of v modulo the span."""
        r = dict(v)
        p = self.field.p
        piv = self.piv
        for c in [c for c in r if c in piv]:
            a = r.get(c)
            if a:
                _axpy(r, -a, piv[c], p)
        return r

    def add(self, v):
        """Insert v; return True if it enlarged the span."""
        r = self.reduce(v)
        if not r:
            return False
        f = self.field
        p = f.p
        c = min(r)
        a = f.inv(r[c])
        if a != 1:
            r = {k: f.reduce(a * x) for k, x in r.items()}
        for row in self.piv.values():
            b = row.get(c)
            if b:
                _axpy(row, -b, r, p)
        self.piv[c] = r
        return True

    @property
    def rank(self):
        return len(self.piv)

    def free_columns(self):
        return [j for j in range(self.width) if j not in self.piv]


def rank(m):
    e = Echelon(m.field, m.ncols)
    for r in m.rows:
        e.add(r)
    return e.rank


def rank_and_kernel(m):
    """(rank, kernel basis as a list of dense column tuples)."""
    f = m.field
    e = Echelon(f, m.ncols)
    for r in m.rows:
        e.add(r)
    kernel = []
    for j in e.free_columns():
        v = [0] * m.ncols
        v[j] = 1
        for c, row in e.piv.items():
            x = row.get(j)
            if x:
                v[c] = f.reduce(-x)
        kernel.append(tuple(v))
    return e.rank, kernel


def invert(m):
    if m.nrows != m.ncols:
        raise ValueError("invert needs a square matrix")
    n = m.nrows
    f = m.field
    # eliminate on [m | I] row by row
    aug = [dict(r) for r in m.rows]
    for i in range(n):
        aug[i][n + i] = 1
    e = Echelon(f, 2 * n)
    for r in aug:
        e.add(r)
    if any(c >= n for c in e.piv) or len(e.piv) < n:
        raise NotInvertible("matrix is singular")
    rows = []
    for c in range(n):
        row = e.piv[c]
        rows.append({k - n: v for k, v in row.items() if k >= n})
    return Matrix(f, n, n, rows)


def is_invertible(m):
    return m.nrows == m.ncols and rank(m) == m.nrows


class Quotient:
    """V / W for W spanned by given vectors, with the pivot-complement basis.

    Coordinates of the quotient are the non-pivot coordinates of V, read off
    after full reduction modulo W.
    """

    def __init__(self, field, ambient, relations=()):
        self.field = field
        self.ambient = ambient
        self.ech = Echelon(field, ambient, relations)
        self.basis = self.ech.free_columns()
        self.index = {c: k for k, c in enumerate(self.basis)}
        self._proj = None
        self._incl = None

    @property
    def dim(self):
        return len(self.basis)

    def project_vec(self, v):
        r = self.ech.reduce(v)
        idx = self.index
        return {idx[c]: x for c, x in r.items()}

    def contains(self, v):
        return not self.ech.reduce(v)

    @property
    def proj(self):
        if self._proj is None:
            f = self.field
            cols = []
            for j in range(self.ambient):
                if j in self.index:
                    cols.append({self.index[j]: 1})
                else:
                    row = self.ech.piv[j]
                    cols.append({self.index[c]: f.reduce(-x) for c, x in row.items() if c != j})
            self._proj = Matrix.from_columns(f, self.dim, cols)
        return self._proj

    @property
    def incl(self):
        if self._incl is None:
            self._incl = Matrix.from_columns(self.field, self.ambient,
                                             [{c: 1} for c in self.basis])
        return self._incl

    def relations(self):
        return list(self.ech.piv.values())


def induced(f, src, tgt, check=True):
    """Map between quotients induced by f on ambients; asserts f(W_src) in W_tgt."""
    if check:
        for w in src.relations():
            if not tgt.contains(f.apply(w)):
                raise ValueError("map does not descend to the quotient")
    return tgt.proj @ f @ src.incl
