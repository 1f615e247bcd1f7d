"""Chain, duchain and mixed complexes; Connes' total complex.

A complex lives in degrees 0..top.  b[n]: X_n -> X_{n-1} for 1 <= n <= top,
B[n]: X_n -> X_{n+1} for 0 <= n < top.  ``exact_top`` is the highest degree
whose data does not depend on anything beyond the truncation; homology in
degree n is flagged truncated once n >= exact_top.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dfield

from .linalg import Matrix, Quotient, block, field_from_json, induced, rank


@dataclass
class ValidationReport:
    violations: list = dfield(default_factory=list)
    notes: list = dfield(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def fail(self, name, degree, detail=""):
        self.violations.append((name, degree, detail))

    def first_degree(self):
        if not self.violations:
            return None
        return min(v[1] for v in self.violations)

    def extend(self, other):
        self.violations += other.violations
        self.notes += other.notes

    def __bool__(self):
        return self.ok

    def lines(self):
        out = [f"violated {n} at degree {d}" + (f": {x}" if x else "") for n, d, x in self.violations]
        return out + list(self.notes)


@dataclass
class ChainComplex:
    field: object
    dims: list
    b: dict
    exact_top: int = None

    def __post_init__(self):
        if self.exact_top is None:
            self.exact_top = self.top
        for n in range(1, self.top + 1):
            m = self.b.get(n)
            if m is None:
                m = self.b[n] = Matrix.zeros(self.field, self.dims[n - 1], self.dims[n])
            if m.shape != (self.dims[n - 1], self.dims[n]):
                raise ValueError(f"b_{n} has shape {m.shape}, expected {(self.dims[n - 1], self.dims[n])}")
        self._ranks = {}

    @property
    def top(self):
        return len(self.dims) - 1

    def rank_b(self, n):
        if n <= 0 or n > self.top:
            return 0
        if n not in self._ranks:
            self._ranks[n] = rank(self.b[n])
        return self._ranks[n]


@dataclass
class DuchainComplex(ChainComplex):
    B: dict = None

    def __post_init__(self):
        if self.B is None:
            self.B = {}
        super().__post_init__()
        for n in range(0, self.top):
            m = self.B.get(n)
            if m is None:
                m = self.B[n] = Matrix.zeros(self.field, self.dims[n + 1], self.dims[n])
            if m.shape != (self.dims[n + 1], self.dims[n]):
                raise ValueError(f"B_{n} has shape {m.shape}, expected {(self.dims[n + 1], self.dims[n])}")


MixedComplex = DuchainComplex


def validate(c, kind="mixed"):
    """Check b^2 = 0, and for duchains B^2 = 0, and for mixed bB + Bb = 0."""
    rep = ValidationReport()
    N = c.top
    for n in range(2, N + 1):
        if not (c.b[n - 1] @ c.b[n]).is_zero():
            rep.fail("bb=0", n)
    if kind == "chain_only":
        return rep
    for n in range(0, N - 1):
        if not (c.B[n + 1] @ c.B[n]).is_zero():
            rep.fail("BB=0", n)
    if kind == "duchain":
        return rep
    if kind != "mixed":
        raise ValueError(f"unknown kind {kind!r}")
    for n in range(0, N):
        # bB + Bb on X_n, landing in X_n
        s = c.b[n + 1] @ c.B[n]
        if n >= 1:
            s = s + c.B[n - 1] @ c.b[n]
        if not s.is_zero():
            rep.fail("bB+Bb=0", n)
    return rep


def homology(c, n):
    if n < 0 or n > c.top:
        raise ValueError(f"degree {n} outside 0..{c.top}")
    return c.dims[n] - c.rank_b(n) - c.rank_b(n + 1)


def homology_table(c, upto=None):
    """[(n, dim, truncated)] for n = 0..upto (default: top)."""
    upto = c.top if upto is None else upto
    return [(n, homology(c, n), n >= c.exact_top) for n in range(upto + 1)]


def betti(c, upto=None):
    """Betti numbers in the degrees that are free of truncation effects."""
    upto = c.exact_top - 1 if upto is None else upto
    if upto >= c.exact_top:
        raise ValueError(f"degree {upto} is truncated (exact below {c.exact_top})")
    return [homology(c, n) for n in range(upto + 1)]


def _summands(n):
    return list(range(n, -1, -2))


def total_complex(m, check=True):
    """Chain complex with T_n = X_n + X_{n-2} + ... and differential b + B."""
    f = m.field
    N = m.top
    dims = [sum(m.dims[k] for k in _summands(n)) for n in range(N + 1)]
    D = {}
    for n in range(1, N + 1):
        src = _summands(n)
        tgt = _summands(n - 1)
        blocks = {}
        for i, k in enumerate(src):
            if k >= 1:
                blocks[(i, i)] = m.b[k]
            if i >= 1:
                blocks[(i - 1, i)] = m.B[k]
        D[n] = block(f, [m.dims[k] for k in tgt], [m.dims[k] for k in src], blocks)
    out = ChainComplex(f, dims, D, exact_top=m.exact_top)
    if check:
        bad = validate(out, "chain_only")
        if not bad.ok:
            raise ValueError(f"(b+B)^2 != 0: {bad.lines()}")
    return out


def hc(m, n):
    return homology(total_complex(m), n)


def hc_table(m, upto=None):
    return homology_table(total_complex(m), upto)


def hc_betti(m, upto=None):
    return betti(total_complex(m), upto)


def t_operator(d):
    """T_n = 1 - b_{n+1}B_n - B_{n-1}b_n, using only composites that exist."""
    f = d.field
    T = {}
    for n in range(d.top + 1):
        t = Matrix.identity(f, d.dims[n])
        if n < d.top:
            t = t - d.b[n + 1] @ d.B[n]
        if n >= 1:
            t = t - d.B[n - 1] @ d.b[n]
        T[n] = t
    return T


def t_operator_and_mixedify(d):
    """(T, mixed quotient by im(1 - T)).  The top degree lacks B_top and is flagged."""
    f = d.field
    N = d.top
    T = t_operator(d)
    for n in range(1, N):
        if d.b[n] @ T[n] != T[n - 1] @ d.b[n]:
            raise AssertionError(f"bT != Tb at degree {n}")
    for n in range(0, N - 1):
        if d.B[n] @ T[n] != T[n + 1] @ d.B[n]:
            raise AssertionError(f"BT != TB at degree {n}")
    Q = []
    for n in range(N + 1):
        one_minus = Matrix.identity(f, d.dims[n]) - T[n]
        Q.append(Quotient(f, d.dims[n], one_minus.columns()))
    b = {n: induced(d.b[n], Q[n], Q[n - 1], check=n < N) for n in range(1, N + 1)}
    B = {n: induced(d.B[n], Q[n], Q[n + 1], check=n + 1 < N) for n in range(0, N)}
    m = MixedComplex(f, [q.dim for q in Q], b, exact_top=min(d.exact_top, N - 1) if N else 0, B=B)
    check = MixedComplex(f, m.dims[:N], {k: v for k, v in b.items() if k < N},
                         B={k: v for k, v in B.items() if k < N - 1}) if N >= 1 else m
    rep = validate(check, "mixed")
    if not rep.ok:
        raise AssertionError(f"mixedify output is not mixed: {rep.lines()}")
    return T, m


def is_mixed(c):
    return validate(c, "mixed").ok


# JSON

def complex_from_json(obj, kind="duchain"):
    f = field_from_json(obj["field"])
    dims = [int(x) for x in obj["dims"]]
    N = len(dims) - 1
    bs = obj.get("b", [])
    Bs = obj.get("B", [])
    if len(bs) not in (0, N) or len(Bs) not in (0, N):
        raise ValueError("b needs one matrix per degree 1..N and B one per degree 0..N-1")

    def mat(grid, r, c):
        if r == 0 or c == 0:
            return Matrix.zeros(f, r, c)
        return Matrix.from_dense(f, grid, c)

    b = {n: mat(bs[n - 1], dims[n - 1], dims[n]) for n in range(1, N + 1)} if bs else {}
    B = {n: mat(Bs[n], dims[n + 1], dims[n]) for n in range(0, N)} if Bs else {}
    return DuchainComplex(f, dims, b, B=B)


def complex_to_json(c):
    return {
        "field": c.field.to_json(),
        "dims": list(c.dims),
        "b": [c.b[n].to_json() for n in range(1, c.top + 1)],
        "B": [c.B[n].to_json() for n in range(0, c.top)],
    }
