"""Truncated simplicial, duplicial and cyclic modules.

Faces d_i: X_n -> X_{n-1} (0 <= i <= n, n >= 1), degeneracies s_j: X_n -> X_{n+1}
(0 <= j <= n, n < top), operator t: X_n -> X_n.  An augmentation, when present,
is treated as the face d_0: X_0 -> X_{-1}.  Every violated identity is reported
with the degree of its domain.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dfield

from .complexes import ChainComplex, DuchainComplex, ValidationReport, validate
from .complexes import betti, homology_table, t_operator_and_mixedify, total_complex
from .linalg import Matrix, Quotient, field_from_json, induced


@dataclass
class SimplicialModule:
    field: object
    dims: list
    faces: dict
    degens: dict
    t: dict = None
    aug: Matrix = None
    aug_dim: int = None
    exact_top: int = None

    def __post_init__(self):
        if self.exact_top is None:
            self.exact_top = self.top
        if self.aug is not None and self.aug_dim is None:
            self.aug_dim = self.aug.nrows
        self._shape_check()

    @property
    def top(self):
        return len(self.dims) - 1

    @property
    def augmented(self):
        return self.aug is not None

    @property
    def has_t(self):
        return self.t is not None

    def _shape_check(self):
        N = self.top
        for n in range(1, N + 1):
            for i in range(n + 1):
                m = self.faces[(n, i)]
                if m.shape != (self.dims[n - 1], self.dims[n]):
                    raise ValueError(f"d_{i} in degree {n} has shape {m.shape}")
        for n in range(N):
            for j in range(n + 1):
                m = self.degens[(n, j)]
                if m.shape != (self.dims[n + 1], self.dims[n]):
                    raise ValueError(f"s_{j} in degree {n} has shape {m.shape}")
        if self.t is not None:
            for n in range(N + 1):
                if self.t[n].shape != (self.dims[n], self.dims[n]):
                    raise ValueError(f"t in degree {n} has shape {self.t[n].shape}")
        if self.aug is not None and self.aug.shape != (self.aug_dim, self.dims[0]):
            raise ValueError("augmentation has the wrong shape")

    # uniform access used by the identity checker
    def face(self, n, i):
        if n == 0:
            return self.aug
        return self.faces[(n, i)]

    def degen(self, n, j):
        return self.degens[(n, j)]

    def tmap(self, n):
        return self.t[n]

    def ident(self, n):
        return Matrix.identity(self.field, self.aug_dim if n < 0 else self.dims[n])

    @staticmethod
    def compose(f, g):
        return f @ g

    @staticmethod
    def equal(f, g):
        return f == g

    def with_t(self, t):
        return SimplicialModule(self.field, self.dims, self.faces, self.degens, t,
                                self.aug, self.aug_dim, self.exact_top)

    def without_t(self):
        return self.with_t(None)

    def truncate(self, top):
        return SimplicialModule(
            self.field, self.dims[:top + 1],
            {k: v for k, v in self.faces.items() if k[0] <= top},
            {k: v for k, v in self.degens.items() if k[0] < top},
            None if self.t is None else {n: self.t[n] for n in range(top + 1)},
            self.aug, self.aug_dim, min(self.exact_top, top))


TruncatedSimplicialModule = SimplicialModule
TruncatedDuplicialModule = SimplicialModule


def check_identities(x, level="duplicial", rep=None):
    """Evaluate the simplicial, duplicial and cyclic identities that fit in the truncation.

    ``x`` needs face/degen/tmap/ident/compose/equal and ``top``/``augmented``;
    both the linear modules here and the nerve's simplicial sets qualify.
    """
    if level not in ("simplicial", "duplicial", "cyclic"):
        raise ValueError(f"unknown level {level!r}")
    rep = ValidationReport() if rep is None else rep
    N = x.top
    c, eq = x.compose, x.equal
    lo = 0 if x.augmented else 1
    for n in range(max(lo + 1, 1), N + 1):
        for j in range(1, n + 1):
            for i in range(j):
                if not eq(c(x.face(n - 1, i), x.face(n, j)), c(x.face(n - 1, j - 1), x.face(n, i))):
                    rep.fail(f"d{i}d{j}=d{j - 1}d{i}", n)
    for n in range(0, N - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                if not eq(c(x.degen(n + 1, i), x.degen(n, j)), c(x.degen(n + 1, j + 1), x.degen(n, i))):
                    rep.fail(f"s{i}s{j}=s{j + 1}s{i}", n)
    for n in range(0, N):
        for j in range(n + 1):
            for i in range(n + 2):
                lhs = c(x.face(n + 1, i), x.degen(n, j))
                if i in (j, j + 1):
                    rhs = x.ident(n)
                elif i < j:
                    rhs = c(x.degen(n - 1, j - 1), x.face(n, i))
                else:
                    rhs = c(x.degen(n - 1, j), x.face(n, i - 1))
                if not eq(lhs, rhs):
                    rep.fail(f"d{i}s{j}", n)
    if level == "simplicial":
        return rep
    if not x.has_t:
        rep.fail("t present", 0)
        return rep
    for n in range(N + 1):
        t = x.tmap(n)
        for i in range(1, n + 1):
            if not eq(c(x.face(n, i), t), c(x.tmap(n - 1), x.face(n, i - 1))):
                rep.fail(f"d{i}t=td{i - 1}", n)
        if n >= lo and not eq(c(x.face(n, 0), t), x.face(n, n)):
            rep.fail("d0t=dn", n)
        if n < N:
            t1 = x.tmap(n + 1)
            for j in range(1, n + 1):
                if not eq(c(x.degen(n, j), t), c(t1, x.degen(n, j - 1))):
                    rep.fail(f"s{j}t=ts{j - 1}", n)
            if not eq(c(x.degen(n, 0), t), c(t1, c(t1, x.degen(n, n)))):
                rep.fail("s0t=ttsn", n)
    if level == "cyclic":
        for n in range(N + 1):
            if not eq(power(x, n), x.ident(n)):
                rep.fail("t^(n+1)=1", n)
    return rep


def power(x, n, k=None):
    """t^k in degree n (default k = n + 1)."""
    k = n + 1 if k is None else k
    out = x.ident(n)
    for _ in range(k):
        out = x.compose(x.tmap(n), out)
    return out


def check_structure(x, level="duplicial"):
    return check_identities(x, level)


def cyclic_failure_degree(x):
    for n in range(x.top + 1):
        if not x.equal(power(x, n), x.ident(n)):
            return n
    return None


# chain-level translations

def moore_complex(x):
    f = x.field
    b = {}
    for n in range(1, x.top + 1):
        m = Matrix.zeros(f, x.dims[n - 1], x.dims[n])
        for i in range(n + 1):
            d = x.faces[(n, i)]
            m = m + d if i % 2 == 0 else m - d
        b[n] = m
    return ChainComplex(f, list(x.dims), b, exact_top=x.exact_top)


def degeneracy_quotients(x):
    qs = []
    for n in range(x.top + 1):
        rel = []
        for i in range(n):
            rel += x.degens[(n - 1, i)].columns()
        qs.append(Quotient(x.field, x.dims[n], rel))
    return qs


def dold_kan_normalize(x):
    """(normalized chain complex NX, Moore complex, degreewise quotients)."""
    moore = moore_complex(x)
    qs = degeneracy_quotients(x)
    b = {n: induced(moore.b[n], qs[n], qs[n - 1]) for n in range(1, x.top + 1)}
    nx = ChainComplex(x.field, [q.dim for q in qs], b, exact_top=x.exact_top)
    rep = validate(nx, "chain_only")
    if not rep.ok:
        raise AssertionError(rep.lines())
    return nx, moore, qs


def _signed_t(x, n):
    return x.t[n] if n % 2 == 0 else -x.t[n]


def norm_operator(x, n):
    """N = sum of powers of the signed operator (-1)^n t in degree n."""
    tt = _signed_t(x, n)
    acc = Matrix.identity(x.field, x.dims[n])
    p = acc
    for _ in range(n):
        p = tt @ p
        acc = acc + p
    return acc


def connes_B(x, n):
    """(B, B_hat) on the unnormalized module: X_n -> X_{n+1}."""
    s_minus = x.t[n + 1] @ x.degens[(n, n)]
    bhat = s_minus @ norm_operator(x, n)
    one = Matrix.identity(x.field, x.dims[n + 1])
    return (one - _signed_t(x, n + 1)) @ bhat, bhat


def duplicial_to_duchain(x, normalized=True):
    """(NX, b, B) with B induced by (1 - t~) s_{-1} N; checked against the B_hat route."""
    if normalized:
        nx, moore, qs = dold_kan_normalize(x)
    else:
        moore = moore_complex(x)
        nx = moore
        qs = [Quotient(x.field, d) for d in x.dims]
    B = {}
    for n in range(x.top):
        full, hat = connes_B(x, n)
        if normalized:
            Bn = induced(full, qs[n], qs[n + 1])
            if Bn != induced(hat, qs[n], qs[n + 1]):
                raise AssertionError(f"B and B_hat differ on the normalized complex in degree {n}")
        else:
            Bn = full
        B[n] = Bn
    out = DuchainComplex(x.field, list(nx.dims), dict(nx.b), exact_top=x.exact_top, B=B)
    rep = validate(out, "duchain")
    if not rep.ok:
        raise AssertionError(rep.lines())
    return out


def dwyer_kan(x):
    """Normalized complex with codifferential (-1)^n t s_n."""
    nx, _, qs = dold_kan_normalize(x)
    B = {}
    for n in range(x.top):
        m = x.t[n + 1] @ x.degens[(n, n)]
        B[n] = induced(m if n % 2 == 0 else -m, qs[n], qs[n + 1])
    out = DuchainComplex(x.field, list(nx.dims), dict(nx.b), exact_top=x.exact_top, B=B)
    rep = validate(out, "duchain")
    if not rep.ok:
        raise AssertionError(rep.lines())
    return out


def pi_shriek(x):
    """Cyclic quotient X_n / im(1 - t^{n+1})."""
    f = x.field
    qs = []
    for n in range(x.top + 1):
        m = Matrix.identity(f, x.dims[n]) - x.t[n] ** (n + 1)
        qs.append(Quotient(f, x.dims[n], m.columns()))
    faces = {(n, i): induced(m, qs[n], qs[n - 1]) for (n, i), m in x.faces.items()}
    degens = {(n, j): induced(m, qs[n], qs[n + 1]) for (n, j), m in x.degens.items()}
    t = {n: induced(x.t[n], qs[n], qs[n]) for n in range(x.top + 1)}
    aug = None
    if x.aug is not None:
        aug = induced(x.aug, qs[0], Quotient(f, x.aug_dim))
    out = SimplicialModule(f, [q.dim for q in qs], faces, degens, t, aug, x.aug_dim, x.exact_top)
    rep = check_identities(out, "cyclic")
    if not rep.ok:
        raise AssertionError(rep.lines())
    return out


def hc_of_duplicial(x, route="via_pi_shriek_K", upto=None):
    """Cyclic homology Betti numbers in degrees 0..top-2."""
    if route == "via_pi_shriek_K":
        m = duplicial_to_duchain(pi_shriek(x))
        rep = validate(m, "mixed")
        if not rep.ok:
            raise AssertionError(rep.lines())
        m.exact_top = min(m.exact_top, x.top - 1)
    elif route == "via_P_F":
        _, m = t_operator_and_mixedify(duplicial_to_duchain(x))
    else:
        raise ValueError(f"unknown route {route!r}")
    safe = x.top - 2
    upto = safe if upto is None else upto
    if upto > safe:
        raise ValueError(f"degree {upto} is past the truncation-safe degree {safe}")
    return betti(total_complex(m), upto)


def hh_betti(x, upto=None):
    c = moore_complex(x)
    return betti(c, c.exact_top - 1 if upto is None else upto)


def hc_table_of_cyclic(x):
    """[(n, HC_n, truncated)] via the normalized mixed complex of a cyclic module."""
    m = duplicial_to_duchain(x)
    return homology_table(total_complex(m))


# decalage

@dataclass
class Decalage:
    module: SimplicialModule
    counit: dict = dfield(default_factory=dict)
    comult: dict = dfield(default_factory=dict)
    side: str = "right"


def _ensure_augmented(x):
    if x.aug is not None:
        return x
    z = Matrix.zeros(x.field, 0, x.dims[0])
    return SimplicialModule(x.field, x.dims, x.faces, x.degens, x.t, z, 0, x.exact_top)


def decalage(x, side="right"):
    """Shift down one degree, discarding the last (right) or zeroth (left) face and degeneracy."""
    if x.aug is None:
        raise ValueError("decalage needs an augmented module")
    N = x.top
    if N == 0:
        raise ValueError("nothing to shift at top degree 0")
    dims = x.dims[1:]
    faces, degens, counit, comult = {}, {}, {}, {}
    off = 0 if side == "right" else 1
    if side not in ("right", "left"):
        raise ValueError(side)
    for n in range(1, N):
        for i in range(n + 1):
            faces[(n, i)] = x.faces[(n + 1, i + off)]
    for n in range(0, N - 1):
        for j in range(n + 1):
            degens[(n, j)] = x.degens[(n + 1, j + off)]
    aug = x.faces[(1, off)]
    for n in range(-1, N):
        # counit and comultiplication in decalage degree n act on X_{n+1}
        counit[n] = x.face(n + 1, n + 1 if side == "right" else 0)
        if n + 2 <= N:
            comult[n] = x.degens[(n + 1, n + 1 if side == "right" else 0)]
    mod = SimplicialModule(x.field, dims, faces, degens, None, aug, x.dims[0],
                           max(x.exact_top - 1, 0))
    return Decalage(mod, counit, comult, side)


def decalages_commute(x):
    a = decalage(decalage(x, "left").module, "right").module
    b = decalage(decalage(x, "right").module, "left").module
    return a.dims == b.dims and a.faces == b.faces and a.degens == b.degens and a.aug == b.aug


def decalage_coalgebra_report(x):
    """Check that t: Dec^r X -> Dec^l X is a coalgebra for the identity law Dec^r Dec^l = Dec^l Dec^r."""
    x = _ensure_augmented(x)
    rep = check_identities(x.without_t(), "simplicial")
    if not x.has_t:
        rep.fail("t present", 0)
        return rep
    if x.top == 0:
        return rep
    R = decalage(x, "right")
    L = decalage(x, "left")
    dr, dl = R.module, L.module
    N = x.top

    def tt(n):  # t as a map in decalage degree n
        return x.t[n + 1]

    for n in range(-1, N):
        deg = n + 1
        # simplicial morphism: faces
        for i in range(n + 1):
            if n == 0:
                lhs, rhs = dl.aug @ tt(0), tt(-1) @ dr.aug
            else:
                lhs, rhs = dl.faces[(n, i)] @ tt(n), tt(n - 1) @ dr.faces[(n, i)]
            if lhs != rhs:
                rep.fail(f"d{i + 1}t=td{i}", deg)
        # degeneracies
        if n >= 0 and n + 1 <= N - 1:
            for j in range(n + 1):
                if dl.degens[(n, j)] @ tt(n) != tt(n + 1) @ dr.degens[(n, j)]:
                    rep.fail(f"s{j + 1}t=ts{j}", deg)
        # counit
        if L.counit[n] @ tt(n) != R.counit[n]:
            rep.fail("d0t=dn", deg)
        # comultiplication: S(rho) chi T(rho) delta^T = delta^S rho
        if n in R.comult:
            lhs = tt(n + 1) @ tt(n + 1) @ R.comult[n]
            rhs = L.comult[n] @ tt(n)
            if lhs != rhs:
                rep.fail("s0t=ttsn", deg)
    return rep


def duplicial_equals_decalage_coalgebra(x):
    return decalage_coalgebra_report(x).ok


def opsimplicial(x):
    """Reverse the order of faces and degeneracies in each degree."""
    faces = {(n, i): x.faces[(n, n - i)] for (n, i) in x.faces}
    degens = {(n, j): x.degens[(n, n - j)] for (n, j) in x.degens}
    return SimplicialModule(x.field, list(x.dims), faces, degens, None, x.aug, x.aug_dim, x.exact_top)


def constant_module(field, top, dim=1, augmented=False):
    one = lambda: Matrix.identity(field, dim)
    faces = {(n, i): one() for n in range(1, top + 1) for i in range(n + 1)}
    degens = {(n, j): one() for n in range(top) for j in range(n + 1)}
    t = {n: one() for n in range(top + 1)}
    aug = one() if augmented else None
    return SimplicialModule(field, [dim] * (top + 1), faces, degens, t, aug, dim if augmented else None)


def zero_module(field, top):
    z = lambda: Matrix.zeros(field, 0, 0)
    faces = {(n, i): z() for n in range(1, top + 1) for i in range(n + 1)}
    degens = {(n, j): z() for n in range(top) for j in range(n + 1)}
    return SimplicialModule(field, [0] * (top + 1), faces, degens, {n: z() for n in range(top + 1)})


# JSON

def module_from_json(obj):
    f = field_from_json(obj["field"])
    dims = [int(d) for d in obj["dims"]]
    N = len(dims) - 1

    def mat(grid, r, c):
        if r == 0 or c == 0:
            return Matrix.zeros(f, r, c)
        return Matrix.from_dense(f, grid, c)

    faces = {}
    for n in range(1, N + 1):
        for i in range(n + 1):
            faces[(n, i)] = mat(obj["faces"][n - 1][i], dims[n - 1], dims[n])
    degens = {}
    for n in range(N):
        for j in range(n + 1):
            degens[(n, j)] = mat(obj["degens"][n][j], dims[n + 1], dims[n])
    t = None
    if obj.get("t") is not None:
        t = {n: mat(obj["t"][n], dims[n], dims[n]) for n in range(N + 1)}
    aug = None
    aug_dim = None
    if obj.get("augmentation") is not None:
        a = obj["augmentation"]
        aug_dim = len(a)
        aug = mat(a, aug_dim, dims[0])
    return SimplicialModule(f, dims, faces, degens, t, aug, aug_dim)


def module_to_json(x):
    N = x.top
    out = {
        "field": x.field.to_json(),
        "dims": list(x.dims),
        "faces": [[x.faces[(n, i)].to_json() for i in range(n + 1)] for n in range(1, N + 1)],
        "degens": [[x.degens[(n, j)].to_json() for j in range(n + 1)] for n in range(N)],
    }
    if x.t is not None:
        out["t"] = [x.t[n].to_json() for n in range(N + 1)]
    if x.aug is not None:
        out["augmentation"] = x.aug.to_json()
    return out
