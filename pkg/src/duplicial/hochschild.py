"""Finite-dimensional algebras, Hochschild and (twisted) cyclic modules.

C_n(A, M) = M (x) A^(x)n with basis tuples (m, a_1, ..., a_n), left-factor major.
Faces: d_0 = a_n m (x) a_1..a_{n-1}; 0 < i < n multiplies a_{n-i} a_{n-i+1};
d_n = m a_1 (x) a_2..a_n.  s_i inserts 1 right after a_{n-i}.  For M = A the
operator t moves a_0 to the end; its twisted form applies sigma to the new head.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dfield
from itertools import product

from .complexes import ValidationReport
from .engine import (BohmStefan, ChiCoalgebra, ChiOpcoalgebra, DistributiveLaw, LinearComonad,
                     LinearFunctor, Module, OneCell, act_by_one_cell, transport)
from .linalg import QQ, Matrix, Quotient, field_from_json, induced, kron, rank_and_kernel, vstack
from .simplicial import SimplicialModule, check_identities


@dataclass(eq=False)
class Algebra:
    field: object
    dim: int
    mult: list                      # mult[i][j] = {k: c}: x_i x_j = sum c x_k
    unit: dict
    labels: list = None
    name: str = ""
    L: list = dfield(init=False)
    R: list = dfield(init=False)

    def __post_init__(self):
        f, d = self.field, self.dim
        if self.labels is None:
            self.labels = [f"x{i}" for i in range(d)]
        self.mult = [[{k: f.reduce(v) for k, v in self.mult[i][j].items() if f.reduce(v)}
                      for j in range(d)] for i in range(d)]
        self.unit = {k: f.reduce(v) for k, v in self.unit.items() if f.reduce(v)}
        self.L = [Matrix.from_columns(f, d, [self.mult[i][j] for j in range(d)]) for i in range(d)]
        self.R = [Matrix.from_columns(f, d, [self.mult[j][i] for j in range(d)]) for i in range(d)]

    def __repr__(self):
        return f"Algebra({self.name or '?'}, dim={self.dim})"

    def times(self, u, v):
        f = self.field
        out = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, c in self.mult[i][j].items():
                    out[k] = out.get(k, 0) + a * b * c
        return {k: f.reduce(v) for k, v in out.items() if f.reduce(v)}

    def basis(self, i):
        return {i: 1}

    @property
    def unit_col(self):
        return Matrix.from_columns(self.field, self.dim, [self.unit])

    @property
    def mu(self):
        """Multiplication A (x) A -> A."""
        d = self.dim
        return Matrix.from_columns(self.field, d, [self.mult[i][j] for i in range(d) for j in range(d)])

    def ident(self):
        return Matrix.identity(self.field, self.dim)

    def regular(self):
        return Module(self.field, self.dim, left=list(self.L), right=list(self.R), label=f"{self.name}")

    def to_json(self):
        f = self.field
        d = self.dim
        return {
            "field": f.to_json(),
            "dim": d,
            "mult": [[[f.fmt(self.mult[i][j].get(k, 0)) for k in range(d)] for j in range(d)]
                     for i in range(d)],
            "unit": [f.fmt(self.unit.get(k, 0)) for k in range(d)],
            "labels": list(self.labels),
            **({"name": self.name} if self.name else {}),
        }


def algebra_report(A):
    rep = ValidationReport()
    d = A.dim
    for i, j, k in product(range(d), repeat=3):
        if A.times(A.times({i: 1}, {j: 1}), {k: 1}) != A.times({i: 1}, A.times({j: 1}, {k: 1})):
            rep.fail("associativity", 0, f"({A.labels[i]}, {A.labels[j]}, {A.labels[k]})")
    for i in range(d):
        if A.times(A.unit, {i: 1}) != {i: 1} or A.times({i: 1}, A.unit) != {i: 1}:
            rep.fail("unit", 0, A.labels[i])
    return rep


def algebra_from_json(obj):
    f = field_from_json(obj["field"])
    d = int(obj["dim"])
    mult = obj["mult"]
    if len(mult) != d or any(len(r) != d for r in mult) or any(len(c) != d for r in mult for c in r):
        raise ValueError("mult must be a dim x dim x dim array")
    if "unit" not in obj or len(obj["unit"]) != d:
        raise ValueError("unit vector missing or of the wrong length")
    m = [[{k: f.parse(mult[i][j][k]) for k in range(d)} for j in range(d)] for i in range(d)]
    unit = {k: f.parse(obj["unit"][k]) for k in range(d)}
    return Algebra(f, d, m, unit, obj.get("labels"), obj.get("name", ""))


# catalog

def ground_field(field=QQ):
    return Algebra(field, 1, [[{0: 1}]], {0: 1}, ["1"], "k")


def dual_numbers(field=QQ):
    """k[x]/(x^2) on the basis 1, x."""
    m = [[{0: 1}, {1: 1}], [{1: 1}, {}]]
    return Algebra(field, 2, m, {0: 1}, ["1", "x"], "k[x]/(x^2)")


def group_algebra(order, field=QQ):
    """k[C_n] on the basis g^0, ..., g^{n-1}."""
    m = [[{(i + j) % order: 1} for j in range(order)] for i in range(order)]
    return Algebra(field, order, m, {0: 1}, [f"g^{i}" for i in range(order)], f"k[C{order}]")


def diagonal(n, field=QQ):
    """k^n spanned by orthogonal idempotents."""
    m = [[{i: 1} if i == j else {} for j in range(n)] for i in range(n)]
    return Algebra(field, n, m, {i: 1 for i in range(n)}, [f"e{i}" for i in range(n)], f"k^{n}")


def matrix_units(pairs, n, field=QQ, name=""):
    """Span of the matrix units e_ij for (i, j) in pairs, closed under multiplication."""
    idx = {p: k for k, p in enumerate(pairs)}
    d = len(pairs)
    m = [[{} for _ in range(d)] for _ in range(d)]
    for (i, j), a in idx.items():
        for (k, l), b in idx.items():
            if j == k:
                m[a][b] = {idx[(i, l)]: 1}
    unit = {idx[(i, i)]: 1 for i in range(n)}
    return Algebra(field, d, m, unit, [f"e{i}{j}" for i, j in pairs], name)


def upper_triangular(field=QQ):
    return matrix_units([(0, 0), (0, 1), (1, 1)], 2, field, "T2")


def matrix_algebra(field=QQ):
    return matrix_units([(0, 0), (0, 1), (1, 0), (1, 1)], 2, field, "M2")


def algebra_catalog(field=QQ):
    return [ground_field(field), dual_numbers(field), upper_triangular(field),
            matrix_algebra(field), group_algebra(2, field), group_algebra(3, field)]


@dataclass(eq=False)
class AlgebraMap:
    matrix: Matrix
    name: str = ""

    def __repr__(self):
        return f"AlgebraMap({self.name})"


def algebra_map_report(A, s):
    rep = ValidationReport()
    m = s.matrix if isinstance(s, AlgebraMap) else s
    if m.shape != (A.dim, A.dim):
        rep.fail("shape", 0)
        return rep
    if m.apply(A.unit) != A.unit:
        rep.fail("sigma(1)=1", 0)
    for i, j in product(range(A.dim), repeat=2):
        lhs = m.apply(A.mult[i][j])
        rhs = A.times(m.apply({i: 1}), m.apply({j: 1}))
        if lhs != rhs:
            rep.fail("sigma(xy)=sigma(x)sigma(y)", 0, f"({A.labels[i]}, {A.labels[j]})")
    return rep


def algebra_map_from_json(A, obj):
    return AlgebraMap(Matrix.from_dense(A.field, obj["matrix"], A.dim), obj.get("name", ""))


def identity_map(A):
    return AlgebraMap(A.ident(), "id")


def sigma_catalog(field=QQ):
    """(algebra, algebra map) pairs; the first is the identity, the rest are not."""
    D = dual_numbers(field)
    C3 = group_algebra(3, field)
    K3 = diagonal(3, field)
    neg = AlgebraMap(Matrix.from_dense(field, [[1, 0], [0, -1]]), "x -> -x")
    swap = AlgebraMap(Matrix.from_dense(field, [[1, 0, 0], [0, 0, 1], [0, 1, 0]]), "g -> g^2")
    rot = AlgebraMap(Matrix.from_dense(field, [[0, 0, 1], [1, 0, 0], [0, 1, 0]]), "e0 -> e1 -> e2 -> e0")
    kill = AlgebraMap(Matrix.from_dense(field, [[1, 0], [0, 0]]), "x -> 0")
    return [(D, identity_map(D)), (D, neg), (C3, swap), (K3, rot), (D, kill)]


# bimodules

def bimodule_report(A, M):
    rep = ValidationReport()
    f = A.field
    I = Matrix.identity(f, M.dim)
    for side, acts, lmul in (("left", M.left, True), ("right", M.right, False)):
        if len(acts) != A.dim or any(a.shape != (M.dim, M.dim) for a in acts):
            rep.fail(f"{side} action shape", 0)
            return rep
        u = Matrix.zeros(f, M.dim, M.dim)
        for k, c in A.unit.items():
            u = u + acts[k].scale(c)
        if u != I:
            rep.fail(f"{side} unit", 0)
        for i, j in product(range(A.dim), repeat=2):
            prod = Matrix.zeros(f, M.dim, M.dim)
            for k, c in A.mult[i][j].items():
                prod = prod + acts[k].scale(c)
            comp = acts[i] @ acts[j] if lmul else acts[j] @ acts[i]
            if prod != comp:
                rep.fail(f"{side} associativity", 0, f"({A.labels[i]}, {A.labels[j]})")
    for i, j in product(range(A.dim), repeat=2):
        if M.left[i] @ M.right[j] != M.right[j] @ M.left[i]:
            rep.fail("left and right actions commute", 0, f"({A.labels[i]}, {A.labels[j]})")
    return rep


def bimodule_from_json(A, obj):
    f = A.field
    d = int(obj["dim"])
    left = [Matrix.from_dense(f, m, d) if d else Matrix.zeros(f, 0, 0) for m in obj["left"]]
    right = [Matrix.from_dense(f, m, d) if d else Matrix.zeros(f, 0, 0) for m in obj["right"]]
    return Module(f, d, left, right, label=obj.get("name", "M"))


def twisted_bimodule(A, s, M=None):
    """M with right action through s."""
    M = A.regular() if M is None else M
    m = s.matrix if isinstance(s, AlgebraMap) else s
    right = []
    for i in range(A.dim):
        r = Matrix.zeros(A.field, M.dim, M.dim)
        for k, c in m.columns()[i].items():
            r = r + M.right[k].scale(c)
        right.append(r)
    return Module(A.field, M.dim, list(M.left), right, label=f"{M.label}_sigma")


def free_bimodule(A):
    """A (x) A with outer actions."""
    I = A.ident()
    return Module(A.field, A.dim ** 2, [kron(l, I) for l in A.L], [kron(I, r) for r in A.R], "A(x)A")


# direct construction of C(A, M)

def _radix(dims):
    w = [1] * len(dims)
    for k in range(len(dims) - 2, -1, -1):
        w[k] = w[k + 1] * dims[k + 1]
    return w


def tensor_map(field, src_dims, tgt_dims, image):
    """Matrix of the map sending basis tuple u to image(u) = {tuple: coeff}."""
    w = _radix(tgt_dims)
    cols = []
    total = 1
    for d in tgt_dims:
        total *= d
    for u in product(*[range(d) for d in src_dims]):
        col = {}
        for v, c in image(u).items():
            k = sum(a * b for a, b in zip(v, w))
            col[k] = col.get(k, 0) + c
        cols.append(col)
    return Matrix.from_columns(field, total, cols)


def hochschild_cyclic_module(A, M=None, top=4, sigma=None):
    """C(A, M) with faces and degeneracies; with M = A also the (twisted) rotation t."""
    f = A.field
    d = A.dim
    regular = M is None
    M = A.regular() if M is None else M
    if sigma is not None and not regular:
        raise ValueError("the twisted module is defined for M = A")
    smat = None if sigma is None else (sigma.matrix if isinstance(sigma, AlgebraMap) else sigma)
    if smat is not None:
        bad = algebra_map_report(A, smat)
        if not bad.ok:
            raise ValueError(bad.lines())
    dm = M.dim
    Lc = [m.columns() for m in M.left]
    Rc = [m.columns() for m in M.right]
    scol = None if smat is None else smat.columns()
    mult = A.mult
    unit = A.unit

    def dims(n):
        return [dm] + [d] * n

    faces, degens, t = {}, {}, {}
    for n in range(1, top + 1):
        for i in range(n + 1):
            if i == 0:
                def img(u, n=n):
                    return {(r,) + u[1:n]: c for r, c in Lc[u[n]][u[0]].items()}
            elif i == n:
                def img(u, n=n):
                    out = {}
                    if scol is None:
                        for r, c in Rc[u[1]][u[0]].items():
                            out[(r,) + u[2:]] = c
                    else:
                        for k, s in scol[u[1]].items():
                            for r, c in Rc[k][u[0]].items():
                                key = (r,) + u[2:]
                                out[key] = out.get(key, 0) + s * c
                    return out
            else:
                p = n - i  # multiply a_p a_{p+1}; a_k sits at tuple position k

                def img(u, p=p):
                    return {u[:p] + (k,) + u[p + 2:]: c for k, c in mult[u[p]][u[p + 1]].items()}
            faces[(n, i)] = tensor_map(f, dims(n), dims(n - 1), img)
    for n in range(0, top):
        for j in range(n + 1):
            p = n - j  # insert after a_p

            def img(u, p=p):
                return {u[:p + 1] + (k,) + u[p + 1:]: c for k, c in unit.items()}
            degens[(n, j)] = tensor_map(f, dims(n), dims(n + 1), img)
    if regular:
        for n in range(top + 1):
            if n == 0:
                t[0] = smat if smat is not None else Matrix.identity(f, d)
                continue
            if scol is None:
                def img(u):
                    return {u[1:] + u[:1]: 1}
            else:
                def img(u):
                    return {(k,) + u[2:] + u[:1]: c for k, c in scol[u[1]].items()}
            t[n] = tensor_map(f, dims(n), dims(n), img)
    return SimplicialModule(f, [dm * d ** n for n in range(top + 1)], faces, degens, t or None)


def twisted_module(A, sigma, top=4):
    x = hochschild_cyclic_module(A, None, top, sigma)
    rep = check_identities(x, "duplicial")
    if not rep.ok:
        raise AssertionError(rep.lines())
    return x


def sigma_tensor_power(A, sigma, n):
    m = sigma.matrix if isinstance(sigma, AlgebraMap) else sigma
    out = m
    for _ in range(n):
        out = kron(out, m)
    return out


# the bar resolution instance

def bimodule_comonads(A):
    """T = - (x) A and S = A (x) - on A-bimodules, with chi the identity."""
    f, d = A.field, A.dim
    I_d = A.ident()
    u = A.unit_col

    def t_apply(X):
        I = Matrix.identity(f, X.dim)
        return Module(f, X.dim * d, [kron(l, I_d) for l in X.left], [kron(I, r) for r in A.R],
                      label=f"({X.label})A")

    def t_counit(X):
        cols = [m.columns() for m in X.right]
        return Matrix.from_columns(f, X.dim, [cols[k][j] for j in range(X.dim) for k in range(d)])

    def t_comult(X):
        return kron(Matrix.identity(f, X.dim), kron(u, I_d))

    def s_apply(X):
        I = Matrix.identity(f, X.dim)
        return Module(f, d * X.dim, [kron(l, I) for l in A.L], [kron(I_d, r) for r in X.right],
                      label=f"A({X.label})")

    def s_counit(X):
        cols = [m.columns() for m in X.left]
        return Matrix.from_columns(f, X.dim, [cols[k][j] for k in range(d) for j in range(X.dim)])

    def s_comult(X):
        return kron(I_d, kron(u, Matrix.identity(f, X.dim)))

    T = LinearComonad("-(x)A", t_apply, lambda m: kron(m, I_d), t_counit, t_comult)
    S = LinearComonad("A(x)-", s_apply, lambda m: kron(I_d, m), s_counit, s_comult)
    law = DistributiveLaw(T, S, lambda X: Matrix.identity(f, d * X.dim * d))
    return law


def commutator_quotient(X):
    rel = []
    for l, r in zip(X.left, X.right):
        rel += (l - r).columns()
    return Quotient(X.field, X.dim, rel)


def coinvariants_functor():
    """N(X) = X / span(a x - x a), i.e. - (x)_{A^e} A."""
    cache = {}

    def apply(X):
        q = cache.get(id(X))
        if q is None:
            q = cache[id(X)] = (commutator_quotient(X), X)
        return q[0]

    def fmap(m, X, Y):
        return induced(m, apply(X), apply(Y))

    return LinearFunctor(apply, fmap)


def forgetful_functor():
    cache = {}

    def apply(X):
        q = cache.get(id(X))
        if q is None:
            q = cache[id(X)] = (Quotient(X.field, X.dim), X)
        return q[0]

    return LinearFunctor(apply, lambda m, X, Y: m)


class BarEngine(BohmStefan):
    """Engine whose opcoalgebra looks up N(SX), N(TX) on the engine's own objects."""

    def __init__(self, A, coalg, forget=False, check_depth=1, check=True):
        self.A = A
        law = bimodule_comonads(A)
        f = A.field
        N = forgetful_functor() if forget else coinvariants_functor()
        u = A.unit_col
        engine = self

        def lam(X):
            if forget:
                return kron(Matrix.identity(f, X.dim), u) @ law.S.counit(X)
            w = engine._word_of(X)
            return induced(_lambda_ambient(A, X), N.apply(engine.obj("S" + w)),
                           N.apply(engine.obj("T" + w)))

        nabla = None
        if forget:
            def nabla(X):
                return kron(Matrix.identity(f, X.dim), u)
        op = ChiOpcoalgebra(N, lam, nabla)
        BohmStefan.__init__(self, law, coalg, op, check_depth=check_depth, check=False)
        if check:
            rep = self.check_inputs()
            if coalg.nabla is not None or forget:
                rep.extend(self.check_nabla())
            if not rep.ok:
                raise AssertionError(rep.lines())


def _lambda_ambient(A, X):
    """A (x) X -> X (x) A, a (x) x -> x a (x) 1."""
    f, d = A.field, A.dim
    cols = [m.columns() for m in X.right]
    out = []
    for k in range(d):
        for j in range(X.dim):
            col = {}
            for r, c in cols[k][j].items():
                for q, e in A.unit.items():
                    col[r * d + q] = col.get(r * d + q, 0) + c * e
            out.append(col)
    return Matrix.from_columns(f, X.dim * d, out)


def bar_engine(A, M=None, rho="identity", check_depth=1):
    """The engine instance with T = -(x)A, S = A(x)-, N = -(x)_{A^e} A."""
    if M is None:
        M = A.regular()
        if isinstance(rho, str) and rho == "identity":
            rho = Matrix.identity(A.field, A.dim ** 2)
    elif isinstance(rho, str):
        rho = None
    return BarEngine(A, ChiCoalgebra(M, rho), check_depth=check_depth)


def bar_module(engine, top, side="CT"):
    """Build C_T (or C*_S) and transport it to the basis M (x) A^(x)n."""
    A = engine.A
    M = engine.coalg.M
    f, d = A.field, A.dim
    Lc = [m.columns() for m in M.left]
    Rc = [m.columns() for m in M.right]
    if side == "CT":
        x = engine.build_CT(top)
    else:
        x = engine.build_CS_star(top)
    fw, bw = {}, {}
    for n in range(top + 1):
        if side == "CT":
            q = engine.nobj("T" * (n + 1))

            def img(u, n=n):
                return {(r,) + u[1:n + 1]: c for r, c in Lc[u[n + 1]][u[0]].items()}
            phi = tensor_map(f, [M.dim] + [d] * (n + 1), [M.dim] + [d] * n, img)
            ins = kron(Matrix.identity(f, M.dim * d ** n), A.unit_col)
        else:
            # A^(x)(n+1) (x) M -> M (x) A^(x)n: [a_1..a_{n+1} (x) m] -> m a_1 (x) a_2..a_{n+1}
            q = engine.nobj("S" * (n + 1))

            def img(u, n=n):
                return {(r,) + u[1:n + 1]: c for r, c in Rc[u[0]][u[n + 1]].items()}
            phi = tensor_map(f, [d] * (n + 1) + [M.dim], [M.dim] + [d] * n, img)
            ins = _insert_unit_front(A, M, n)
        fw[n] = phi @ q.incl
        bw[n] = q.proj @ ins
    return transport(x, (fw, bw))


def _insert_unit_front(A, M, n):
    """m (x) a_1..a_n -> 1 (x) a_1..a_n (x) m."""
    f, d = A.field, A.dim

    def img(u):
        return {(k,) + u[1:] + u[:1]: c for k, c in A.unit.items()}
    return tensor_map(f, [M.dim] + [d] * n, [d] * (n + 1) + [M.dim], img)


def bar_instance(A, M=None, top=3):
    """C_T(N, M) from the engine, transported to M (x) A^(x)n."""
    return bar_module(bar_engine(A, M), top)


def twist_cell(A, sigma):
    """The 1-cell (- with right action through sigma, m (x) a -> m (x) sigma(a), 1)."""
    f = A.field
    smat = sigma.matrix if isinstance(sigma, AlgebraMap) else sigma

    def apply(X):
        return twisted_bimodule(A, smat, X)

    return OneCell(apply=apply, fmap=lambda m: m,
                   sigma=lambda X: kron(Matrix.identity(f, X.dim), smat),
                   gamma=lambda X: Matrix.identity(f, A.dim * X.dim))


def twist_by_one_cell(A, sigma, top=4, check_depth=1):
    bad = algebra_map_report(A, sigma)
    if not bad.ok:
        raise ValueError(bad.lines())
    law = bimodule_comonads(A)
    base = ChiCoalgebra(A.regular(), Matrix.identity(A.field, A.dim ** 2))
    twisted = act_by_one_cell(twist_cell(A, sigma), law, base, check_depth)
    engine = BarEngine(A, twisted, check_depth=check_depth)
    return bar_module(engine, top)


def free_coefficient_engine(A, check_depth=1):
    """M = A (x) A as the cofree S-coalgebra, rho = delta^S eps^T."""
    law = bimodule_comonads(A)
    M = law.S.apply(A.regular())
    nab = law.S.comult(A.regular())
    rho = nab @ law.T.counit(M)
    return BarEngine(A, ChiCoalgebra(M, rho, nabla=nab), check_depth=check_depth)


def forgetful_engine(A, check_depth=1):
    """N the underlying space with nabla x = x (x) 1, M = A."""
    return BarEngine(A, ChiCoalgebra(A.regular(), Matrix.identity(A.field, A.dim ** 2)),
                     forget=True, check_depth=check_depth)


# degree zero

def h0_and_center(A, M=None):
    """((dim H_0, representatives of a basis of M/[A,M]), (dim H^0, basis of the centre of M))."""
    M = A.regular() if M is None else M
    q = commutator_quotient(M)
    reps = [{c: 1} for c in q.basis]
    if M.dim == 0:
        return (0, []), (0, [])
    stacked = vstack([l - r for l, r in zip(M.left, M.right)])
    _, ker = rank_and_kernel(stacked)
    return (q.dim, reps), (len(ker), ker)


def is_central(M, z):
    return all(l.apply(z) == r.apply(z) for l, r in zip(M.left, M.right))


def cap0(A, M, z, a):
    """Class of z a in M/[A,M], as coordinates on the quotient basis."""
    if not is_central(M, z):
        raise ValueError("z is not central")
    f = A.field
    za = {}
    for k, c in a.items():
        for r, v in M.right[k].apply(z).items():
            za[r] = f.reduce(za.get(r, 0) + c * v)
    za = {k: v for k, v in za.items() if v}
    return commutator_quotient(M).project_vec(za)


def cap0_well_defined(A, M, z, a, trials=5, seed=0):
    """Adding commutators [x_i, b] to the representative a leaves the class unchanged."""
    rng = random.Random(seed)
    f = A.field
    base = cap0(A, M, z, a)
    for _ in range(trials):
        i = rng.randrange(A.dim)
        b = {k: f.parse(rng.randint(-3, 3)) for k in range(A.dim)}
        b = {k: v for k, v in b.items() if v}
        comm = A.times({i: 1}, b)
        for k, v in A.times(b, {i: 1}).items():
            comm[k] = f.reduce(comm.get(k, 0) - v)
        a2 = dict(a)
        for k, v in comm.items():
            a2[k] = f.reduce(a2.get(k, 0) + v)
        a2 = {k: v for k, v in a2.items() if v}
        if cap0(A, M, z, a2) != base:
            return False
    return True
