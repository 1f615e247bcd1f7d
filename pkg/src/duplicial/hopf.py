"""Finite-dimensional bialgebras over a field and the Hopf-cyclic instance.

The translation map h -> h_+ (x) h_- is the column h of beta^{-1}(- (x) 1);
for a Hopf algebra it equals h_(1) (x) S(h_(2)).  Coefficients are a right
H-module, left H-comodule M and a left-left Yetter-Drinfel'd module N.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .complexes import ValidationReport
from .engine import (BohmStefan, ChiCoalgebra, ChiOpcoalgebra, DistributiveLaw, LawViolation,
                     LinearComonad, LinearFunctor, Module, transport)
from .hochschild import Algebra, algebra_from_json, algebra_report, tensor_map
from .linalg import GF, QQ, Matrix, NotInvertible, Quotient, induced, invert, kron, rank


def _clean(f, v):
    return {k: f.reduce(c) for k, c in v.items() if f.reduce(c)}


def _add(out, k, c):
    out[k] = out.get(k, 0) + c


@dataclass(eq=False)
class Bialgebra:
    algebra: Algebra
    comult: list            # comult[i] = {(p, q): c}
    counit: dict            # {i: c}

    def __post_init__(self):
        f = self.field
        self.comult = [_clean(f, c) for c in self.comult]
        self.counit = _clean(f, self.counit)

    @property
    def field(self):
        return self.algebra.field

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def name(self):
        return self.algebra.name

    @property
    def Delta(self):
        d = self.dim
        return Matrix.from_columns(self.field, d * d,
                                   [{p * d + q: c for (p, q), c in self.comult[i].items()} for i in range(d)])

    @property
    def eps(self):
        return Matrix.from_columns(self.field, 1, [{0: self.counit[i]} if i in self.counit else {}
                                                   for i in range(self.dim)])

    def ident(self):
        return self.algebra.ident()

    def to_json(self):
        f, d = self.field, self.dim
        out = self.algebra.to_json()
        out["comult"] = [[[f.fmt(self.comult[i].get((p, q), 0)) for q in range(d)] for p in range(d)]
                         for i in range(d)]
        out["counit"] = [f.fmt(self.counit.get(i, 0)) for i in range(d)]
        if self.name:
            out["name"] = self.name
        return out


def swap(field, a, b):
    """U (x) V -> V (x) U."""
    return tensor_map(field, [a, b], [b, a], lambda u: {(u[1], u[0]): 1})


def bialgebra_report(H):
    rep = algebra_report(H.algebra)
    f, d = H.field, H.dim
    I = H.ident()
    D, e, mu, u = H.Delta, H.eps, H.algebra.mu, H.algebra.unit_col
    if kron(D, I) @ D != kron(I, D) @ D:
        rep.fail("coassociativity", 0)
    if kron(e, I) @ D != I or kron(I, e) @ D != I:
        rep.fail("counit", 0)
    mid = kron(I, kron(swap(f, d, d), I))
    if D @ mu != kron(mu, mu) @ mid @ kron(D, D):
        rep.fail("Delta(gh) = Delta(g)Delta(h)", 0)
    if e @ mu != kron(e, e):
        rep.fail("eps(gh) = eps(g)eps(h)", 0)
    if D @ u != kron(u, u):
        rep.fail("Delta(1) = 1 (x) 1", 0)
    if e @ u != Matrix.identity(f, 1):
        rep.fail("eps(1) = 1", 0)
    return rep


def bialgebra_from_json(obj):
    A = algebra_from_json(obj)
    f, d = A.field, A.dim
    if "comult" not in obj or "counit" not in obj:
        raise ValueError("a bialgebra needs 'comult' and 'counit'")
    cm = obj["comult"]
    if len(cm) != d or any(len(r) != d for r in cm) or any(len(c) != d for r in cm for c in r):
        raise ValueError("comult must be a dim x dim x dim array")
    if len(obj["counit"]) != d:
        raise ValueError("counit must have length dim")
    comult = [{(p, q): f.parse(cm[i][p][q]) for p in range(d) for q in range(d)} for i in range(d)]
    counit = {i: f.parse(obj["counit"][i]) for i in range(d)}
    return Bialgebra(A, comult, counit)


# catalog

def monoid_bialgebra(table, field=QQ, labels=None, name=""):
    """k[M] for a finite monoid given by its multiplication table, element 0 the unit."""
    n = len(table)
    mult = [[{table[i][j]: 1} for j in range(n)] for i in range(n)]
    A = Algebra(field, n, mult, {0: 1}, labels, name)
    return Bialgebra(A, [{(i, i): 1} for i in range(n)], {i: 1 for i in range(n)})


def trivial_bialgebra(field=QQ):
    return monoid_bialgebra([[0]], field, ["1"], "k")


def cyclic_group_bialgebra(order, field=QQ):
    table = [[(i + j) % order for j in range(order)] for i in range(order)]
    return monoid_bialgebra(table, field, [f"g^{i}" for i in range(order)], f"k[C{order}]")


def idempotent_monoid_bialgebra(field=QQ):
    """k[{1, e}] with e e = e."""
    return monoid_bialgebra([[0, 1], [1, 1]], field, ["1", "e"], "k[{1,e}]")


def bialgebra_catalog():
    return [trivial_bialgebra(), cyclic_group_bialgebra(2), cyclic_group_bialgebra(3),
            idempotent_monoid_bialgebra(), cyclic_group_bialgebra(2, GF(2))]


# Galois map and antipode

def galois_map(H):
    """beta(g (x) y) = g_(1) (x) g_(2) y on H (x) H."""
    I = H.ident()
    return kron(I, H.algebra.mu) @ kron(H.Delta, I)


@dataclass(eq=False)
class NotHopf:
    bialgebra: Bialgebra
    rank: int
    reason: str = "Galois map singular"

    def __bool__(self):
        return False


@dataclass(eq=False)
class HopfStructure:
    bialgebra: Bialgebra
    antipode: Matrix
    translation: Matrix     # h -> h_+ (x) h_-, i.e. beta^{-1}(h (x) 1)
    beta_inv: Matrix

    def __bool__(self):
        return True

    @property
    def field(self):
        return self.bialgebra.field

    @property
    def dim(self):
        return self.bialgebra.dim

    def legs(self, h):
        """h_+ (x) h_- for the basis element h, as {(p, q): c}."""
        d = self.dim
        return {divmod(k, d): c for k, c in self.translation.columns()[h].items()}

    @property
    def antipode_inverse(self):
        return invert(self.antipode)


def antipode_report(H, S):
    rep = ValidationReport()
    B = H.bialgebra if isinstance(H, HopfStructure) else H
    I = B.ident()
    mu, D = B.algebra.mu, B.Delta
    ue = B.algebra.unit_col @ B.eps
    if mu @ kron(S, I) @ D != ue:
        rep.fail("m(S (x) id)Delta = eta eps", 0)
    if mu @ kron(I, S) @ D != ue:
        rep.fail("m(id (x) S)Delta = eta eps", 0)
    return rep


def is_hopf_and_antipode(H):
    """HopfStructure when beta is bijective, NotHopf otherwise (decided two ways)."""
    beta = galois_map(H)
    n = H.dim ** 2
    r = rank(beta)
    try:
        binv = invert(beta)
    except NotInvertible:
        binv = None
    if (binv is None) != (r < n):
        raise AssertionError("rank and inversion disagree about the Galois map")
    if binv is None:
        return NotHopf(H, r)
    P = binv @ kron(H.ident(), H.algebra.unit_col)
    S = kron(H.eps, H.ident()) @ P
    bad = antipode_report(H, S)
    if not bad.ok:
        raise AssertionError(f"extracted antipode fails: {bad.lines()}")
    return HopfStructure(H, S, P, binv)


def galois_is_module_map(H):
    """beta intertwines multiplication on the first factor with the codiagonal action."""
    A = H.algebra
    beta = galois_map(H)
    I = H.ident()
    for g in range(H.dim):
        codiag = _sum_kron(H, H.comult[g], A.L, A.L)
        if beta @ kron(A.L[g], I) != codiag @ beta:
            return False
    return True


def _sum_kron(H, legs, left, right):
    f, d = H.field, H.dim
    out = None
    for (p, q), c in legs.items():
        term = kron(left[p], right[q]).scale(c)
        out = term if out is None else out + term
    if out is None:
        out = Matrix.zeros(f, left[0].nrows * right[0].nrows, left[0].ncols * right[0].ncols)
    return out


# Yetter-Drinfel'd braiding

def yd_braiding(H):
    """c(g (x) h) = g_(1) h (x) g_(2); for Hopf H the inverse is checked."""
    f, d = H.field, H.dim
    I = H.ident()
    c = kron(H.algebra.mu, I) @ kron(I, swap(f, d, d)) @ kron(H.Delta, I)
    hs = is_hopf_and_antipode(H)
    if hs:
        cinv = yd_braiding_inverse(hs)
        if c @ cinv != Matrix.identity(f, d * d) or cinv @ c != Matrix.identity(f, d * d):
            raise AssertionError("braiding inverse via the antipode fails")
    return c


def yd_braiding_inverse(hs):
    """x (x) y -> y_(2) (x) S^{-1}(y_(1)) x."""
    B = hs.bialgebra
    f, d = B.field, B.dim
    I = B.ident()
    return (kron(I, B.algebra.mu) @ kron(kron(I, hs.antipode_inverse), I)
            @ kron(swap(f, d, d), I) @ kron(B.Delta, I) @ swap(f, d, d))


def _left_module(H, dim, actions, label=""):
    return Module(H.field, dim, left=list(actions), label=label)


def yd_law(H):
    """T = H (x) - (free action) and S = H (x) - (codiagonal action) on left H-modules."""
    f, d = H.field, H.dim
    A = H.algebra
    I_H = H.ident()
    c = yd_braiding(H)
    u = A.unit_col

    def t_apply(X):
        I = Matrix.identity(f, X.dim)
        return _left_module(H, d * X.dim, [kron(l, I) for l in A.L], f"H({X.label})")

    def t_counit(X):
        cols = [m.columns() for m in X.left]
        return Matrix.from_columns(f, X.dim, [cols[g][x] for g in range(d) for x in range(X.dim)])

    def s_apply(X):
        return _left_module(H, d * X.dim, [_sum_kron(H, H.comult[g], A.L, X.left) for g in range(d)],
                            f"H.({X.label})")

    T = LinearComonad("H(x)- free", t_apply, lambda m: kron(I_H, m), t_counit,
                      lambda X: kron(I_H, kron(u, Matrix.identity(f, X.dim))))
    S = LinearComonad("H(x)- codiagonal", s_apply, lambda m: kron(I_H, m),
                      lambda X: kron(H.eps, Matrix.identity(f, X.dim)),
                      lambda X: kron(H.Delta, Matrix.identity(f, X.dim)))
    return DistributiveLaw(T, S, lambda X: kron(c, Matrix.identity(f, X.dim)))


def yd_law_report(H, M=None, depth=1):
    """Comonad and distributive-law diagrams, plus H-linearity of chi, on words of length <= depth."""
    f = H.field
    if M is None:
        M = _left_module(H, 1, [Matrix.from_dense(f, [[H.counit.get(g, 0)]], 1) for g in range(H.dim)], "k")
    law = yd_law(H)
    eng = BohmStefan(law, ChiCoalgebra(M), None, check_depth=depth, check=False)
    rep = eng.check_inputs()
    for w in eng.tracked():
        chi = eng.chi(w)
        src, tgt = eng.obj("TS" + w), eng.obj("ST" + w)
        for g in range(H.dim):
            if chi @ src.left[g] != tgt.left[g] @ chi:
                rep.fail("chi is H-linear", len(w), w or "M")
    return rep


# coefficients

def right_module_report(H, M):
    rep = ValidationReport()
    A = H.algebra
    f, d = H.field, H.dim
    if M.right is None or len(M.right) != d:
        rep.fail("right action present", 0)
        return rep
    I = Matrix.identity(f, M.dim)
    for a, b in product(range(d), repeat=2):
        ab = _combo(f, M.dim, M.right, A.mult[a][b])
        if M.right[b] @ M.right[a] != ab:
            rep.fail("(m a) b = m (ab)", 0, f"({A.labels[a]}, {A.labels[b]})")
    if _combo(f, M.dim, M.right, A.unit) != I:
        rep.fail("m 1 = m", 0)
    return rep


def left_module_report(H, N):
    rep = ValidationReport()
    A = H.algebra
    f, d = H.field, H.dim
    if N.left is None or len(N.left) != d:
        rep.fail("left action present", 0)
        return rep
    for a, b in product(range(d), repeat=2):
        if N.left[a] @ N.left[b] != _combo(f, N.dim, N.left, A.mult[a][b]):
            rep.fail("a (b n) = (ab) n", 0, f"({A.labels[a]}, {A.labels[b]})")
    if _combo(f, N.dim, N.left, A.unit) != Matrix.identity(f, N.dim):
        rep.fail("1 n = n", 0)
    return rep


def comodule_report(H, M):
    rep = ValidationReport()
    f = H.field
    co = M.coaction
    if co is None or co.shape != (H.dim * M.dim, M.dim):
        rep.fail("left coaction present", 0)
        return rep
    I = Matrix.identity(f, M.dim)
    if kron(H.Delta, I) @ co != kron(H.ident(), co) @ co:
        rep.fail("coaction coassociative", 0)
    if kron(H.eps, I) @ co != I:
        rep.fail("coaction counital", 0)
    return rep


def yd_report(hs, N):
    """(hn)_(-1) (x) (hn)_(0) = h_+(1) n_(-1) h_- (x) h_+(2) n_(0)."""
    rep = left_module_report(hs.bialgebra, N)
    rep.extend(comodule_report(hs.bialgebra, N))
    if not rep.ok:
        return rep
    B = hs.bialgebra
    f, A = B.field, B.algebra
    co = _coaction_dicts(N)
    left = [m.columns() for m in N.left]
    for h in range(B.dim):
        for n in range(N.dim):
            lhs = {}
            for m, c in left[h][n].items():
                for key, e in co[m].items():
                    _add(lhs, key, c * e)
            rhs = {}
            for (p, q), c in hs.legs(h).items():
                for (a, b), e in B.comult[p].items():
                    for (y, n0), g in co[n].items():
                        prod = A.times(A.times({a: 1}, {y: 1}), {q: 1})
                        for k, x in prod.items():
                            for r, z in left[b][n0].items():
                                _add(rhs, (k, r), c * e * g * x * z)
            if _clean(f, lhs) != _clean(f, rhs):
                rep.fail("Yetter-Drinfel'd compatibility", 0, f"h={A.labels[h]}, n={n}")
    return rep


def _combo(f, dim, mats, coeffs):
    out = Matrix.zeros(f, dim, dim)
    for k, c in coeffs.items():
        out = out + mats[k].scale(c)
    return out


def _coaction_dicts(M):
    """m -> {(h, m'): c}."""
    out = []
    for col in M.coaction.columns():
        out.append({divmod(k, M.dim): c for k, c in col.items()})
    return out


def trivial_coefficients(H):
    """k with action through eps and coaction 1 -> 1 (x) 1, on both sides."""
    f, d = H.field, H.dim
    acts = [Matrix.from_dense(f, [[H.counit.get(g, 0)]], 1) for g in range(d)]
    co = Matrix.from_columns(f, d, [dict(H.algebra.unit)])
    M = Module(f, 1, right=acts, coaction=co, label="k")
    N = Module(f, 1, left=list(acts), coaction=co, label="k")
    return M, N


def character_coefficients(H, chi, g):
    """M = k with m h = chi(h) m and coaction m -> g (x) m, g grouplike."""
    f, d = H.field, H.dim
    acts = [Matrix.from_dense(f, [[chi[h]]], 1) for h in range(d)]
    co = Matrix.from_columns(f, d, [{g: 1}])
    return Module(f, 1, right=acts, coaction=co, label=f"chi,{g}")


def regular_right_coefficients(H, g):
    """M = H with right multiplication and coaction m -> g (x) m."""
    f, d = H.field, H.dim
    co = Matrix.from_columns(f, d * d, [{g * d + m: 1} for m in range(d)])
    return Module(f, d, right=list(H.algebra.R), coaction=co, label=f"H,{g}")


def stability_map(hs, M, N):
    """m (x) n -> m_(0) X_+ (x) X_- n_(0) with X = n_(-1) m_(-1), on M (x) N."""
    return closed_form_t(hs, M, N, 0)


def sayd_check(hs, M, N):
    """Whether the stability identity holds, i.e. stability_map is the identity of M (x) N."""
    if M.dim == 0 or N.dim == 0:
        return True
    return stability_map(hs, M, N) == Matrix.identity(hs.field, M.dim * N.dim)


def closed_form_t(hs, M, N, n):
    """t_T on M (x) H^(x)n (x) N written out with translation-map legs."""
    B = hs.bialgebra
    f, d, A = B.field, B.dim, B.algebra
    coM, coN = _coaction_dicts(M), _coaction_dicts(N)
    Rm = [m.columns() for m in M.right]
    Ln = [m.columns() for m in N.left]
    legs = [hs.legs(h) for h in range(d)]

    def img(u):
        m, hs_, nu = u[0], u[1:n + 1], u[n + 1]
        out = {}
        for (y, nu0), c1 in coN[nu].items():
            for (ym, m0), c2 in coM[m].items():
                for choice in product(*[legs[h].items() for h in hs_]):
                    coef = c1 * c2
                    X = {y: 1}
                    for (_, q), c in reversed(choice):
                        X = A.times(X, {q: 1})
                        coef *= c
                    X = A.times(X, {ym: 1})
                    pluses = [p for (p, _), _ in choice]
                    for k, xk in X.items():
                        for (xp, xq), c3 in legs[k].items():
                            cf = coef * xk * c3
                            head = pluses[0] if n else xp
                            for r, c4 in Rm[head][m0].items():
                                for s, c5 in Ln[xq][nu0].items():
                                    key = (r,) + tuple(pluses[1:]) + ((xp,) if n else ()) + (s,)
                                    _add(out, key, cf * c4 * c5)
        return out

    dims = [M.dim] + [d] * n + [N.dim]
    return tensor_map(f, dims, dims, img)


# the instance

def hopf_comonads(hs):
    """T X = X (x) H and S X = H (x) X on right H-modules, chi (c (x) x) (x) b = b_- c (x) (x (x) b_+)."""
    B = hs.bialgebra
    f, d, A = B.field, B.dim, B.algebra
    I_H = B.ident()
    u = A.unit_col
    legs = [hs.legs(h) for h in range(d)]

    def t_apply(X):
        I = Matrix.identity(f, X.dim)
        return Module(f, X.dim * d, right=[kron(I, r) for r in A.R], label=f"({X.label})H")

    def t_counit(X):
        cols = [m.columns() for m in X.right]
        return Matrix.from_columns(f, X.dim, [cols[h][x] for x in range(X.dim) for h in range(d)])

    def s_apply(X):
        acts = [_s_action(B, legs[g], A.L, X.right) for g in range(d)]
        return Module(f, d * X.dim, right=acts, label=f"H({X.label})")

    def chi(X):
        def img(v):
            c, x, b = v
            out = {}
            for (p, q), e in legs[b].items():
                for k, g in A.mult[q][c].items():
                    _add(out, (k, x, p), e * g)
            return out
        return tensor_map(f, [d, X.dim, d], [d, X.dim, d], img)

    T = LinearComonad("-(x)H", t_apply, lambda m: kron(m, I_H), t_counit,
                      lambda X: kron(Matrix.identity(f, X.dim), kron(u, I_H)))
    S = LinearComonad("H(x)-", s_apply, lambda m: kron(I_H, m),
                      lambda X: kron(B.eps, Matrix.identity(f, X.dim)),
                      lambda X: kron(B.Delta, Matrix.identity(f, X.dim)))
    return DistributiveLaw(T, S, chi)


def _s_action(B, legs, left, right):
    """(h (x) x) g = g_- h (x) x g_+, for one g with legs g_+ (x) g_-."""
    f = B.field
    out = None
    for (p, q), c in legs.items():
        term = kron(left[q], right[p]).scale(c)
        out = term if out is None else out + term
    if out is None:
        n = left[0].nrows * right[0].nrows
        out = Matrix.zeros(f, n, n)
    return out


def hopf_rho(hs, M):
    """m (x) h -> h_- m_(-1) (x) m_(0) h_+."""
    B = hs.bialgebra
    f, d, A = B.field, B.dim, B.algebra
    co = _coaction_dicts(M)
    Rm = [m.columns() for m in M.right]

    def img(v):
        m, h = v
        out = {}
        for (p, q), c1 in hs.legs(h).items():
            for (y, m0), c2 in co[m].items():
                for k, c3 in A.mult[q][y].items():
                    for r, c4 in Rm[p][m0].items():
                        _add(out, (k, r), c1 * c2 * c3 * c4)
        return out
    return tensor_map(f, [M.dim, d], [d, M.dim], img)


def tensor_over_H(N):
    """The functor X -> X (x)_H N for right H-modules X."""
    cache = {}

    def apply(X):
        q = cache.get(id(X))
        if q is None:
            I_N = Matrix.identity(X.field, N.dim)
            I_X = Matrix.identity(X.field, X.dim)
            rel = []
            for r, l in zip(X.right, N.left):
                rel += (kron(r, I_N) - kron(I_X, l)).columns()
            q = cache[id(X)] = (Quotient(X.field, X.dim * N.dim, rel), X)
        return q[0]

    def fmap(m, X, Y):
        return induced(kron(m, Matrix.identity(m.field, N.dim)), apply(X), apply(Y))

    return LinearFunctor(apply, fmap)


def _lambda_ambient(hs, X, N):
    """(h (x) x) (x) n -> (x (y_+ h_+) (x) h_- y_-) (x) n_(0), y = n_(-1)."""
    B = hs.bialgebra
    f, d, A = B.field, B.dim, B.algebra
    co = _coaction_dicts(N)
    Rx = [m.columns() for m in X.right]
    legs = [hs.legs(h) for h in range(d)]

    def img(v):
        h, x, n = v
        out = {}
        for (y, n0), c1 in co[n].items():
            for (yp, yq), c2 in legs[y].items():
                for (hp, hq), c3 in legs[h].items():
                    for a, c4 in A.mult[yp][hp].items():
                        for b, c5 in A.mult[hq][yq].items():
                            for r, c6 in Rx[a][x].items():
                                _add(out, (r, b, n0), c1 * c2 * c3 * c4 * c5 * c6)
        return out
    return tensor_map(f, [d, X.dim, N.dim], [X.dim, d, N.dim], img)


class HopfEngine(BohmStefan):
    """The engine for (chi, rho, - (x)_H N) built from a Hopf algebra and coefficients."""

    def __init__(self, hs, M, N, check_depth=1, check=True):
        if not hs:
            raise ValueError("the Hopf-cyclic instance needs a Hopf algebra")
        B = hs.bialgebra
        rep = right_module_report(B, M)
        rep.extend(comodule_report(B, M))
        rep.extend(yd_report(hs, N))
        if not rep.ok:
            raise ValueError(f"coefficients invalid: {rep.lines()}")
        self.hs, self.N_coeff = hs, N
        law = hopf_comonads(hs)
        functor = tensor_over_H(N)
        engine = self

        def lam(X):
            w = engine._word_of(X)
            return induced(_lambda_ambient(hs, X, N), functor.apply(engine.obj("S" + w)),
                           functor.apply(engine.obj("T" + w)))

        BohmStefan.__init__(self, law, ChiCoalgebra(M, hopf_rho(hs, M)), ChiOpcoalgebra(functor, lam),
                            check_depth=check_depth, check=check)


def hopf_transport_maps(engine, n):
    """N T^{n+1} M  <->  M (x) H^(x)n (x) N."""
    hs, N, M = engine.hs, engine.N_coeff, engine.coalg.M
    B = hs.bialgebra
    f, d = B.field, B.dim
    q = engine.nobj("T" * (n + 1))
    Ln = [m.columns() for m in N.left]

    def img(u):
        return {u[:n + 1] + (r,): c for r, c in Ln[u[n + 1]][u[n + 2]].items()}
    phi = tensor_map(f, [M.dim] + [d] * (n + 1) + [N.dim], [M.dim] + [d] * n + [N.dim], img)

    def ins(u):
        return {u[:n + 1] + (k,) + u[n + 1:]: c for k, c in B.algebra.unit.items()}
    back = tensor_map(f, [M.dim] + [d] * n + [N.dim], [M.dim] + [d] * (n + 1) + [N.dim], ins)
    return phi @ q.incl, q.proj @ back


def hopf_cyclic_module(hs, M=None, N=None, top=3, check_depth=1):
    """C_T(- (x)_H N, M) on M (x) H^(x)n (x) N, with t compared to its closed form."""
    if not hs:
        raise ValueError("H is not a Hopf algebra")
    tM, tN = trivial_coefficients(hs.bialgebra)
    M = tM if M is None else M
    N = tN if N is None else N
    eng = HopfEngine(hs, M, N, check_depth=check_depth)
    x = eng.build_CT(top)
    fw, bw = {}, {}
    for n in range(top + 1):
        fw[n], bw[n] = hopf_transport_maps(eng, n)
    y = transport(x, (fw, bw))
    for n in range(top + 1):
        if y.t[n] != closed_form_t(hs, M, N, n):
            raise LawViolation(f"engine t_T differs from the closed form at degree {n}")
    return y, eng


def lr_report(eng, top):
    """Degrees where L R differs from the identity."""
    R, L = eng.build_R_L(top)
    return [n for n in range(top + 1)
            if L[n] @ R[n] != Matrix.identity(eng.field, L[n].nrows)]
