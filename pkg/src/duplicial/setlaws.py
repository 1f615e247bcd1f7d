"""Monads, comonads and mixed distributive laws on finite sets.

Values are plain hashable Python data: subsets are frozensets, lists are
``Lst`` tuples, distributions are frozensets of (point, probability) pairs,
functions M -> X are tuples indexed by M, and filters on a finite set are
stored as their generating (minimal) nonempty subset.  Lists are bounded by a
length ell; nested list inputs are enumerated only up to a total number of
leaves ell, and reports record how much of the full range that covers.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import chain, combinations, product
from typing import Callable

from .complexes import ValidationReport


class BoundExceeded(ValueError):
    pass


class Lst(tuple):
    """A list value (distinguished from pairs and function tuples)."""

    def __repr__(self):
        return "[" + ", ".join(map(repr, self)) + "]"


def weight(v):
    return sum(weight(e) for e in v) if isinstance(v, Lst) else 1


def subsets(xs):
    xs = list(xs)
    return [frozenset(c) for c in chain.from_iterable(combinations(xs, k) for k in range(len(xs) + 1))]


def dist(d):
    return frozenset((k, Fraction(v)) for k, v in d.items() if v)


def dist_items(p):
    return dict(p)


@dataclass(eq=False)
class FiniteMonoid:
    table: list             # table[a][b] = a b
    unit: int = 0
    name: str = ""

    @property
    def elements(self):
        return list(range(len(self.table)))

    def mul(self, a, b):
        return self.table[a][b]


def monoid_report(M):
    rep = ValidationReport()
    E = M.elements
    for a, b, c in product(E, repeat=3):
        if M.mul(M.mul(a, b), c) != M.mul(a, M.mul(b, c)):
            rep.fail("associativity", 0, f"({a},{b},{c})")
    for a in E:
        if M.mul(M.unit, a) != a or M.mul(a, M.unit) != a:
            rep.fail("identity", 0, str(a))
    return rep


def cyclic_monoid(n):
    return FiniteMonoid([[(a + b) % n for b in range(n)] for a in range(n)], 0, f"Z/{n}")


def idempotent_monoid():
    return FiniteMonoid([[0, 1], [1, 1]], 0, "{1,e}")


@dataclass(eq=False)
class Monad:
    name: str
    unit: Callable
    mult: Callable
    fmap: Callable          # (f, value) -> value
    elements: Callable      # (list Y, budget) -> list of values over Y
    bounded: bool = False
    count: Callable = None  # size of the unbounded range over a set of given size


@dataclass(eq=False)
class Comonad:
    name: str
    counit: Callable
    comult: Callable
    fmap: Callable
    elements: Callable      # list X -> list of values over X


def _lists(Y, ell, nonempty, budget):
    budget = ell if budget is None else budget
    Y = list(Y)
    w = [weight(y) for y in Y]
    out = []

    def go(prefix, used):
        if prefix or not nonempty:
            out.append(Lst(prefix))
        if len(prefix) == ell:
            return
        for y, wy in zip(Y, w):
            if used + wy <= budget:
                go(prefix + [y], used + wy)
    go([], 0)
    return out


def _count_lists(s, ell, nonempty):
    return sum(s ** k for k in range(1 if nonempty else 0, ell + 1))


# monads

def powerset():
    return Monad("P", lambda x: frozenset([x]), lambda A: frozenset().union(*A),
                 lambda f, A: frozenset(f(a) for a in A), lambda Y, budget=None: subsets(Y),
                 count=lambda s: 2 ** s)


def list_monad(ell=3, nonempty=False):
    name = "L+" if nonempty else "L"
    return Monad(name, lambda x: Lst([x]), lambda ww: Lst(x for w in ww for x in w),
                 lambda f, w: Lst(f(x) for x in w),
                 lambda Y, budget=None: _lists(Y, ell, nonempty, budget), bounded=True,
                 count=lambda s: _count_lists(s, ell, nonempty))


def filter_monad():
    """Filters on a finite set, each stored as its generating nonempty subset."""
    return Monad("F", lambda x: frozenset([x]), lambda G: frozenset().union(*G),
                 lambda f, A: frozenset(f(a) for a in A),
                 lambda Y, budget=None: [s for s in subsets(Y) if s],
                 count=lambda s: 2 ** s - 1)


def ultrafilter_monad():
    """Ultrafilters on a finite set are principal, stored as their point."""
    return Monad("U", lambda x: x, lambda x: x, lambda f, x: f(x), lambda Y, budget=None: list(Y),
                 count=lambda s: s)


def _grid(Y, g):
    Y = list(Y)
    out = []

    def go(i, left, acc):
        if i == len(Y) - 1:
            acc = acc + [left]
            out.append(dist({y: Fraction(k, g) for y, k in zip(Y, acc)}))
            return
        for k in range(left + 1):
            go(i + 1, left - k, acc + [k])
    if Y:
        go(0, g, [])
    return out


def _push(f, p):
    out = {}
    for x, c in p:
        y = f(x)
        out[y] = out.get(y, 0) + c
    return dist(out)


def _dmult(P):
    out = {}
    for p, c in P:
        for x, e in p:
            out[x] = out.get(x, 0) + c * e
    return dist(out)


def distribution_monad(grid=2):
    """Finitely supported rational distributions; inputs range over multiples of 1/grid."""
    return Monad("D", lambda x: dist({x: 1}), _dmult, _push,
                 lambda Y, budget=None: _grid(Y, grid))


# comonads

def product_comonad(colours=2):
    C = list(range(colours))
    return Comonad("CxX", lambda cx: cx[1], lambda cx: (cx[0], cx),
                   lambda f, cx: (cx[0], f(cx[1])), lambda X: [(c, x) for c in C for x in X])


def reader_comonad(M):
    E = M.elements
    return Comonad("X^M", lambda f: f[M.unit],
                   lambda f: tuple(tuple(f[M.mul(m, n)] for n in E) for m in E),
                   lambda g, f: tuple(g(v) for v in f), lambda X: list(product(X, repeat=len(E))))


def nonempty_list_comonad(ell=3):
    return Comonad("L+", lambda w: w[0], lambda w: Lst(Lst(w[i:]) for i in range(len(w))),
                   lambda f, w: Lst(f(x) for x in w),
                   lambda X: _lists(X, ell, True, None))


# law checks

def _coverage(rep, B, checked, levels, base):
    if not B.bounded or B.count is None:
        return
    s = base
    for _ in range(levels):
        s = B.count(s)
    pct = 100 * Fraction(checked, s) if s else Fraction(100)
    rep.notes.append(f"partial verification: {checked} of {s} inputs ({float(pct):.4g}%) "
                     f"with total length <= bound")


def monad_report(B, X):
    rep = ValidationReport()
    BX = B.elements(X)
    for b in BX:
        if B.mult(B.unit(b)) != b:
            rep.fail("mu eta_B = 1", 0, repr(b))
        if B.mult(B.fmap(B.unit, b)) != b:
            rep.fail("mu B(eta) = 1", 0, repr(b))
    BBBX = B.elements(B.elements(B.elements(X)))
    for bbb in BBBX:
        if B.mult(B.mult(bbb)) != B.mult(B.fmap(B.mult, bbb)):
            rep.fail("associativity", 0, repr(bbb))
    _coverage(rep, B, len(BBBX), 3, len(X))
    return rep


def comonad_report(C, X):
    rep = ValidationReport()
    for c in C.elements(X):
        d = C.comult(c)
        if C.counit(d) != c:
            rep.fail("eps_C delta = 1", 0, repr(c))
        if C.fmap(C.counit, d) != c:
            rep.fail("C(eps) delta = 1", 0, repr(c))
        if C.comult(d) != C.fmap(C.comult, d):
            rep.fail("coassociativity", 0, repr(c))
    return rep


STRUCTURES = ("P", "L", "L+", "F", "U", "D", "CxX", "X^M", "L+co")


def structure(name, ell=3, colours=2, monoid=None, grid=2):
    monads = {"P": powerset, "L": lambda: list_monad(ell), "L+": lambda: list_monad(ell, True),
              "F": filter_monad, "U": ultrafilter_monad, "D": lambda: distribution_monad(grid)}
    comonads = {"CxX": lambda: product_comonad(colours),
                "X^M": lambda: reader_comonad(monoid or cyclic_monoid(2)),
                "L+co": lambda: nonempty_list_comonad(ell)}
    if name in monads:
        return monads[name]()
    if name in comonads:
        return comonads[name]()
    raise KeyError(f"unknown structure {name!r}; known: {', '.join(STRUCTURES)}")


def check_laws(name, kind=None, size=2, size_bound=3, **kw):
    if size > size_bound:
        raise BoundExceeded(f"carrier of size {size} exceeds the bound {size_bound}")
    s = structure(name, **kw)
    X = list(range(size))
    is_monad = isinstance(s, Monad)
    if kind is not None and kind != ("monad" if is_monad else "comonad"):
        raise ValueError(f"{name} is a {'monad' if is_monad else 'comonad'}, not a {kind}")
    return monad_report(s, X) if is_monad else comonad_report(s, X)


@dataclass(eq=False)
class MixedLaw:
    name: str
    B: Monad
    C: Comonad
    theta: Callable


def _sup(cs, bottom=0):
    cs = list(cs)
    return max(cs) if cs else bottom


def _theta_P_C(A):
    if not A:
        return (0, frozenset())
    return (_sup(c for c, _ in A), frozenset(x for _, x in A))


def _theta_L_C(w):
    if not w:
        return (0, Lst())
    return (_sup(c for c, _ in w), Lst(x for _, x in w))


def _theta_D_C(p):
    support = [c for (c, _), v in p if v]
    marg = {}
    for (c, x), v in p:
        marg[x] = marg.get(x, 0) + v
    return (_sup(support), dist(marg))


def _theta_lplus(ww):
    m = len(ww)
    out = []
    for i in range(m):
        tail = [ww[k][0] for k in range(i + 1, m)]
        for x in ww[i]:
            out.append(Lst([x] + tail))
    return Lst(out)


def lplus_term_count(ww):
    m = len(ww)
    return sum(len(ww[i]) * (m - i) for i in range(m))


LAW_NAMES = ("P/C", "L/C", "D/C", "L/M", "P/M", "F/M", "D/M")


def mixed_law(name, colours=2, monoid=None, ell=3, grid=2):
    M = monoid or cyclic_monoid(2)
    E = M.elements
    if name == "P/C":
        return MixedLaw(name, powerset(), product_comonad(colours), _theta_P_C)
    if name == "L/C":
        return MixedLaw(name, list_monad(ell), product_comonad(colours), _theta_L_C)
    if name == "D/C":
        return MixedLaw(name, distribution_monad(grid), product_comonad(colours), _theta_D_C)
    if name == "L/M":
        return MixedLaw(name, list_monad(ell), reader_comonad(M),
                        lambda w: tuple(Lst(f[m] for f in w) for m in E))
    if name in ("P/M", "F/M"):
        B = powerset() if name == "P/M" else filter_monad()
        return MixedLaw(name, B, reader_comonad(M),
                        lambda A: tuple(frozenset(f[m] for f in A) for m in E))
    if name == "U/M":
        return MixedLaw(name, ultrafilter_monad(), reader_comonad(M), lambda f: f)
    if name == "D/M":
        return MixedLaw(name, distribution_monad(grid), reader_comonad(M),
                        lambda p: tuple(_push(lambda f, m=m: f[m], p) for m in E))
    if name == "L+/L+":
        return MixedLaw(name, list_monad(ell, True), nonempty_list_comonad(ell), _theta_lplus)
    raise KeyError(f"unknown law {name!r}; known: {', '.join(LAW_NAMES + ('U/M', 'L+/L+'))}")


def mixed_law_report(law, size=2, naturality=True):
    """Unit, multiplication, counit and comultiplication compatibilities, plus naturality."""
    B, C, th = law.B, law.C, law.theta
    rep = ValidationReport()
    X = list(range(size))
    CX = C.elements(X)
    for c in CX:
        if th(B.unit(c)) != C.fmap(B.unit, c):
            rep.fail("theta eta_C = C(eta)", 0, repr(c))
    BCX = B.elements(CX)
    for b in BCX:
        t = th(b)
        if C.counit(t) != B.fmap(C.counit, b):
            rep.fail("eps_B theta = B(eps)", 0, repr(b))
        if C.comult(t) != C.fmap(th, th(B.fmap(C.comult, b))):
            rep.fail("delta_B theta = C(theta) theta_C B(delta)", 0, repr(b))
    BBCX = B.elements(BCX)
    for bb in BBCX:
        if th(B.mult(bb)) != C.fmap(B.mult, th(B.fmap(th, bb))):
            rep.fail("theta mu_C = C(mu) theta_B B(theta)", 0, repr(bb))
    if naturality:
        for images in product(X, repeat=size):
            f = dict(zip(X, images)).__getitem__
            for b in BCX:
                if th(B.fmap(lambda c: C.fmap(f, c), b)) != C.fmap(lambda v: B.fmap(f, v), th(b)):
                    rep.fail("naturality", 0, f"{images} at {b!r}")
                    break
    _coverage(rep, B, len(BBCX), 2, len(CX))
    return rep


# entwined algebras

def entwined_report(law, carrier, beta, nabla, budget=None):
    """Pointwise check of nabla beta = C(beta) theta B(nabla) on B(carrier)."""
    B, C, th = law.B, law.C, law.theta
    rep = ValidationReport()
    for b in B.elements(list(carrier), budget):
        if nabla(beta(b)) != C.fmap(beta, th(B.fmap(nabla, b))):
            rep.fail("entwined pentagon", 0, repr(b))
            break
    return rep


def entwined_check(law, carrier, beta, nabla, budget=None):
    return entwined_report(law, carrier, beta, nabla, budget).ok


def _maps(dom, cod):
    dom = list(dom)
    for images in product(list(cod), repeat=len(dom)):
        yield dict(zip(dom, images))


def p_algebras(X):
    """beta: P X -> X with beta{x} = x and beta(U A) = beta{beta a}."""
    P = powerset()
    PX = P.elements(X)
    PPX = P.elements(PX)
    free = [A for A in PX if len(A) != 1]
    out = []
    for images in product(X, repeat=len(free)):
        beta = {frozenset([x]): x for x in X}
        beta.update(zip(free, images))
        if all(beta[P.mult(G)] == beta[frozenset(beta[A] for A in G)] for G in PPX):
            out.append(beta)
    return out


def monoids(n):
    E = range(n)
    out = []
    for flat in product(E, repeat=n * n):
        M = FiniteMonoid([list(flat[i * n:(i + 1) * n]) for i in range(n)])
        for e in E:
            if all(M.mul(e, a) == a and M.mul(a, e) == a for a in E):
                M.unit = e
                break
        else:
            continue
        if all(M.mul(M.mul(a, b), c) == M.mul(a, M.mul(b, c)) for a, b, c in product(E, repeat=3)):
            out.append(M)
    return out


def semigroups(n):
    E = range(n)
    out = []
    for flat in product(E, repeat=n * n):
        t = [list(flat[i * n:(i + 1) * n]) for i in range(n)]
        if all(t[t[a][b]][c] == t[a][t[b][c]] for a, b, c in product(E, repeat=3)):
            out.append(t)
    return out


def forests(n, ell=None):
    """Parent arrays (None for roots) without cycles, depth at most ell."""
    out = []
    for par in product([None] + list(range(n)), repeat=n):
        ok = True
        for x in range(n):
            seen, y, depth = set(), x, 0
            while y is not None:
                if y in seen:
                    ok = False
                    break
                seen.add(y)
                y = par[y]
                depth += 1
            if not ok or (ell is not None and depth > ell):
                ok = False
                break
        if ok:
            out.append(par)
    return out


def forest_chain(par):
    def nabla(x):
        out = [x]
        while par[out[-1]] is not None:
            out.append(par[out[-1]])
        return Lst(out)
    return nabla


def _estimate(name, n, colours):
    if name == "L+/L+":
        return n ** (n * n) * (n + 1) ** n
    if name == "P/C":
        return n ** (2 ** n) * colours ** n
    return n ** (n * n) * colours ** n


ENUM_LIMIT = {"L+/L+": 3, "P/C": 3, "L/C": 3}


def entwined_enumerate(name, max_carrier, colours=2, ell=3):
    """All entwined algebras with carrier {0..n-1}, n <= max_carrier, found by exhaustive search."""
    if name not in ENUM_LIMIT:
        raise KeyError(f"enumeration is implemented for {', '.join(ENUM_LIMIT)}")
    if max_carrier > ENUM_LIMIT[name]:
        raise BoundExceeded(f"carrier {max_carrier} too large: about {_estimate(name, max_carrier, colours)} "
                            f"candidates at the top size")
    law = mixed_law(name, colours=colours, ell=ell)
    C = list(range(colours))
    found = []
    for n in range(max_carrier + 1):
        X = list(range(n))
        if name == "L+/L+":
            for t in semigroups(n):
                beta = _fold(t)
                for par in forests(n, ell):
                    if entwined_check(law, X, beta, forest_chain(par)):
                        found.append({"n": n, "table": t, "parent": list(par)})
        elif name == "P/C":
            for beta in p_algebras(X):
                for kappa in _maps(X, C):
                    if entwined_check(law, X, beta.__getitem__, lambda x, k=kappa: (k[x], x)):
                        found.append({"n": n, "beta": beta, "kappa": [kappa[x] for x in X]})
        else:
            for M in monoids(n):
                beta = _fold_monoid(M)
                for kappa in _maps(X, C):
                    if entwined_check(law, X, beta, lambda x, k=kappa: (k[x], x)):
                        found.append({"n": n, "table": M.table, "unit": M.unit,
                                      "kappa": [kappa[x] for x in X]})
    return found


def _fold(t):
    def beta(w):
        acc = w[0]
        for x in w[1:]:
            acc = t[acc][x]
        return acc
    return beta


def _fold_monoid(M):
    def beta(w):
        acc = M.unit
        for x in w:
            acc = M.mul(acc, x)
        return acc
    return beta


def sup_lattices(X):
    """Partial orders on X with all joins, as (order, join-of-subset) pairs."""
    X = list(X)
    pairs = [(a, b) for a in X for b in X if a != b]
    out = []
    for bits in product([False, True], repeat=len(pairs)):
        le = {(a, a) for a in X} | {p for p, on in zip(pairs, bits) if on}
        if any((b, a) in le for a, b in le if a != b):
            continue
        if any((a, c) not in le for a, b in le for b2, c in le if b == b2):
            continue
        join = {}
        for A in subsets(X):
            ubs = [u for u in X if all((a, u) in le for a in A)]
            least = [u for u in ubs if all((u, v) in le for v in ubs)]
            if not least:
                break
            join[A] = least[0]
        else:
            out.append((le, join))
    return out


def sup_lattice_colourings(X, colours=2):
    """The characterization side: joins preserved by kappa, kappa(bottom) = c_0."""
    out = []
    for le, join in sup_lattices(X):
        for kappa in _maps(X, range(colours)):
            if all(kappa[join[A]] == _sup(kappa[a] for a in A) for A in join):
                out.append((tuple(sorted(join.items(), key=lambda kv: sorted(kv[0]))),
                            tuple(kappa[x] for x in X)))
    return out


def monoid_colourings(n, colours=2):
    """Monoids with kappa(e) = c_0 and kappa(xy) = sup(kappa x, kappa y)."""
    out = []
    X = range(n)
    for M in monoids(n):
        for kappa in _maps(X, range(colours)):
            if kappa[M.unit] == 0 and all(kappa[M.mul(a, b)] == max(kappa[a], kappa[b])
                                          for a in X for b in X):
                out.append((tuple(map(tuple, M.table)), tuple(kappa[x] for x in X)))
    return out


# the nonempty-list bimonad

def w_product(t):
    """[x_1..x_m][y_1..y_n] = [x_1 y_1, ..., x_m y_1, y_1, ..., y_n] on W X."""
    def prod(u, v):
        return Lst([t[x][v[0]] for x in u] + list(v))
    return prod


def left_machine(t):
    """rho[x_1..x_n] = [x_1...x_n, x_2...x_n, ..., x_n]."""
    beta = _fold(t)

    def rho(w):
        return Lst(beta(w[i:]) for i in range(len(w)))
    return rho


def lplus_bimonad(x_size=2, ell=4):
    """theta for L+ with its law report; the term count is asserted on every evaluated input."""
    if x_size > 3 or ell > 5:
        raise BoundExceeded("L+ checks are limited to |X| <= 3 and lists of length <= 5")
    law = mixed_law("L+/L+", ell=ell)
    counted = [0]
    raw = law.theta

    def theta(ww):
        out = raw(ww)
        if sum(len(v) for v in out) != lplus_term_count(ww):
            raise AssertionError(f"term count fails at {ww!r}")
        counted[0] += 1
        return out

    law = MixedLaw(law.name, law.B, law.C, theta)
    rep = mixed_law_report(law, x_size)
    rep.notes.append(f"term count checked on {counted[0]} evaluations")
    return law, rep


def kleisli_compose(B, f, g):
    """x -> mu(B(g)(f(x)))."""
    return lambda x: B.mult(B.fmap(g, f(x)))
