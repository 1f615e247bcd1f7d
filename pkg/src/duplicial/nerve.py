"""Finite categories, their nerves, and duplicial structures on nerves.

A degree-n simplex is a composable chain (f_0, ..., f_{n-1}) with
f_k: A_k -> A_{k+1}, stored in that order; degree-0 simplices are objects.
The face d_0 drops f_0, d_n drops f_{n-1} and d_i composes f_i f_{i-1}.
A coreflector sends A to tA and f: A -> B to tf: tB -> A; on chains
t(f_0, ..., f_{n-1}) = (t(f_{n-1} ... f_0), f_0, ..., f_{n-2}).
"""
from __future__ import annotations

from dataclasses import dataclass, field as dfield
from itertools import combinations, product

from .complexes import ValidationReport
from .simplicial import check_identities, cyclic_failure_degree


class CategoryError(ValueError):
    pass


@dataclass(eq=False)
class FiniteCategory:
    objects: list
    morphisms: dict          # id -> (src, tgt)
    compose_table: dict      # (g, f) -> g f
    identities: dict         # object -> id
    name: str = ""
    _hom: dict = dfield(default=None, repr=False)

    def __post_init__(self):
        self._hom = {}
        for m, (a, b) in self.morphisms.items():
            self._hom.setdefault((a, b), []).append(m)

    def src(self, f):
        return self.morphisms[f][0]

    def tgt(self, f):
        return self.morphisms[f][1]

    def comp(self, g, f):
        """g after f."""
        return self.compose_table[(g, f)]

    def hom(self, a, b):
        return self._hom.get((a, b), [])

    def ident(self, a):
        return self.identities[a]

    def inverse(self, f):
        for g in self.hom(self.tgt(f), self.src(f)):
            if self.comp(g, f) == self.ident(self.src(f)) and self.comp(f, g) == self.ident(self.tgt(f)):
                return g
        return None

    def is_groupoid(self):
        return all(self.inverse(f) is not None for f in self.morphisms)

    def to_json(self):
        return {
            "objects": list(self.objects),
            "morphisms": [{"id": m, "src": a, "tgt": b} for m, (a, b) in self.morphisms.items()],
            "compose": {f"({g},{f})": h for (g, f), h in self.compose_table.items()},
            "identities": dict(self.identities),
            **({"name": self.name} if self.name else {}),
        }


def category_report(C):
    rep = ValidationReport()
    obs = set(C.objects)
    if len(obs) != len(C.objects):
        rep.fail("objects distinct", 0)
    for m, (a, b) in C.morphisms.items():
        if a not in obs or b not in obs:
            rep.fail("morphism endpoints are objects", 0, m)
    for a in C.objects:
        i = C.identities.get(a)
        if i is None or C.morphisms.get(i) != (a, a):
            rep.fail("identity present", 0, str(a))
    if not rep.ok:
        return rep
    for g, f in product(C.morphisms, repeat=2):
        composable = C.tgt(f) == C.src(g)
        h = C.compose_table.get((g, f))
        if composable != (h is not None):
            rep.fail("composition defined exactly on composable pairs", 0, f"({g},{f})")
        elif h is not None and C.morphisms.get(h) != (C.src(f), C.tgt(g)):
            rep.fail("composite has the right endpoints", 0, f"({g},{f})")
    if not rep.ok:
        return rep
    for f in C.morphisms:
        if C.comp(C.ident(C.tgt(f)), f) != f or C.comp(f, C.ident(C.src(f))) != f:
            rep.fail("identity laws", 0, f)
        for g in (g for g in C.morphisms if C.src(g) == C.tgt(f)):
            for h in (h for h in C.morphisms if C.src(h) == C.tgt(g)):
                if C.comp(h, C.comp(g, f)) != C.comp(C.comp(h, g), f):
                    rep.fail("associativity", 0, f"({h},{g},{f})")
    return rep


def category_from_json(obj):
    try:
        objects = list(obj["objects"])
        morphisms = {m["id"]: (m["src"], m["tgt"]) for m in obj["morphisms"]}
        table = {}
        for k, h in obj["compose"].items():
            s = k.strip()
            if not (s.startswith("(") and s.endswith(")")) or s.count(",") != 1:
                raise CategoryError(f"bad composition key {k!r}")
            g, f = (x.strip() for x in s[1:-1].split(","))
            table[(g, f)] = h
        identities = dict(obj["identities"])
    except (KeyError, TypeError, AttributeError) as e:
        raise CategoryError(f"malformed category: {e}") from e
    C = FiniteCategory(objects, morphisms, table, identities, obj.get("name", ""))
    rep = category_report(C)
    if not rep.ok:
        raise CategoryError(f"invalid category: {rep.lines()}")
    return C


# catalog

def category_from_monoid(table, names, name=""):
    """One-object category; table[i][j] is the index of names[i] names[j]; names[0] is the unit."""
    n = len(names)
    morphisms = {m: ("*", "*") for m in names}
    comp = {(names[i], names[j]): names[table[i][j]] for i in range(n) for j in range(n)}
    return FiniteCategory(["*"], morphisms, comp, {"*": names[0]}, name)


def cyclic_group_category(order):
    names = ["1"] + [f"g{k}" for k in range(1, order)]
    return category_from_monoid([[(i + j) % order for j in range(order)] for i in range(order)],
                                names, f"Z/{order}")


def idempotent_monoid_category():
    return category_from_monoid([[0, 1], [1, 1]], ["1", "e"], "{1,e}")


def poset_category(elements, leq, name=""):
    morphisms, ids = {}, {}
    for a, b in product(elements, repeat=2):
        if a == b or (a, b) in leq:
            m = f"1_{a}" if a == b else f"{a}<{b}"
            morphisms[m] = (a, b)
            if a == b:
                ids[a] = m
    comp = {}
    for g, (b, c) in morphisms.items():
        for f, (a, b2) in morphisms.items():
            if b2 == b:
                comp[(g, f)] = ids[a] if a == c else f"{a}<{c}"
    return FiniteCategory(list(elements), morphisms, comp, ids, name)


def terminal_category():
    return category_from_monoid([[0]], ["1"], "terminal")


def interval_category():
    return poset_category(["0", "1"], {("0", "1")}, "interval")


def chain_category(n=3):
    els = [str(k) for k in range(n)]
    return poset_category(els, {(a, b) for a, b in combinations(els, 2)}, f"chain{n}")


def cospan_category():
    return poset_category(["a", "b", "c"], {("a", "c"), ("b", "c")}, "cospan")


def iso_groupoid():
    """Two objects joined by an isomorphism u with inverse v."""
    mors = {"1_0": ("0", "0"), "1_1": ("1", "1"), "u": ("0", "1"), "v": ("1", "0")}
    comp = {("1_0", "1_0"): "1_0", ("1_1", "1_1"): "1_1", ("u", "1_0"): "u", ("1_1", "u"): "u",
            ("v", "1_1"): "v", ("1_0", "v"): "v", ("v", "u"): "1_0", ("u", "v"): "1_1"}
    return FiniteCategory(["0", "1"], mors, comp, {"0": "1_0", "1": "1_1"}, "iso")


def parallel_pair_category():
    mors = {"1_0": ("0", "0"), "1_1": ("1", "1"), "f": ("0", "1"), "g": ("0", "1")}
    comp = {("1_0", "1_0"): "1_0", ("1_1", "1_1"): "1_1"}
    for m in "fg":
        comp[(m, "1_0")] = m
        comp[("1_1", m)] = m
    return FiniteCategory(["0", "1"], mors, comp, {"0": "1_0", "1": "1_1"}, "parallel")


def twisted_interval_category():
    """Z/2 = {1_0, s} at 0, one object 1, Hom(0,1) = {f, fs}: not thin, coreflective in {0}."""
    mors = {"1_0": ("0", "0"), "s": ("0", "0"), "1_1": ("1", "1"), "f": ("0", "1"), "fs": ("0", "1")}
    comp = {("1_0", "1_0"): "1_0", ("s", "1_0"): "s", ("1_0", "s"): "s", ("s", "s"): "1_0",
            ("1_1", "1_1"): "1_1"}
    for m in ("f", "fs"):
        comp[(m, "1_0")] = m
        comp[("1_1", m)] = m
    comp[("f", "s")] = "fs"
    comp[("fs", "s")] = "f"
    return FiniteCategory(["0", "1"], mors, comp, {"0": "1_0", "1": "1_1"}, "twisted interval")


def category_catalog():
    return [terminal_category(), cyclic_group_category(2), cyclic_group_category(3), iso_groupoid(),
            interval_category(), chain_category(3), twisted_interval_category(),
            idempotent_monoid_category(), cospan_category(), parallel_pair_category()]


# nerve

class NerveSet:
    """Truncated (duplicial) simplicial set of chains; maps are dicts between simplices."""
    augmented = False

    def __init__(self, C, top, coreflector=None):
        self.C = C
        self.top = top
        self.t = coreflector
        self.simplices = [list(C.objects)]
        for n in range(1, top + 1):
            if n == 1:
                chains = [(f,) for f in C.morphisms]
            else:
                chains = [c + (g,) for c in self.simplices[n - 1]
                          for g in C.morphisms if C.src(g) == C.tgt(c[-1])]
            self.simplices.append(chains)
        self._cache = {}

    @property
    def has_t(self):
        return self.t is not None

    def counts(self):
        return [len(s) for s in self.simplices]

    def _tab(self, key, n, fn):
        m = self._cache.get(key)
        if m is None:
            m = self._cache[key] = {s: fn(s) for s in self.simplices[n]}
        return m

    def face_of(self, s, n, i):
        C = self.C
        if n == 1:
            return C.tgt(s[0]) if i == 0 else C.src(s[0])
        if i == 0:
            return s[1:]
        if i == n:
            return s[:-1]
        return s[:i - 1] + (C.comp(s[i], s[i - 1]),) + s[i + 1:]

    def degen_of(self, s, n, j):
        C = self.C
        if n == 0:
            return (C.ident(s),)
        obj = C.src(s[j]) if j < n else C.tgt(s[-1])
        return s[:j] + (C.ident(obj),) + s[j:]

    def t_of(self, s, n):
        t = self.t
        if n == 0:
            return t.obj[s]
        total = s[0]
        for g in s[1:]:
            total = self.C.comp(g, total)
        return (t.mor[total],) + s[:-1]

    def face(self, n, i):
        return self._tab(("d", n, i), n, lambda s: self.face_of(s, n, i))

    def degen(self, n, j):
        return self._tab(("s", n, j), n, lambda s: self.degen_of(s, n, j))

    def tmap(self, n):
        return self._tab(("t", n), n, lambda s: self.t_of(s, n))

    def ident(self, n):
        return {s: s for s in self.simplices[n]}

    @staticmethod
    def compose(f, g):
        return {s: f[v] for s, v in g.items()}

    @staticmethod
    def equal(f, g):
        return f == g


def nerve(C, top):
    rep = category_report(C)
    if not rep.ok:
        raise CategoryError(f"invalid category: {rep.lines()}")
    x = NerveSet(C, top)
    bad = check_identities(x, "simplicial")
    if not bad.ok:
        raise AssertionError(f"nerve fails simplicial identities: {bad.lines()}")
    return x


# coreflectors

@dataclass(eq=False)
class Coreflector:
    obj: dict                # A -> tA
    mor: dict                # (f: A -> B) -> (tf: tB -> A)


def coreflector_report(C, t):
    rep = ValidationReport()
    for a in C.objects:
        if t.obj.get(a) not in C.identities:
            rep.fail("t defined on objects", 0, str(a))
    if not rep.ok:
        return rep
    for f in C.morphisms:
        tf = t.mor.get(f)
        if tf is None or C.morphisms.get(tf) != (t.obj[C.tgt(f)], C.src(f)):
            rep.fail("tf: tB -> A", 1, f)
    if not rep.ok:
        return rep
    for a in C.objects:
        if t.mor[t.mor[C.ident(a)]] != C.ident(t.obj[a]):
            rep.fail("t^2(1_A) = 1_tA", 0, str(a))
    for f, g in product(C.morphisms, repeat=2):
        if C.tgt(f) == C.src(g):
            if t.mor[g] != C.comp(f, t.mor[C.comp(g, f)]):
                rep.fail("triangle rule tg = f t(gf)", 2, f"({g},{f})")
    return rep


@dataclass(eq=False)
class Witness:
    subcategory: list        # objects of the full groupoid D
    R: dict                  # c -> Rc in D
    eps: dict                # c -> eps_c: Rc -> c


def _is_full_groupoid(C, D):
    return all(C.inverse(f) is not None for a in D for b in D for f in C.hom(a, b))


def _universal(C, D, c, r, e):
    """Every k: d -> c with d in D factors uniquely as e u with u: d -> r."""
    for d in D:
        for k in C.hom(d, c):
            if sum(1 for u in C.hom(d, r) if C.comp(e, u) == k) != 1:
                return False
    return True


def find_coreflective_groupoid(C):
    """First full groupoid D (by size, then lexicographically) with a coreflection onto it."""
    obs = list(C.objects)
    if not obs:
        return Witness([], {}, {})
    for size in range(1, len(obs) + 1):
        for D in combinations(obs, size):
            if not _is_full_groupoid(C, D):
                continue
            R, eps = {}, {}
            for c in obs:
                found = None
                for r in D:
                    for e in C.hom(r, c):
                        if _universal(C, D, c, r, e):
                            found = (r, e)
                            break
                    if found:
                        break
                if found is None:
                    break
                R[c], eps[c] = found
            else:
                return Witness(list(D), R, eps)
    return None


def witness_report(C, w):
    rep = ValidationReport()
    if not _is_full_groupoid(C, w.subcategory):
        rep.fail("D is a groupoid", 0)
    for c in C.objects:
        r, e = w.R.get(c), w.eps.get(c)
        if r not in w.subcategory or e is None or C.morphisms.get(e) != (r, c):
            rep.fail("eps_c: Rc -> c with Rc in D", 0, str(c))
        elif not _universal(C, w.subcategory, c, r, e):
            rep.fail("universal property of eps_c", 0, str(c))
    return rep


def coreflector_from_witness(C, w):
    """tA = RA and tf = eps_A (Rf)^{-1}, Rf the D-morphism with eps_B Rf = f eps_A."""
    rep = witness_report(C, w)
    if not rep.ok:
        raise ValueError(f"malformed witness: {rep.lines()}")
    mor = {}
    for f in C.morphisms:
        a, b = C.src(f), C.tgt(f)
        target = C.comp(f, w.eps[a])
        Rf = [u for u in C.hom(w.R[a], w.R[b]) if C.comp(w.eps[b], u) == target]
        if len(Rf) != 1:
            raise ValueError(f"no unique R({f})")
        mor[f] = C.comp(w.eps[a], C.inverse(Rf[0]))
    t = Coreflector({a: w.R[a] for a in C.objects}, mor)
    bad = coreflector_report(C, t)
    if not bad.ok:
        raise AssertionError(f"derived coreflector fails: {bad.lines()}")
    return t


def identity_witness(C):
    return Witness(list(C.objects), {a: a for a in C.objects}, {a: C.ident(a) for a in C.objects})


def duplicial_on_nerve(C, t, top):
    rep = coreflector_report(C, t)
    if not rep.ok:
        raise ValueError(f"not a coreflector: {rep.lines()}")
    x = NerveSet(C, top, t)
    bad = check_identities(x, "duplicial")
    if not bad.ok:
        raise AssertionError(f"nerve t fails duplicial identities: {bad.lines()}")
    return x


@dataclass
class NerveVerdict:
    groupoid: bool
    duplicial: bool
    witness: Witness = None
    cyclic_failure: int = None
    report: ValidationReport = None


def cyclic_iff_groupoid(C, top=4):
    if C.is_groupoid():
        t = coreflector_from_witness(C, identity_witness(C))
        x = duplicial_on_nerve(C, t, top)
        rep = check_identities(x, "cyclic")
        if not rep.ok:
            raise AssertionError(f"groupoid nerve not cyclic: {rep.lines()}")
        return NerveVerdict(True, True, identity_witness(C), None, rep)
    w = find_coreflective_groupoid(C)
    if w is None:
        return NerveVerdict(False, False)
    x = duplicial_on_nerve(C, coreflector_from_witness(C, w), top)
    return NerveVerdict(False, True, w, cyclic_failure_degree(x))


def all_coreflectors(C, limit=None):
    """Every coreflector, by backtracking over object maps and then morphism maps."""
    obs, mors = list(C.objects), list(C.morphisms)
    found = []
    for images in product(obs, repeat=len(obs)):
        tobj = dict(zip(obs, images))
        options = [C.hom(tobj[C.tgt(f)], C.src(f)) for f in mors]
        if any(not o for o in options):
            continue
        assign = {}

        def ok_so_far():
            for f in assign:
                for g in assign:
                    if C.tgt(f) == C.src(g):
                        gf = C.comp(g, f)
                        if gf in assign and assign[g] != C.comp(f, assign[gf]):
                            return False
            for a in obs:
                i = C.ident(a)
                if i in assign and assign[i] in assign and assign[assign[i]] != C.ident(tobj[a]):
                    return False
            return True

        def go(k):
            if limit is not None and len(found) >= limit:
                return
            if k == len(mors):
                found.append(Coreflector(dict(tobj), dict(assign)))
                return
            for choice in options[k]:
                assign[mors[k]] = choice
                if ok_so_far():
                    go(k + 1)
                del assign[mors[k]]

        go(0)
    return found
