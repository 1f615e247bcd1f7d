from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from duplicial import setlaws as sl
from duplicial.setlaws import Lst


@pytest.mark.parametrize("name", sl.STRUCTURES)
def test_structure_laws(name):
    rep = sl.check_laws(name, size=2)
    assert rep.ok, rep.lines()[:3]


def test_list_coverage_note():
    rep = sl.check_laws("L", size=2)
    assert rep.notes == ["partial verification: 25969 of 47293927969 inputs (5.491e-05%) "
                         "with total length <= bound"]


def test_bounds_enforced():
    with pytest.raises(sl.BoundExceeded):
        sl.check_laws("P", size=4)
    with pytest.raises(sl.BoundExceeded):
        sl.entwined_enumerate("L+/L+", 4)
    with pytest.raises(sl.BoundExceeded):
        sl.lplus_bimonad(4, 4)


def test_kind_mismatch():
    with pytest.raises(ValueError):
        sl.check_laws("P", kind="comonad")


def test_unknown_names():
    with pytest.raises(KeyError):
        sl.structure("Q")
    with pytest.raises(KeyError):
        sl.mixed_law("Q/C")


@pytest.mark.parametrize("name", sl.LAW_NAMES + ("U/M",))
def test_mixed_laws(name):
    assert sl.mixed_law_report(sl.mixed_law(name), 2).ok


def test_wrong_theta_caught():
    law = sl.mixed_law("P/C")
    bad = sl.MixedLaw("bad", law.B, law.C, lambda A: (0, frozenset(x for _, x in A)))
    assert not sl.mixed_law_report(bad, 2).ok


def test_lplus_theta_examples():
    law, rep = sl.lplus_bimonad(2, 4)
    assert rep.ok
    assert law.theta(Lst([Lst("ab")])) == Lst([Lst("a"), Lst("b")])
    assert law.theta(Lst([Lst("a"), Lst("b")])) == Lst([Lst("ab"), Lst("b")])
    assert rep.notes[-1] == "term count checked on 4394 evaluations"


def test_entwined_lplus_only_empty():
    assert [e["n"] for e in sl.entwined_enumerate("L+/L+", 3)] == [0]


def test_sup_lattice_characterization():
    found = sl.entwined_enumerate("P/C", 3)
    enum = {(tuple(sorted(d["beta"].items(), key=lambda kv: sorted(kv[0]))), tuple(d["kappa"])) for d in found}
    char = set()
    for n in range(4):
        char |= set(sl.sup_lattice_colourings(list(range(n))))
    assert len(found) == 23 and enum == char


def test_monoid_characterization():
    found = sl.entwined_enumerate("L/C", 3)
    enum = {(tuple(map(tuple, d["table"])), tuple(d["kappa"])) for d in found}
    char = set()
    for n in range(4):
        char |= set(sl.monoid_colourings(n))
    assert len(found) == 76 and enum == char


def iso_classes(tables):
    n = len(tables[0]) if tables else 0
    seen = set()
    for t in tables:
        forms = []
        for p in permutations(range(n)):
            inv = {p[i]: i for i in range(n)}
            forms.append(tuple(tuple(p[t[inv[a]][inv[b]]] for b in range(n)) for a in range(n)))
        seen.add(min(forms))
    return len(seen)


def test_counts_of_small_structures():
    # monoids up to isomorphism: 1, 2, 7 for orders 1, 2, 3
    assert [iso_classes([M.table for M in sl.monoids(n)]) for n in (1, 2, 3)] == [1, 2, 7]
    assert sl.monoids(0) == []
    assert len(sl.semigroups(2)) == 8


def test_left_machine_and_product():
    t = [[0, 0], [1, 1]]          # left-zero semigroup
    assert sl.left_machine(t)(Lst([0, 1])) == Lst([0, 1])
    assert sl.w_product(t)(Lst([1, 0]), Lst([1])) == Lst([1, 0, 1])


def test_kleisli():
    B = sl.powerset()
    f = sl.kleisli_compose(B, lambda x: frozenset(["y"]), lambda y: frozenset(["z1", "z2"]))
    assert f(0) == frozenset({"z1", "z2"})


@settings(max_examples=40)
@given(st.lists(st.lists(st.integers(0, 2), min_size=1, max_size=3).map(Lst), min_size=1, max_size=3).map(Lst))
def test_lplus_term_count(ww):
    out = sl.mixed_law("L+/L+").theta(ww)
    assert sum(len(v) for v in out) == sl.lplus_term_count(ww)


@settings(max_examples=40)
@given(st.lists(st.integers(0, 2), min_size=1, max_size=4).map(Lst))
def test_nonempty_list_comonad_counit(w):
    C = sl.nonempty_list_comonad(4)
    assert C.counit(C.comult(w)) == w
    assert C.fmap(C.counit, C.comult(w)) == w


@settings(max_examples=40)
@given(st.frozensets(st.frozensets(st.frozensets(st.integers(0, 4), max_size=3), max_size=3), max_size=3))
def test_powerset_associativity_beyond_carrier(GGG):
    P = sl.powerset()
    assert P.mult(P.mult(GGG)) == P.mult(P.fmap(P.mult, GGG))
