import pytest
from hypothesis import given, settings, strategies as st

from duplicial import hopf
from duplicial.linalg import GF, QQ, Matrix
from duplicial.simplicial import check_identities, hc_of_duplicial


def test_catalog_bialgebras_valid():
    for B in hopf.bialgebra_catalog():
        assert hopf.bialgebra_report(B).ok, B.name


def test_hopf_detection():
    verdicts = [bool(hopf.is_hopf_and_antipode(B)) for B in hopf.bialgebra_catalog()]
    assert verdicts == [True, True, True, False, True]


def test_idempotent_monoid_galois_rank():
    nh = hopf.is_hopf_and_antipode(hopf.idempotent_monoid_bialgebra())
    assert not nh and nh.rank == 3


def test_c3_antipode_and_translation():
    hs = hopf.is_hopf_and_antipode(hopf.cyclic_group_bialgebra(3))
    assert hs.antipode.to_dense() == [[1, 0, 0], [0, 0, 1], [0, 1, 0]]
    assert hs.legs(1) == {(1, 2): 1}
    assert (hs.antipode @ hs.antipode_inverse).is_identity()


def test_broken_antipode_reported():
    B = hopf.cyclic_group_bialgebra(2)
    assert not hopf.antipode_report(B, Matrix.zeros(QQ, 2, 2)).ok


def test_galois_map_is_module_map():
    for B in hopf.bialgebra_catalog():
        assert hopf.galois_is_module_map(B)


def test_yd_braiding_law():
    for B in hopf.bialgebra_catalog():
        assert hopf.yd_law_report(B).ok, B.name


def test_braiding_inverse():
    B = hopf.cyclic_group_bialgebra(3)
    hs = hopf.is_hopf_and_antipode(B)
    c = hopf.yd_braiding(B)
    assert (c @ hopf.yd_braiding_inverse(hs)).is_identity()


def test_trivial_coefficients_sayd():
    for B in hopf.bialgebra_catalog():
        hs = hopf.is_hopf_and_antipode(B)
        if hs:
            assert hopf.sayd_check(hs, *hopf.trivial_coefficients(B))


def test_mutated_coefficients_not_sayd():
    H = hopf.cyclic_group_bialgebra(3)
    hs = hopf.is_hopf_and_antipode(H)
    M, N = hopf.regular_right_coefficients(H, 1), hopf.trivial_coefficients(H)[1]
    assert not hopf.sayd_check(hs, M, N)
    y, eng = hopf.hopf_cyclic_module(hs, M, N, top=2)
    assert check_identities(y, "duplicial").ok
    assert hopf.lr_report(eng, 2) == [0, 1, 2]


def test_hopf_cyclic_of_group_algebra():
    hs = hopf.is_hopf_and_antipode(hopf.cyclic_group_bialgebra(3))
    y, _ = hopf.hopf_cyclic_module(hs, top=5)
    assert hc_of_duplicial(y, "via_pi_shriek_K") == hc_of_duplicial(y, "via_P_F") == [1, 0, 1, 0]


def test_non_hopf_refused():
    with pytest.raises(ValueError):
        hopf.hopf_cyclic_module(hopf.is_hopf_and_antipode(hopf.idempotent_monoid_bialgebra()))


def test_json_roundtrip():
    for B in hopf.bialgebra_catalog():
        C = hopf.bialgebra_from_json(B.to_json())
        assert C.Delta == B.Delta and C.eps == B.eps and C.algebra.mu == B.algebra.mu


def test_json_needs_comult():
    obj = hopf.cyclic_group_bialgebra(2).to_json()
    del obj["comult"]
    with pytest.raises(ValueError):
        hopf.bialgebra_from_json(obj)


@settings(max_examples=8, deadline=None)
@given(st.integers(1, 4), st.sampled_from([QQ, GF(2), GF(3)]))
def test_group_algebras_are_hopf(n, field):
    B = hopf.cyclic_group_bialgebra(n, field)
    hs = hopf.is_hopf_and_antipode(B)
    assert hs
    perm = Matrix.from_columns(field, n, [{(-j) % n: 1} for j in range(n)])
    assert hs.antipode == perm


@settings(max_examples=6, deadline=None)
@given(st.integers(2, 3))
def test_closed_form_matches_engine(n):
    H = hopf.cyclic_group_bialgebra(n)
    hs = hopf.is_hopf_and_antipode(H)
    M = hopf.character_coefficients(H, [1] * n, n - 1)
    N = hopf.trivial_coefficients(H)[1]
    y, _ = hopf.hopf_cyclic_module(hs, M, N, top=3)
    for k in range(4):
        assert y.t[k] == hopf.closed_form_t(hs, M, N, k)
