import pytest
from hypothesis import given, settings, strategies as st

from duplicial import hochschild as hh
from duplicial.complexes import validate
from duplicial.linalg import QQ, GF, Matrix
from duplicial.simplicial import (check_identities, constant_module, cyclic_failure_degree, decalage,
                                  decalage_coalgebra_report, decalages_commute, dold_kan_normalize,
                                  duplicial_equals_decalage_coalgebra, duplicial_to_duchain, dwyer_kan,
                                  hc_of_duplicial, hh_betti, module_from_json, module_to_json, opsimplicial,
                                  pi_shriek, zero_module)


def test_constant_module_is_cyclic():
    x = constant_module(QQ, 4)
    assert check_identities(x, "cyclic").ok
    assert hh_betti(x) == [1, 0, 0, 0]


def test_constant_hc_both_routes():
    x = constant_module(QQ, 5)
    assert hc_of_duplicial(x, "via_pi_shriek_K") == hc_of_duplicial(x, "via_P_F") == [1, 0, 1, 0]


def test_hc_refuses_past_safe_degree():
    with pytest.raises(ValueError):
        hc_of_duplicial(constant_module(QQ, 4), upto=3)


def test_zero_module():
    assert check_identities(zero_module(QQ, 3), "cyclic").ok


def test_broken_face_is_named():
    x = constant_module(QQ, 3)
    faces = dict(x.faces)
    faces[(2, 1)] = Matrix.zeros(QQ, 1, 1)
    bad = type(x)(QQ, x.dims, faces, x.degens, x.t)
    rep = check_identities(bad, "simplicial")
    assert not rep.ok
    assert any(name.startswith("d") for name, _, _ in rep.violations)


def test_hochschild_module_cyclic_for_catalog():
    for A in hh.algebra_catalog():
        x = hh.hochschild_cyclic_module(A, top=3)
        assert check_identities(x, "cyclic").ok, A.name


def test_twisted_fails_at_degree_zero():
    A, s = hh.sigma_catalog()[1]
    x = hh.twisted_module(A, s, 3)
    assert check_identities(x, "duplicial").ok
    assert cyclic_failure_degree(x) == 0


def test_pi_shriek_is_cyclic_and_idempotent():
    A, s = hh.sigma_catalog()[1]
    x = hh.twisted_module(A, s, 3)
    y = pi_shriek(x)
    assert check_identities(y, "cyclic").ok
    z = pi_shriek(y)
    assert z.dims == y.dims


def test_pi_shriek_on_cyclic_is_identity_dims():
    x = hh.hochschild_cyclic_module(hh.dual_numbers(), top=3)
    assert pi_shriek(x).dims == x.dims


def test_normalized_dims_of_ground_field():
    nx, _, _ = dold_kan_normalize(hh.hochschild_cyclic_module(hh.ground_field(), top=4))
    assert nx.dims == [1, 0, 0, 0, 0]


def test_cyclic_input_gives_mixed_complex():
    x = hh.hochschild_cyclic_module(hh.dual_numbers(), top=4)
    assert validate(duplicial_to_duchain(x), "mixed").ok
    assert validate(dwyer_kan(x), "duchain").ok


def test_decalage():
    x = constant_module(QQ, 4, augmented=True)
    r = decalage(x, "right")
    assert r.module.dims == [1, 1, 1, 1]
    assert decalages_commute(x)
    assert check_identities(r.module, "simplicial").ok


def test_decalage_coalgebra_matches_duplicial():
    A, s = hh.sigma_catalog()[2]
    x = hh.twisted_module(A, s, 3)
    assert duplicial_equals_decalage_coalgebra(x)
    broken = x.with_t({n: Matrix.identity(QQ, x.dims[n]) for n in range(4)})
    assert not check_identities(broken, "duplicial").ok
    assert not decalage_coalgebra_report(broken).ok


def test_opsimplicial_stays_simplicial():
    x = hh.hochschild_cyclic_module(hh.upper_triangular(), top=3)
    assert check_identities(opsimplicial(x), "simplicial").ok


def test_json_roundtrip():
    x = hh.hochschild_cyclic_module(hh.dual_numbers(), top=2)
    y = module_from_json(module_to_json(x))
    assert y.faces == x.faces and y.degens == x.degens and y.t == x.t


@settings(max_examples=15, deadline=None)
@given(st.integers(1, 3), st.sampled_from([QQ, GF(2), GF(3)]))
def test_hh_of_diagonal_algebra(n, field):
    """k^n is separable: HH is k^n in degree 0 and vanishes above."""
    x = hh.hochschild_cyclic_module(hh.diagonal(n, field), top=3)
    assert hh_betti(x) == [n, 0, 0]


@settings(max_examples=10, deadline=None)
@given(st.sampled_from(range(5)))
def test_routes_agree_on_catalog(k):
    A, s = hh.sigma_catalog()[k]
    x = hh.twisted_module(A, s, 4)
    assert hc_of_duplicial(x, "via_pi_shriek_K") == hc_of_duplicial(x, "via_P_F")
