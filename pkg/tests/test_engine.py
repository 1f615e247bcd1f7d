import pytest

from duplicial import hochschild as hh
from duplicial.engine import (LawViolation, check_identities, homotopy_report, morphism_report, transport,
                              trivial_instance, words)
from duplicial.linalg import QQ, Matrix
from duplicial.simplicial import hh_betti


def test_words():
    assert words(1) == ["", "T", "S"]
    assert len(words(2)) == 7


def test_trivial_instance_is_cyclic_and_contractible():
    eng = trivial_instance(QQ, 2)
    ct = eng.build_CT(3)
    assert check_identities(ct, "cyclic").ok
    cs = eng.build_CS_star(3, augmented=True)
    assert homotopy_report(cs, eng.contracting_homotopy(3)).ok


def test_chi_pow_routes_agree():
    eng = hh.bar_engine(hh.dual_numbers())
    for n in range(4):
        eng.iterate_chi(n, "TnS")
        eng.iterate_chi(n, "TSn")


def test_rho_and_lambda_factorizations():
    eng = hh.bar_engine(hh.upper_triangular())
    for n in range(3):
        eng.rho_n_checked(n)
        eng.lam_n_checked(n)


def test_inputs_checked():
    assert hh.bar_engine(hh.dual_numbers()).check_inputs().ok


def test_broken_coalgebra_rejected():
    A = hh.dual_numbers()
    bad = Matrix.from_dense(QQ, [[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1]])
    with pytest.raises((LawViolation, AssertionError)):
        hh.bar_engine(A, A.regular(), rho=bad)


def test_R_L_morphisms():
    eng = hh.bar_engine(hh.ground_field())
    R, L = eng.build_R_L(2)
    ct, cs = eng.build_CT(2), eng.build_CS_star(2)
    assert morphism_report(ct, cs, R).ok
    assert morphism_report(cs, ct, L).ok


def test_transport_rejects_non_isomorphism():
    x = hh.hochschild_cyclic_module(hh.ground_field(), top=1)
    z = Matrix.zeros(QQ, 1, 1)
    with pytest.raises(ValueError):
        transport(x, ({0: z, 1: z}, {0: z, 1: z}))


def test_forgetful_engine_contractible_on_CT():
    eng = hh.forgetful_engine(hh.dual_numbers())
    ct = eng.build_CT(3, augmented=True)
    assert homotopy_report(ct, eng.contracting_homotopy(3, "CT")).ok


def test_free_coefficients_homology():
    eng = hh.free_coefficient_engine(hh.dual_numbers())
    cs = eng.build_CS_star(4, augmented=True)
    assert hh_betti(cs, 3) == [cs.aug_dim, 0, 0, 0]
