import pytest

from duplicial.complexes import (DuchainComplex, betti, complex_from_json, complex_to_json, hc_betti,
                                 hc_table, homology, homology_table, t_operator_and_mixedify, total_complex,
                                 validate)
from duplicial.linalg import QQ, Matrix


def ground_mixed(top=4):
    """Normalized mixed complex of C(k, k): k in degree 0, zero above."""
    return DuchainComplex(QQ, [1] + [0] * top, {})


def test_total_complex_dims():
    m = DuchainComplex(QQ, [1, 2, 3, 4], {})
    assert total_complex(m).dims == [1, 2, 4, 6]


def test_hc_of_ground_field_mixed():
    m = ground_mixed(5)
    assert hc_betti(m, 3) == [1, 0, 1, 0]
    rows = hc_table(m)
    assert rows[-1] == (5, 0, True)


def test_validate_catches_bad_b():
    one = Matrix.identity(QQ, 1)
    c = DuchainComplex(QQ, [1, 1, 1], {1: one, 2: one})
    rep = validate(c, "chain_only")
    assert not rep.ok and rep.violations[0][:2] == ("bb=0", 2)


def test_mixed_checks_anticommutation():
    one = Matrix.identity(QQ, 1)
    c = DuchainComplex(QQ, [1, 1], {1: one}, B={0: one})
    assert validate(c, "duchain").ok
    assert not validate(c, "mixed").ok


def test_shape_mismatch():
    with pytest.raises(ValueError):
        DuchainComplex(QQ, [1, 2], {1: Matrix.identity(QQ, 2)})


def test_betti_refuses_truncated_degrees():
    c = DuchainComplex(QQ, [1, 1, 1], {})
    assert betti(c) == [1, 1]
    with pytest.raises(ValueError):
        betti(c, 2)
    assert homology_table(c)[-1] == (2, 1, True)
    with pytest.raises(ValueError):
        homology(c, 3)


def test_duchain_mixedify_of_acyclic_pair():
    # X_0 = X_1 = k, b = 1, B = 0: T = 1, quotient by im(1 - T) = 0 leaves everything
    one = Matrix.identity(QQ, 1)
    d = DuchainComplex(QQ, [1, 1, 1], {1: one, 2: Matrix.zeros(QQ, 1, 1)})
    T, m = t_operator_and_mixedify(d)
    assert all(T[n].is_identity() for n in T)
    assert m.dims == [1, 1, 1]


def test_json_roundtrip():
    one = Matrix.identity(QQ, 1)
    c = DuchainComplex(QQ, [1, 1], {1: Matrix.zeros(QQ, 1, 1)}, B={0: one})
    c2 = complex_from_json(complex_to_json(c))
    assert c2.dims == c.dims and c2.b == c.b and c2.B == c.B
