from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from duplicial.linalg import (GF, QQ, FieldMismatch, Matrix, NotInvertible, Quotient, field_from_json,
                              invert, is_invertible, kron, rank, rank_and_kernel, tensor_and_dsum)


def mats(field, rows, cols, lo=-3, hi=3):
    entry = st.integers(lo, hi)
    return st.lists(st.lists(entry, min_size=cols, max_size=cols), min_size=rows, max_size=rows).map(
        lambda g: Matrix.from_dense(field, g, cols))


def square(field, n=3):
    return mats(field, n, n)


def test_rationals_normalize():
    assert QQ.parse("2/4") == Fraction(1, 2)
    assert QQ.parse("6/3") == 2 and isinstance(QQ.parse("6/3"), int)
    assert QQ.fmt(Fraction(-3, 6)) == "-1/2"
    assert QQ.inv(Fraction(2, 3)) == Fraction(3, 2)


def test_prime_field():
    F = GF(5)
    assert F.inv(2) == 3
    assert F.parse("1/2") == 3
    assert F.parse(-1) == 4
    with pytest.raises(ValueError):
        GF(6)
    with pytest.raises(ZeroDivisionError):
        F.inv(10)


def test_field_json():
    assert field_from_json("Q") == QQ
    assert field_from_json({"Fp": 7}) == GF(7)
    with pytest.raises(ValueError):
        field_from_json("R")


def test_rank_and_kernel_example():
    m = Matrix.from_dense(QQ, [[1, 2], [2, 4]])
    r, ker = rank_and_kernel(m)
    assert r == 1 and ker == [(-2, 1)]


def test_invert_example():
    m = Matrix.from_dense(QQ, [[1, 1], [0, 1]])
    assert invert(m).to_dense() == [[1, -1], [0, 1]]
    with pytest.raises(NotInvertible):
        invert(Matrix.from_dense(QQ, [[1, 2], [2, 4]]))


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        Matrix.identity(QQ, 2) @ Matrix.identity(GF(3), 2)


def test_rank_depends_on_field():
    g = [[1, 1], [1, -1]]
    assert rank(Matrix.from_dense(QQ, g)) == 2
    assert rank(Matrix.from_dense(GF(2), g)) == 1


def test_kron_and_dsum_shapes():
    a, b = Matrix.identity(QQ, 2), Matrix.from_dense(QQ, [[1, 2, 3]])
    assert tensor_and_dsum(a, b, "kronecker").shape == (2, 6)
    assert tensor_and_dsum(a, b, "direct_sum").shape == (3, 5)
    with pytest.raises(ValueError):
        tensor_and_dsum(a, b, "other")


def test_quotient_projection():
    q = Quotient(QQ, 3, [{0: 1, 1: -1}])
    assert q.dim == 2
    assert q.contains({0: 2, 1: -2})
    assert (q.proj @ q.incl).is_identity()


@given(square(QQ))
def test_rank_nullity(m):
    r, ker = rank_and_kernel(m)
    assert r + len(ker) == m.ncols
    for v in ker:
        assert not m.apply({j: x for j, x in enumerate(v) if x})


@given(square(QQ))
def test_inverse_roundtrip(m):
    if is_invertible(m):
        assert (invert(m) @ m).is_identity() and (m @ invert(m)).is_identity()
    else:
        assert rank(m) < m.nrows


@settings(max_examples=50)
@given(square(GF(5)), square(GF(5)))
def test_rank_of_product_mod_p(a, b):
    assert rank(a @ b) <= min(rank(a), rank(b))


@settings(max_examples=30)
@given(mats(QQ, 2, 2), mats(QQ, 2, 2), mats(QQ, 2, 2), mats(QQ, 2, 2))
def test_kron_mixed_product(a, b, c, d):
    assert kron(a, b) @ kron(c, d) == kron(a @ c, b @ d)


@given(mats(QQ, 2, 3))
def test_json_roundtrip(m):
    assert Matrix.from_dense(QQ, m.to_json(), m.ncols) == m
