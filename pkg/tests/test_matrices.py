import pytest

from quiddity import ID, K, S, T, T_INV, Mat2, parse_matrix, unimodular


def test_constants():
    assert ID == Mat2(1, 0, 0, 1)
    assert S == Mat2(0, -1, 1, 0)
    assert T == Mat2(1, 1, 0, 1)
    assert K == Mat2(0, 1, 1, 0)
    assert all(m.det() == 1 for m in (ID, S, T, T_INV))
    assert K.det() == -1


def test_products_and_powers():
    assert S * S == -ID
    assert S**4 == ID
    assert (S * T) ** 3 == -ID
    assert T * T_INV == ID
    assert T**5 == Mat2(1, 5, 0, 1)
    assert T**-3 == Mat2(1, -3, 0, 1)


def test_inverse():
    m = Mat2(2, 1, 1, 1)
    assert m * m.inv() == ID
    assert K.inv() == K
    with pytest.raises(ValueError):
        Mat2(2, 0, 0, 2).inv()


def test_text_round_trip():
    m = Mat2(2, 1, 1, 1)
    assert m.text() == "2,1;1,1"
    assert parse_matrix("2,1;1,1") == m
    assert parse_matrix("0,-1;1,0") == S


@pytest.mark.parametrize("bad", ["1,2", "1,2;3", "1,2;3,4;5,6", "a,b;c,d", "1,0;0,2"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_matrix(bad)


def test_unimodular_guard():
    assert unimodular(1, 1, 0, 1) == T
    with pytest.raises(ValueError):
        unimodular(1, 0, 0, -1)
