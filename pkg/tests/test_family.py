import pytest
from mpmath import mp

from exceptions import InvalidFamily, InvalidOrder, NonIntegrable
from measures.family import (HERMITE, JACOBI, LAGUERRE, Family, Weight, describe, family_weight, hermite, interval,
                             jacobi, laguerre, log_weight_derivative, make_family, reflect, weight)
from measures.order import (RenyiOrder, check_integrable, is_integrable, make_order, parse_order,
                            require_length_order)

def test_make_family_normalises_kind():
    assert make_family("HERMITE", 3, 4) == Family(HERMITE, 0, 0)
    assert make_family("laguerre", 0.5) == Family(LAGUERRE, 0.5, 0)
    assert jacobi(2, -0.5) == Family(JACOBI, 2, -0.5)

@pytest.mark.parametrize("kind, alpha, beta", [
    ("chebyshev", 0, 0),
    ("laguerre", -1, 0),
    ("jacobi", 0, -1.5),
    ("jacobi", -2, 0),
])
def test_make_family_rejects(kind, alpha, beta):
    with pytest.raises(InvalidFamily):
        make_family(kind, alpha, beta)

def test_reflect_swaps_jacobi_parameters():
    assert reflect(jacobi(0.5, 2)) == Family(JACOBI, 2, 0.5)
    assert reflect(laguerre(3)) == laguerre(3)

def test_interval_and_describe():
    assert interval(laguerre()) == (0, mp.inf)
    assert interval(jacobi()) == (-1, 1)
    assert describe(jacobi(1, 2)) == "jacobi(alpha=1, beta=2)"

def test_family_weight_shifts_parameters():
    assert family_weight(hermite(), 2) == Weight(HERMITE, 0, 0, 2)
    assert family_weight(laguerre(0.5), 3) == Weight(LAGUERRE, 1.5, 0, 3)
    assert family_weight(jacobi(1, 2), 2) == Weight(JACOBI, 2, 4, 1)

def test_weight_values():
    assert weight(laguerre(0), -1) == 0
    assert float(weight(laguerre(2), 1)) == pytest.approx(float(mp.exp(-1)))
    assert mp.isinf(weight(jacobi(-0.5, 0), 1))
    assert float(weight(jacobi(1, 1), 0.5)) == pytest.approx(0.75)
    assert log_weight_derivative(hermite(), 1.5) == -3

def test_parse_order():
    assert parse_order("3/2") == RenyiOrder(3)
    assert parse_order("1.5") == RenyiOrder(3)
    assert parse_order("0.5").two_q == 1
    assert parse_order("2").q == 2

@pytest.mark.parametrize("text", ["1/3", "abc", "0", "-1", "1/0"])
def test_parse_order_rejects(text):
    with pytest.raises(InvalidOrder):
        parse_order(text)

def test_order_labels():
    assert make_order(4).label() == "2"
    assert make_order(3).label() == "1_5"
    assert make_order(1).label() == "0_5"
    assert str(make_order(3)) == "3/2"
    assert make_order(3).is_half_integer
    assert not make_order(6).is_half_integer

def test_length_needs_q_other_than_one():
    with pytest.raises(InvalidOrder):
        require_length_order(make_order(2))
    assert require_length_order(make_order(4)) == RenyiOrder(4)

def test_integrability():
    assert not is_integrable(laguerre(-0.5), make_order(4))
    assert is_integrable(laguerre(-0.5), make_order(3))
    assert is_integrable(hermite(), make_order(12))
    with pytest.raises(NonIntegrable):
        check_integrable(jacobi(0, -0.6), make_order(4))
