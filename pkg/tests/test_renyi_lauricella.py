import pytest
from mpmath import mp

from exceptions import InvalidOrder, NonIntegrable
from helpers.precision import working_precision
from measures.family import laguerre
from measures.order import make_order
from measures.renyi_bell import density_power_bell, renyi_length_bell
from measures.renyi_lauricella import (laguerre_linearization, laguerre_power_integral_lauricella,
                                       linearization_sum, renyi_length_laguerre_lauricella,
                                       renyi_length_laguerre_n0, renyi_length_laguerre_n1, theta_coefficient)

def rel(a, b):
    return abs(a - b) / abs(b)

def test_degree_one_onicescu(ctx):
    assert float(renyi_length_laguerre_lauricella(1, 0, make_order(4), ctx)) == pytest.approx(4, rel=1e-12)

def test_theta_zero_small_case(ctx):
    theta = theta_coefficient(1, make_order(4), 0, 0, ctx)
    assert float(theta.value) == pytest.approx(0.5)
    assert theta.k == 0

def test_linearization_terminates(ctx):
    # (qt)^{aq} L_1(t)^4 with a = 0, q = 2 is a quartic in s = 2t
    thetas = laguerre_linearization(1, make_order(4), 0, 4, ctx)
    with working_precision(ctx):
        s = mp.mpf("0.7")
        assert abs(linearization_sum(thetas, s) - (1 - s / 2) ** 4) < 1e-25

def test_linearization_with_integer_shift(ctx):
    q = make_order(4)
    thetas = laguerre_linearization(2, q, 1, 10, ctx)
    with working_precision(ctx):
        s = mp.mpf("1.3")
        t = s / 2
        lag = mp.laguerre(2, 1, t)
        assert abs(linearization_sum(thetas, s) - s ** 2 * lag ** 4) < 1e-20

@pytest.mark.parametrize("alpha", [0, 0.5, 2, 5])
@pytest.mark.parametrize("two_q", [4, 6])
def test_lauricella_matches_bell(ctx, alpha, two_q):
    q = make_order(two_q)
    for n in range(0, 5):
        lauricella = renyi_length_laguerre_lauricella(n, alpha, q, ctx)
        bell = renyi_length_bell(laguerre(alpha), n, q, ctx)
        with working_precision(ctx):
            assert rel(lauricella, bell) < 1e-10

@pytest.mark.parametrize("alpha", [0, 0.5, 2])
def test_signed_power_of_odd_order(ctx, alpha):
    q = make_order(3)
    for n in (1, 2, 3):
        lauricella = laguerre_power_integral_lauricella(n, alpha, q, ctx)
        bell = density_power_bell(laguerre(alpha), n, q, ctx, signed=True)
        with working_precision(ctx):
            assert abs(lauricella - bell) <= 1e-10 * abs(bell)

def test_odd_order_length_needs_degree_zero(ctx):
    with pytest.raises(InvalidOrder):
        renyi_length_laguerre_lauricella(1, 0, make_order(3), ctx)
    value = renyi_length_laguerre_lauricella(0, 0.5, make_order(3), ctx)
    with working_precision(ctx):
        assert rel(value, renyi_length_laguerre_n0(0.5, make_order(3))) < 1e-20

@pytest.mark.parametrize("alpha", [0, 0.5, 2, 5])
def test_closed_forms(ctx, alpha):
    for two_q in (4, 6):
        q = make_order(two_q)
        n0 = renyi_length_laguerre_lauricella(0, alpha, q, ctx)
        n1 = renyi_length_laguerre_lauricella(1, alpha, q, ctx)
        with working_precision(ctx):
            assert rel(renyi_length_laguerre_n0(alpha, q), n0) < 1e-20
            assert rel(renyi_length_laguerre_n1(alpha, q), n1) < 1e-20

def test_divergent(ctx):
    with pytest.raises(NonIntegrable):
        renyi_length_laguerre_lauricella(2, -0.5, make_order(4), ctx)
