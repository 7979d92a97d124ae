import pytest
from mpmath import mp

from exceptions import InvalidHypergeometric
from helpers.precision import working_precision
from measures.hypergeometric import (lauricella_fa_sum, lauricella_fa_terminating, terminating_2f0,
                                     terminating_2f1)

def test_2f1_small_case():
    assert float(terminating_2f1(-2, 1, 2, 2)) == pytest.approx(1 / 3)
    assert terminating_2f1(0, 5, 7, 3) == 1

def test_2f1_chu_vandermonde():
    # 2F1(-3, b; c; 1) = (c-b)_3 / (c)_3
    assert float(terminating_2f1(-3, 1.5, 4, 1)) == pytest.approx(2.5 * 3.5 * 4.5 / (4 * 5 * 6))

@pytest.mark.parametrize("a, c", [(0.5, 2), (1, 2), (-3, -1)])
def test_2f1_rejects(a, c):
    with pytest.raises(InvalidHypergeometric):
        terminating_2f1(a, 1, c, 0.5)

def test_2f1_allows_negative_c_beyond_termination():
    assert float(terminating_2f1(-1, 2, -3, 1)) == pytest.approx(1 + 2 / 3)

def test_2f0():
    assert float(terminating_2f0(-4, 1, 0.5)) == pytest.approx(0.5)
    assert float(terminating_2f0(-1, 3, 2)) == pytest.approx(-5)

def test_fa_reduces_to_2f1():
    assert float(lauricella_fa_sum(1.5, [-3], [2.5], [0.7])) == pytest.approx(float(terminating_2f1(-3, 1.5, 2.5, 0.7)))
    assert float(lauricella_fa_sum(1.5, [-3, -2], [2.5, 4], [0.7, 0])) == pytest.approx(
        float(terminating_2f1(-3, 1.5, 2.5, 0.7)))

def test_fa_two_variables():
    a, b1, b2, c1, c2, z1, z2 = 0.75, -2, -1, 1.5, 3, 0.4, -1.2
    expected = mp.fsum(mp.rf(a, m1 + m2) * mp.rf(b1, m1) * mp.rf(b2, m2)
                       / (mp.rf(c1, m1) * mp.rf(c2, m2) * mp.factorial(m1) * mp.factorial(m2))
                       * mp.power(z1, m1) * mp.power(z2, m2)
                       for m1 in range(3) for m2 in range(2))
    assert float(lauricella_fa_sum(a, [b1, b2], [c1, c2], [z1, z2])) == pytest.approx(float(expected))

def test_fa_escalated(ctx):
    value = lauricella_fa_terminating(2, [-3, -3, -3], [1.5, 1.5, 1.5], [0.5, 0.5, 0.5], ctx)
    with working_precision(ctx):
        direct = lauricella_fa_sum(2, [-3, -3, -3], [1.5, 1.5, 1.5], [0.5, 0.5, 0.5])
        assert abs(value - direct) <= 1e-30 * abs(direct)

def test_fa_shape_mismatch():
    with pytest.raises(InvalidHypergeometric):
        lauricella_fa_sum(1, [-1, -2], [1], [0.5, 0.5])
