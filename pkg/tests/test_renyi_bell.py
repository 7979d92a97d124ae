import pytest
from mpmath import mp

from exceptions import InvalidOrder, NonIntegrable
from helpers.precision import working_precision
from measures.family import hermite, jacobi, laguerre
from measures.order import make_order
from measures.orthopoly import orthonormal_coeffs
from measures.quadrature import integrate_density_power
from measures.renyi_bell import (BellTable, bell_polynomial, bell_polynomial_partitions, density_power_bell,
                                 onicescu_display_jacobi, onicescu_fixtures_laguerre, power_coeffs,
                                 renyi_kernel, renyi_length_bell)

def rel(a, b):
    return abs(a - b) / abs(b)

def test_bell_small_values():
    args = [2, 3, 5]
    assert bell_polynomial(3, 1, args) == 5
    assert bell_polynomial(3, 2, args) == 18
    assert bell_polynomial(3, 3, args) == 8
    assert bell_polynomial(0, 0, args) == 1
    assert bell_polynomial(2, 3, args) == 0

def test_bell_table_pads_with_zeros():
    table = BellTable([1])
    assert table.argument(2) == 0
    assert table.value(4, 4) == 1
    assert table.value(4, 2) == 0

def test_bell_recurrence_matches_partitions():
    args = [mp.mpf(i + 2) / (i + 1) for i in range(8)]
    for m in range(1, 9):
        for l in range(1, m + 1):
            a, b = bell_polynomial(m, l, args), bell_polynomial_partitions(m, l, args)
            assert abs(a - b) <= 1e-12 * abs(b)

def test_power_coeffs(ctx):
    with working_precision(ctx):
        p = orthonormal_coeffs(hermite(), 1, ctx)
        squared = power_coeffs(p, 2, ctx)
        assert len(squared) == 3
        assert abs(squared[2] - 2 / mp.sqrt(mp.pi)) < 1e-30
        assert squared[0] == 0 and squared[1] == 0

def test_renyi_kernel(ctx):
    with working_precision(ctx):
        assert abs(renyi_kernel(hermite(), 2, 2) - mp.gamma(1.5) / mp.power(2, 1.5)) < 1e-30
        assert abs(renyi_kernel(laguerre(1), 2, 0) - mp.gamma(3) / 8) < 1e-30

@pytest.mark.parametrize("n, factor", [(0, 1), (1, mp.mpf(4) / 3), (2, mp.mpf(64) / 41)])
def test_hermite_onicescu(ctx, n, factor):
    value = renyi_length_bell(hermite(), n, make_order(4), ctx)
    with working_precision(ctx):
        assert rel(value, factor * mp.sqrt(2 * mp.pi)) < 1e-12

def test_laguerre_onicescu_degree_one(ctx):
    assert float(renyi_length_bell(laguerre(0), 1, make_order(4), ctx)) == pytest.approx(4, rel=1e-12)

def test_legendre_onicescu(ctx):
    assert float(renyi_length_bell(jacobi(0, 0), 0, make_order(4), ctx)) == pytest.approx(2, rel=1e-12)
    assert float(renyi_length_bell(jacobi(0, 0), 1, make_order(4), ctx)) == pytest.approx(10 / 9, rel=1e-12)

@pytest.mark.parametrize("family", [hermite(), laguerre(0), laguerre(2), jacobi(0, 0), jacobi(0.5, 2)])
@pytest.mark.parametrize("two_q", [3, 4, 6])
def test_bell_matches_oracle(ctx, family, two_q):
    q = make_order(two_q)
    for n in (0, 2, 5):
        bell = density_power_bell(family, n, q, ctx)
        oracle = integrate_density_power(family, n, q, ctx)
        with working_precision(ctx):
            assert rel(bell, oracle) < 1e-10

def test_signed_power(ctx):
    for family in (laguerre(0.5), jacobi(1, 2)):
        bell = density_power_bell(family, 3, make_order(3), ctx, signed=True)
        oracle = integrate_density_power(family, 3, make_order(3), ctx, signed=True)
        with working_precision(ctx):
            assert abs(bell - oracle) <= 1e-20 * (1 + abs(oracle))

def test_normalisation(ctx):
    for family in (hermite(), laguerre(-0.5), jacobi(-0.5, 2)):
        assert float(density_power_bell(family, 4, make_order(2), ctx)) == pytest.approx(1, abs=1e-20)

def test_length_rejects_shannon_order(ctx):
    with pytest.raises(InvalidOrder):
        renyi_length_bell(hermite(), 2, make_order(2), ctx)

def test_divergent_power(ctx):
    with pytest.raises(NonIntegrable):
        density_power_bell(laguerre(-0.5), 1, make_order(4), ctx)

def test_onicescu_fixtures(ctx):
    with working_precision(ctx):
        n0, n1 = onicescu_fixtures_laguerre(0)
        assert n0.corrected == 2 and float(n0.display) == pytest.approx(2 ** 0.5)
        assert float(n1.corrected) == pytest.approx(4) and float(n1.display) == pytest.approx(2)
        for fixture in onicescu_fixtures_laguerre(2.5):
            oracle = renyi_length_bell(fixture.family, fixture.n, make_order(4), ctx)
            assert rel(fixture.corrected, oracle) < 1e-12
            assert rel(fixture.display, oracle) > 1e-3

@pytest.mark.parametrize("alpha, beta", [(0, 0), (0.5, 2), (2, 2)])
@pytest.mark.parametrize("n", [0, 1])
def test_jacobi_onicescu_displays(ctx, alpha, beta, n):
    oracle = renyi_length_bell(jacobi(alpha, beta), n, make_order(4), ctx)
    with working_precision(ctx):
        assert rel(onicescu_display_jacobi(alpha, beta, n), oracle) < 1e-12
