import pytest
from mpmath import mp

from exceptions import InvalidDegree, NonIntegrable
from helpers.precision import working_precision
from measures.family import HERMITE, JACOBI, LAGUERRE, Weight, family_weight, hermite, jacobi, laguerre
from measures.order import make_order
from measures.quadrature import (apply_rule, density_moment, gauss_rule, integrate_density_power,
                                 integrate_log_singular, merge_split_points, panel_moment, weight_moment)
from measures.renyi_bell import density_power_bell

def close(a, b, rel):
    return abs(a - b) <= rel * max(abs(b), 1)

def test_gauss_rule_shape(ctx):
    rule = gauss_rule(family_weight(hermite()), 3, ctx)
    assert rule.exact_degree == 5
    assert list(rule.nodes) == sorted(rule.nodes)
    with working_precision(ctx):
        assert close(mp.fsum(rule.weights), mp.sqrt(mp.pi), 1e-30)
        assert abs(mp.fsum(rule.nodes)) < 1e-30

def test_gauss_rule_needs_a_node(ctx):
    with pytest.raises(InvalidDegree):
        gauss_rule(family_weight(hermite()), 0, ctx)

def test_gauss_rule_rejects_divergent_weight(ctx):
    with pytest.raises(NonIntegrable):
        gauss_rule(Weight(LAGUERRE, -1.5, 0, 1), 3, ctx)

@pytest.mark.parametrize("w", [
    Weight(HERMITE, 0, 0, 2),
    Weight(LAGUERRE, 0.5, 0, 2),
    Weight(LAGUERRE, -0.75, 0, 1.5),
    Weight(JACOBI, 1, 4, 1),
    Weight(JACOBI, -0.5, 0.25, 1),
])
def test_rule_exactness(ctx, w):
    rule = gauss_rule(w, 5, ctx)
    with working_precision(ctx):
        for j in range(rule.exact_degree + 1):
            assert close(apply_rule(rule, lambda x: x ** j), weight_moment(w, j), 1e-25)

def test_weight_moments(ctx):
    with working_precision(ctx):
        assert close(weight_moment(Weight(LAGUERRE, 0.5, 0, 2), 3), mp.gamma(4.5) / mp.power(2, 4.5), 1e-30)
        assert close(weight_moment(Weight(JACOBI, 0, 0, 1), 2), mp.mpf(2) / 3, 1e-30)
        assert weight_moment(Weight(HERMITE, 0, 0, 1), 3) == 0

def test_panel_moments_add_up(ctx):
    with working_precision(ctx):
        w = Weight(LAGUERRE, 0.5, 0, 1.5)
        total = panel_moment(w, 3, 0, 1) + panel_moment(w, 3, 1, mp.inf)
        assert close(total, weight_moment(w, 3), 1e-30)
        g = Weight(HERMITE, 0, 0, 1)
        assert close(panel_moment(g, 2, mp.ninf, mp.inf), mp.sqrt(mp.pi) / 2, 1e-30)
        assert close(panel_moment(g, 3, -1, 0) + panel_moment(g, 3, 0, 1), 0, 1e-30)
        v = Weight(JACOBI, 0.5, 2, 1)
        split = panel_moment(v, 3, -1, 0.2) + panel_moment(v, 3, 0.2, 1)
        assert close(split, weight_moment(v, 3), 1e-30)

def test_density_moments(ctx):
    with working_precision(ctx):
        assert close(density_moment(laguerre(0), 1, 1, ctx), 3, 1e-30)
        assert close(density_moment(hermite(), 4, 2, ctx), mp.mpf(9) / 2, 1e-30)
        assert close(density_moment(jacobi(1, 1), 3, 0, ctx), 1, 1e-30)

def test_power_integrals(ctx):
    with working_precision(ctx):
        assert close(integrate_density_power(hermite(), 0, make_order(4), ctx), 1 / mp.sqrt(2 * mp.pi), 1e-30)
        assert close(integrate_density_power(laguerre(0), 0, make_order(4), ctx), mp.mpf(1) / 2, 1e-30)
        for family in (hermite(), laguerre(2), jacobi(0.5, 2)):
            assert close(integrate_density_power(family, 5, make_order(2), ctx), 1, 1e-25)

def test_absolute_power_of_odd_order(ctx):
    # |p_1|^3 for Legendre: (3/2)^(3/2) * integral |x|^3 = (3/2)^(3/2) / 2
    with working_precision(ctx):
        value = integrate_density_power(jacobi(0, 0), 1, make_order(3), ctx)
        assert close(value, mp.power(mp.mpf(3) / 2, mp.mpf(3) / 2) / 2, 1e-12)
        assert abs(integrate_density_power(jacobi(0, 0), 1, make_order(3), ctx, signed=True)) < 1e-30

def test_absolute_power_with_singular_endpoints(ctx):
    # Chebyshev p_1 = sqrt(2/pi) x against (1-x^2)^(-3/4): (2/pi)^(3/2) * B(2, 1/4) = (2/pi)^(3/2) * 16/5
    with working_precision(ctx):
        value = integrate_density_power(jacobi(-0.5, -0.5), 1, make_order(3), ctx)
        assert close(value, mp.power(2 / mp.pi, mp.mpf(3) / 2) * 16 / 5, 1e-15)

@pytest.mark.parametrize("family, n", [(laguerre(-0.5), 1), (laguerre(-0.5), 4), (jacobi(-0.5, 0.5), 4),
                                       (jacobi(-0.5, 0.5), 8), (jacobi(0.5, -0.5), 3)])
def test_absolute_power_matches_panel_moments(ctx, family, n):
    q = make_order(3)
    bell = density_power_bell(family, n, q, ctx)
    with working_precision(ctx):
        assert close(integrate_density_power(family, n, q, ctx), bell, 1e-12)

def test_merge_split_points():
    merged = merge_split_points([0.5, 0.5 + 1e-14, -2, 0.1, 1], -1, 1)
    assert [float(x) for x in merged] == pytest.approx([0.1, 0.5])

def test_log_singular_integral(ctx):
    result = integrate_log_singular(lambda x: mp.log(abs(x)) if x else mp.zero, (-1, 1), [0], ctx)
    assert float(result.value) == pytest.approx(-2, abs=1e-12)
    assert result.error > 0
