import pytest
from mpmath import mp

from exceptions import InvalidDegree
from helpers.precision import quad_precision
from measures.closed_form import stddev
from measures.family import hermite, jacobi, laguerre, reflect
from measures.shannon import (asymptotic_length_leading, bound_check, jacobi_trivial_bound, optimize_bound,
                              ratio_check, ratio_constant, shannon_asymptotic, shannon_bound_hermite,
                              shannon_bound_laguerre, shannon_inequality_check, shannon_numeric)

@pytest.mark.parametrize("family, entropy", [
    (hermite(), 0.5 * float(mp.log(mp.pi)) + 0.5),
    (laguerre(0), 1.0),
    (jacobi(0, 0), float(mp.log(2))),
])
def test_ground_state_entropy(ctx, family, entropy):
    result = shannon_numeric(family, 0, ctx)
    assert float(result.entropy) == pytest.approx(entropy, abs=1e-7)
    assert float(result.length) == pytest.approx(float(mp.exp(entropy)), rel=1e-7)
    assert result.est_error >= 0

def test_laguerre_ground_state_with_parameter(ctx):
    # S = ln Gamma(a+1) - a psi(a+1) + a + 1 for x^a e^-x / Gamma(a+1)
    a = 2
    expected = mp.loggamma(a + 1) - a * mp.digamma(a + 1) + a + 1
    assert float(shannon_numeric(laguerre(a), 0, ctx).entropy) == pytest.approx(float(expected), abs=1e-7)

def test_reflection_invariance(ctx):
    a = shannon_numeric(jacobi(0.5, 2), 4, ctx)
    b = shannon_numeric(reflect(jacobi(0.5, 2)), 4, ctx)
    assert float(a.entropy) == pytest.approx(float(b.entropy), abs=1e-9)

def test_negative_degree(ctx):
    with pytest.raises(InvalidDegree):
        shannon_numeric(hermite(), -1, ctx)

def test_asymptotic_values():
    assert float(shannon_asymptotic(jacobi(1, 1), 5).entropy) == pytest.approx(float(mp.log(mp.pi) - 1))
    hermite_value = shannon_asymptotic(hermite(), 8)
    assert float(hermite_value.entropy) == pytest.approx(float(mp.log(4) + mp.log(mp.pi) - 1))
    assert hermite_value.est_error is None
    with pytest.raises(InvalidDegree):
        shannon_asymptotic(hermite(), 0)

def test_leading_lengths():
    assert float(asymptotic_length_leading(hermite(), 8)) == pytest.approx(float(4 * mp.pi / mp.e))
    assert float(asymptotic_length_leading(laguerre(3), 10)) == pytest.approx(float(20 * mp.pi / mp.e))
    assert float(asymptotic_length_leading(jacobi(1, 2), 10)) == pytest.approx(float(mp.pi / mp.e))

def test_ratio_constant():
    assert float(ratio_constant()) == pytest.approx(1.634446, abs=1e-6)
    assert abs(float(ratio_constant()) - 1.6389) < 0.005

def test_hermite_bounds():
    assert float(shannon_bound_hermite(0, 2)) == pytest.approx(float(mp.sqrt(mp.pi * mp.e)))
    with pytest.raises(InvalidDegree):
        shannon_bound_hermite(0, 3)
    bound, k = optimize_bound(hermite(), 0, 2)
    assert k == 2
    assert float(bound) == pytest.approx(float(mp.sqrt(mp.pi * mp.e)), rel=1e-9)

def test_laguerre_bound_saturates():
    bound, b = optimize_bound(laguerre(0), 0, (0.5, 2.0))
    assert float(bound) == pytest.approx(float(mp.e), rel=1e-9)
    assert b == pytest.approx(1, abs=1e-3)
    with pytest.raises(InvalidDegree):
        shannon_bound_laguerre(0, 0, 0)

def test_jacobi_bound():
    assert optimize_bound(jacobi(0, 0), 3) == (jacobi_trivial_bound(), None)

@pytest.mark.parametrize("family", [hermite(), laguerre(0), laguerre(5), jacobi(0, 0), jacobi(2, 2)])
@pytest.mark.parametrize("n", [1, 4])
def test_audits_hold(ctx, family, n):
    result = shannon_numeric(family, n, ctx)
    assert shannon_inequality_check(family, n, ctx, result).passed
    assert bound_check(family, n, ctx, result).passed

def test_ratio_check(ctx):
    value = ratio_check(hermite(), 2, ctx)
    with quad_precision(ctx):
        expected = shannon_numeric(hermite(), 2, ctx).length / stddev(hermite(), 2)
    assert float(value) == pytest.approx(float(expected))

@pytest.mark.slow
@pytest.mark.parametrize("family", [hermite(), laguerre(5)])
def test_ratio_approaches_constant(ctx, family):
    # the approach is slow: about 1.92 (Hermite) and 1.87 (Laguerre(5)) at n = 100
    near, far = ratio_check(family, 10, ctx), ratio_check(family, 100, ctx)
    assert ratio_constant() < far < near
    assert abs(float(far) - 1.6389) < abs(float(near) - 1.6389)

@pytest.mark.slow
def test_jacobi_length_limit(ctx):
    length = shannon_numeric(jacobi(2, 2), 80, ctx).length
    limit = mp.pi / mp.e
    assert abs(length - limit) <= 0.05 * limit

@pytest.mark.slow
@pytest.mark.parametrize("family", [hermite(), laguerre(0), laguerre(5), jacobi(0, 0)])
def test_bounds_dominate_up_to_twenty(ctx, family):
    for n in range(0, 21, 5):
        assert bound_check(family, n, ctx).passed
