"""Gauss rules for classical and power-shifted weights, plus adaptive panel integration.

Polynomial-power integrands are integrated with Golub-Welsch rules whose
exactness degree covers the integrand; adaptive tanh-sinh integration is kept
for logarithmic integrands and for |p_n|^{2q} with 2q odd.
"""
from collections import namedtuple

import mpmath
from mpmath import mp

from exceptions import IntegrationError, InvalidDegree
from helpers.logger import logger
from helpers.precision import PrecisionContext, quad_precision, to_mpf, working_precision
from measures.family import HERMITE, LAGUERRE, Family, Weight, check_family, family_weight, interval
from measures.hypergeometric import terminating_2f1
from measures.order import RenyiOrder, check_integrable
from measures.orthopoly import check_weight, evaluator, golub_welsch, zeros

SPLIT_MERGE_DISTANCE = 1e-12

"""
Types
"""

QuadratureRule = namedtuple('QuadratureRule', 'weight_family nodes weights exact_degree')

Integral = namedtuple('Integral', 'value error')

"""
Gauss rules
"""

def gauss_rule(w: Weight, m: int, ctx: PrecisionContext) -> QuadratureRule:
    """m-point Gauss rule of a weight, exact for polynomials of degree 2m-1

    Args:
        w: weight (shifted parameters allowed, they must stay admissible)
        m: number of nodes
        ctx: precision context (rule is built at ctx.bits)

    Returns:
        QuadratureRule with ascending nodes
    """
    if m < 1:
        raise InvalidDegree("A Gauss rule needs at least one node (got {}).".format(m))
    check_weight(w)
    with working_precision(ctx):
        nodes, weights = golub_welsch(w, m)
    return QuadratureRule(w, tuple(nodes), tuple(weights), 2 * m - 1)

def apply_rule(rule: QuadratureRule, f):
    return mp.fsum(wi * f(xi) for xi, wi in zip(rule.nodes, rule.weights))

def weight_moment(w: Weight, j: int):
    """Closed-form integral of x^j against a weight, at the active precision"""
    check_weight(w)
    if w.kind == HERMITE:
        if j % 2:
            return mp.zero
        c = to_mpf(w.scale)
        return mp.gamma(mp.mpf(j + 1) / 2) / mp.power(c, mp.mpf(j + 1) / 2)
    a = to_mpf(w.alpha)
    if w.kind == LAGUERRE:
        r = to_mpf(w.scale)
        return mp.gamma(a + j + 1) / mp.power(r, a + j + 1)
    b = to_mpf(w.beta)
    return ((-1) ** j * mp.power(2, 1 + a + b) * mp.gamma(a + 1) * mp.gamma(b + 1) / mp.gamma(a + b + 2)
            * terminating_2f1(-j, 1 + b, 2 + a + b, 2))

def _gaussian_half_moment(j: int, c, x):
    """Integral of t^j e^{-c t^2} from 0 to x (x may be negative or infinite)"""
    s = mp.mpf(j + 1) / 2
    if x >= 0:
        return mp.gammainc(s, 0, c * x * x) / (2 * mp.power(c, s))
    return (-1) ** (j + 1) * _gaussian_half_moment(j, c, -x)

def panel_moment(w: Weight, j: int, lower, upper):
    """Integral of x^j against a weight over [lower, upper] (incomplete gamma/beta)"""
    check_weight(w)
    if w.kind == HERMITE:
        c = to_mpf(w.scale)
        return _gaussian_half_moment(j, c, upper) - _gaussian_half_moment(j, c, lower)
    a = to_mpf(w.alpha)
    if w.kind == LAGUERRE:
        r = to_mpf(w.scale)
        return mp.gammainc(a + j + 1, r * lower, r * upper) / mp.power(r, a + j + 1)
    # x = 2u - 1 maps [-1, 1] onto [0, 1]
    b = to_mpf(w.beta)
    u_lo, u_hi = (mp.mpf(lower) + 1) / 2, (mp.mpf(upper) + 1) / 2
    terms = [mp.binomial(j, i) * mp.power(2, i) * (-1) ** (j - i)
             * mp.betainc(i + b + 1, a + 1, u_lo, u_hi) for i in range(j + 1)]
    return mp.power(2, 1 + a + b) * mp.fsum(terms)

"""
Oracles
"""

def density_moment(family: Family, n: int, k: int, ctx: PrecisionContext):
    """<x^k> of rho_n from a Gauss rule exact to degree 2n+k"""
    family = check_family(family)
    rule = gauss_rule(family_weight(family), n + k // 2 + 1, ctx)
    with working_precision(ctx):
        p = evaluator(family, n)
        return apply_rule(rule, lambda x: p(x) ** 2 * x ** k)

def integrate_density_power(family: Family, n: int, q: RenyiOrder, ctx: PrecisionContext, signed: bool = False):
    """W_q = integral of rho_n^q, the oracle for every Renyi route

    omega^q is mapped onto a shifted classical weight and p_n^{2q} integrated with
    a rule of exactness >= 2nq. For odd 2q and n >= 1, rho^q carries |p_n|^{2q};
    that case is integrated adaptively panel by panel between the zeros unless
    signed=True asks for the polynomial integral of p_n^{2q}.

    Returns:
        W_q at ctx.bits
    """
    family = check_family(family)
    check_integrable(family, q)
    w = family_weight(family, q.q)
    if q.is_half_integer and n >= 1 and not signed:
        return _absolute_power_integral(family, n, q, ctx)
    rule = gauss_rule(w, (n * q.two_q) // 2 + 1, ctx)
    with working_precision(ctx):
        p = evaluator(family, n)
        return apply_rule(rule, lambda x: p(x) ** q.two_q)

def _absolute_power_integral(family: Family, n: int, q: RenyiOrder, ctx: PrecisionContext):
    """Adaptive integral of |p_n|^{2q} omega^q, one panel per interval between zeros"""
    with working_precision(ctx):
        p = evaluator(family, n)
        lower, upper = interval(family)
        edges = [lower] + zeros(family, n) + [upper]
        e_lower, e_upper = _endpoint_exponents(family, to_mpf(q.q))
        value, error = mp.zero, mp.zero
        for lo, hi in zip(edges, edges[1:]):
            v, e = _panel_power_integral(family, p, q, lo, hi,
                                         e_lower if lo == lower else None, e_upper if hi == upper else None)
            value += v
            error += e
        tolerance = ctx.quad_tol * abs(value)
        if error > tolerance:
            logger.warning("Power integral oracle error {} above tolerance {}".format(
                mpmath.nstr(error, 3), mpmath.nstr(tolerance, 3)))
            raise IntegrationError("Oracle for |p_n|^{} did not converge (n={}).".format(q.two_q, n))
        return value

def _endpoint_exponents(family: Family, qq) -> tuple:
    """Exponents of omega^q at the finite endpoints (lower, upper); None where there is none"""
    if family.kind == HERMITE:
        return None, None
    if family.kind == LAGUERRE:
        return to_mpf(family.alpha) * qq, None
    return to_mpf(family.beta) * qq, to_mpf(family.alpha) * qq

def _panel_power_integral(family: Family, p, q: RenyiOrder, lo, hi, e_lo, e_hi) -> tuple:
    # a singular endpoint factor (x - lo)^e with -1 < e < 0 is absorbed by x = lo + u^{1/(1+e)}
    qq = to_mpf(q.q)
    if e_lo is not None and e_lo < 0:
        k = 1 / (1 + e_lo)

        def f(u):
            x = lo + u ** k
            return k * abs(p(x)) ** q.two_q * _weight_rest(family, qq, x, "lower")
        return mp.quad(f, [0, (hi - lo) ** (1 + e_lo)], error=True)
    if e_hi is not None and e_hi < 0:
        k = 1 / (1 + e_hi)

        def f(u):
            x = hi - u ** k
            return k * abs(p(x)) ** q.two_q * _weight_rest(family, qq, x, "upper")
        return mp.quad(f, [0, (hi - lo) ** (1 + e_hi)], error=True)
    return mp.quad(lambda x: abs(p(x)) ** q.two_q * _shifted_weight_value(family, q, x), [lo, hi], error=True)

def _weight_rest(family: Family, qq, x, side: str):
    """omega^q without its factor at the given finite endpoint"""
    if family.kind == LAGUERRE:
        return mp.exp(-qq * x)
    if side == "lower":
        return mp.power(1 - x, to_mpf(family.alpha) * qq)
    return mp.power(1 + x, to_mpf(family.beta) * qq)

def _shifted_weight_value(family: Family, q: RenyiOrder, x):
    qq = to_mpf(q.q)
    if family.kind == HERMITE:
        return mp.exp(-qq * x * x)
    a = to_mpf(family.alpha) * qq
    if family.kind == LAGUERRE:
        return mp.power(x, a) * mp.exp(-qq * x)
    b = to_mpf(family.beta) * qq
    return mp.power(1 - x, a) * mp.power(1 + x, b)

"""
Adaptive integration
"""

def merge_split_points(points, lower, upper) -> list:
    """Sorted interior split points with near-duplicates (< 1e-12 apart) merged"""
    merged = []
    for x in sorted(mp.mpf(p) for p in points):
        if x <= lower or x >= upper:
            continue
        if merged and x - merged[-1] < SPLIT_MERGE_DISTANCE:
            continue
        merged.append(x)
    return merged

def integrate_log_singular(f, bounds: tuple, split_points, ctx: PrecisionContext) -> Integral:
    """Tanh-sinh integration panel by panel, for integrands with log singularities at the split points

    Infinite endpoints are handled by mpmath's variable transformation.

    Args:
        f: integrand (mpf -> mpf)
        bounds: (lower, upper), either may be infinite
        split_points: interior points where f is singular
        ctx: precision context (quad_bits, quad_tol, quad_degree)

    Returns:
        Integral(value, error) with error <= quad_tol * (1 + |value|)
    """
    with quad_precision(ctx):
        lower, upper = mp.mpf(bounds[0]), mp.mpf(bounds[1])
        points = [lower] + merge_split_points(split_points, lower, upper) + [upper]
        value, error = mp.quad(f, points, error=True, maxdegree=ctx.quad_degree)
        tolerance = ctx.quad_tol * (1 + abs(value))
        if error > tolerance:
            logger.warning("Adaptive integral over {} panels: error {} above tolerance {}".format(
                len(points) - 1, mpmath.nstr(error, 3), mpmath.nstr(tolerance, 3)))
            raise IntegrationError("Adaptive quadrature error {} exceeds tolerance {}.".format(
                mpmath.nstr(error, 3), mpmath.nstr(tolerance, 3)))
        # numeric results always carry a positive error estimate
        return Integral(value, max(error, mp.eps * (1 + abs(value))))
