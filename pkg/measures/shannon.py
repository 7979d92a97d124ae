"""Shannon entropy and length of Rakhmanov densities: numeric values, asymptotics and upper bounds."""
from collections import namedtuple

from mpmath import mp
from scipy.optimize import minimize_scalar

from exceptions import InvalidDegree
from helpers.logger import logger
from helpers.precision import PrecisionContext, quad_precision, to_mpf
from measures.closed_form import moment, stddev
from measures.family import HERMITE, JACOBI, LAGUERRE, Family, check_family, interval, log_weight, weight
from measures.orthopoly import evaluator, zeros
from measures.quadrature import integrate_log_singular

NUMERIC = "numeric"
ASYMPTOTIC = "asymptotic"

"""
Types
"""

# est_error is the absolute error of the entropy; None for asymptotic values.
ShannonResult = namedtuple('ShannonResult', 'entropy length method est_error')

# passed is None when the comparison does not apply.
Audit = namedtuple('Audit', 'name passed lhs rhs')

"""
Numeric entropy
"""

def _numeric_log_weight(family: Family, x):
    """Part of ln omega integrated numerically; the rest has a closed-form mean"""
    if family.kind == HERMITE:
        return mp.zero
    if family.kind == LAGUERRE:
        return to_mpf(family.alpha) * mp.log(x) if family.alpha else mp.zero
    return log_weight(family, x)

def _exact_log_weight_mean(family: Family, n: int):
    """<ln omega> minus its numeric part: -<x^2> (Hermite), -<x> (Laguerre), 0 (Jacobi)"""
    if family.kind == HERMITE:
        return -(n + mp.mpf(1) / 2)
    if family.kind == LAGUERRE:
        return -(2 * n + to_mpf(family.alpha) + 1)
    return mp.zero

def shannon_numeric(family: Family, n: int, ctx: PrecisionContext) -> ShannonResult:
    """S = -<ln p_n^2> - <ln omega>, integrated panel by panel between the zeros of p_n

    Args:
        family: polynomial family
        n: degree
        ctx: precision context (quad_* fields)

    Returns:
        ShannonResult with the adaptive error estimate of the entropy
    """
    family = check_family(family)
    if n < 0:
        raise InvalidDegree("Degree must be non-negative (got {}).".format(n))
    lower, upper = interval(family)
    with quad_precision(ctx):
        p = evaluator(family, n)

        def integrand(x):
            if x <= lower or x >= upper:
                return mp.zero
            px = p(x)
            w = weight(family, x)
            if px == 0 or w == 0 or mp.isinf(w):
                return mp.zero
            return px * px * w * (mp.log(px * px) + _numeric_log_weight(family, x))

        split = zeros(family, n) if n >= 1 else []
        integral = integrate_log_singular(integrand, (lower, upper), split, ctx)
        entropy = -integral.value - _exact_log_weight_mean(family, n)
        logger.debug("Shannon entropy of degree {} over {} panels: {}".format(n, len(split) + 1, mp.nstr(entropy, 12)))
        return ShannonResult(entropy, mp.exp(entropy), NUMERIC, integral.error)

"""
Asymptotics
"""

def shannon_asymptotic(family: Family, n: int) -> ShannonResult:
    """Large-n entropy: ln sqrt(2n) + ln pi - 1, (a+1) ln n - a psi(a+n+1) - 1 + ln 2pi, or ln pi - 1"""
    family = check_family(family)
    if family.kind == JACOBI:
        entropy = mp.log(mp.pi) - 1
    else:
        if n < 1:
            raise InvalidDegree("Asymptotic entropy needs n >= 1 (got {}).".format(n))
        if family.kind == HERMITE:
            entropy = mp.log(mp.sqrt(2 * n)) + mp.log(mp.pi) - 1
        else:
            a = to_mpf(family.alpha)
            entropy = (a + 1) * mp.log(n) - a * mp.digamma(a + n + 1) - 1 + mp.log(2 * mp.pi)
    return ShannonResult(entropy, mp.exp(entropy), ASYMPTOTIC, None)

def asymptotic_length_leading(family: Family, n: int):
    """Leading-order Shannon lengths pi sqrt(2n)/e, 2 pi n/e and pi/e"""
    family = check_family(family)
    if family.kind == HERMITE:
        return mp.pi * mp.sqrt(2 * n) / mp.e
    if family.kind == LAGUERRE:
        return 2 * mp.pi * n / mp.e
    return mp.pi / mp.e

def ratio_constant():
    """pi sqrt(2)/e, the common large-n value of N/Delta x"""
    return mp.pi * mp.sqrt(2) / mp.e

def ratio_check(family: Family, n: int, ctx: PrecisionContext):
    length = shannon_numeric(family, n, ctx).length
    with quad_precision(ctx):
        return length / stddev(family, n)

"""
Upper bounds
"""

def shannon_bound_hermite(n: int, k: int):
    """2 (ek)^{1/k} Gamma(1/k) <x^k>^{1/k} / k for even k"""
    if k < 2 or k % 2:
        raise InvalidDegree("Hermite Shannon bound needs an even k >= 2 (got {}).".format(k))
    m = moment(Family(HERMITE, 0, 0), n, k)
    return 2 * mp.power(mp.e * k, mp.mpf(1) / k) / k * mp.gamma(mp.mpf(1) / k) * mp.power(m, mp.mpf(1) / k)

def shannon_bound_laguerre(n: int, alpha, b):
    """Gamma(1/b) (be)^{1/b} <x^b>^{1/b} / b for real b > 0"""
    b = to_mpf(b)
    if not b > 0:
        raise InvalidDegree("Laguerre Shannon bound needs b > 0 (got {}).".format(b))
    m = moment(Family(LAGUERRE, alpha, 0), n, b)
    return mp.gamma(1 / b) * mp.power(b * mp.e, 1 / b) / b * mp.power(m, 1 / b)

def jacobi_trivial_bound():
    """N <= 2 for any density supported on [-1, 1]"""
    return mp.mpf(2)

def optimize_bound(family: Family, n: int, params=None) -> tuple:
    """Tightest Shannon bound and the parameter that gives it

    Args:
        family: polynomial family
        n: degree
        params: Hermite k_max (even grid 2..k_max, default 12); Laguerre (lo, hi) bracket for b
            (default (0.1, 4)); ignored for Jacobi

    Returns:
        (bound, k or b); the parameter is None for the Jacobi bound
    """
    family = check_family(family)
    if family.kind == JACOBI:
        return jacobi_trivial_bound(), None
    if family.kind == HERMITE:
        k_max = params or 12
        candidates = [(shannon_bound_hermite(n, k), k) for k in range(2, k_max + 1, 2)]
        return min(candidates, key=lambda c: c[0])
    lo, hi = params or (0.1, 4.0)
    result = minimize_scalar(lambda b: float(shannon_bound_laguerre(n, family.alpha, b)),
                             bounds=(lo, hi), method="bounded", options={"xatol": 1e-8})
    if not result.success:
        logger.warning("Bound optimisation for degree {} stopped early: {}".format(n, result.message))
    candidates = [(shannon_bound_laguerre(n, family.alpha, b), b) for b in (lo, float(result.x), hi)]
    return min(candidates, key=lambda c: c[0])

"""
Audits
"""

def _dominates(lhs, rhs, est_error) -> bool:
    slack = lhs * (est_error or 0) + mp.mpf(10) ** -12 * abs(rhs)
    return bool(lhs <= rhs + slack)

def shannon_inequality_check(family: Family, n: int, ctx: PrecisionContext, shannon: ShannonResult = None) -> Audit:
    """N <= sqrt(2 pi e) Delta x, with the numeric error as slack"""
    shannon = shannon or shannon_numeric(family, n, ctx)
    with quad_precision(ctx):
        rhs = mp.sqrt(2 * mp.pi * mp.e) * stddev(family, n)
        return Audit("shannon_inequality", _dominates(shannon.length, rhs, shannon.est_error), shannon.length, rhs)

def bound_check(family: Family, n: int, ctx: PrecisionContext, shannon: ShannonResult = None, params=None) -> Audit:
    """Optimised upper bound (or 2 for Jacobi) against the numeric Shannon length"""
    shannon = shannon or shannon_numeric(family, n, ctx)
    with quad_precision(ctx):
        bound, _ = optimize_bound(family, n, params)
        return Audit("bound_dominance", _dominates(shannon.length, bound, shannon.est_error), shannon.length, bound)
