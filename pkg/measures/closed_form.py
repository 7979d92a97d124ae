"""Closed-form standard deviations, Fisher information, Cramer-Rao products and moments."""
from collections import namedtuple

from mpmath import mp

from exceptions import InfiniteArithmetic, InvalidDegree, UnsupportedFamily
from helpers.logger import logger
from helpers.precision import PrecisionContext, quad_precision, to_mpf
from measures.family import HERMITE, JACOBI, LAGUERRE, Family, check_family, interval
from measures.family import log_weight_derivative, weight
from measures.hypergeometric import terminating_2f1
from measures.orthopoly import evaluator, zeros
from measures.quadrature import integrate_log_singular

"""
Types
"""

class ExtNonNegReal(namedtuple('ExtNonNegReal', 'value')):
    """Nonnegative real or +inf; only the reciprocal is defined on +inf"""

    __slots__ = ()

    @property
    def is_infinite(self) -> bool:
        return mp.isinf(self.value)

    def reciprocal(self):
        if self.is_infinite:
            return mp.zero
        if self.value == 0:
            return mp.inf
        return 1 / self.value

    def finite(self):
        if self.is_infinite:
            raise InfiniteArithmetic("Fisher information is infinite; only its reciprocal is defined.")
        return self.value

    def __add__(self, other):
        return self.finite() + other

    __radd__ = __add__

    def __sub__(self, other):
        return self.finite() - other

    def __rsub__(self, other):
        return other - self.finite()

    def __mul__(self, other):
        return self.finite() * other

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self.finite() / other

    def __rtruediv__(self, other):
        return other * self.reciprocal()

    def __float__(self) -> float:
        return float(self.value)

    def __str__(self) -> str:
        return "inf" if self.is_infinite else mp.nstr(self.value, 17)

INFINITE = ExtNonNegReal(mp.inf)

# Leading behaviour coefficient * n^exponent; (0, 0) marks a vanishing product.
RateRecord = namedtuple('RateRecord', 'coefficient exponent')

"""
Standard deviation
"""

def _jacobi_variance_term(m: int, a, b):
    """4m(m+a)(m+b)(m+s) / ((2m+s-1)(2m+s)^2(2m+s+1)) with s = a + b, the squared recurrence b_m"""
    s = a + b
    if m == 0:
        return mp.zero
    if m == 1:
        # (1+s) cancels, keeping s = -1 finite
        return 4 * (1 + a) * (1 + b) / ((2 + s) ** 2 * (3 + s))
    return (4 * m * (m + a) * (m + b) * (m + s)
            / ((2 * m + s - 1) * (2 * m + s) ** 2 * (2 * m + s + 1)))

def stddev(family: Family, n: int):
    """Delta x of rho_n at the active precision

    Args:
        family: polynomial family
        n: degree

    Returns:
        sqrt(n+1/2), sqrt(2n^2+2(a+1)n+a+1) or the two-term Jacobi expression
    """
    family = check_family(family)
    if n < 0:
        raise InvalidDegree("Degree must be non-negative (got {}).".format(n))
    if family.kind == HERMITE:
        return mp.sqrt(n + mp.mpf(1) / 2)
    a = to_mpf(family.alpha)
    if family.kind == LAGUERRE:
        return mp.sqrt(2 * n * n + 2 * (a + 1) * n + a + 1)
    b = to_mpf(family.beta)
    return mp.sqrt(_jacobi_variance_term(n + 1, a, b) + _jacobi_variance_term(n, a, b))

"""
Fisher information
"""

def _jacobi_fisher(n: int, a, b):
    if a == 0 and b == 0:
        return 2 * n * (n + 1) * (2 * n + 1)
    if a == 0 and b > 1:
        return (2 * n + b + 1) / 4 * (n * n / (b + 1) + n + (4 * n + 1) * (n + b + 1) + (n + 1) ** 2 / (b - 1))
    if b == 0 and a > 1:
        # mirror image of the alpha = 0 branch under x -> -x
        return _jacobi_fisher(n, b, a)
    if a > 1 and b > 1:
        s = a + b
        return (2 * n + s + 1) / (4 * (n + s - 1)) * (
            n * (n + s - 1) * ((n + a) / (b + 1) + 2 + (n + b) / (a + 1))
            + (n + 1) * (n + s) * ((n + a) / (b - 1) + 2 + (n + b) / (a - 1)))
    return None

def fisher_information(family: Family, n: int) -> ExtNonNegReal:
    """F[rho_n]; +inf on the divergent parameter branches

    Branches compare parameters exactly (alpha = 0 means exactly zero).
    """
    family = check_family(family)
    if n < 0:
        raise InvalidDegree("Degree must be non-negative (got {}).".format(n))
    if family.kind == HERMITE:
        return ExtNonNegReal(mp.mpf(4 * n + 2))
    if family.kind == LAGUERRE:
        if family.alpha == 0:
            return ExtNonNegReal(mp.mpf(4 * n + 1))
        if family.alpha > 1:
            a = to_mpf(family.alpha)
            return ExtNonNegReal(((2 * n + 1) * a + 1) / (a * a - 1))
        return INFINITE
    value = _jacobi_fisher(n, to_mpf(family.alpha), to_mpf(family.beta))
    if value is None:
        return INFINITE
    return ExtNonNegReal(mp.mpf(value))

def fisher_length(family: Family, n: int):
    """delta x = 1/sqrt(F); 0 when F = +inf and +inf when F = 0 (uniform Jacobi density)"""
    return mp.sqrt(fisher_information(family, n).reciprocal())

def cramer_rao_product(family: Family, n: int):
    return fisher_length(family, n) * stddev(family, n)

def asymptotic_cramer_rao(family: Family) -> RateRecord:
    """Large-n behaviour of delta x * Delta x as (coefficient, exponent of n)"""
    family = check_family(family)
    if family.kind == HERMITE:
        return RateRecord(mp.mpf(1) / 2, 0)
    a = to_mpf(family.alpha)
    if family.kind == LAGUERRE:
        if family.alpha == 0:
            return RateRecord(1 / mp.sqrt(2), mp.mpf(1) / 2)
        if family.alpha > 1:
            return RateRecord(mp.sqrt((a * a - 1) / a), mp.mpf(1) / 2)
        return RateRecord(mp.zero, 0)
    b = to_mpf(family.beta)
    if a == 0 and b == 0:
        return RateRecord(mp.power(2, mp.mpf(-3) / 2), mp.mpf(-3) / 2)
    if a == 0 and b > 1 or b == 0 and a > 1:
        c = a + b
        return RateRecord(1 / mp.sqrt(1 / (c + 1) + 1 / (c - 1) + 4), mp.mpf(-3) / 2)
    if a > 1 and b > 1:
        return RateRecord(1 / mp.sqrt(1 / (b + 1) + 1 / (b - 1) + 1 / (a + 1) + 1 / (a - 1)), mp.mpf(-3) / 2)
    return RateRecord(mp.zero, 0)

def evaluate_rate(rate: RateRecord, n: int):
    return rate.coefficient * mp.power(n, rate.exponent)

"""
Moments
"""

def moment(family: Family, n: int, k):
    """<x^k> of rho_n in closed form (Hermite and Laguerre)

    Hermite takes integer k; Laguerre also accepts real k > -alpha-1.

    Returns:
        The moment at the active precision
    """
    family = check_family(family)
    if family.kind == JACOBI:
        raise UnsupportedFamily("Jacobi moments have no closed form here; use quadrature.density_moment.")
    if family.kind == HERMITE:
        if k != int(k) or k < 0:
            raise InvalidDegree("Hermite moments need a non-negative integer order (got {}).".format(k))
        k = int(k)
        if k % 2:
            return mp.zero
        return (mp.factorial(k) / (mp.power(2, k) * mp.gamma(mp.mpf(k) / 2 + 1))
                * terminating_2f1(-n, -mp.mpf(k) / 2, 1, 2))
    a = to_mpf(family.alpha)
    k = to_mpf(k)
    if not k + a + 1 > 0:
        raise InvalidDegree("Laguerre moment order must exceed -alpha-1 (got {}).".format(k))
    total = mp.fsum(mp.binomial(k, n - r) ** 2 * mp.binomial(k + a + r, r) for r in range(n + 1))
    return mp.factorial(n) * mp.gamma(k + a + 1) / mp.gamma(n + a + 1) * total

"""
Numeric Fisher information
"""

def fisher_information_quadrature(family: Family, n: int, ctx: PrecisionContext, cutoff=0):
    """Adaptive integral of (rho')^2/rho = omega (2p' + p omega'/omega)^2

    Args:
        family: polynomial family
        n: degree
        ctx: precision context (quad_* fields)
        cutoff: distance kept from each finite endpoint

    Returns:
        Integral(value, error)
    """
    family = check_family(family)
    lower, upper = interval(family)
    if not mp.isinf(lower):
        lower = lower + cutoff
    if not mp.isinf(upper):
        upper = upper - cutoff
    with quad_precision(ctx):
        pe = evaluator(family, n, derivative=True)

        def integrand(x):
            p, dp = pe(x)
            return weight(family, x) * (2 * dp + p * log_weight_derivative(family, x)) ** 2

        split = zeros(family, n) if n >= 1 else []
        return integrate_log_singular(integrand, (lower, upper), split, ctx)

def fisher_divergence_ratio(family: Family, n: int, ctx: PrecisionContext, eps_hi=1e-2, eps_lo=1e-4):
    """Growth of the truncated Fisher integral as the endpoint cutoff shrinks from eps_hi to eps_lo"""
    coarse = fisher_information_quadrature(family, n, ctx, cutoff=eps_hi).value
    fine = fisher_information_quadrature(family, n, ctx, cutoff=eps_lo).value
    logger.debug("Truncated Fisher integrals for degree {}: {} -> {}".format(n, mp.nstr(coarse, 6), mp.nstr(fine, 6)))
    return fine / coarse
