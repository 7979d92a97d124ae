"""Classical families and their (possibly power-shifted) weight functions."""
from collections import namedtuple

from mpmath import mp

from exceptions import InvalidFamily
from helpers.precision import to_mpf

HERMITE = "hermite"
LAGUERRE = "laguerre"
JACOBI = "jacobi"
KINDS = (HERMITE, LAGUERRE, JACOBI)

"""
Types
"""

# alpha/beta are kept as given (int, float or Fraction) and converted to mpf
# at the active precision on use. Unused parameters are 0.
Family = namedtuple('Family', 'kind alpha beta')

# Weight of a Gauss rule: Hermite e^{-scale x^2}, Laguerre x^alpha e^{-scale x},
# Jacobi (1-x)^alpha (1+x)^beta (scale unused).
Weight = namedtuple('Weight', 'kind alpha beta scale')

"""
Functions
"""

def make_family(kind: str, alpha=0, beta=0) -> Family:
    """Validate parameters and build a family

    Args:
        kind: hermite, laguerre or jacobi
        alpha: Laguerre/Jacobi parameter, > -1
        beta: Jacobi parameter, > -1

    Returns:
        The family record
    """
    kind = str(kind).lower()
    if kind not in KINDS:
        raise InvalidFamily("Unknown family '{}' (expected one of {}).".format(kind, ", ".join(KINDS)))
    if kind == HERMITE:
        return Family(HERMITE, 0, 0)
    if not alpha > -1:
        raise InvalidFamily("{} family requires alpha > -1 (got {}).".format(kind.capitalize(), alpha))
    if kind == LAGUERRE:
        return Family(LAGUERRE, alpha, 0)
    if not beta > -1:
        raise InvalidFamily("Jacobi family requires beta > -1 (got {}).".format(beta))
    return Family(JACOBI, alpha, beta)

def hermite() -> Family:
    return make_family(HERMITE)

def laguerre(alpha=0) -> Family:
    return make_family(LAGUERRE, alpha)

def jacobi(alpha=0, beta=0) -> Family:
    return make_family(JACOBI, alpha, beta)

def check_family(family: Family) -> Family:
    """Re-validate a family that may have been built without make_family"""
    return make_family(family.kind, family.alpha, family.beta)

def reflect(family: Family) -> Family:
    """Family of the reflected variable -x (Jacobi swaps alpha and beta)"""
    if family.kind == JACOBI:
        return Family(JACOBI, family.beta, family.alpha)
    return family

def interval(family) -> tuple:
    """Orthogonality interval of a family or weight as (lower, upper) mpf endpoints"""
    if family.kind == HERMITE:
        return (mp.ninf, mp.inf)
    if family.kind == LAGUERRE:
        return (mp.zero, mp.inf)
    return (-mp.one, mp.one)

def describe(family: Family) -> str:
    if family.kind == HERMITE:
        return "hermite"
    if family.kind == LAGUERRE:
        return "laguerre(alpha={})".format(family.alpha)
    return "jacobi(alpha={}, beta={})".format(family.alpha, family.beta)

def family_weight(family: Family, q=1) -> Weight:
    """Weight whose density is omega(x)^q

    Hermite maps to a Gaussian of scale q, Laguerre to parameter alpha*q with
    rate q, Jacobi to parameters (alpha*q, beta*q).
    """
    if family.kind == HERMITE:
        return Weight(HERMITE, 0, 0, q)
    if family.kind == LAGUERRE:
        return Weight(LAGUERRE, family.alpha * q, 0, q)
    return Weight(JACOBI, family.alpha * q, family.beta * q, 1)

def weight(family: Family, x):
    """omega(x); zero outside the support, +inf at a singular Jacobi endpoint"""
    x = mp.mpf(x)
    if family.kind == HERMITE:
        return mp.exp(-x * x)
    alpha = to_mpf(family.alpha)
    if family.kind == LAGUERRE:
        if x < 0:
            return mp.zero
        return _power(x, alpha) * mp.exp(-x)
    if x < -1 or x > 1:
        return mp.zero
    beta = to_mpf(family.beta)
    return _power(1 - x, alpha) * _power(1 + x, beta)

def log_weight(family: Family, x):
    """ln omega(x) for x strictly inside the support"""
    x = mp.mpf(x)
    if family.kind == HERMITE:
        return -x * x
    alpha = to_mpf(family.alpha)
    if family.kind == LAGUERRE:
        return (alpha * mp.log(x) if alpha else mp.zero) - x
    beta = to_mpf(family.beta)
    return ((alpha * mp.log(1 - x) if alpha else mp.zero)
            + (beta * mp.log(1 + x) if beta else mp.zero))

def log_weight_derivative(family: Family, x):
    """omega'(x)/omega(x) for x strictly inside the support"""
    x = mp.mpf(x)
    if family.kind == HERMITE:
        return -2 * x
    alpha = to_mpf(family.alpha)
    if family.kind == LAGUERRE:
        return alpha / x - 1
    beta = to_mpf(family.beta)
    return -alpha / (1 - x) + beta / (1 + x)

def _power(base, exponent):
    if base == 0:
        if exponent == 0:
            return mp.one
        return mp.zero if exponent > 0 else mp.inf
    return mp.power(base, exponent)
