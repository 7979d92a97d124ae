"""Laguerre Renyi lengths from the linearisation of [L_n^(alpha)]^{2q} in Laguerre polynomials.

Expanding (qt)^{alpha q} [L_n^(alpha)(t)]^{2q} = sum_k Theta_k L_k(qt), the power
integral only keeps the k = 0 term, and every Theta_k is a terminating
Lauricella F_A sum.
"""
from collections import namedtuple

from mpmath import mp

from exceptions import InvalidDegree, InvalidOrder
from helpers.precision import PrecisionContext, escalate, to_mpf, working_precision
from measures.family import laguerre
from measures.hypergeometric import lauricella_fa_sum, lauricella_fa_terminating, terminating_2f0
from measures.order import RenyiOrder, check_integrable, require_length_order

__all__ = [
    "ThetaCoefficient", "theta_coefficient", "laguerre_linearization", "linearization_sum",
    "laguerre_power_integral_lauricella", "renyi_length_laguerre_lauricella",
    "renyi_length_laguerre_n0", "renyi_length_laguerre_n1", "lauricella_fa_terminating", "terminating_2f0",
]

"""
Types
"""

ThetaCoefficient = namedtuple('ThetaCoefficient', 'n q alpha k value')

"""
Linearisation coefficients
"""

def _theta_sum(n: int, q: RenyiOrder, alpha, k: int):
    a = to_mpf(alpha)
    qq = to_mpf(q.q)
    upper = [-n] * q.two_q + [-k]
    lower = [a + 1] * q.two_q + [1]
    z = [1 / qq] * q.two_q + [1]
    return (mp.gamma(a * qq + 1) * mp.binomial(n + a, n) ** q.two_q
            * lauricella_fa_sum(a * qq + 1, upper, lower, z))

def theta_coefficient(n: int, q: RenyiOrder, alpha, k: int, ctx: PrecisionContext) -> ThetaCoefficient:
    """Theta_k = Gamma(aq+1) binom(n+a, n)^{2q} F_A^(2q+1)(aq+1; -n..-n, -k; a+1..a+1, 1; 1/q..1/q, 1)"""
    family = laguerre(alpha)
    check_integrable(family, q)
    if n < 0 or k < 0:
        raise InvalidDegree("Degree and expansion index must be non-negative (got n={}, k={}).".format(n, k))
    value = escalate(lambda: _theta_sum(n, q, alpha, k), ctx, "Theta_{} (n={}, q={})".format(k, n, q))
    return ThetaCoefficient(n, q, alpha, k, value)

def laguerre_linearization(n: int, q: RenyiOrder, alpha, k_max: int, ctx: PrecisionContext) -> list:
    """Theta_0..Theta_k_max of the expansion (qt)^{aq} [L_n^(a)(t)]^{2q} = sum_k Theta_k L_k(qt)

    The expansion terminates at k = aq + 2nq when aq is an integer.
    """
    return [theta_coefficient(n, q, alpha, k, ctx) for k in range(k_max + 1)]

def linearization_sum(thetas: list, s):
    """Truncated expansion sum_k Theta_k L_k(s) at the active precision"""
    s = mp.mpf(s)
    return mp.fsum(theta.value * mp.laguerre(theta.k, 0, s) for theta in thetas)

"""
Renyi lengths
"""

def _power_integral_sum(n: int, alpha, q: RenyiOrder):
    a = to_mpf(alpha)
    qq = to_mpf(q.q)
    norm = mp.power(mp.factorial(n) / mp.gamma(a + n + 1), qq)
    # p_n = (-1)^n sqrt(n!/Gamma(n+a+1)) L_n^(a) has a positive leading coefficient
    sign = -1 if (n * q.two_q) % 2 else 1
    return sign * norm / mp.power(qq, a * qq + 1) * _theta_sum(n, q, alpha, 0)

def laguerre_power_integral_lauricella(n: int, alpha, q: RenyiOrder, ctx: PrecisionContext):
    """Integral of p_n^{2q} omega^q from Theta_0

    For odd 2q and n >= 1 this is the integral of the signed power, not of rho^q.
    """
    check_integrable(laguerre(alpha), q)
    if n < 0:
        raise InvalidDegree("Degree must be non-negative (got {}).".format(n))
    return escalate(lambda: _power_integral_sum(n, alpha, q), ctx,
                    "Lauricella power integral W_{} (n={})".format(q, n))

def _check_absolute_power(n: int, q: RenyiOrder):
    if q.is_half_integer and n >= 1:
        raise InvalidOrder("The linearisation integrates p_n^{} with its sign; "
                           "rho^{} needs |p_n| (use the Bell route or the oracle).".format(q.two_q, q))

def renyi_length_laguerre_lauricella(n: int, alpha, q: RenyiOrder, ctx: PrecisionContext):
    """q-th order Renyi length of rho_{n,alpha} through the Lauricella route

    Args:
        n: degree
        alpha: Laguerre parameter
        q: Renyi order, q != 1, 2q even unless n = 0
        ctx: precision context

    Returns:
        L_q = W_q^{-1/(q-1)}
    """
    require_length_order(q)
    _check_absolute_power(n, q)
    w = laguerre_power_integral_lauricella(n, alpha, q, ctx)
    with working_precision(ctx):
        return mp.power(w, -1 / (to_mpf(q.q) - 1))

def renyi_length_laguerre_n0(alpha, q: RenyiOrder):
    """[Gamma(aq+1) / (Gamma(a+1)^q q^{aq+1})]^{-1/(q-1)} at the active precision"""
    require_length_order(q)
    check_integrable(laguerre(alpha), q)
    a, qq = to_mpf(alpha), to_mpf(q.q)
    w = mp.gamma(a * qq + 1) / (mp.power(mp.gamma(a + 1), qq) * mp.power(qq, a * qq + 1))
    return mp.power(w, -1 / (qq - 1))

def renyi_length_laguerre_n1(alpha, q: RenyiOrder):
    """n = 1 length with the terminating 2F0(-2q, aq+1; ; 1/(q(a+1)))"""
    require_length_order(q)
    check_integrable(laguerre(alpha), q)
    _check_absolute_power(1, q)
    a, qq = to_mpf(alpha), to_mpf(q.q)
    w = (mp.gamma(a * qq + 1) * mp.power(1 + a, q.two_q)
         / (mp.power(mp.gamma(a + 2), qq) * mp.power(qq, a * qq + 1))
         * terminating_2f0(-q.two_q, a * qq + 1, 1 / (qq * (a + 1))))
    return mp.power(w, -1 / (qq - 1))
