"""Renyi lengths from the Bell-polynomial expansion of p_n^{2q}.

The power of an explicit polynomial is expanded with partial Bell polynomials
and each monomial is integrated against omega^q in closed form (Gamma,
incomplete Gamma and terminating 2F1 kernels).
"""
from collections import namedtuple

from mpmath import mp

from exceptions import InvalidDegree
from helpers.precision import PrecisionContext, escalate, to_mpf, working_precision
from measures.family import Family, check_family, family_weight, interval, jacobi, laguerre
from measures.hypergeometric import terminating_2f1
from measures.order import RenyiOrder, check_integrable, make_order, require_length_order
from measures.orthopoly import PolyCoeffs, explicit_coeffs, zeros
from measures.quadrature import panel_moment, weight_moment

__all__ = [
    "BellTable", "bell_polynomial", "bell_polynomial_partitions", "power_coeffs", "renyi_kernel",
    "density_power_bell", "renyi_length_bell", "terminating_2f1", "OnicescuFixture",
    "onicescu_fixtures_laguerre", "onicescu_display_jacobi",
]

"""
Bell polynomials
"""

class BellTable:
    """Partial Bell polynomials B_{m,l}(x_1, x_2, ...) of one argument sequence, memoised per instance

    Arguments beyond the given sequence are zero.
    """

    def __init__(self, arguments):
        self.arguments = tuple(arguments)
        self._values = {(0, 0): mp.one}

    def argument(self, i: int):
        """x_i, 1-based"""
        if 1 <= i <= len(self.arguments):
            return self.arguments[i - 1]
        return mp.zero

    def value(self, m: int, l: int):
        if m < 0 or l < 0:
            raise InvalidDegree("Bell polynomial indices must be non-negative (got {}, {}).".format(m, l))
        key = (m, l)
        if key in self._values:
            return self._values[key]
        if l > m or l == 0 or m == 0:
            result = mp.zero
        else:
            result = mp.fsum(mp.binomial(m - 1, i - 1) * self.argument(i) * self.value(m - i, l - 1)
                             for i in range(1, m - l + 2))
        self._values[key] = result
        return result

def bell_polynomial(m: int, l: int, args):
    """Partial Bell polynomial B_{m,l}(args) by the (m, l) recurrence"""
    return BellTable(args).value(m, l)

def _partitions(m: int, l: int, largest: int):
    """Multiplicity vectors (j_1..j_largest) with sum j = l and sum i*j_i = m"""
    def walk(i, parts, total, acc):
        if i > largest:
            if parts == l and total == m:
                yield tuple(acc)
            return
        for j in range(0, min(l - parts, (m - total) // i) + 1):
            yield from walk(i + 1, parts + j, total + i * j, acc + [j])
    yield from walk(1, 0, 0, [])

def bell_polynomial_partitions(m: int, l: int, args):
    """Partial Bell polynomial by explicit partition enumeration (small m only)"""
    if l > m:
        return mp.zero
    if m == 0:
        return mp.one
    largest = m - l + 1
    x = [args[i] if i < len(args) else mp.zero for i in range(largest)]
    total = []
    for js in _partitions(m, l, largest):
        term = mp.factorial(m)
        for i, j in enumerate(js, start=1):
            term *= mp.power(x[i - 1] / mp.factorial(i), j) / mp.factorial(j)
        total.append(term)
    return mp.fsum(total)

"""
Polynomial powers
"""

def _bell_power(coeffs, power: int) -> list:
    n = len(coeffs) - 1
    table = BellTable(mp.factorial(i + 1) * coeffs[i] for i in range(n + 1))
    return [mp.factorial(power) / mp.factorial(t + power) * table.value(t + power, power)
            for t in range(n * power + 1)]

def power_coeffs(p: PolyCoeffs, power: int, ctx: PrecisionContext) -> list:
    """Monomial coefficients of p(x)^power via p!/(t+p)! B_{t+p,p}(c_0, 2!c_1, ...)

    Args:
        p: polynomial (coefficients are re-read at every escalation step)
        power: exponent, >= 1
        ctx: precision context

    Returns:
        Coefficients of degree 0..n*power
    """
    if power < 1:
        raise InvalidDegree("Power must be at least 1 (got {}).".format(power))
    return escalate(lambda: _bell_power([to_mpf(c) for c in p.coeffs], power), ctx,
                    "power {} of a degree-{} polynomial".format(power, p.degree))

"""
Power integrals
"""

def renyi_kernel(family: Family, q, t: int):
    """Integral of x^t against omega^q

    Hermite Gamma(j+1/2)/q^{j+1/2} for t = 2j, Laguerre Gamma(aq+t+1)/q^{aq+t+1},
    Jacobi (-1)^t 2^{1+aq+bq} Gamma(aq+1) Gamma(bq+1)/Gamma(aq+bq+2) 2F1(-t, 1+bq; 2+(a+b)q; 2).
    """
    return weight_moment(family_weight(family, q), t)

def _signed_panels(family: Family, n: int):
    """(sign of p_n, lower, upper) for every interval between consecutive zeros"""
    lower, upper = interval(family)
    edges = [lower] + zeros(family, n) + [upper]
    return [((-1) ** (n - k), edges[k], edges[k + 1]) for k in range(n + 1)]

def _density_power_sum(family: Family, n: int, q: RenyiOrder, signed: bool):
    coeffs = _bell_power(explicit_coeffs(family, n), q.two_q)
    if q.is_half_integer and n >= 1 and not signed:
        # |p_n|^{2q} = sign * p_n^{2q} on each panel when 2q is odd
        w = family_weight(family, q.q)
        return mp.fsum(sign * mp.fsum(c * panel_moment(w, t, lo, hi) for t, c in enumerate(coeffs) if c)
                       for sign, lo, hi in _signed_panels(family, n))
    return mp.fsum(c * renyi_kernel(family, q.q, t) for t, c in enumerate(coeffs) if c)

def density_power_bell(family: Family, n: int, q: RenyiOrder, ctx: PrecisionContext, signed: bool = False):
    """W_q = integral of rho_n^q assembled from the Bell expansion

    Args:
        family: polynomial family
        n: degree
        q: Renyi order (q = 1 allowed, W_1 = 1)
        ctx: precision context
        signed: for odd 2q integrate p_n^{2q} instead of |p_n|^{2q}

    Returns:
        W_q, accepted once two precisions agree
    """
    family = check_family(family)
    if n < 0:
        raise InvalidDegree("Degree must be non-negative (got {}).".format(n))
    check_integrable(family, q)
    return escalate(lambda: _density_power_sum(family, n, q, signed), ctx,
                    "Bell power integral W_{} (n={})".format(q, n))

def renyi_length_bell(family: Family, n: int, q: RenyiOrder, ctx: PrecisionContext):
    """L_q = W_q^{-1/(q-1)} through the Bell route"""
    require_length_order(q)
    w = density_power_bell(family, n, q, ctx)
    with working_precision(ctx):
        return mp.power(w, -1 / (to_mpf(q.q) - 1))

"""
Onicescu displays
"""

# display: the closed form as usually quoted; corrected: the same form without the
# outer square root (Laguerre) or with the intended reading (Jacobi).
OnicescuFixture = namedtuple('OnicescuFixture', 'family n display corrected')

def onicescu_fixtures_laguerre(alpha) -> list:
    """Laguerre n = 0, 1 Onicescu lengths as displayed (outer exponent 1/2) and corrected"""
    a = to_mpf(alpha)
    n0 = mp.power(2, 2 * a + 1) * mp.gamma(a + 1) ** 2 / mp.gamma(2 * a + 1)
    n1 = mp.power(2, 2 * a + 3) * mp.gamma(a + 2) ** 2 / ((1 + a) * (2 + 3 * a) * mp.gamma(2 * a + 1))
    family = laguerre(alpha)
    return [OnicescuFixture(family, 0, mp.sqrt(n0), n0), OnicescuFixture(family, 1, mp.sqrt(n1), n1)]

def onicescu_display_jacobi(alpha, beta, n: int):
    """Jacobi n = 0 (read with q = 2) and n = 1 (read with binom(4, k)) Onicescu lengths"""
    family = jacobi(alpha, beta)
    a, b = to_mpf(alpha), to_mpf(beta)
    two = make_order(4)
    if n == 0:
        norm = mp.gamma(a + b + 2) / (mp.power(2, a + b + 1) * mp.gamma(a + 1) * mp.gamma(b + 1))
        return 1 / (norm ** 2 * renyi_kernel(family, two.q, 0))
    if n == 1:
        c0, c1 = explicit_coeffs(family, 1)
        total = mp.fsum(mp.binomial(4, k) * c0 ** (4 - k) * c1 ** k * renyi_kernel(family, two.q, k)
                        for k in range(5))
        return 1 / total
    raise InvalidDegree("Jacobi Onicescu displays exist for n = 0 and 1 only (got {}).".format(n))
