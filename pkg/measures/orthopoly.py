"""Orthonormal Hermite, Laguerre and Jacobi polynomials.

Recurrence coefficients are the standard orthonormal ones (Gautschi,
"Orthogonal Polynomials: Computation and Approximation", Table 1.1; they are
the same values mpmath's gauss_quadrature uses for its built-in rules),
generalised to the scaled Gaussian and the rate-q Laguerre weights needed by
the power-integral oracle.
"""
from collections import namedtuple

from mpmath import mp

from exceptions import EigenSolveError, InvalidDegree, NonIntegrable
from helpers.logger import logger
from helpers.precision import PrecisionContext, escalate, to_mpf
from measures.family import (HERMITE, LAGUERRE, Family, Weight, check_family, family_weight,
                             interval, weight)

"""
Types
"""

# coeffs[t] multiplies x^t; the leading coefficient is positive.
PolyCoeffs = namedtuple('PolyCoeffs', 'family degree coeffs')

"""
Recurrence
"""

def check_weight(w: Weight) -> Weight:
    if w.kind == HERMITE:
        if not w.scale > 0:
            raise NonIntegrable("Gaussian weight needs a positive scale (got {}).".format(w.scale))
    elif w.kind == LAGUERRE:
        if not w.alpha > -1 or not w.scale > 0:
            raise NonIntegrable("Laguerre weight x^{} e^(-{}x) is not integrable.".format(w.alpha, w.scale))
    elif not w.alpha > -1 or not w.beta > -1:
        raise NonIntegrable("Jacobi weight (1-x)^{} (1+x)^{} is not integrable.".format(w.alpha, w.beta))
    return w

def weight_mass(w: Weight):
    """Zeroth moment of a weight"""
    if w.kind == HERMITE:
        return mp.sqrt(mp.pi / to_mpf(w.scale))
    a = to_mpf(w.alpha)
    if w.kind == LAGUERRE:
        r = to_mpf(w.scale)
        return mp.gamma(a + 1) / mp.power(r, a + 1)
    b = to_mpf(w.beta)
    return mp.power(2, a + b + 1) * mp.gamma(a + 1) * mp.gamma(b + 1) / mp.gamma(a + b + 2)

def weight_recurrence(w: Weight, n: int) -> list:
    """(a_k, b_k) for k = 0..n of the orthonormal recurrence of a weight, b_0 = 0"""
    check_weight(w)
    if n < 0:
        raise InvalidDegree("Degree must be non-negative (got {}).".format(n))
    pairs = []
    if w.kind == HERMITE:
        c = to_mpf(w.scale)
        for k in range(n + 1):
            pairs.append((mp.zero, mp.sqrt(k / (2 * c))))
        return pairs
    a = to_mpf(w.alpha)
    if w.kind == LAGUERRE:
        r = to_mpf(w.scale)
        for k in range(n + 1):
            pairs.append(((2 * k + a + 1) / r, mp.sqrt(k * (k + a)) / r))
        return pairs
    b = to_mpf(w.beta)
    s = a + b
    for k in range(n + 1):
        if k == 0:
            pairs.append(((b - a) / (s + 2), mp.zero))
            continue
        diag = (b * b - a * a) / ((2 * k + s) * (2 * k + s + 2))
        if k == 1:
            # (1+s) cancels between numerator and denominator
            off = mp.sqrt(4 * (1 + a) * (1 + b) / ((2 + s) ** 2 * (3 + s)))
        else:
            off = mp.sqrt(4 * k * (k + a) * (k + b) * (k + s)
                          / ((2 * k + s) ** 2 * (2 * k + s + 1) * (2 * k + s - 1)))
        pairs.append((diag, off))
    return pairs

def recurrence_coeffs(family: Family, n: int) -> list:
    """Orthonormal three-term recurrence x p_k = b_{k+1} p_{k+1} + a_k p_k + b_k p_{k-1}

    Args:
        family: polynomial family
        n: highest index returned

    Returns:
        [(a_0, b_0), ..., (a_n, b_n)] at the active precision, b_0 = 0
    """
    return weight_recurrence(family_weight(check_family(family)), n)

"""
Evaluation
"""

def evaluator(family: Family, n: int, derivative: bool = False):
    """Build x -> p_n(x) (or x -> (p_n(x), p_n'(x))) with the recurrence precomputed"""
    w = family_weight(check_family(family))
    if n < 0:
        raise InvalidDegree("Degree must be non-negative (got {}).".format(n))
    pairs = weight_recurrence(w, n)
    p0 = 1 / mp.sqrt(weight_mass(w))

    def value(x):
        x = mp.mpf(x)
        prev, cur = mp.zero, p0
        for k in range(n):
            a_k, b_k = pairs[k]
            prev, cur = cur, ((x - a_k) * cur - b_k * prev) / pairs[k + 1][1]
        return cur

    def value_and_derivative(x):
        x = mp.mpf(x)
        prev, cur = mp.zero, p0
        dprev, dcur = mp.zero, mp.zero
        for k in range(n):
            a_k, b_k = pairs[k]
            b_next = pairs[k + 1][1]
            nxt = ((x - a_k) * cur - b_k * prev) / b_next
            dnxt = (cur + (x - a_k) * dcur - b_k * dprev) / b_next
            prev, cur, dprev, dcur = cur, nxt, dcur, dnxt
        return cur, dcur

    return value_and_derivative if derivative else value

def evaluate(p: PolyCoeffs, x):
    """p_n(x) by the recurrence; the stored monomial coefficients are not summed"""
    return evaluator(p.family, p.degree)(x)

def horner(coeffs, x):
    """Monomial-basis evaluation, used to cross-check the recurrence route"""
    x = mp.mpf(x)
    acc = mp.zero
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc

def recurrence_monomials(family: Family, n: int) -> list:
    """Monomial coefficients of p_n built by running the recurrence on coefficient vectors"""
    w = family_weight(check_family(family))
    pairs = weight_recurrence(w, n)
    prev, cur = [], [1 / mp.sqrt(weight_mass(w))]
    for k in range(n):
        a_k, b_k = pairs[k]
        shifted = [mp.zero] + cur
        nxt = []
        for t in range(k + 2):
            term = shifted[t]
            if t <= k:
                term -= a_k * cur[t]
            if t < len(prev):
                term -= b_k * prev[t]
            nxt.append(term / pairs[k + 1][1])
        prev, cur = cur, nxt
    return cur

"""
Explicit coefficients
"""

def _hermite_coeffs(n: int) -> list:
    norm = mp.factorial(n) / mp.sqrt(mp.power(2, n) * mp.factorial(n) * mp.sqrt(mp.pi))
    coeffs = []
    for t in range(n + 1):
        if (n - t) % 2:
            coeffs.append(mp.zero)
            continue
        sign = -1 if ((3 * n - t) // 2) % 2 else 1
        coeffs.append(sign * norm * mp.power(2, t) / (mp.factorial((n - t) // 2) * mp.factorial(t)))
    return coeffs

def _laguerre_coeffs(n: int, alpha) -> list:
    norm = mp.sqrt(mp.gamma(n + alpha + 1) / mp.factorial(n))
    return [(-1) ** t * norm * mp.binomial(n, t) / mp.gamma(alpha + t + 1) for t in range(n + 1)]

def _jacobi_coeffs(n: int, alpha, beta) -> list:
    s = alpha + beta
    # (2n+s+1) Gamma(n+s+1); written as Gamma(s+2) at n = 0 so s = -1 stays finite
    scaled_gamma = mp.gamma(s + 2) if n == 0 else (2 * n + s + 1) * mp.gamma(n + s + 1)
    norm = mp.sqrt(mp.gamma(alpha + n + 1) * scaled_gamma
                   / (mp.factorial(n) * mp.power(2, s + 1) * mp.gamma(n + beta + 1)))
    coeffs = []
    for t in range(n + 1):
        terms = [(-1) ** (i - t) * mp.binomial(n, i) * mp.binomial(i, t) * mp.rf(s + n + 1, i)
                 / (mp.power(2, i) * mp.gamma(alpha + i + 1)) for i in range(t, n + 1)]
        coeffs.append(norm * mp.fsum(terms))
    return coeffs

def explicit_coeffs(family: Family, n: int) -> list:
    """Closed-form monomial coefficients at the active precision, leading coefficient made positive"""
    family = check_family(family)
    if n < 0:
        raise InvalidDegree("Degree must be non-negative (got {}).".format(n))
    if family.kind == HERMITE:
        coeffs = _hermite_coeffs(n)
    elif family.kind == LAGUERRE:
        coeffs = _laguerre_coeffs(n, to_mpf(family.alpha))
    else:
        coeffs = _jacobi_coeffs(n, to_mpf(family.alpha), to_mpf(family.beta))
        if to_mpf(family.alpha) == to_mpf(family.beta):
            # symmetric weight: p_n has the parity of n
            coeffs = [mp.zero if (n - t) % 2 else c for t, c in enumerate(coeffs)]
    if coeffs[-1] < 0:
        coeffs = [-c for c in coeffs]
    return coeffs

def orthonormal_coeffs(family: Family, n: int, ctx: PrecisionContext) -> PolyCoeffs:
    """Monomial coefficients of the orthonormal p_n, accepted once two precisions agree

    Args:
        family: polynomial family
        n: degree
        ctx: precision context

    Returns:
        PolyCoeffs with a positive leading coefficient
    """
    coeffs = escalate(lambda: explicit_coeffs(family, n), ctx,
                      "orthonormal coefficients (n={})".format(n))
    return PolyCoeffs(check_family(family), n, tuple(coeffs))

"""
Densities and zeros
"""

def density_evaluator(family: Family, n: int):
    """Build x -> rho_n(x) = p_n(x)^2 omega(x)"""
    p = evaluator(family, n)
    lower, upper = interval(family)

    def rho(x):
        x = mp.mpf(x)
        if x < lower or x > upper:
            return mp.zero
        w = weight(family, x)
        if mp.isinf(w):
            logger.debug("Non-finite density at x={} for degree {}".format(x, n))
            return w
        return p(x) ** 2 * w

    return rho

def rakhmanov_density(family: Family, n: int, x):
    """rho_n(x) = p_n(x)^2 omega(x); zero outside the interval, +inf at a singular endpoint"""
    return density_evaluator(family, n)(x)

def golub_welsch(w: Weight, m: int) -> tuple:
    """Nodes and weights of the m-point Gauss rule of a weight, ascending nodes"""
    pairs = weight_recurrence(w, m)

    def fill(d, e):
        for i in range(m):
            d[i] = pairs[i][0]
            e[i] = pairs[i + 1][1]
        return weight_mass(w)

    try:
        nodes, weights = mp.gauss_quadrature(m, fill)
    except RuntimeError as e:
        logger.error("Eigen-solve failed for {} nodes: {}".format(m, e))
        raise EigenSolveError("Tridiagonal eigen-solve failed for a {}-node rule.".format(m))
    return [nodes[i] for i in range(m)], [weights[i] for i in range(m)]

def zeros(family: Family, n: int) -> list:
    """The n zeros of p_n in increasing order (eigenvalues of the recurrence matrix)"""
    if n < 1:
        raise InvalidDegree("Zeros need degree n >= 1 (got {}).".format(n))
    nodes, _ = golub_welsch(family_weight(check_family(family)), n)
    return nodes
