"""Terminating hypergeometric sums: 2F1, 2F0 and the Lauricella F_A."""
from mpmath import mp

from exceptions import InvalidHypergeometric
from helpers.precision import PrecisionContext, escalate, to_mpf

def _terminating_index(value, name: str) -> int:
    """-value for a nonpositive integer parameter, otherwise raise"""
    v = to_mpf(value)
    if v > 0 or v != mp.floor(v):
        raise InvalidHypergeometric("{} must be a nonpositive integer for termination (got {}).".format(name, value))
    return int(-v)

def _check_lower(c, terms: int, name: str):
    c = to_mpf(c)
    if c <= 0 and c == mp.floor(c) and -c < terms:
        raise InvalidHypergeometric("{} = {} makes a Pochhammer denominator vanish.".format(name, c))

def terminating_2f1(a, b, c, z):
    """2F1(a, b; c; z) with a a nonpositive integer, as a finite sum of 1-a terms"""
    k = _terminating_index(a, "a")
    _check_lower(c, k, "c")
    a, b, c, z = to_mpf(a), to_mpf(b), to_mpf(c), to_mpf(z)
    term = mp.one
    terms = [term]
    for j in range(k):
        term = term * (a + j) * (b + j) / ((c + j) * (j + 1)) * z
        terms.append(term)
    return mp.fsum(terms)

def terminating_2f0(a, b, z):
    """2F0(a, b; ; z) with a a nonpositive integer"""
    m = _terminating_index(a, "a")
    a, b, z = to_mpf(a), to_mpf(b), to_mpf(z)
    term = mp.one
    terms = [term]
    for j in range(m):
        term = term * (a + j) * (b + j) / (j + 1) * z
        terms.append(term)
    return mp.fsum(terms)

def _factor_sequence(upper: int, b, c, z) -> list:
    """(b)_m z^m / ((c)_m m!) for m = 0..upper"""
    seq = [mp.one]
    for m in range(upper):
        seq.append(seq[-1] * (b + m) * z / ((c + m) * (m + 1)))
    return seq

def _convolve(left: list, right: list) -> list:
    out = []
    for s in range(len(left) + len(right) - 1):
        lo, hi = max(0, s - len(right) + 1), min(s, len(left) - 1)
        out.append(mp.fdot([left[i] for i in range(lo, hi + 1)],
                           [right[s - i] for i in range(lo, hi + 1)]))
    return out

def lauricella_fa_sum(a, upper, lower, z):
    """Terminating F_A at the active precision

    The summand factorises as (a)_{|m|} times a product over variables, so the
    multi-index sum is the convolution of the per-variable sequences followed
    by one sum over the total index |m|.
    """
    if not (len(upper) == len(lower) == len(z)):
        raise InvalidHypergeometric("F_A needs as many lower parameters and arguments as upper parameters.")
    bounds = [_terminating_index(u, "upper parameter {}".format(i)) for i, u in enumerate(upper)]
    for i, (c, bound) in enumerate(zip(lower, bounds)):
        _check_lower(c, bound, "lower parameter {}".format(i))
    a = to_mpf(a)
    totals = [mp.one]
    for bound, b, c, zi in zip(bounds, upper, lower, z):
        totals = _convolve(totals, _factor_sequence(bound, to_mpf(b), to_mpf(c), to_mpf(zi)))
    pochhammer = mp.one
    terms = []
    for s, total in enumerate(totals):
        terms.append(pochhammer * total)
        pochhammer *= a + s
    return mp.fsum(terms)

def lauricella_fa_terminating(a, upper, lower, z, ctx: PrecisionContext):
    """F_A(a; upper; lower; z) for nonpositive-integer upper parameters

    Args:
        a: numerator parameter shared by all variables
        upper: per-variable nonpositive integers (terminate each index)
        lower: per-variable denominator parameters
        z: per-variable arguments
        ctx: precision context

    Returns:
        The finite multi-sum, accepted once two precisions agree
    """
    return escalate(lambda: lauricella_fa_sum(a, upper, lower, z), ctx,
                    "Lauricella F_A in {} variables".format(len(upper)))
