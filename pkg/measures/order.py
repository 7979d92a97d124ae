from collections import namedtuple
from fractions import Fraction

from exceptions import InvalidOrder, NonIntegrable
from measures.family import HERMITE, LAGUERRE, Family

"""
Types
"""

class RenyiOrder(namedtuple('RenyiOrder', 'two_q')):
    """Renyi order q = two_q / 2 with two_q a positive integer"""

    __slots__ = ()

    @property
    def q(self) -> Fraction:
        return Fraction(self.two_q, 2)

    @property
    def is_half_integer(self) -> bool:
        """True when 2q is odd, i.e. rho^q involves |p_n|^{2q} rather than a polynomial"""
        return self.two_q % 2 == 1

    def label(self) -> str:
        """Column-safe name: 2, 3, 1_5 (for 3/2), 0_5 (for 1/2)"""
        if self.two_q % 2 == 0:
            return str(self.two_q // 2)
        return "{}_5".format(self.two_q // 2)

    def __str__(self) -> str:
        return str(self.q)

"""
Functions
"""

def make_order(two_q: int) -> RenyiOrder:
    if isinstance(two_q, bool) or not isinstance(two_q, int) or two_q < 1:
        raise InvalidOrder("2q must be a positive integer (got {}).".format(two_q))
    return RenyiOrder(two_q)

def parse_order(text: str) -> RenyiOrder:
    """Parse '2', '3/2', '1.5' or '0.5' into a RenyiOrder

    Returns:
        The order; anything whose double is not a positive integer is rejected
    """
    try:
        value = Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError):
        raise InvalidOrder("Cannot parse Renyi order '{}'.".format(text))
    doubled = 2 * value
    if doubled.denominator != 1:
        raise InvalidOrder("Renyi order must satisfy 2q in N (got {}).".format(text))
    return make_order(int(doubled))

def require_length_order(q: RenyiOrder) -> RenyiOrder:
    """Lengths are undefined at q = 1 (the Shannon limit)"""
    if q.two_q == 2:
        raise InvalidOrder("q = 1 has no Renyi length; use the Shannon length instead.")
    return q

def check_integrable(family: Family, q: RenyiOrder):
    """Raise NonIntegrable when omega^q has a non-integrable endpoint singularity"""
    if family.kind == HERMITE:
        return
    if not family.alpha * q.q > -1:
        raise NonIntegrable("rho^q diverges: alpha*q = {} <= -1.".format(float(family.alpha * q.q)))
    if family.kind == LAGUERRE:
        return
    if not family.beta * q.q > -1:
        raise NonIntegrable("rho^q diverges: beta*q = {} <= -1.".format(float(family.beta * q.q)))

def is_integrable(family: Family, q: RenyiOrder) -> bool:
    try:
        check_integrable(family, q)
    except NonIntegrable:
        return False
    return True
