from collections import namedtuple
from typing import Callable, TypeVar

import mpmath
from mpmath import mp

from exceptions import PrecisionExhausted, UsageError
from helpers.logger import logger
from helpers.config import config as app_config

T = TypeVar("T")

"""
Types
"""

# bits/rel_tol/max_escalations drive the exact paths (coefficients, Bell and
# Lauricella sums); quad_* drive the adaptive log-singular integrals.
PrecisionContext = namedtuple(
    'PrecisionContext', 'bits rel_tol max_escalations quad_bits quad_tol quad_degree')

"""
Functions
"""

def make_context(
        bits: int = 128,
        rel_tol: float = 1e-20,
        max_escalations: int = 4,
        quad_bits: int = 64,
        quad_tol: float = 1e-10,
        quad_degree: int = 8) -> PrecisionContext:
    """Validate and build a precision context

    Returns:
        A PrecisionContext
    """
    if bits < 53 or quad_bits < 53:
        raise UsageError("Working precision must be at least 53 bits (got {}).".format(min(bits, quad_bits)))
    if not rel_tol > 0 or not quad_tol > 0:
        raise UsageError("Tolerances must be positive.")
    if max_escalations < 0 or quad_degree < 1:
        raise UsageError("Escalation count and quadrature degree must be non-negative.")
    return PrecisionContext(int(bits), float(rel_tol), int(max_escalations),
                            int(quad_bits), float(quad_tol), int(quad_degree))

def default_context(**overrides) -> PrecisionContext:
    """Context from the loaded configuration, with per-call overrides

    Returns:
        A PrecisionContext
    """
    fields = {field: app_config[field] for field in PrecisionContext._fields}
    fields.update({k: v for k, v in overrides.items() if v is not None})
    return make_context(**fields)

def relative_gap(a, b):
    """Relative difference of two values, or of two equal-length sequences in the max norm

    Sequence entries are measured against the largest entry, so entries that
    vanish up to rounding do not dominate the gap.
    """
    if isinstance(a, (list, tuple)):
        if not a:
            return mpmath.mpf(0)
        scale = max(max(abs(x) for x in a), max(abs(y) for y in b))
        if scale == 0:
            return mpmath.mpf(0)
        return max(abs(x - y) for x, y in zip(a, b)) / scale
    scale = max(abs(a), abs(b))
    if scale == 0:
        return mpmath.mpf(0)
    return abs(a - b) / scale

def escalate(compute: Callable[[], T], ctx: PrecisionContext, quantity: str) -> T:
    """Run compute at ctx.bits and doubled precisions until two runs agree

    Args:
        compute: zero-argument function evaluated under the active mpmath precision
        ctx: precision context
        quantity: name used in logs and in the failure message

    Returns:
        The value computed at the higher of the two agreeing precisions
    """
    bits = ctx.bits
    with mpmath.workprec(bits):
        previous = compute()
    for _ in range(ctx.max_escalations + 1):
        bits *= 2
        with mpmath.workprec(bits):
            current = compute()
            gap = relative_gap(previous, current)
        if gap <= ctx.rel_tol:
            return current
        logger.debug("{}: {} vs {} bits disagree by {}, escalating".format(
            quantity, bits // 2, bits, mpmath.nstr(gap, 3)))
        previous = current
    logger.error("{}: no agreement up to {} bits".format(quantity, bits))
    raise PrecisionExhausted("Precision escalation exhausted while computing {}.".format(quantity))

def working_precision(ctx: PrecisionContext):
    """Context manager running the enclosed block at the context's base precision"""
    return mpmath.workprec(ctx.bits)

def quad_precision(ctx: PrecisionContext):
    """Context manager running the enclosed block at the adaptive-quadrature precision"""
    return mpmath.workprec(ctx.quad_bits)

def to_mpf(value):
    """Convert ints, floats, Fractions and numeric strings to an mpf at the active precision"""
    if hasattr(value, "numerator") and hasattr(value, "denominator") and not isinstance(value, (int, float)):
        return mp.mpf(value.numerator) / value.denominator
    return mp.mpf(value)
