from collections import namedtuple

from mpmath import mp

"""
Types
"""

# deviation is relative or absolute depending on the predicate that built it
Check = namedtuple('Check', 'scope name measured expected deviation tolerance passed')

"""
Predicates
"""

def _number(value):
    if value is None:
        return None
    if isinstance(value, bool):
        return value
    return float(value)

def relative(scope: str, name: str, measured, expected, tolerance: float) -> Check:
    """Checks that measured agrees with expected to a relative tolerance

    Returns:
        Check record (an exact zero expectation falls back to an absolute comparison)
    """
    scale = abs(expected) if expected != 0 else mp.one
    deviation = abs(measured - expected) / scale
    return Check(scope, name, _number(measured), _number(expected), _number(deviation), tolerance,
                 bool(deviation <= tolerance))

def absolute(scope: str, name: str, measured, expected, tolerance: float) -> Check:
    """Checks that measured agrees with expected to an absolute tolerance

    Returns:
        Check record
    """
    deviation = abs(measured - expected)
    return Check(scope, name, _number(measured), _number(expected), _number(deviation), tolerance,
                 bool(deviation <= tolerance))

def at_most(scope: str, name: str, measured, limit, slack: float = 0.0) -> Check:
    """Checks measured <= limit + slack; deviation is the (signed) excess

    Returns:
        Check record
    """
    excess = measured - limit
    return Check(scope, name, _number(measured), _number(limit), _number(excess), slack,
                 bool(excess <= slack))

def holds(scope: str, name: str, condition: bool, measured=None, expected=None) -> Check:
    """Records a qualitative property (ordering, monotonicity, divergence)

    Returns:
        Check record
    """
    return Check(scope, name, _number(measured), _number(expected), None, None, bool(condition))

def raised(scope: str, name: str, call, error: type) -> Check:
    """Checks that call() raises the given exception type

    Returns:
        Check record
    """
    try:
        call()
    except error:
        return holds(scope, name, True)
    except Exception:
        return holds(scope, name, False)
    return holds(scope, name, False)
