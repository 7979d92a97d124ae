class SpreadError(Exception):
    """
    Base class for every error raised by spreadpoly
    """

    def __init__(self, message="Spreading measure computation failed!"):
        self.message = message
        super().__init__(self.message)

"""
Usage errors (exit code 2)
"""

class UsageError(SpreadError):
    """
    Thrown when the caller asks for something the library cannot give a meaning to
    """

    def __init__(self, message="Invalid arguments!"):
        super().__init__(message)

class InvalidFamily(UsageError):
    """
    Thrown when a family kind is unknown or its parameters are out of range
    """

    def __init__(self, message="Invalid polynomial family parameters!"):
        super().__init__(message)

class InvalidOrder(UsageError):
    """
    Thrown when a Renyi order is not a positive half-integer or q = 1 is used for a length
    """

    def __init__(self, message="Invalid Renyi order!"):
        super().__init__(message)

class InvalidDegree(UsageError):
    """
    Thrown when a polynomial degree is outside the range an operation accepts
    """

    def __init__(self, message="Invalid polynomial degree!"):
        super().__init__(message)

class UnsupportedFamily(UsageError):
    """
    Thrown when a closed form does not exist for the requested family
    """

    def __init__(self, message="Operation not supported for this family!"):
        super().__init__(message)

"""
Numeric failures (exit code 3)
"""

class NumericFailure(SpreadError):
    """
    Thrown when a quantity could not be computed to the requested accuracy
    """

    def __init__(self, message="Numeric failure!"):
        super().__init__(message)

class PrecisionExhausted(NumericFailure):
    """
    Thrown when two consecutive precisions never agree within the escalation budget
    """

    def __init__(self, message="Precision escalation exhausted!"):
        super().__init__(message)

class NonIntegrable(NumericFailure):
    """
    Thrown when the power integral of a density diverges (alpha*q or beta*q <= -1)
    """

    def __init__(self, message="Density power is not integrable!"):
        super().__init__(message)

class IntegrationError(NumericFailure):
    """
    Thrown when adaptive quadrature does not reach its tolerance within the degree budget
    """

    def __init__(self, message="Adaptive quadrature did not converge!"):
        super().__init__(message)

class EigenSolveError(NumericFailure):
    """
    Thrown when the tridiagonal eigenvalue iteration does not converge
    """

    def __init__(self, message="Tridiagonal eigen-solve did not converge!"):
        super().__init__(message)

class InvalidHypergeometric(NumericFailure):
    """
    Thrown when a hypergeometric sum does not terminate or hits a singular lower parameter
    """

    def __init__(self, message="Invalid hypergeometric parameters!"):
        super().__init__(message)

class InfiniteArithmetic(NumericFailure):
    """
    Thrown when arithmetic other than the reciprocal is attempted on +inf
    """

    def __init__(self, message="Arithmetic on an infinite Fisher information!"):
        super().__init__(message)
