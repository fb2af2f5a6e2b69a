"""
Exceptions raised by the rook-algebra engine.
"""


class RookAlgebraError(Exception):
    """
    Base exception for all engine errors
    """

    pass


class NotDivisible(RookAlgebraError):
    """
    Raised when an exact Laurent division leaves a remainder
    """

    pass


class NotBalanced(RookAlgebraError):
    """
    Raised when a polynomial is not a Laurent polynomial in q = UV
    """

    pass


class BadSpecialization(RookAlgebraError):
    """
    Raised when numeric parameters hit a forbidden value
    """

    pass


class SizeMismatch(RookAlgebraError):
    """
    Raised when diagrams or elements with different strand counts are combined
    """

    pass


class CapExceeded(RookAlgebraError):
    """
    Raised when an enumeration or state sum exceeds its configured cap
    """

    pass


class TooManyCrossings(CapExceeded):
    """
    Raised when the Kauffman state sum would exceed the crossing cap
    """

    pass


class IndexOutOfRange(RookAlgebraError):
    """
    Raised when a generator index or subset size is outside its range
    """

    pass


class BadToken(RookAlgebraError):
    """
    Raised when a braid word contains a token that is not a nonzero integer
    """

    pass


class GeneratorOutOfRange(RookAlgebraError):
    """
    Raised when a braid letter uses a generator outside 1..n-1
    """

    pass


class BadPartition(RookAlgebraError):
    """
    Raised when a partition has no parts or a part smaller than 1
    """

    pass


class RelationFailed(RookAlgebraError):
    """
    Raised when a homomorphism family fails a braid or duality relation
    """

    pass


class CheckFailed(RookAlgebraError):
    """
    Raised when a verification check does not hold
    """

    pass


class ConfigError(RookAlgebraError):
    """
    Raised when an environment variable cannot be parsed
    """

    pass


class CorpusError(RookAlgebraError):
    """
    Raised when the corpus file is missing or malformed
    """

    pass


class InvalidFamily(RookAlgebraError):
    """
    Raised when a family number or rescaling flag is not supported
    """

    pass
