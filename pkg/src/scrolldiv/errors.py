"""Exception hierarchy.

Every domain error derives from :class:`ScrollError` (itself a ``ValueError``),
and the class name is the name surfaced by the CLI.
"""


class ScrollError(ValueError):
    """Base class for violated preconditions."""


class EmptyOrAllZero(ScrollError):
    pass


class LengthOne(ScrollError):
    pass


class WrongArity(ScrollError):
    pass


class NotACone(ScrollError):
    pass


class NotHigherCodim(ScrollError):
    pass


class SmoothScroll(ScrollError):
    pass


class RegimeMismatch(ScrollError):
    pass


class NegativeDegree(ScrollError):
    pass


class NonEffective(ScrollError):
    pass


class NonEffectiveClass(ScrollError):
    pass


class InvalidVertexMultiplicity(ScrollError):
    pass


class OutOfValidityRegion(ScrollError):
    pass


class TooManyFactors(ScrollError):
    pass


class NegativeTwist(ScrollError):
    pass


class DegreeTooSmall(ScrollError):
    pass


class DimensionTooSmall(ScrollError):
    pass


class Degenerate(ScrollError):
    pass


class EnumerationTooLarge(ScrollError):
    pass
