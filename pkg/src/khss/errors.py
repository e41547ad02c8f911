"""Exception hierarchy shared by every khss module."""


class KhssError(Exception):
    """Base class for all errors raised by khss."""


# rings

class UnknownRing(KhssError, ValueError):
    pass


class InvalidPrime(KhssError, ValueError):
    pass


class UnsupportedCForRing(KhssError, ValueError):
    pass


class MixedRings(KhssError, TypeError):
    pass


class NotEuclidean(KhssError):
    pass


# diagrams

class MalformedPD(KhssError, ValueError):
    pass


class EdgeLabelNotTwice(MalformedPD):
    pass


class InconsistentOrientation(MalformedPD):
    pass


class NonplanarPD(MalformedPD):
    pass


class MissingMarkedEdge(KhssError, ValueError):
    pass


class MarkRequiredForReduced(KhssError, ValueError):
    pass


class UnknownKnot(KhssError, KeyError):
    pass


# complexes and homology

class TooLargeForCube(KhssError):
    pass


class NonUnitPivot(KhssError, ArithmeticError):
    pass


class NotACycle(KhssError, ArithmeticError):
    pass


class ZeroClassModTorsion(KhssError, ArithmeticError):
    pass
