"""Exception hierarchy shared by every module."""


class SupernormalError(Exception):
    """Base class for all errors raised by this package."""


class DimensionTooLarge(SupernormalError):
    pass


class TooLarge(SupernormalError):
    """An enumeration guard (vector count, lattice points, ...) was exceeded."""


class TooManyPoints(TooLarge):
    pass


class RankDeficient(SupernormalError):
    pass


class NotSaturated(SupernormalError):
    pass


class NotPointed(SupernormalError):
    pass


class Unbounded(SupernormalError):
    pass


class EmptyPolyhedron(SupernormalError):
    pass


class NoLatticePoint(SupernormalError):
    pass


class NotInCone(SupernormalError):
    pass


class PointOutsideCone(NotInCone):
    pass


class NotATriangulation(SupernormalError):
    pass


class NotAGraded(SupernormalError):
    pass


class NonTerminating(SupernormalError):
    pass


class ParseError(SupernormalError):
    pass
