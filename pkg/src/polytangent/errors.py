"""Exception hierarchy.

``GeometryError`` subclasses fall in two groups: ``HypothesisError`` means the
input is well formed but a mathematical precondition (separation, spanning,
visibility) does not hold; everything else is a usage or input problem.
"""


class GeometryError(Exception):
    pass


class HypothesisError(GeometryError):
    """A mathematical hypothesis failed; ``evidence`` carries the offending data."""

    def __init__(self, message, evidence=None):
        super().__init__(message)
        self.evidence = evidence


class NotFullDimensional(GeometryError):
    pass


class OriginNotInterior(GeometryError):
    pass


class NotAVertex(GeometryError):
    pass


class WitnessInvalid(GeometryError):
    pass


class PointInsidePolytope(GeometryError):
    pass


class TooLarge(GeometryError):
    pass


class UnsupportedBody(GeometryError):
    pass


class UnsupportedDimension(GeometryError):
    pass


class CirclesNotDisjoint(GeometryError):
    pass


class NotStronglySeparated(HypothesisError):
    pass


class NotAffinelySpanning(HypothesisError):
    pass


class RainbowCountUnexpected(HypothesisError):
    pass


class NeitherQualifies(HypothesisError):
    pass


class BothQualify(HypothesisError):
    pass


class VertexColorClash(HypothesisError):
    pass


class HypothesisFails(HypothesisError):
    pass
