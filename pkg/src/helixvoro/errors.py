"""Exception and warning types shared across the package."""


class GeometryError(Exception):
    """Base class for all geometric failures."""


class DimensionMismatch(GeometryError):
    pass


class DegenerateSimplex(GeometryError):
    pass


class NonOrthonormalBasis(GeometryError):
    pass


class WindowTooSmall(GeometryError):
    pass


class TooManyPoints(GeometryError):
    pass


class TooManyHalfspaces(GeometryError):
    pass


class DegeneracyDetected(GeometryError):
    """A predicate returned a tolerance-band zero where general position was assumed."""


class EmptyRegion(GeometryError):
    pass


class DegenerateFacet(GeometryError):
    pass


class CensusMismatch(GeometryError):
    def __init__(self, message, diff=None):
        super().__init__(message)
        self.diff = diff or {}


class UnboundedAfterClip(GeometryError):
    pass


class FacetLost(GeometryError):
    pass


class UnionNotConvex(GeometryError):
    pass


class DegenerateTriangle(GeometryError):
    pass


class InvalidFlatDimension(GeometryError):
    pass


class UnboundedPolytope(GeometryError):
    pass


class DegeneracyWarning(UserWarning):
    """Sign decision fell inside the tolerance band; recorded, never silently resolved."""
