"""Exception types shared across the package."""


class AlcovedError(Exception):
    """Base class for all domain errors raised by this package."""


class UnsupportedTypeError(AlcovedError):
    """Root system family or rank outside the supported tables."""


class PointOnWallError(AlcovedError):
    """A query point lies on an affine root hyperplane, so its alcove is ambiguous."""


class PolytopeError(AlcovedError):
    """Invalid halfspace or vertex data for an alcoved polytope."""


class SeedError(AlcovedError):
    """No starting alcove inside the polytope could be determined."""


class GraphLimitError(AlcovedError):
    """The alcove count exceeded the configured enumeration cap."""


class SeriesError(AlcovedError):
    """A rational series operation was used outside its domain."""


class WallLabelError(AlcovedError):
    """A facet is not an interior hypersimplex wall and has no block label."""


class JobSpecError(AlcovedError):
    """A job document failed to parse or validate; message names the field."""
