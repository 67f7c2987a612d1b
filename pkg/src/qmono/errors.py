"""Exception types shared across the package.

Every domain error derives from :class:`QmonoError` so the CLI can map
them uniformly to exit status 1.
"""


class QmonoError(Exception):
    """Base class for all domain errors raised by this package."""


class MalformedWord(QmonoError):
    """Word text contains an unknown token or an unsupported exponent."""


class DimensionTooSmall(QmonoError):
    """Ambient dimension below the minimum supported by the operation."""


class NegativeDimension(QmonoError):
    """Sphere dimension must be >= 0."""


class OddParityClaim(QmonoError):
    """The lattice orbit claim is stated for even ambient dimension only."""


class ZeroCoefficientVector(QmonoError):
    """A hyperplane needs a nonzero coefficient vector."""


class UndersampledLoop(QmonoError):
    """Consecutive samples are too far apart for unambiguous continuation."""


class AsymptoticSample(QmonoError):
    """A sample hyperplane is (numerically) asymptotic to the quadric."""


class BranchAmbiguity(QmonoError):
    """The continued square-root branch matches neither expected endpoint."""


class PunctureCollision(QmonoError):
    """A path segment in the fiber passes too close to a puncture."""


class NotClosed(QmonoError):
    """Loop endpoints do not match up to the closure scale factor."""


class NotGeneralPosition(QmonoError):
    """A loop sample is tangent or asymptotic; carries the sample index."""

    def __init__(self, index: int, message: str | None = None):
        self.index = index
        super().__init__(message or f"sample {index} is not in general position")


class BadParameters(QmonoError):
    """Invalid parameters for a loop constructor."""
