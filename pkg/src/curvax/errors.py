"""Exception hierarchy shared by all curvax modules.

Math failures (SingularPoint, CurvatureVanishes, ...) subclass GeometryError
so callers can catch the whole family; the CLI maps ParseError/ArityError/
TooFewSamples to exit 1, GeometryError/DomainError to exit 2, IoError to 3.
"""

from __future__ import annotations


class CurvaxError(Exception):
    """Base class for every error raised by this package."""


class ParseError(CurvaxError):
    """Malformed curve text. Carries the offending position and what was expected."""

    def __init__(self, position: int, expected: str):
        self.position = position
        self.expected = expected
        super().__init__(f"parse error at position {position}: expected {expected}")


class ArityError(CurvaxError):
    """Curve text did not contain exactly three components."""

    def __init__(self, count: int):
        self.count = count
        super().__init__(f"expected exactly 3 curve components, got {count}")


class DomainError(CurvaxError):
    """Evaluation left the natural domain of a function node (sqrt of a negative,
    log of a non-positive, division by zero, non-smooth point of abs, ...)."""

    def __init__(self, message: str, node=None, value=None):
        self.node = node
        self.value = value
        super().__init__(message)


class GeometryError(CurvaxError):
    """Base class for geometric/math failures (CLI exit code 2)."""


class SingularPoint(GeometryError):
    """|alpha'(t)| vanishes: the curve itself is singular at t."""


class CurvatureVanishes(GeometryError):
    """|alpha' x alpha''| vanishes: curvature is zero, the frame is undefined."""


class TorsionVanishes(GeometryError):
    """tau is (numerically) zero where a finite torsion is required."""


class ZeroVector(GeometryError):
    """A direction vector with (numerically) zero length was supplied."""


class CylindricalRuling(GeometryError):
    """Director derivative vanishes: the striction point is undefined."""


class SurfaceSingularPoint(GeometryError):
    """|R_u x R_lambda| vanishes: the surface is singular at this (u, lambda)."""


class TooFewSamples(CurvaxError):
    """A sampling-based operation was asked to run with too few samples."""


class EmptyMesh(GeometryError):
    """Every tessellation cell was degenerate or failed to evaluate."""


class IoError(CurvaxError):
    """Wraps OS-level failures while writing output files."""
