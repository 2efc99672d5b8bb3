"""Exception hierarchy shared across the package.

Every error raised by the library derives from TropicertError, so callers
(in particular the CLI) can distinguish library failures from bugs.
"""

from __future__ import annotations


class TropicertError(Exception):
    """Base class for all errors raised by this package."""


class ZeroVectorError(TropicertError):
    """A nonzero vector was required."""


class NotSquareError(TropicertError):
    """A square matrix was required."""


class TooSmallError(TropicertError):
    """The matrix is too small for the requested minors."""


class InSpanError(TropicertError):
    """The vector lies in the rational span of the given sublattice."""


class WrongDimensionError(TropicertError):
    """The fan does not have the dimension the operation requires."""


class NotBalancedError(TropicertError):
    """Balancing failed; carries the offending site and its residual.

    For graphs `site` is a vertex index and `residual` the vector
    s_i - d_i * u_i witnessing the failure; for fans `site` names a face.
    """

    def __init__(self, message, site=None, residual=None):
        super().__init__(message)
        self.site = site
        self.residual = residual


class BadOrderError(TropicertError):
    """The supplied vertex ordering is not a bijection on the vertices."""


class MismatchError(TropicertError):
    """The Laplacian does not belong to the given graph."""


class NotSymmetricError(TropicertError):
    """A symmetric matrix was required."""


class SingularError(TropicertError):
    """An invertible matrix was required."""


class NoSuchEdgeError(TropicertError):
    """The named 2-cone is absent or carries weight zero."""


class NotUnimodularEdgeError(TropicertError):
    """The named 2-cone is not unimodular."""


class NotGeneralPositionError(TropicertError):
    """The named edge is not in general position."""


class PreconditionFailedError(TropicertError):
    """A stated hypothesis of the operation does not hold; the message
    names the specific violated hypothesis."""


class NotCompatibleError(TropicertError):
    """The complex is not compatible with the given fan."""


class NonSimplicialRecessionError(TropicertError):
    """A cell's recession cone is not given by independent rays."""


class ParseError(TropicertError):
    """Malformed input document; the message carries the offending field."""


class ValidationError(TropicertError):
    """Structurally well-formed input that violates a data invariant."""
