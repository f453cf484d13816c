"""Exception hierarchy.

Every error raised on purpose by the package derives from
:class:`EccSpectraError`.  Precondition failures that the theorem checks turn
into "not applicable" records derive from :class:`Inapplicable`.
"""

from __future__ import annotations


class EccSpectraError(Exception):
    """Base class for all package errors."""

    def __init__(self, message: str = "", diagnostic: dict | None = None):
        super().__init__(message)
        self.diagnostic = diagnostic or {}


class ParseError(EccSpectraError, ValueError):
    """Malformed edge-list or matrix text."""


class InvalidEdge(EccSpectraError, ValueError):
    """Self-loop in an edge list."""


class VertexOutOfRange(EccSpectraError, IndexError):
    """Edge endpoint outside ``0..n-1``."""


class IndexOutOfRange(EccSpectraError, IndexError):
    """Row index outside ``0..order-1``."""


class SizeOutOfRange(EccSpectraError, ValueError):
    """Minor size outside ``1..order``."""


class NotSymmetric(EccSpectraError, ValueError):
    pass


class GraphDisconnected(EccSpectraError, ValueError):
    pass


class OrderOne(EccSpectraError, ValueError):
    """Irreducibility is undefined for 1x1 matrices."""


class ZeroPolynomial(EccSpectraError, ValueError):
    pass


class NoConvergence(EccSpectraError, ArithmeticError):
    """Jacobi sweep cap reached before the off-diagonal norm fell below tolerance."""


class KOutOfRange(EccSpectraError, ValueError):
    pass


class UnknownFixture(EccSpectraError, KeyError):
    pass


class Inapplicable(EccSpectraError):
    """A structural precondition of an operation does not hold."""


class NotInCT(Inapplicable):
    pass


class OddDiameter(Inapplicable):
    pass


class EvenDiameter(Inapplicable):
    pass


class MultipleCenters(Inapplicable):
    pass


class DiameterTooSmall(Inapplicable):
    pass
