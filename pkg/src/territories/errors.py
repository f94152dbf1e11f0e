"""Exception hierarchy shared by all modules.

Every domain failure carries a stable machine-readable ``code`` so the CLI
can report structured reasons and tests can assert on them.
"""

from __future__ import annotations


class TerritoryError(Exception):
    """Base class for all domain errors."""

    code = "domain-error"

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.details = details

    def as_dict(self) -> dict:
        return {"error": self.code, "message": str(self), **self.details}


class AmbientMismatchError(TerritoryError):
    code = "ambient-mismatch"


class DimensionMismatchError(TerritoryError):
    code = "dimension-mismatch"


class ZeroScaleError(TerritoryError):
    code = "zero-scale"


class ConstantRowError(TerritoryError):
    code = "rows-contain-constant"


class NotClosedError(TerritoryError):
    """A candidate basis is not closed under multiplication.

    ``details`` carries the offending pair of row indices and the product
    element (serialized) that escapes the row space.
    """

    code = "not-closed"


class IncomparableConductancesError(TerritoryError):
    code = "incomparable-conductances"


class InvalidChartError(TerritoryError):
    code = "invalid-pivot-set"


class EmptySpineError(TerritoryError):
    code = "empty-spine"


class PreconditionViolatedError(TerritoryError):
    code = "precondition-violated"


class ResourceCapError(TerritoryError):
    """An ideal-theoretic computation exceeded the desk-scale caps.

    Raised instead of silently returning a possibly wrong answer.
    """

    code = "resource-cap-exceeded"


class NotMonomialError(TerritoryError):
    code = "not-monomial"


class GluingNotMultiplicativeError(TerritoryError):
    code = "phi-not-multiplicative"


class GluingNotAnnihilatingError(TerritoryError):
    code = "phi-not-annihilating"


class CorankMismatchError(TerritoryError):
    code = "corank-mismatch"
