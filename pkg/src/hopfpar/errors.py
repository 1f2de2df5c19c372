"""Exception hierarchy shared by all hopfpar modules."""

from __future__ import annotations


class HopfparError(Exception):
    """Base class; carries an optional machine-readable witness payload."""

    code = "HopfparError"

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.message = message
        self.witness = witness

    def to_json(self) -> dict:
        out = {"code": self.code, "message": self.message}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


class DivisionByZero(HopfparError, ZeroDivisionError):
    code = "DivisionByZero"


class IncompatibleCyclotomicOrder(HopfparError):
    code = "IncompatibleCyclotomicOrder"


class DimensionMismatch(HopfparError):
    code = "DimensionMismatch"


class NotAssociative(HopfparError):
    code = "NotAssociative"


class NoIdentity(HopfparError):
    code = "NoIdentity"


class NoInverse(HopfparError):
    code = "NoInverse"


class OrderTooLarge(HopfparError):
    code = "OrderTooLarge"


class InvalidGroupDatum(HopfparError):
    code = "InvalidGroupDatum"


class NotPointed(HopfparError):
    code = "NotPointed"


class PreconditionViolated(HopfparError):
    code = "PreconditionViolated"


class NotIdempotent(HopfparError):
    code = "NotIdempotent"


class NotCentral(HopfparError):
    code = "NotCentral"


class InconsistentLocalization(HopfparError):
    code = "InconsistentLocalization"


class UnsupportedPresentation(HopfparError):
    code = "UnsupportedPresentation"


class TruncationTooSmall(HopfparError):
    code = "TruncationTooSmall"


class UniversalPropertyViolated(HopfparError):
    code = "UniversalPropertyViolated"


class AxiomFailure(HopfparError):
    """An executable axiom check failed; witness names the offending tuple."""

    code = "AxiomFailure"


class InputError(HopfparError):
    """Malformed user input (CLI / service layer)."""

    code = "InputError"
