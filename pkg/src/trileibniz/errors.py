"""Exception hierarchy.

The CLI maps these onto exit codes: ``MalformedInput`` -> 2,
``PreconditionError`` -> 3, ``TheoremContradiction`` -> 4.
"""

from __future__ import annotations


class TriLeibnizError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatch(TriLeibnizError, ValueError):
    pass


class GroupMismatch(TriLeibnizError, ValueError):
    """Raised when elements of two different grading groups are combined."""


class InvalidGroupElement(TriLeibnizError, ValueError):
    pass


class MalformedInput(TriLeibnizError, ValueError):
    pass


class LeibnizIdentityError(TriLeibnizError, ValueError):
    """A binary table fails the Leibniz identity; ``witness`` is the basis triple."""

    def __init__(self, message: str, witness: tuple[int, int, int]):
        super().__init__(message)
        self.witness = witness


class PreconditionError(TriLeibnizError):
    """An operation was called on input that violates its precondition.

    ``stage`` names the pipeline stage that refused to continue.
    """

    def __init__(self, stage: str, message: str):
        super().__init__(f"[{stage}] {message}")
        self.stage = stage
        self.message = message


class TheoremContradiction(TriLeibnizError):
    """A theorem's hypotheses were verified but its conclusion failed."""

    def __init__(self, stage: str, message: str):
        super().__init__(f"[{stage}] {message}")
        self.stage = stage
        self.message = message
