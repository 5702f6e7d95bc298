"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations


class NodalError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(NodalError, ValueError):
    """A curve, polarization or sheaf shadow violates a structural invariant.

    ``code`` is a short stable identifier (see :mod:`nodal_coherent.curve`)
    so callers can branch on the failure without parsing messages.
    """

    def __init__(self, code: str, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code
        self.message = message


class PreconditionError(NodalError, ValueError):
    """Inputs are well formed but outside the range where a quantity is defined."""


class DocumentError(NodalError, ValueError):
    """A structured-text document could not be parsed."""
