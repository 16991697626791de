"""Exception hierarchy for warpknot.

Input and precondition failures subclass ``ValueError`` so callers that only
care about "bad input" can catch the builtin. Internal consistency failures
subclass ``RuntimeError``: they signal a bug or an unexpected finding, never a
user error.
"""


class WarpknotError(Exception):
    """Base class for every error raised by warpknot."""


# Polynomial errors


class NotDivisibleError(WarpknotError, ValueError):
    """The polynomial is not divisible by (1 + t) over the integers."""


class DegreeTooHighError(WarpknotError, ValueError):
    """The polynomial degree exceeds the bound of a reciprocal transform."""


class ZeroPolynomialError(WarpknotError, ValueError):
    """The operation is undefined on the zero polynomial."""


class PolynomialSyntaxError(WarpknotError, ValueError):
    """A polynomial rendering could not be parsed."""


# Diagram errors


class DiagramSyntaxError(WarpknotError, ValueError):
    """A diagram code contains a malformed token.

    Attributes:
        line (int): 1-based line number, or None when parsing a bare string.
        column (int): 1-based column of the offending token.
    """

    def __init__(self, message: str, line: int = None, column: int = None):
        self.line = line
        self.column = column
        location = []
        if line is not None:
            location.append(f"line {line}")
        if column is not None:
            location.append(f"column {column}")
        if location:
            message = f"{', '.join(location)}: {message}"
        super().__init__(message)


class DiagramValidationError(WarpknotError, ValueError):
    """A diagram code is well formed but violates a structural invariant."""


class NotPlanarError(DiagramValidationError):
    """The chirality-flagged sequence does not embed in the plane."""


class BadOuterFaceError(DiagramValidationError):
    """The outer-face marker is missing or refers to an invalid edge."""


class LengthMismatchError(WarpknotError, ValueError):
    """A choice vector does not have one entry per crossing."""


class UnknownCrossingError(WarpknotError, KeyError):
    """The crossing id does not occur in the diagram."""

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class EdgeIndexError(WarpknotError, IndexError):
    """An edge index is outside the diagram's edge range."""


# Warping errors


class EmptyDiagramError(WarpknotError, ValueError):
    """The operation needs at least one crossing."""


class NotFoundError(WarpknotError, LookupError):
    """An exhaustive search finished without a witness."""


class TooLargeError(WarpknotError, ValueError):
    """The requested search exceeds the configured crossing bound."""


# State-sum errors


class TooManyCrossingsError(WarpknotError, ValueError):
    """The shadow has more crossings than the configured enumeration limit."""


class EmptyShadowError(WarpknotError, ValueError):
    """State sums are defined for shadows with at least one crossing."""


# Planar errors


class InternalInconsistencyError(WarpknotError, RuntimeError):
    """A derived structure failed one of its postconditions."""


class NotBipartiteError(InternalInconsistencyError):
    """The face adjacency graph of a plane curve is not 2-colourable."""


class NoCrossingsError(WarpknotError, ValueError):
    """The curve has no crossings, which the operation does not support."""


class OddCrossingNumberError(WarpknotError, ValueError):
    """The operation requires an even number of crossings."""


class EvenCrossingNumberError(WarpknotError, ValueError):
    """The operation requires an odd number of crossings."""


class NoBlackSideError(InternalInconsistencyError):
    """Neither side of an edge borders a Black face."""


class ZeroRotationError(InternalInconsistencyError):
    """A curve with an even number of crossings reported rotation number 0."""


class TieBreakError(InternalInconsistencyError):
    """A diagram and its reverse have equal warping degree."""
